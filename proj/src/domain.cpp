#include "nephro/domain.hpp"

#include <cmath>
#include <stdexcept>

#include "nephro/util.hpp"

namespace nephro {

const char* to_string(CkdStage stage) {
  switch (stage) {
    case CkdStage::g1: return "G1";
    case CkdStage::g2: return "G2";
    case CkdStage::g3a: return "G3a";
    case CkdStage::g3b: return "G3b";
    case CkdStage::g4: return "G4";
    case CkdStage::g5: return "G5";
  }
  return "G?";
}

std::optional<CkdStage> parse_ckd_stage(std::string_view s) {
  const std::string v = to_lower(s);
  if (v == "g1") return CkdStage::g1;
  if (v == "g2") return CkdStage::g2;
  if (v == "g3a") return CkdStage::g3a;
  if (v == "g3b") return CkdStage::g3b;
  if (v == "g4") return CkdStage::g4;
  if (v == "g5") return CkdStage::g5;
  return std::nullopt;
}

CkdStage ckd_stage(double egfr) {
  if (!(egfr > 0.0) || std::isnan(egfr)) {
    throw std::domain_error("ckd_stage: egfr must be positive, got " + format_double(egfr));
  }
  if (egfr >= 90.0) return CkdStage::g1;
  if (egfr >= 60.0) return CkdStage::g2;
  if (egfr >= 45.0) return CkdStage::g3a;
  if (egfr >= 30.0) return CkdStage::g3b;
  if (egfr >= 15.0) return CkdStage::g4;
  return CkdStage::g5;
}

std::vector<std::string> validate_record(const PatientRecord& record) {
  std::vector<std::string> violations;
  const auto& obs = record.observations;
  const std::string who = record.id.empty() ? std::string("<unnamed>") : record.id;

  if (obs.size() < static_cast<std::size_t>(kMinObservations)) {
    violations.push_back("patient " + who + ": too few observations (" + std::to_string(obs.size()) +
                         " < " + std::to_string(kMinObservations) + ")");
  }
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const auto& o = obs[i];
    if (!o.date.ok()) {
      violations.push_back("patient " + who + ": invalid date at observation " + std::to_string(i + 1));
    }
    if (!(o.egfr > 0.0) || o.egfr > kMaxPlausibleEgfr || std::isnan(o.egfr)) {
      violations.push_back("patient " + who + ": egfr out of range at observation " +
                           std::to_string(i + 1) + " (" + format_double(o.egfr) +
                           ", expected 0 < egfr <= 250)");
    }
    if (i > 0) {
      if (obs[i - 1].date == o.date) {
        violations.push_back("patient " + who + ": duplicate date " + o.date.to_string() +
                             " (observations " + std::to_string(i) + " and " + std::to_string(i + 1) + ")");
      } else if (obs[i - 1].date > o.date) {
        violations.push_back("patient " + who + ": unsorted dates at observation " +
                             std::to_string(i + 1) + " (" + o.date.to_string() + " after " +
                             obs[i - 1].date.to_string() + ")");
      }
    }
  }
  return violations;
}

}  // namespace nephro
