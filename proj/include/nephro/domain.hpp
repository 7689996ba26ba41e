#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nephro/dates.hpp"

namespace nephro {

/// KDIGO CKD stage by eGFR. Ordering: later enumerators are worse kidney
/// function (G1 < G2 < ... < G5).
enum class CkdStage { g1, g2, g3a, g3b, g4, g5 };

const char* to_string(CkdStage stage);
std::optional<CkdStage> parse_ckd_stage(std::string_view s);

/// Stage for an eGFR value in mL/min/1.73m². Bins are lower-inclusive:
/// G1 >= 90, G2 [60,90), G3a [45,60), G3b [30,45), G4 [15,30), G5 < 15.
/// Throws std::domain_error for non-positive input.
CkdStage ckd_stage(double egfr);

/// One measured time point of a patient trajectory.
struct ObservationPoint {
  Date date;
  double egfr = 0.0;  // mL/min/1.73m², in (0, 250]
  std::optional<double> creatinine;  // mg/dL
  std::optional<double> bun;         // mg/dL
  std::optional<double> uacr;        // mg/g
};

enum class Sex { male, female };

constexpr double kMaxPlausibleEgfr = 250.0;
constexpr int kMinObservations = 5;

struct PatientRecord {
  std::string id;  // opaque, de-identified
  Sex sex = Sex::male;
  double age_at_baseline = 0.0;  // years
  bool diabetes = false;
  bool hypertension = false;
  std::vector<ObservationPoint> observations;  // strictly ascending by date
};

/// Checks every record invariant and returns the complete list of
/// violations; empty means the record is valid.
std::vector<std::string> validate_record(const PatientRecord& record);

inline bool is_valid_record(const PatientRecord& record) { return validate_record(record).empty(); }

}  // namespace nephro
