#include "nephro/cohort.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "nephro/errors.hpp"
#include "nephro/util.hpp"

namespace nephro {

namespace {

constexpr double kDaysPerMonth = 30.4375;
constexpr double kEgfrFloor = 0.1;

// Sequential draws from one engine; fresh distribution objects per call keep
// the draw sequence a function of the engine state alone.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(eng); }
  long uniform_int(long a, long b) { return std::uniform_int_distribution<long>(a, b)(eng); }
  double normal(double mu, double sigma) {
    if (sigma <= 0.0) return mu;
    return std::normal_distribution<double>(mu, sigma)(eng);
  }
  bool bernoulli(double p) { return std::bernoulli_distribution(p)(eng); }
};

double round2(double v) { return std::round(v * 100.0) / 100.0; }
double round1(double v) { return std::round(v * 10.0) / 10.0; }

double clamp_egfr(double v) { return std::clamp(v, kEgfrFloor, kMaxPlausibleEgfr); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

const std::vector<std::string> kCsvColumns = {
    "patient_id", "date", "egfr", "creatinine", "bun", "uacr",
    "sex", "age_at_baseline", "diabetes", "hypertension"};

double parse_double_or_throw(const std::string& s, int line_no, const char* what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ValidationError("line " + std::to_string(line_no) + ": unparseable " + what + " value '" + s + "'");
  }
  return v;
}

}  // namespace

const PatientRecord* Cohort::find(const std::string& id) const {
  for (const auto& p : patients) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

Cohort synth_cohort(const SynthConfig& config) {
  if (config.n_patients <= 0) {
    throw ValidationError("synth config: n_patients must be positive");
  }
  if (config.obs_min < kMinObservations || config.obs_max < config.obs_min) {
    throw ValidationError("synth config: observation count range must satisfy 5 <= min <= max");
  }
  if (!(config.baseline_egfr_min > 0.0) || config.baseline_egfr_max < config.baseline_egfr_min ||
      config.baseline_egfr_max > kMaxPlausibleEgfr) {
    throw ValidationError("synth config: baseline egfr range empty or outside (0, 250]");
  }
  if (config.noise_sigma < 0.0) {
    throw ValidationError("synth config: noise_sigma must be >= 0");
  }
  if (config.inflection_probability < 0.0 || config.inflection_probability > 1.0) {
    throw ValidationError("synth config: inflection_probability must be in [0, 1]");
  }
  if (config.interval_days_min < 1 || config.interval_days_max < config.interval_days_min) {
    throw ValidationError("synth config: interval day range must satisfy 1 <= min <= max");
  }

  // Noiseless trajectories are snapped to the 0.01 grid so they survive the
  // two-decimal canonical CSV form exactly.
  const bool snap = config.noise_sigma == 0.0;
  const Date epoch{2019, 1, 15};

  Cohort cohort;
  cohort.provenance = CohortProvenance::synthetic;
  cohort.synth_seed = config.seed;
  cohort.patients.reserve(static_cast<std::size_t>(config.n_patients));

  for (int i = 0; i < config.n_patients; ++i) {
    Rng rng(splitmix64(config.seed ^ (0x51ed2700ULL + static_cast<std::uint64_t>(i))));

    PatientRecord rec;
    {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "synth-%04d", i + 1);
      rec.id = buf;
    }

    const int n_obs = static_cast<int>(rng.uniform_int(config.obs_min, config.obs_max));
    double baseline = round2(rng.uniform(config.baseline_egfr_min, config.baseline_egfr_max));
    double slope1 = rng.normal(config.monthly_slope_mean, config.monthly_slope_spread) / kDaysPerMonth;
    double slope2 = rng.normal(config.monthly_slope_mean, config.monthly_slope_spread) / kDaysPerMonth;
    if (snap) {
      slope1 = round2(slope1);
      slope2 = round2(slope2);
    }
    const bool has_inflection = rng.bernoulli(config.inflection_probability) && n_obs >= 6;
    const long inflect_pos = rng.uniform_int(n_obs / 3, (2 * n_obs) / 3);
    const long start_offset = rng.uniform_int(0, 179);

    std::vector<long> cum_days(static_cast<std::size_t>(n_obs), 0);
    for (int j = 1; j < n_obs; ++j) {
      cum_days[static_cast<std::size_t>(j)] =
          cum_days[static_cast<std::size_t>(j - 1)] +
          rng.uniform_int(config.interval_days_min, config.interval_days_max);
    }
    const long inflect_days = has_inflection ? cum_days[static_cast<std::size_t>(inflect_pos)]
                                             : cum_days.back() + 1;

    rec.sex = rng.bernoulli(0.5) ? Sex::female : Sex::male;
    rec.age_at_baseline = round1(rng.uniform(35.0, 85.0));
    rec.diabetes = rng.bernoulli(0.35);
    rec.hypertension = rng.bernoulli(0.5);
    const bool has_creatinine = rng.bernoulli(0.85);
    const bool has_bun = rng.bernoulli(0.85);
    const bool has_uacr = rng.bernoulli(0.85);

    const Date start = add_days(epoch, start_offset);
    for (int j = 0; j < n_obs; ++j) {
      const long cd = cum_days[static_cast<std::size_t>(j)];
      double v = baseline + slope1 * static_cast<double>(std::min(cd, inflect_days)) +
                 slope2 * static_cast<double>(std::max(0L, cd - inflect_days));
      v += rng.normal(0.0, config.noise_sigma);
      v = clamp_egfr(snap ? v : round2(v));

      ObservationPoint obs;
      obs.date = add_days(start, cd);
      obs.egfr = v;
      if (has_creatinine) {
        obs.creatinine = round2(std::clamp(0.8 + (100.0 - v) * 0.03 + rng.normal(0.0, 0.1), 0.4, 12.0));
      }
      if (has_bun) {
        obs.bun = round2(std::clamp(12.0 + (100.0 - v) * 0.25 + rng.normal(0.0, 1.5), 4.0, 120.0));
      }
      if (has_uacr) {
        obs.uacr = round2(std::clamp(20.0 + (110.0 - v) * 6.0 + rng.normal(0.0, 15.0), 5.0, 3000.0));
      }
      rec.observations.push_back(obs);
    }

    auto violations = validate_record(rec);
    if (!violations.empty()) {
      throw ValidationError("synth generator produced an invalid record: " + violations.front());
    }
    cohort.patients.push_back(std::move(rec));
  }
  return cohort;
}

Cohort load_cohort_csv(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) {
    throw ValidationError("cohort csv: empty input");
  }
  ++line_no;
  auto header = split_csv_line(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) {
    col[header[i]] = i;
  }
  for (const auto& name : kCsvColumns) {
    if (!col.count(name)) {
      throw ValidationError("cohort csv: missing required column '" + name + "'");
    }
  }

  struct Builder {
    PatientRecord rec;
    int first_line = 0;
  };
  std::vector<std::string> order;
  std::map<std::string, Builder> by_id;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") {
      continue;
    }
    auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
    }
    auto get = [&](const std::string& name) -> const std::string& { return fields[col.at(name)]; };

    const std::string& pid = get("patient_id");
    if (pid.empty()) {
      throw ValidationError("line " + std::to_string(line_no) + ": empty patient_id");
    }

    auto parsed_date = Date::parse(get("date"));
    if (!parsed_date) {
      throw ValidationError("line " + std::to_string(line_no) + ": unparseable date '" + get("date") + "'");
    }

    ObservationPoint obs;
    obs.date = *parsed_date;
    obs.egfr = parse_double_or_throw(get("egfr"), line_no, "egfr");
    if (!get("creatinine").empty()) obs.creatinine = parse_double_or_throw(get("creatinine"), line_no, "creatinine");
    if (!get("bun").empty()) obs.bun = parse_double_or_throw(get("bun"), line_no, "bun");
    if (!get("uacr").empty()) obs.uacr = parse_double_or_throw(get("uacr"), line_no, "uacr");

    Sex sex;
    const std::string sex_sv = to_lower(get("sex"));
    if (sex_sv == "m") {
      sex = Sex::male;
    } else if (sex_sv == "f") {
      sex = Sex::female;
    } else {
      throw ValidationError("line " + std::to_string(line_no) + ": sex must be M or F, got '" + get("sex") + "'");
    }
    const double age = parse_double_or_throw(get("age_at_baseline"), line_no, "age_at_baseline");
    auto parse_flag = [&](const std::string& name) {
      const std::string& v = get(name);
      if (v == "0") return false;
      if (v == "1") return true;
      throw ValidationError("line " + std::to_string(line_no) + ": " + name + " must be 0 or 1, got '" + v + "'");
    };
    const bool diabetes = parse_flag("diabetes");
    const bool hypertension = parse_flag("hypertension");

    auto it = by_id.find(pid);
    if (it == by_id.end()) {
      Builder b;
      b.rec.id = pid;
      b.rec.sex = sex;
      b.rec.age_at_baseline = age;
      b.rec.diabetes = diabetes;
      b.rec.hypertension = hypertension;
      b.first_line = line_no;
      it = by_id.emplace(pid, std::move(b)).first;
      order.push_back(pid);
    } else {
      const auto& r = it->second.rec;
      if (r.sex != sex || r.age_at_baseline != age || r.diabetes != diabetes ||
          r.hypertension != hypertension) {
        throw ValidationError("line " + std::to_string(line_no) + ": inconsistent demographics for patient " +
                              pid + " (first seen at line " + std::to_string(it->second.first_line) + ")");
      }
    }
    it->second.rec.observations.push_back(obs);
  }

  Cohort cohort;
  cohort.provenance = CohortProvenance::ingested;
  std::vector<std::string> all_violations;
  for (const auto& pid : order) {
    auto& rec = by_id.at(pid).rec;
    std::stable_sort(rec.observations.begin(), rec.observations.end(),
                     [](const ObservationPoint& a, const ObservationPoint& b) { return a.date < b.date; });
    for (auto& v : validate_record(rec)) {
      all_violations.push_back(std::move(v));
    }
    cohort.patients.push_back(std::move(rec));
  }
  if (!all_violations.empty()) {
    std::string msg = "cohort validation failed:";
    for (const auto& v : all_violations) {
      msg += "\n  " + v;
    }
    throw ValidationError(msg);
  }
  return cohort;
}

Cohort load_cohort_file(const std::filesystem::path& path) {
  return load_cohort_csv(read_text_file(path));
}

std::string serialize_cohort_csv(const Cohort& cohort) {
  std::string out;
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
    if (i) out.push_back(',');
    out += kCsvColumns[i];
  }
  out.push_back('\n');

  std::vector<const PatientRecord*> ordered;
  ordered.reserve(cohort.patients.size());
  for (const auto& p : cohort.patients) ordered.push_back(&p);
  std::sort(ordered.begin(), ordered.end(),
            [](const PatientRecord* a, const PatientRecord* b) { return a->id < b->id; });

  auto opt_str = [](const std::optional<double>& v) { return v ? format_up_to2(*v) : std::string(); };
  for (const auto* p : ordered) {
    for (const auto& o : p->observations) {
      out += p->id;
      out.push_back(',');
      out += o.date.to_string();
      out.push_back(',');
      out += format_up_to2(o.egfr);
      out.push_back(',');
      out += opt_str(o.creatinine);
      out.push_back(',');
      out += opt_str(o.bun);
      out.push_back(',');
      out += opt_str(o.uacr);
      out.push_back(',');
      out += (p->sex == Sex::male) ? "M" : "F";
      out.push_back(',');
      out += format_up_to2(p->age_at_baseline);
      out.push_back(',');
      out += p->diabetes ? "1" : "0";
      out.push_back(',');
      out += p->hypertension ? "1" : "0";
      out.push_back('\n');
    }
  }
  return out;
}

void write_cohort_file(const Cohort& cohort, const std::filesystem::path& path) {
  write_text_file(path, serialize_cohort_csv(cohort));
}

SplitResult stratified_split(const Cohort& cohort, double train_fraction, std::uint64_t seed) {
  if (cohort.patients.empty()) {
    throw ValidationError("stratified_split: cohort is empty");
  }
  if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
    throw ValidationError("stratified_split: train_fraction must be in (0, 1)");
  }

  const auto n = cohort.patients.size();
  std::map<CkdStage, std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = cohort.patients[i];
    if (p.observations.empty()) {
      throw ValidationError("stratified_split: patient " + p.id + " has no observations");
    }
    strata[ckd_stage(p.observations.front().egfr)].push_back(i);
  }

  SplitResult result;
  std::vector<bool> in_train(n, false);
  std::mt19937_64 eng(seed);
  for (auto& [stage, members] : strata) {
    if (members.size() == 1) {
      in_train[members.front()] = true;
      result.warnings.push_back("stage " + std::string(to_string(stage)) +
                                " stratum has a single patient (" +
                                cohort.patients[members.front()].id + "); assigned to train");
      continue;
    }
    std::shuffle(members.begin(), members.end(), eng);
    const auto k = static_cast<std::size_t>(std::clamp<long>(
        std::lround(static_cast<double>(members.size()) * train_fraction), 0,
        static_cast<long>(members.size())));
    for (std::size_t j = 0; j < k; ++j) {
      in_train[members[j]] = true;
    }
  }

  result.train.provenance = cohort.provenance;
  result.train.synth_seed = cohort.synth_seed;
  result.val.provenance = cohort.provenance;
  result.val.synth_seed = cohort.synth_seed;
  for (std::size_t i = 0; i < n; ++i) {
    (in_train[i] ? result.train : result.val).patients.push_back(cohort.patients[i]);
  }
  return result;
}

int median_obs_count(const Cohort& cohort) {
  if (cohort.patients.empty()) {
    throw ValidationError("median_obs_count: cohort is empty");
  }
  std::vector<std::size_t> counts;
  counts.reserve(cohort.patients.size());
  for (const auto& p : cohort.patients) {
    counts.push_back(p.observations.size());
  }
  std::sort(counts.begin(), counts.end());
  return static_cast<int>(counts[(counts.size() - 1) / 2]);
}

}  // namespace nephro
