#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nephro/domain.hpp"

namespace nephro {

enum class CohortProvenance { ingested, synthetic };

struct Cohort {
  std::vector<PatientRecord> patients;
  CohortProvenance provenance = CohortProvenance::ingested;
  std::uint64_t synth_seed = 0;  // meaningful when provenance == synthetic

  const PatientRecord* find(const std::string& id) const;
};

struct SynthConfig {
  int n_patients = 50;
  int obs_min = 8;
  int obs_max = 14;
  double baseline_egfr_min = 20.0;
  double baseline_egfr_max = 110.0;
  double monthly_slope_mean = -0.6;    // mL/min/1.73m² per month
  double monthly_slope_spread = 0.4;   // standard deviation
  double noise_sigma = 0.0;            // mL/min/1.73m²
  double inflection_probability = 0.0; // chance of one slope change mid-series
  int interval_days_min = 25;          // days between consecutive measurements
  int interval_days_max = 35;
  std::uint64_t seed = 0;
};

/// Deterministic synthetic cohort: piecewise-linear decline with Gaussian
/// noise and an optional single inflection per patient. Pure function of
/// the config. Throws ValidationError on infeasible configs.
Cohort synth_cohort(const SynthConfig& config);

/// Parses the cohort CSV (header required, columns
/// patient_id,date,egfr,creatinine,bun,uacr,sex,age_at_baseline,diabetes,hypertension).
/// Rows are grouped by patient_id, observations sorted by date, and the whole
/// cohort validated. Throws ValidationError naming the offending line/patient.
Cohort load_cohort_csv(const std::string& csv_text);
Cohort load_cohort_file(const std::filesystem::path& path);

/// Canonical CSV form: patients by id, rows by date, floats with up to two
/// decimal places.
std::string serialize_cohort_csv(const Cohort& cohort);
void write_cohort_file(const Cohort& cohort, const std::filesystem::path& path);

struct SplitResult {
  Cohort train;
  Cohort val;
  std::vector<std::string> warnings;
};

/// Patient-level stage-stratified split. The stratification key is the CKD
/// stage of each patient's first observation; within a stratum the train
/// count is round(stratum_size * train_fraction). Deterministic given seed.
SplitResult stratified_split(const Cohort& cohort, double train_fraction, std::uint64_t seed);

/// Lower median of per-patient observation counts (the order statistic at
/// 0-indexed floor((n-1)/2) of the sorted counts).
int median_obs_count(const Cohort& cohort);

}  // namespace nephro
