#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polarfreq/evaluation.hpp"

namespace polarfreq {

// Comma-separated report bodies, each with a header row.

std::string cmc_csv(const CMCCurve& curve);          // rank,proportion
std::string roc_csv(const ROCCurve& curve);          // threshold,pv,pf
std::string feature_map_csv(const FeatureMap& map);  // label column + one per col

struct CurvePoint {
  int parameter = 0;  // k or subject count
  double mean = 0.0;
  double sem = 0.0;
};
std::string curve_csv(const std::string& parameter_name, std::span<const CurvePoint> points);

struct SummaryRow {
  std::string experiment;
  double mean = 0.0;
  double sem = 0.0;
  std::optional<double> eer;
};
std::string summary_csv(std::span<const SummaryRow> rows);  // experiment,mean,sem,eer

/// Per-repetition error rates: repetition,error
std::string repetitions_csv(std::span<const double> errors);

}  // namespace polarfreq
