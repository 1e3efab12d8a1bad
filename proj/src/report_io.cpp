#include "polarfreq/report_io.hpp"

#include <sstream>

#include "polarfreq/text_format.hpp"

namespace polarfreq {

std::string cmc_csv(const CMCCurve& curve) {
  std::ostringstream out;
  out << "rank,proportion\n";
  for (std::size_t k = 0; k < curve.rank.size(); ++k) {
    out << curve.rank[k] << ',' << format_double(curve.proportion_correct[k]) << '\n';
  }
  return out.str();
}

std::string roc_csv(const ROCCurve& curve) {
  std::ostringstream out;
  out << "threshold,pv,pf\n";
  for (std::size_t k = 0; k < curve.thresholds.size(); ++k) {
    out << format_double(curve.thresholds[k]) << ',' << format_double(curve.verification[k])
        << ',' << format_double(curve.false_alarm[k]) << '\n';
  }
  return out.str();
}

std::string feature_map_csv(const FeatureMap& map) {
  std::ostringstream out;
  out << "row";
  for (const auto& c : map.col_labels) out << ',' << c;
  out << '\n';
  for (int r = 0; r < map.rows; ++r) {
    out << map.row_labels[static_cast<std::size_t>(r)];
    for (int c = 0; c < map.cols; ++c) out << ',' << format_double(map.at(r, c));
    out << '\n';
  }
  return out.str();
}

std::string curve_csv(const std::string& parameter_name, std::span<const CurvePoint> points) {
  std::ostringstream out;
  out << parameter_name << ",mean,sem\n";
  for (const auto& p : points) {
    out << p.parameter << ',' << format_double(p.mean) << ',' << format_double(p.sem) << '\n';
  }
  return out.str();
}

std::string summary_csv(std::span<const SummaryRow> rows) {
  std::ostringstream out;
  out << "experiment,mean,sem,eer\n";
  for (const auto& r : rows) {
    out << r.experiment << ',' << format_double(r.mean) << ',' << format_double(r.sem) << ','
        << (r.eer ? format_double(*r.eer) : std::string()) << '\n';
  }
  return out.str();
}

std::string repetitions_csv(std::span<const double> errors) {
  std::ostringstream out;
  out << "repetition,error\n";
  for (std::size_t k = 0; k < errors.size(); ++k) {
    out << k << ',' << format_double(errors[k]) << '\n';
  }
  return out.str();
}

}  // namespace polarfreq
