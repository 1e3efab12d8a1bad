#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polarfreq/features.hpp"

namespace polarfreq {

/// One row of a feature file:
///   image-id,subject-id,layout_id,v1,v2,...
/// Values are written in shortest round-trip form, so a reload is exact.
struct FeatureRecord {
  std::string image_id;
  std::string subject_id;
  FeatureVector features;

  friend bool operator==(const FeatureRecord&, const FeatureRecord&) = default;
};

void write_feature_csv(std::ostream& out, std::span<const FeatureRecord> records);
/// Throws ParseError with the 1-based line number of a malformed row.
std::vector<FeatureRecord> read_feature_csv(std::istream& in);

void save_feature_file(const std::filesystem::path& path,
                       std::span<const FeatureRecord> records);
std::vector<FeatureRecord> load_feature_file(const std::filesystem::path& path);

}  // namespace polarfreq
