#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "polarfreq/image.hpp"
#include "polarfreq/normalize.hpp"

namespace polarfreq {

struct DatasetEntry {
  std::string image_id;
  std::string subject_id;
  std::filesystem::path path;        // empty for in-memory entries
  std::optional<GrayImage> image;    // set for in-memory entries
  std::optional<EyePair> eyes;
};

/// Images with their subject labels, sorted by image id.
class Dataset {
public:
  Dataset() = default;
  /// Sorts the entries by image id. Throws ConfigError on an empty list,
  /// duplicate image ids or empty subject ids.
  explicit Dataset(std::vector<DatasetEntry> entries);

  const std::vector<DatasetEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::vector<std::string> subject_ids() const;  // per entry
  std::vector<std::string> image_ids() const;
  std::size_t subject_count() const;

  /// Returns the in-memory image or reads it from disk.
  GrayImage load_image(std::size_t index) const;

private:
  std::vector<DatasetEntry> entries_;
};

enum class DatasetLayout {
  orl,            // root/<subject>/<image>.pgm
  flat_manifest,  // path,subject[,x_l,y_l,x_r,y_r] per line
};

DatasetLayout parse_dataset_layout(const std::string& text);
std::string to_string(DatasetLayout layout);

/// ORL layout: subject id = subdirectory name, image id =
/// "<subject>/<file name>" (ORL reuses file names across subjects).
/// Manifest layout: `root` is the manifest file, or a directory holding
/// manifest.csv; relative paths resolve against the manifest's directory
/// and the image id is the path as written. Throws ConfigError / ParseError
/// (with the manifest line number).
Dataset load_dataset_dir(const std::filesystem::path& root, DatasetLayout layout);

/// Parses manifest text. `base` resolves relative paths.
Dataset parse_manifest(const std::string& text, const std::filesystem::path& base);

}  // namespace polarfreq
