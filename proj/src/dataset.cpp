#include "polarfreq/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "polarfreq/error.hpp"
#include "polarfreq/pgm.hpp"

namespace polarfreq {

namespace fs = std::filesystem;

namespace {

std::string trim(std::string_view text) {
  auto begin = text.begin();
  auto end = text.end();
  while (begin != end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
  while (end != begin && std::isspace(static_cast<unsigned char>(*(end - 1)))) --end;
  return std::string(begin, end);
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool has_pgm_extension(const fs::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".pgm";
}

double parse_coordinate(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("manifest line " + std::to_string(line) + ": bad eye coordinate '" +
                         text + "'",
                     line);
  }
}

}  // namespace

Dataset::Dataset(std::vector<DatasetEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ConfigError("dataset is empty");
  std::sort(entries_.begin(), entries_.end(),
            [](const DatasetEntry& a, const DatasetEntry& b) { return a.image_id < b.image_id; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].subject_id.empty()) {
      throw ConfigError("image '" + entries_[i].image_id + "' has an empty subject id");
    }
    if (i > 0 && entries_[i].image_id == entries_[i - 1].image_id) {
      throw ConfigError("duplicate image id '" + entries_[i].image_id + "'");
    }
  }
}

std::vector<std::string> Dataset::subject_ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.subject_id);
  return out;
}

std::vector<std::string> Dataset::image_ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.image_id);
  return out;
}

std::size_t Dataset::subject_count() const {
  std::set<std::string> subjects;
  for (const auto& e : entries_) subjects.insert(e.subject_id);
  return subjects.size();
}

GrayImage Dataset::load_image(std::size_t index) const {
  const auto& entry = entries_.at(index);
  if (entry.image) return *entry.image;
  return load_pgm(entry.path);
}

DatasetLayout parse_dataset_layout(const std::string& text) {
  if (text == "orl") return DatasetLayout::orl;
  if (text == "flat-manifest") return DatasetLayout::flat_manifest;
  throw ConfigError("unknown dataset layout '" + text + "'");
}

std::string to_string(DatasetLayout layout) {
  return layout == DatasetLayout::orl ? "orl" : "flat-manifest";
}

Dataset parse_manifest(const std::string& text, const fs::path& base) {
  std::vector<DatasetEntry> entries;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_commas(line);
    if (fields.size() != 2 && fields.size() != 6) {
      throw ParseError("manifest line " + std::to_string(line_number) +
                           ": expected 2 or 6 fields, found " + std::to_string(fields.size()),
                       line_number);
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError("manifest line " + std::to_string(line_number) +
                           ": empty path or subject",
                       line_number);
    }
    DatasetEntry entry;
    entry.image_id = fields[0];
    entry.subject_id = fields[1];
    const fs::path p(fields[0]);
    entry.path = p.is_absolute() ? p : base / p;
    if (fields.size() == 6) {
      entry.eyes = EyePair{{parse_coordinate(fields[2], line_number),
                            parse_coordinate(fields[3], line_number)},
                           {parse_coordinate(fields[4], line_number),
                            parse_coordinate(fields[5], line_number)}};
    }
    entries.push_back(std::move(entry));
  }
  return Dataset(std::move(entries));
}

Dataset load_dataset_dir(const fs::path& root, DatasetLayout layout) {
  std::error_code ec;
  if (!fs::exists(root, ec)) throw IoError("dataset path does not exist: " + root.string());

  if (layout == DatasetLayout::flat_manifest) {
    const fs::path manifest = fs::is_directory(root) ? root / "manifest.csv" : root;
    std::ifstream in(manifest);
    if (!in) throw IoError("cannot open manifest " + manifest.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_manifest(buffer.str(), manifest.parent_path());
  }

  if (!fs::is_directory(root)) throw IoError("not a directory: " + root.string());
  std::vector<DatasetEntry> entries;
  for (const auto& subject_dir : fs::directory_iterator(root)) {
    if (!subject_dir.is_directory()) continue;
    const auto subject = subject_dir.path().filename().string();
    for (const auto& file : fs::directory_iterator(subject_dir.path())) {
      if (!file.is_regular_file() || !has_pgm_extension(file.path())) continue;
      DatasetEntry entry;
      entry.subject_id = subject;
      entry.image_id = subject + "/" + file.path().filename().string();
      entry.path = file.path();
      entries.push_back(std::move(entry));
    }
  }
  if (entries.empty()) throw ConfigError("no .pgm images found under " + root.string());
  return Dataset(std::move(entries));
}

}  // namespace polarfreq
