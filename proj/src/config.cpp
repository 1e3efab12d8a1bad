#include "polarfreq/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>

#include "polarfreq/error.hpp"
#include "polarfreq/text_format.hpp"

namespace polarfreq {

namespace {

std::string trim(std::string_view text) {
  auto begin = text.begin();
  auto end = text.end();
  while (begin != end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
  while (end != begin && std::isspace(static_cast<unsigned char>(*(end - 1)))) --end;
  return std::string(begin, end);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    auto t = trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& items) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ',';
    if constexpr (std::is_same_v<T, double>) {
      out += format_double(items[k]);
    } else {
      out += std::to_string(items[k]);
    }
  }
  return out;
}

class Reader {
public:
  explicit Reader(const IniDocument& doc) : doc_(doc) {}

  bool has(const std::string& key) {
    used_.insert(key);
    return doc_.values.count(key) != 0;
  }
  const std::string& raw(const std::string& key) const { return doc_.values.at(key); }
  std::size_t line(const std::string& key) const { return doc_.lines.at(key); }

  void string(const std::string& key, std::string& out) {
    if (has(key)) out = raw(key);
  }
  void integer(const std::string& key, int& out) {
    if (has(key)) out = static_cast<int>(parse_integer(raw(key), line(key)));
  }
  void unsigned64(const std::string& key, std::uint64_t& out) {
    if (has(key)) out = static_cast<std::uint64_t>(parse_integer(raw(key), line(key)));
  }
  void real(const std::string& key, double& out) {
    if (has(key)) out = parse_double(raw(key), line(key));
  }
  void boolean(const std::string& key, bool& out) {
    if (!has(key)) return;
    const auto& v = raw(key);
    if (v == "true" || v == "1" || v == "yes") {
      out = true;
    } else if (v == "false" || v == "0" || v == "no") {
      out = false;
    } else {
      throw ParseError("line " + std::to_string(line(key)) + ": expected a boolean for " + key,
                       line(key));
    }
  }
  void integers(const std::string& key, std::vector<int>& out) {
    if (!has(key)) return;
    out.clear();
    for (const auto& item : split_list(raw(key))) {
      out.push_back(static_cast<int>(parse_integer(item, line(key))));
    }
  }
  void point(const std::string& key, Point2& out) {
    if (!has(key)) return;
    const auto items = split_list(raw(key));
    if (items.size() != 2) {
      throw ParseError("line " + std::to_string(line(key)) + ": expected x,y for " + key,
                       line(key));
    }
    out = {parse_double(items[0], line(key)), parse_double(items[1], line(key))};
  }

  void reject_unknown() const {
    for (const auto& [key, value] : doc_.values) {
      if (!used_.count(key)) {
        throw ConfigError("unknown configuration key '" + key + "' (line " +
                          std::to_string(doc_.lines.at(key)) + ")");
      }
    }
  }

private:
  const IniDocument& doc_;
  std::set<std::string> used_;
};

}  // namespace

IniDocument parse_ini(const std::string& text) {
  IniDocument doc;
  std::istringstream in(text);
  std::string section;
  std::size_t line_number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_number;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ParseError("line " + std::to_string(line_number) + ": malformed section header",
                         line_number);
      }
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_number) + ": expected key = value",
                       line_number);
    }
    const auto key = trim(std::string_view(line).substr(0, eq));
    if (key.empty()) {
      throw ParseError("line " + std::to_string(line_number) + ": empty key", line_number);
    }
    const auto full = section.empty() ? key : section + "." + key;
    if (doc.values.count(full)) {
      throw ParseError("line " + std::to_string(line_number) + ": duplicate key " + full,
                       line_number);
    }
    doc.values[full] = trim(std::string_view(line).substr(eq + 1));
    doc.lines[full] = line_number;
  }
  return doc;
}

void RunConfig::validate() const {
  if (mode != FeatureMode::dft) fbt.validate();
  if (mode != FeatureMode::fbt) dft.validate();
  split.validate();
  if (normalize) normalization.validate();
  if (workers < 1) throw ConfigError("workers must be >= 1");
  static const std::set<std::string> kinds{"error-rate", "cmc",          "roc",
                                           "learning-curve", "subject-curve",
                                           "feature-map", "synth-oracle"};
  if (!kinds.count(experiment)) throw ConfigError("unknown experiment '" + experiment + "'");
  if (experiment == "learning-curve" && k_values.empty()) {
    throw ConfigError("learning-curve needs at least one k value");
  }
  if (experiment == "subject-curve" && subject_counts.empty()) {
    throw ConfigError("subject-curve needs at least one subject count");
  }
  if (experiment == "feature-map") {
    if (mode != FeatureMode::dft) map_fbt.validate();
    if (mode != FeatureMode::fbt) map_dft.validate();
  }
  if (out_dir.empty()) throw ConfigError("output directory must be set");
}

RunConfig apply_ini(const IniDocument& doc, RunConfig config) {
  Reader r(doc);
  std::string text;

  if (r.has("run.mode")) config.mode = parse_feature_mode(r.raw("run.mode"));
  r.string("run.out", config.out_dir);
  r.integer("run.workers", config.workers);

  r.string("dataset.path", config.dataset_path);
  if (r.has("dataset.layout")) config.layout = parse_dataset_layout(r.raw("dataset.layout"));
  r.boolean("dataset.normalize", config.normalize);

  r.integer("fbt.max_order", config.fbt.max_order);
  r.integer("fbt.max_root", config.fbt.max_root);
  r.real("fbt.angular_resolution", config.fbt.angular_resolution_deg);
  r.real("dft.max_cycles", config.dft.max_cycles);

  r.integer("split.k_train", config.split.k_train_per_subject);
  r.integer("split.subjects", config.split.n_subjects);
  r.integer("split.reps", config.split.repetitions);
  r.unsigned64("split.seed", config.split.seed);

  r.string("experiment.kind", config.experiment);
  r.integers("experiment.k_values", config.k_values);
  r.integers("experiment.subject_counts", config.subject_counts);
  if (r.has("experiment.score_orientation")) {
    config.score_orientation = parse_score_orientation(r.raw("experiment.score_orientation"));
  }
  if (r.has("experiment.score_source")) {
    config.score_source = parse_score_source(r.raw("experiment.score_source"));
  }

  r.integer("feature_map.fbt_max_order", config.map_fbt.max_order);
  r.integer("feature_map.fbt_max_root", config.map_fbt.max_root);
  r.real("feature_map.fbt_angular_resolution", config.map_fbt.angular_resolution_deg);
  r.real("feature_map.dft_max_cycles", config.map_dft.max_cycles);

  auto& norm = config.normalization;
  r.point("normalization.left_eye", norm.target_left);
  r.point("normalization.right_eye", norm.target_right);
  r.integer("normalization.crop_width", norm.crop_width);
  r.integer("normalization.crop_height", norm.crop_height);
  r.point("normalization.mask_center", norm.mask.center);
  r.real("normalization.mask_semi_x", norm.mask.semi_x);
  r.real("normalization.mask_semi_y", norm.mask.semi_y);
  r.boolean("normalization.apply_mask", norm.apply_mask);

  r.reject_unknown();
  return config;
}

std::string to_ini(const RunConfig& c) {
  std::ostringstream out;
  auto point = [](Point2 p) { return format_double(p.x) + "," + format_double(p.y); };
  out << "[run]\n"
      << "mode = " << to_string(c.mode) << '\n'
      << "out = " << c.out_dir << '\n'
      << "workers = " << c.workers << '\n'
      << "\n[dataset]\n"
      << "path = " << c.dataset_path << '\n'
      << "layout = " << to_string(c.layout) << '\n'
      << "normalize = " << (c.normalize ? "true" : "false") << '\n'
      << "\n[fbt]\n"
      << "max_order = " << c.fbt.max_order << '\n'
      << "max_root = " << c.fbt.max_root << '\n'
      << "angular_resolution = " << format_double(c.fbt.angular_resolution_deg) << '\n'
      << "\n[dft]\n"
      << "max_cycles = " << format_double(c.dft.max_cycles) << '\n'
      << "\n[split]\n"
      << "k_train = " << c.split.k_train_per_subject << '\n'
      << "subjects = " << c.split.n_subjects << '\n'
      << "reps = " << c.split.repetitions << '\n'
      << "seed = " << c.split.seed << '\n'
      << "\n[experiment]\n"
      << "kind = " << c.experiment << '\n'
      << "k_values = " << join(c.k_values) << '\n'
      << "subject_counts = " << join(c.subject_counts) << '\n'
      << "score_orientation = " << to_string(c.score_orientation) << '\n'
      << "score_source = " << to_string(c.score_source) << '\n'
      << "\n[feature_map]\n"
      << "fbt_max_order = " << c.map_fbt.max_order << '\n'
      << "fbt_max_root = " << c.map_fbt.max_root << '\n'
      << "fbt_angular_resolution = " << format_double(c.map_fbt.angular_resolution_deg) << '\n'
      << "dft_max_cycles = " << format_double(c.map_dft.max_cycles) << '\n'
      << "\n[normalization]\n"
      << "left_eye = " << point(c.normalization.target_left) << '\n'
      << "right_eye = " << point(c.normalization.target_right) << '\n'
      << "crop_width = " << c.normalization.crop_width << '\n'
      << "crop_height = " << c.normalization.crop_height << '\n'
      << "mask_center = " << point(c.normalization.mask.center) << '\n'
      << "mask_semi_x = " << format_double(c.normalization.mask.semi_x) << '\n'
      << "mask_semi_y = " << format_double(c.normalization.mask.semi_y) << '\n'
      << "apply_mask = " << (c.normalization.apply_mask ? "true" : "false") << '\n';
  return out.str();
}

std::string config_hash(const RunConfig& config) {
  // Output location and worker count do not change results.
  RunConfig canonical = config;
  canonical.out_dir.clear();
  canonical.workers = 1;
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_ini(canonical)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

}  // namespace polarfreq
