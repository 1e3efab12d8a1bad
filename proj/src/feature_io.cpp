#include "polarfreq/feature_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "polarfreq/error.hpp"
#include "polarfreq/file_util.hpp"
#include "polarfreq/text_format.hpp"

namespace polarfreq {

namespace {

void check_field(const std::string& field, const char* what) {
  if (field.empty() || field.find_first_of(",\n\r") != std::string::npos) {
    throw ConfigError(std::string(what) + " '" + field +
                      "' is empty or contains a comma or newline");
  }
}

}  // namespace

void write_feature_csv(std::ostream& out, std::span<const FeatureRecord> records) {
  for (const auto& r : records) {
    check_field(r.image_id, "image id");
    check_field(r.subject_id, "subject id");
    check_field(r.features.layout_id, "layout id");
    out << r.image_id << ',' << r.subject_id << ',' << r.features.layout_id;
    for (double v : r.features.values) out << ',' << format_double(v);
    out << '\n';
  }
}

std::vector<FeatureRecord> read_feature_csv(std::istream& in) {
  std::vector<FeatureRecord> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() < 3 || fields[0].empty() || fields[1].empty() || fields[2].empty()) {
      throw ParseError("feature file line " + std::to_string(line_number) +
                           ": expected image-id,subject-id,layout_id,values...",
                       line_number);
    }
    FeatureRecord record;
    record.image_id = fields[0];
    record.subject_id = fields[1];
    record.features.layout_id = fields[2];
    record.features.values.reserve(fields.size() - 3);
    for (std::size_t k = 3; k < fields.size(); ++k) {
      record.features.values.push_back(parse_double(fields[k], line_number));
    }
    out.push_back(std::move(record));
  }
  return out;
}

void save_feature_file(const std::filesystem::path& path,
                       std::span<const FeatureRecord> records) {
  std::ostringstream buffer;
  write_feature_csv(buffer, records);
  write_file_atomic(path, buffer.str());
}

std::vector<FeatureRecord> load_feature_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_feature_csv(in);
}

}  // namespace polarfreq
