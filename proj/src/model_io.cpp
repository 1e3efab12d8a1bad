#include "polarfreq/model_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "polarfreq/error.hpp"
#include "polarfreq/file_util.hpp"
#include "polarfreq/text_format.hpp"

namespace polarfreq {

namespace {

constexpr const char* kMagic = "PFLD1";

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next() {
    std::string line;
    if (!std::getline(in_, line)) {
      throw ParseError("model file ends early after line " + std::to_string(line_), line_);
    }
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  std::vector<std::string> words() {
    std::istringstream in(next());
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
  }

  std::vector<double> numbers(std::size_t expected) {
    const auto w = words();
    if (w.size() != expected) {
      throw ParseError("model line " + std::to_string(line_) + ": expected " +
                           std::to_string(expected) + " values, found " +
                           std::to_string(w.size()),
                       line_);
    }
    std::vector<double> out;
    out.reserve(expected);
    for (const auto& s : w) out.push_back(parse_double(s, line_));
    return out;
  }

  std::vector<std::string> keyword(const char* key, std::size_t args) {
    auto w = words();
    if (w.size() != args + 1 || w[0] != key) {
      throw ParseError("model line " + std::to_string(line_) + ": expected '" + key + "'",
                       line_);
    }
    return w;
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::istream& in_;
  std::size_t line_ = 0;
};

void write_row(std::ostream& out, const double* values, Eigen::Index count,
               Eigen::Index stride = 1) {
  for (Eigen::Index k = 0; k < count; ++k) {
    if (k) out << ' ';
    out << format_double(values[k * stride]);
  }
  out << '\n';
}

}  // namespace

void write_model(std::ostream& out, const TrainedModel& model) {
  const auto& gallery = model.gallery();
  const auto dim = gallery.front().size();
  out << kMagic << '\n';
  out << "layout " << model.layout_id() << '\n';
  out << "gallery " << gallery.size() << ' ' << dim << '\n';
  for (const auto& g : gallery) write_row(out, g.values.data(), static_cast<Eigen::Index>(dim));
  out << "classes " << model.class_labels().size() << '\n';
  for (const auto& label : model.class_labels()) out << label << '\n';
  out << "offset " << model.mean_offset().size() << '\n';
  write_row(out, model.mean_offset().data(), model.mean_offset().size());
  const auto& w = model.weights();
  out << "weights " << w.rows() << ' ' << w.cols() << '\n';
  // Eigen is column-major: row r starts at data() + r with stride rows().
  for (Eigen::Index r = 0; r < w.rows(); ++r) write_row(out, w.data() + r, w.cols(), w.rows());
}

TrainedModel read_model(std::istream& in) {
  LineReader reader(in);
  if (reader.next() != kMagic) throw ParseError("not a PFLD1 model file", 1);

  const auto layout = reader.keyword("layout", 1)[1];
  const auto gallery_header = reader.keyword("gallery", 2);
  const auto n = static_cast<std::size_t>(parse_integer(gallery_header[1], reader.line()));
  const auto dim = static_cast<std::size_t>(parse_integer(gallery_header[2], reader.line()));
  if (n == 0) throw ParseError("model gallery is empty", reader.line());

  std::vector<FeatureVector> gallery(n);
  for (auto& g : gallery) {
    g.layout_id = layout;
    g.values = reader.numbers(dim);
  }

  PfldSolution solution;
  const auto classes = static_cast<std::size_t>(
      parse_integer(reader.keyword("classes", 1)[1], reader.line()));
  for (std::size_t c = 0; c < classes; ++c) solution.class_labels.push_back(reader.next());

  const auto offset_size = static_cast<std::size_t>(
      parse_integer(reader.keyword("offset", 1)[1], reader.line()));
  if (offset_size != n) throw ParseError("offset length differs from gallery", reader.line());
  const auto offset = reader.numbers(n);
  solution.mean_offset = Eigen::Map<const Eigen::RowVectorXd>(offset.data(),
                                                              static_cast<Eigen::Index>(n));

  const auto weights_header = reader.keyword("weights", 2);
  const auto rows = parse_integer(weights_header[1], reader.line());
  const auto cols = parse_integer(weights_header[2], reader.line());
  if (rows != static_cast<long long>(n + 1) || cols != static_cast<long long>(classes)) {
    throw ParseError("weight matrix shape is inconsistent", reader.line());
  }
  solution.weights.resize(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto row = reader.numbers(static_cast<std::size_t>(cols));
    for (Eigen::Index c = 0; c < cols; ++c) solution.weights(r, c) = row[c];
  }
  return TrainedModel(std::move(gallery), std::move(solution));
}

void save_model(const std::filesystem::path& path, const TrainedModel& model) {
  std::ostringstream buffer;
  write_model(buffer, model);
  write_file_atomic(path, buffer.str());
}

TrainedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_model(in);
}

}  // namespace polarfreq
