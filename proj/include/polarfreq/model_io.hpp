#pragma once

#include <filesystem>
#include <iosfwd>

#include "polarfreq/pfld.hpp"

namespace polarfreq {

// Plain-text model file, versioned by its first line:
//
//   PFLD1
//   layout <layout_id>
//   gallery <n> <dim>
//   <dim values>                 (n lines)
//   classes <L>
//   <label>                      (L lines)
//   offset <n>
//   <n values>
//   weights <n+1> <L>
//   <L values>                   (n+1 lines)
//
// Numbers use shortest round-trip formatting; a reloaded model classifies
// bit-identically.

void write_model(std::ostream& out, const TrainedModel& model);
/// Throws ParseError (with line number) on a bad header or malformed body.
TrainedModel read_model(std::istream& in);

void save_model(const std::filesystem::path& path, const TrainedModel& model);
TrainedModel load_model(const std::filesystem::path& path);

}  // namespace polarfreq
