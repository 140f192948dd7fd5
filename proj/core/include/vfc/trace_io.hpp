#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "vfc/game.hpp"

namespace vfc {

// Line-oriented trace format:
//   # vfcsim-trace v1
//   # config <game json, including the seed>
//   # columns round agent active clock task_size zeta eta gamma chosen congestion
//             candidates probs estimates adversary_cost collision_cost outlier realized normalized
//   one whitespace-separated record per line in that column order
// Lists are ';'-joined and "-" when empty. Floats use the shortest
// round-trip decimal form, so a read-back trace is bit-identical.
void write_trace(std::ostream& out, const GameTrace& trace);
void write_trace_file(const std::filesystem::path& path, const GameTrace& trace);

// Throws TraceError naming `source` and the offending line.
GameTrace read_trace(std::istream& in, const std::string& source);
GameTrace read_trace_file(const std::filesystem::path& path);

std::string format_double(double x);

}  // namespace vfc
