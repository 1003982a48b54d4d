#pragma once

#include <string>
#include <string_view>

#include "digitop/space.hpp"

namespace digitop {

// SpaceFile grammar, line oriented:
//   digitop 1
//   point <id>      (zero or more)
//   edge <id> <id>  (zero or more, after all points)
// '#' starts a comment; blank lines are ignored.
DigitalSpace parse_space(std::string_view text);

// Points sorted by id, then edges as (smaller, larger) in sorted order.
std::string serialize_space(const DigitalSpace& g);

std::string export_dot(const DigitalSpace& g, std::string_view name = "G");

DigitalSpace read_space_file(const std::string& path);
void write_space_file(const std::string& path, const DigitalSpace& g);

}  // namespace digitop
