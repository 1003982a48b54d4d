#pragma once

#include <string>
#include <string_view>

#include "digitop/space.hpp"

namespace digitop {

inline constexpr int kMaxCorpusDimension = 12;

// Join of n+1 copies of S^0; points p0a, p0b, ..., p<n>a, p<n>b.
DigitalSpace minimal_sphere(int n);
// minimal_sphere(n) without its first point p0a.
DigitalSpace minimal_disk(int n);
// Triangulated 4x4 torus: (i,j) ~ (i±1,j), (i,j±1), (i+1,j+1), indices mod 4.
DigitalSpace torus16();
// Compressed 11-point projective plane (a flag triangulation of RP^2).
DigitalSpace projective_plane11();
// Cycle on k >= 3 points c0 ... c<k-1>.
DigitalSpace cycle(int k);

// Builtin names: "torus16", "projplane11", "sphere<n>", "disk<n>", "cycle<k>".
bool is_builtin_name(std::string_view name);
DigitalSpace builtin(std::string_view name);

}  // namespace digitop
