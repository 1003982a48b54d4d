#include "digitop/corpus.hpp"

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "digitop/errors.hpp"

namespace digitop {
namespace {

void check_dimension(int n) {
  if (n < 0 || n > kMaxCorpusDimension) {
    throw PreconditionError("dimension " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxCorpusDimension) + "]");
  }
}

std::string torus_id(int i, int j) { return "t" + std::to_string(i) + std::to_string(j); }

// Edge list of the compressed projective plane; see projective_plane11().
constexpr const char* kProjectivePlaneEdges[][2] = {
#include "projective_plane11.inc"
};

std::optional<int> parse_suffix(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) return std::nullopt;
  std::string_view digits = name.substr(prefix.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

}  // namespace

DigitalSpace minimal_sphere(int n) {
  check_dimension(n);
  std::vector<PointId> points;
  for (int k = 0; k <= n; ++k) {
    points.push_back("p" + std::to_string(k) + "a");
    points.push_back("p" + std::to_string(k) + "b");
  }
  // Every point is adjacent to all others except its antipode.
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (i / 2 != j / 2) edges.emplace_back(points[i], points[j]);
    }
  }
  return DigitalSpace(std::move(points), edges);
}

DigitalSpace minimal_disk(int n) {
  check_dimension(n);
  return delete_points(minimal_sphere(n), {"p0a"});
}

DigitalSpace torus16() {
  std::vector<PointId> points;
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      points.push_back(torus_id(i, j));
      edges.emplace_back(torus_id(i, j), torus_id((i + 1) % 4, j));
      edges.emplace_back(torus_id(i, j), torus_id(i, (j + 1) % 4));
      edges.emplace_back(torus_id(i, j), torus_id((i + 1) % 4, (j + 1) % 4));
    }
  }
  return DigitalSpace(std::move(points), edges);
}

DigitalSpace projective_plane11() {
  std::vector<PointId> points;
  for (int k = 0; k < 11; ++k) points.push_back("q" + std::to_string(k));
  std::vector<Edge> edges;
  for (const auto& e : kProjectivePlaneEdges) edges.emplace_back(e[0], e[1]);
  return DigitalSpace(std::move(points), edges);
}

DigitalSpace cycle(int k) {
  if (k < 3) throw PreconditionError("a cycle needs at least 3 points");
  std::vector<PointId> points;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    points.push_back("c" + std::to_string(i));
    edges.emplace_back("c" + std::to_string(i), "c" + std::to_string((i + 1) % k));
  }
  return DigitalSpace(std::move(points), edges);
}

bool is_builtin_name(std::string_view name) {
  if (name == "torus16" || name == "projplane11") return true;
  if (auto n = parse_suffix(name, "sphere")) return *n >= 0 && *n <= kMaxCorpusDimension;
  if (auto n = parse_suffix(name, "disk")) return *n >= 0 && *n <= kMaxCorpusDimension;
  if (auto k = parse_suffix(name, "cycle")) return *k >= 3 && *k <= 4096;
  return false;
}

DigitalSpace builtin(std::string_view name) {
  if (name == "torus16") return torus16();
  if (name == "projplane11") return projective_plane11();
  if (auto n = parse_suffix(name, "sphere")) return minimal_sphere(*n);
  if (auto n = parse_suffix(name, "disk")) return minimal_disk(*n);
  if (auto k = parse_suffix(name, "cycle")) return cycle(*k);
  throw PreconditionError("unknown builtin space '" + std::string(name) + "'");
}

}  // namespace digitop
