#include <random>

#include "doctest.h"
#include "digitop/corpus.hpp"
#include "digitop/errors.hpp"
#include "digitop/transform.hpp"
#include "test_support.hpp"

using namespace digitop;

namespace {

DigitalSpace seven_point_sphere() { return r_transform(minimal_sphere(2), "p0a", "p1a", "x"); }

DigitalSpace bipyramid6() {
  return join(DigitalSpace({"na", "nb"}, {}), with_prefix(cycle(6), "r"));
}

// Induced 4-cycle {v, u, y, x} with x in O(v) - O(u), y in O(u) - O(v).
bool edge_in_induced_square(const DigitalSpace& m, const PointId& v, const PointId& u) {
  for (const auto& x : m.neighbors(v)) {
    if (x == u || m.adjacent(x, u)) continue;
    for (const auto& y : m.neighbors(u)) {
      if (y == v || m.adjacent(y, v)) continue;
      if (m.adjacent(x, y)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("R-transformation") {
  const auto n = seven_point_sphere();
  CHECK(n.size() == 7);
  CHECK_FALSE(n.adjacent("p0a", "p1a"));
  CHECK(recognize_sphere(n) == 2);
  CHECK(are_isomorphic(r_transform(cycle(4), "c0", "c1", "z"), cycle(5)));
  CHECK(are_isomorphic(r_transform(cycle(5), "c0", "c1", "z"), cycle(6)));
  CHECK_THROWS_AS(r_transform(cycle(4), "c0", "c2", "z"), PreconditionError);
  CHECK_THROWS_AS(r_transform(cycle(4), "c0", "c1", "c2"), PreconditionError);
  const DigitalSpace triangle({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK_THROWS_AS(r_transform(triangle, "a", "b", "z"), PreconditionError);
}

TEST_CASE("disk contraction") {
  const auto six = cycle(6);
  ContractionStep step;
  const auto five = contract_disk(six, {"c0", "c1", "c2", "c3"}, "z", &step);
  CHECK(are_isomorphic(five, cycle(5)));
  CHECK(step.interior_removed == std::vector<PointId>{"c1", "c2"});
  CHECK(step.boundary == std::vector<PointId>{"c0", "c3"});
  CHECK(five.neighbors("z") == std::vector<PointId>{"c0", "c3"});

  const auto oct = minimal_sphere(2);
  const auto same = contract_disk(oct, ball(oct, "p0a").points(), "z");
  CHECK(are_isomorphic(same, oct));

  const auto n = seven_point_sphere();
  const auto disks = find_edge_disks(n);
  REQUIRE_FALSE(disks.empty());
  auto pts = ball(n, disks[0].first).points();
  const auto other = ball(n, disks[0].second);
  pts.insert(pts.end(), other.points().begin(), other.points().end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const auto back = contract_disk(n, pts, "z");
  CHECK(back.size() == 6);
  CHECK(recognize_sphere(back) == 2);
  CHECK_THROWS_AS(contract_disk(cycle(6), {"c0", "c2"}, "z"), PreconditionError);
}

TEST_CASE("edge disks") {
  CHECK(find_edge_disks(minimal_sphere(2)).empty());
  CHECK(find_edge_disks(torus16()).empty());
  CHECK(find_edge_disks(projective_plane11()).empty());
  CHECK(find_edge_disks(cycle(4)).empty());
  CHECK_FALSE(find_edge_disks(seven_point_sphere()).empty());
  CHECK_FALSE(find_edge_disks(cycle(5)).empty());
}

TEST_CASE("compression") {
  for (int k = 4; k <= 12; ++k) {
    const auto c = compress(cycle(k));
    CHECK(are_isomorphic(c.space, cycle(4)));
    CHECK(c.steps.size() == static_cast<std::size_t>(k - 4));
    CHECK(c.edge_compressed);
  }
  const auto n = compress(seven_point_sphere());
  CHECK(are_isomorphic(n.space, minimal_sphere(2)));
  CHECK(n.space.contains("z0"));
  const auto t = compress(torus16());
  CHECK(t.space == torus16());
  CHECK(t.steps.empty());
  CHECK(compress(seven_point_sphere()).space == compress(seven_point_sphere()).space);
}

TEST_CASE("bounded compressedness") {
  CHECK(is_compressed(minimal_sphere(2), 3).verdict == CompressedVerdict::kCompressedUpToBound);
  const auto n = is_compressed(seven_point_sphere(), 2);
  CHECK(n.verdict == CompressedVerdict::kNotCompressed);
  CHECK(n.witness_interior.size() == 2);
  CHECK(is_compressed(cycle(4), 2).verdict != CompressedVerdict::kNotCompressed);
  CHECK(is_compressed(torus16(), 3).verdict == CompressedVerdict::kCompressedUpToBound);
}

TEST_CASE("connected sums") {
  const auto a = with_prefix(minimal_sphere(2), "a_");
  const auto b = with_prefix(minimal_sphere(2), "b_");
  const auto ab = connected_sum(a, "a_p0a", b, "b_p0a");
  CHECK(ab.size() == 6);
  CHECK(recognize_sphere(ab) == 2);
  CHECK(are_isomorphic(ab, minimal_sphere(2)));

  const auto c = connected_sum(with_prefix(cycle(4), "a_"), "a_c0", with_prefix(cycle(4), "b_"), "b_c0");
  CHECK(are_isomorphic(c, cycle(4)));

  const auto tb = connected_sum(torus16(), "t00", bipyramid6(), "na");
  CHECK(tb.size() == 16);
  CHECK(recognize_closed_manifold(tb) == 2);
  CHECK(euler_characteristic(tb) == 0);

  CHECK_THROWS_AS(connected_sum(torus16(), "t00", b, "b_p0a"), PreconditionError);
  CHECK_THROWS_AS(connected_sum(a, "a_p0a", a, "a_p0a"), PreconditionError);
  std::map<PointId, PointId> bad{{"a_p1a", "b_p1a"}, {"a_p1b", "b_p2a"}, {"a_p2a", "b_p1b"},
                                 {"a_p2b", "b_p2b"}};
  CHECK_THROWS_AS(connected_sum(a, "a_p0a", b, "b_p0a", bad), PreconditionError);
  std::map<PointId, PointId> good{{"a_p1a", "b_p2a"}, {"a_p1b", "b_p2b"}, {"a_p2a", "b_p1a"},
                                  {"a_p2b", "b_p1b"}};
  CHECK(recognize_sphere(connected_sum(a, "a_p0a", b, "b_p0a", good)) == 2);
}

TEST_CASE("edge-compressed corpus spaces have every edge in an induced square") {
  int violations = 0;
  for (const auto& m : {minimal_sphere(1), minimal_sphere(2), minimal_sphere(3), torus16(),
                        projective_plane11()}) {
    REQUIRE(find_edge_disks(m).empty());
    for (const auto& [v, u] : m.edges())
      if (!edge_in_induced_square(m, v, u)) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("random R-transforms compress back to the octahedron") {
  std::mt19937_64 rng(41);
  const auto oct = minimal_sphere(2);
  for (int trial = 0; trial < 30; ++trial) {
    DigitalSpace m = oct;
    const int k = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) {
      const auto edges = m.edges();
      const auto& [v, u] = edges[rng() % edges.size()];
      m = r_transform(m, v, u, fresh_id(m, "r"));
    }
    CHECK(are_isomorphic(compress(m).space, oct));
    CHECK(are_isomorphic(compress_random_order(m, rng()).space, oct));
  }
}

TEST_CASE("random move sequences preserve manifold structure and Euler characteristic") {
  std::mt19937_64 rng(43);
  int moves = 0;
  int violations = 0;
  for (int trial = 0; trial < 60; ++trial) {
    DigitalSpace m = trial % 2 == 0 ? minimal_sphere(2) : cycle(4);
    const int dim = trial % 2 == 0 ? 2 : 1;
    const std::int64_t chi = euler_characteristic(m);
    const int length = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < length; ++i) {
      const auto disks = find_edge_disks(m);
      if (!disks.empty() && rng() % 3 == 0) {
        const auto& [v, u] = disks[rng() % disks.size()];
        auto pts = ball(m, v).points();
        const auto bu = ball(m, u);
        pts.insert(pts.end(), bu.points().begin(), bu.points().end());
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        m = contract_disk(m, pts, fresh_id(m, "d"));
      } else {
        const auto edges = m.edges();
        const auto& [v, u] = edges[rng() % edges.size()];
        m = r_transform(m, v, u, fresh_id(m, "r"));
      }
      ++moves;
      if (recognize_closed_manifold(m) != dim || euler_characteristic(m) != chi) ++violations;
    }
  }
  CHECK(moves >= 200);
  CHECK(violations == 0);
}

TEST_CASE("random R-transforms on surfaces") {
  std::mt19937_64 rng(47);
  for (const auto& base : {torus16(), projective_plane11()}) {
    DigitalSpace m = base;
    for (int i = 0; i < 4; ++i) {
      const auto edges = m.edges();
      const auto& [v, u] = edges[rng() % edges.size()];
      m = r_transform(m, v, u, fresh_id(m, "r"));
    }
    CHECK(recognize_closed_manifold(m) == 2);
    CHECK(euler_characteristic(m) == euler_characteristic(base));
    const auto c = compress(m);
    CHECK(c.edge_compressed);
    CHECK(euler_characteristic(c.space) == euler_characteristic(base));
    CHECK(c.space.size() <= m.size());
  }
}
