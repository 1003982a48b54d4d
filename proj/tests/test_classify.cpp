#include <random>
#include <set>

#include "doctest.h"
#include "digitop/classify.hpp"
#include "digitop/corpus.hpp"
#include "digitop/errors.hpp"
#include "digitop/transform.hpp"
#include "test_support.hpp"

using namespace digitop;

namespace {

// Compressed closed n-manifolds on exactly N points up to isomorphism, by
// testing every labeled graph on N points.
std::set<std::string> brute_force_catalog(int n, std::size_t points) {
  std::set<std::string> codes;
  const std::size_t pairs = points * (points - 1) / 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < points; ++i)
    for (std::size_t j = i + 1; j < points; ++j) slots.emplace_back(i, j);
  const auto names = testing::numbered_ids(points, "v");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<int> degree(points, 0);
    for (std::size_t b = 0; b < pairs; ++b)
      if ((mask >> b) & 1) {
        ++degree[slots[b].first];
        ++degree[slots[b].second];
      }
    if (*std::min_element(degree.begin(), degree.end()) < 2 * n) continue;
    Graph g(points);
    for (std::size_t b = 0; b < pairs; ++b)
      if ((mask >> b) & 1) g.add_edge(slots[b].first, slots[b].second);
    if (n > 0 && !g.connected()) continue;
    if (recognize_closed_manifold(g) != n) continue;
    const auto m = DigitalSpace::from_graph(g, names);
    if (!find_edge_disks(m).empty()) continue;
    codes.insert(canonical_code(g));
  }
  return codes;
}

std::set<std::string> catalog_codes(const Catalog& c, std::size_t points) {
  std::set<std::string> codes;
  for (const auto& e : c.entries)
    if (e.points == points) codes.insert(e.form.encoding);
  return codes;
}

DigitalSpace seven_point_sphere() { return r_transform(minimal_sphere(2), "p0a", "p1a", "x"); }

}  // namespace

TEST_CASE("complexity") {
  CHECK(complexity(minimal_sphere(2)) == 6);
  CHECK(complexity(projective_plane11()) == 11);
  CHECK(complexity(torus16()) == 16);
  for (int k = 4; k <= 12; ++k) CHECK(complexity(cycle(k)) == 4);
  CHECK(complexity(seven_point_sphere()) == 6);
  for (int n = 1; n <= 4; ++n) CHECK(complexity(minimal_sphere(n)) == static_cast<std::size_t>(2 * n + 2));
  CHECK_THROWS_AS(complexity(minimal_disk(2)), PreconditionError);
}

TEST_CASE("classification reports") {
  for (int n = 1; n <= 4; ++n) {
    const auto r = classification_report(minimal_sphere(n));
    CHECK(r.dimension == n);
    CHECK(r.complexity == static_cast<std::size_t>(2 * n + 2));
    CHECK(r.punctured_reduced.size() == 1);
    CHECK(r.punctured_point == "p0a");
  }
  const auto t = classification_report(torus16());
  CHECK(t.point_count == 16);
  CHECK(t.euler == 0);
  CHECK(t.complexity == 16);
  CHECK(t.punctured_euler == -1);
  const auto p = classification_report(projective_plane11());
  CHECK(p.complexity == 11);
  CHECK(p.euler == 1);
  CHECK(p.punctured_euler == 0);
}

TEST_CASE("punctured Euler characteristic does not depend on the point") {
  for (const auto& m : {torus16(), projective_plane11(), minimal_sphere(3)}) {
    const std::int64_t first = euler_characteristic(delete_points(m, {m.id(0)}));
    for (const auto& v : m.points()) CHECK(euler_characteristic(delete_points(m, {v})) == first);
  }
}

TEST_CASE("complexity bounds") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 12; ++trial) {
    DigitalSpace m = trial % 3 == 0 ? cycle(4) : (trial % 3 == 1 ? minimal_sphere(2) : minimal_sphere(3));
    for (int i = 0; i < 4; ++i) {
      const auto edges = m.edges();
      const auto& [v, u] = edges[rng() % edges.size()];
      m = r_transform(m, v, u, fresh_id(m, "r"));
    }
    const auto r = classification_report(m);
    if (r.dimension == 1) {
      CHECK(r.complexity == 4);
    } else {
      CHECK(r.complexity >= static_cast<std::size_t>(2 * r.dimension + 2));
      CHECK(r.complexity <= r.point_count);
    }
  }
}

TEST_CASE("reports are invariant under R-transformations") {
  std::mt19937_64 rng(53);
  for (const auto& base : {minimal_sphere(2), minimal_sphere(3), projective_plane11()}) {
    const auto before = classification_report(base);
    for (int trial = 0; trial < 5; ++trial) {
      DigitalSpace m = base;
      for (int i = 0; i < 3; ++i) {
        const auto edges = m.edges();
        const auto& [v, u] = edges[rng() % edges.size()];
        m = r_transform(m, v, u, fresh_id(m, "r"));
      }
      const auto after = classification_report(m);
      CHECK(after.complexity == before.complexity);
      CHECK(after.compression_form.encoding == before.compression_form.encoding);
      CHECK(after.punctured_euler == before.punctured_euler);
    }
  }
}

TEST_CASE("torus compressions depend on the representative") {
  // Smaller edge-compressed tori are reachable from torus16; only the
  // homotopy-level fields of the report are invariant.
  std::mt19937_64 rng(1);
  std::set<std::size_t> sizes;
  for (int trial = 0; trial < 40; ++trial) {
    DigitalSpace m = torus16();
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) {
      const auto edges = m.edges();
      const auto& [v, u] = edges[rng() % edges.size()];
      m = r_transform(m, v, u, fresh_id(m, "r"));
    }
    const auto r = classification_report(m);
    CHECK(r.dimension == 2);
    CHECK(r.euler == 0);
    CHECK(r.punctured_euler == -1);
    CHECK(find_edge_disks(r.compression).empty());
    sizes.insert(r.complexity);
  }
  CHECK(*sizes.begin() < 16);
  CHECK(*sizes.rbegin() <= 16);
}

TEST_CASE("catalog rows") {
  const auto c0 = catalog(0, 4);
  CHECK(c0.exhaustive);
  REQUIRE(c0.entries.size() == 1);
  CHECK(c0.entries[0].points == 2);

  const auto c1 = catalog(1, 8);
  CHECK(c1.exhaustive);
  REQUIRE(c1.entries.size() == 1);
  CHECK(are_isomorphic(c1.entries[0].space, cycle(4)));

  const auto c2 = catalog(2, 7);
  CHECK(c2.exhaustive);
  REQUIRE(c2.entries.size() == 1);
  CHECK(are_isomorphic(c2.entries[0].space, minimal_sphere(2)));
  CHECK(c2.entries[0].euler == 2);

  const auto c3 = catalog(3, 8);
  REQUIRE(c3.entries.size() == 1);
  CHECK(are_isomorphic(c3.entries[0].space, minimal_sphere(3)));

  CHECK_THROWS_AS(catalog(2, 5), PreconditionError);
}

TEST_CASE("catalog agrees with brute force over labeled graphs") {
  for (std::size_t points = 4; points <= 7; ++points)
    CHECK(catalog_codes(catalog(1, 7), points) == brute_force_catalog(1, points));
  for (std::size_t points = 6; points <= 7; ++points)
    CHECK(catalog_codes(catalog(2, 7), points) == brute_force_catalog(2, points));
}

TEST_CASE("catalog entries re-check as compressed manifolds") {
  const auto c = catalog(2, 9);
  CHECK(c.exhaustive);
  for (const auto& e : c.entries) {
    CHECK(recognize_closed_manifold(e.space) == 2);
    CHECK(is_compressed(e.space, 2).verdict != CompressedVerdict::kNotCompressed);
    CHECK(e.euler == euler_characteristic(e.space));
  }
  std::set<std::string> seen;
  for (const auto& e : c.entries) CHECK(seen.insert(e.form.encoding).second);
}

TEST_CASE("budget exhaustion is reported") {
  CatalogBudget tiny;
  tiny.max_graphs = 10;
  const auto c = catalog(2, 9, tiny);
  CHECK_FALSE(c.exhaustive);
}

TEST_CASE("listing and matching") {
  const auto c = catalog(2, 7);
  const std::string listing = catalog_listing(c);
  CHECK(listing.rfind("# catalog dim=2 max_points=7 exhaustive=true entries=1\n", 0) == 0);
  CHECK(listing == catalog_listing(catalog(2, 7)));
  CHECK(classify_against_catalog(minimal_sphere(2), c).kind == MatchKind::kMember);
  const auto m = classify_against_catalog(seven_point_sphere(), c);
  CHECK(m.kind == MatchKind::kCompressesTo);
  CHECK(m.entry == 0u);
  CHECK(classify_against_catalog(torus16(), c).kind == MatchKind::kUnmatched);
  CHECK_THROWS_AS(classify_against_catalog(cycle(5), c), PreconditionError);
}
