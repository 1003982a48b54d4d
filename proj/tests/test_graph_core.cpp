#include <random>

#include "doctest.h"
#include "digitop/canonical.hpp"
#include "digitop/corpus.hpp"
#include "digitop/errors.hpp"
#include "digitop/space.hpp"
#include "test_support.hpp"

using namespace digitop;

namespace {

DigitalSpace square() { return DigitalSpace({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}); }
DigitalSpace triangle() { return DigitalSpace({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }
DigitalSpace path3() { return DigitalSpace({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
DigitalSpace point(const std::string& id) { return DigitalSpace({id}, {}); }
DigitalSpace s0(const std::string& a, const std::string& b) { return DigitalSpace({a, b}, {}); }

bool is_wheel_over_square(const DigitalSpace& g) {
  return g.size() == 5 && are_isomorphic(g, join(point("hub"), cycle(4)));
}

}  // namespace

TEST_CASE("induced subspace and deletion") {
  CHECK(are_isomorphic(induced_subspace(square(), {"a", "b", "c"}), path3()));
  CHECK(induced_subspace(square(), square().points()) == square());
  const auto oct = minimal_sphere(2);
  CHECK(is_wheel_over_square(induced_subspace(oct, {"p0b", "p1a", "p1b", "p2a", "p2b"})));
  CHECK(are_isomorphic(delete_points(square(), {"a"}), path3()));
  CHECK(delete_points(square(), {}) == square());
  CHECK(is_wheel_over_square(delete_points(oct, {"p1b"})));
  CHECK_THROWS_AS(delete_points(square(), {"zz"}), UnknownPointError);
}

TEST_CASE("rim, ball and joint rim") {
  CHECK(rim(square(), "a") == s0("b", "d"));
  CHECK(are_isomorphic(rim(triangle(), "b"), DigitalSpace({"x", "y"}, {{"x", "y"}})));
  const auto oct = minimal_sphere(2);
  for (const auto& v : oct.points()) {
    CHECK(are_isomorphic(rim(oct, v), cycle(4)));
    CHECK(is_wheel_over_square(ball(oct, v)));
  }
  CHECK(are_isomorphic(ball(square(), "b"), path3()));
  CHECK(ball(point("q"), "q") == point("q"));
  CHECK(joint_rim(square(), "a", "b").empty());
  CHECK(joint_rim(triangle(), "a", "b") == point("c"));
  CHECK(joint_rim(oct, "p0a", "p1a") == s0("p2a", "p2b"));
  CHECK_THROWS_AS(joint_rim(square(), "a", "a"), PreconditionError);
  CHECK_THROWS_AS(rim(square(), "nope"), UnknownPointError);
}

TEST_CASE("join") {
  CHECK(are_isomorphic(join(s0("a", "b"), s0("c", "d")), cycle(4)));
  CHECK(join(point("a"), point("b")) == DigitalSpace({"a", "b"}, {{"a", "b"}}));
  CHECK(is_wheel_over_square(join(point("h"), cycle(4))));
  CHECK_THROWS_AS(join(square(), square()), PreconditionError);
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected(s0("a", "b")));
  CHECK(is_connected(square()));
  CHECK(is_connected(point("a")));
}

TEST_CASE("clique vectors and Euler characteristic") {
  CHECK(clique_vector(square()).counts == std::vector<std::uint64_t>{4, 4});
  CHECK(clique_vector(triangle()).counts == std::vector<std::uint64_t>{3, 3, 1});
  CHECK(clique_vector(minimal_sphere(2)).counts == std::vector<std::uint64_t>{6, 12, 8});
  CHECK(euler_characteristic(point("a")) == 1);
  CHECK(euler_characteristic(square()) == 0);
  CHECK(euler_characteristic(minimal_sphere(2)) == 2);
  CHECK(euler_characteristic(torus16()) == 0);
  CHECK(euler_characteristic(projective_plane11()) == 1);
  for (int n = 0; n <= 6; ++n) CHECK(euler_characteristic(minimal_sphere(n)) == (n % 2 == 0 ? 2 : 0));
  CHECK_THROWS_AS(clique_vector(minimal_sphere(6), 100), BudgetExceeded);
}

TEST_CASE("clique counts agree with subset enumeration") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 1 + rng() % 14;
    const Graph g = testing::random_graph(rng, n, 0.2 + 0.6 * (i % 5) / 4.0);
    CHECK(count_cliques(g, kDefaultCliqueBudget) == testing::naive_cliques(g));
  }
}

TEST_CASE("join identity for Euler characteristic") {
  std::mt19937_64 rng(5);
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_space(rng, 1 + rng() % 7, 0.45, "g");
    const auto h = testing::random_space(rng, 1 + rng() % 7, 0.45, "h");
    const std::int64_t a = testing::naive_euler(g.graph());
    const std::int64_t b = testing::naive_euler(h.graph());
    if (euler_characteristic(join(g, h)) != a + b - a * b) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("canonical forms") {
  const auto relabeled = DigitalSpace({"w", "x", "y", "z"}, {{"w", "y"}, {"y", "x"}, {"x", "z"}, {"z", "w"}});
  CHECK(canonical_form(square()).encoding == canonical_form(relabeled).encoding);
  const auto path4 = DigitalSpace({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(canonical_form(square()).encoding != canonical_form(path4).encoding);
  const auto j = join(s0("a", "b"), join(s0("c", "d"), s0("e", "f")));
  CHECK(canonical_form(j).encoding == canonical_form(minimal_sphere(2)).encoding);
  CHECK_FALSE(are_isomorphic(square(), triangle()));
  const auto s3 = join(join(s0("a", "b"), s0("c", "d")), join(s0("e", "f"), s0("g", "h")));
  CHECK(are_isomorphic(s3, minimal_sphere(3)));
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(9);
  std::vector<Graph> samples{torus16().graph(), projective_plane11().graph(),
                             minimal_sphere(5).graph(), cycle(9).graph()};
  for (int i = 0; i < 20; ++i) samples.push_back(testing::random_graph(rng, 4 + rng() % 13, 0.35));
  for (const Graph& g : samples) {
    const std::string code = canonical_code(g);
    for (int k = 0; k < 100; ++k) {
      const auto perm = testing::random_permutation(rng, g.size());
      const Graph h = g.permuted(perm);
      REQUIRE(canonical_code(h) == code);
      const auto iso = find_isomorphism(g, h);
      REQUIRE(iso.has_value());
      CHECK(g.permuted(*iso) == h);
    }
  }
}

TEST_CASE("canonical labeling yields automorphisms") {
  for (const auto& s : {torus16(), minimal_sphere(3), cycle(7)}) {
    const auto lab = canonical_labeling(s.graph());
    CHECK_FALSE(lab.generators.empty());
    for (const auto& perm : lab.generators) CHECK(s.graph().permuted(perm) == s.graph());
    const auto orbits = orbit_labels(s.size(), lab.generators);
    for (std::size_t v = 0; v < s.size(); ++v) CHECK(orbits[v] == 0);
  }
}

TEST_CASE("non-isomorphic graphs get distinct codes") {
  // Number of unlabeled graphs on 1..6 points: 1, 2, 4, 11, 34, 156.
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> codes;
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph g(n);
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++bit)
          if ((mask >> bit) & 1) g.add_edge(i, j);
      codes.insert(canonical_code(g));
    }
    CHECK(codes.size() == expected[n - 1]);
  }
}

TEST_CASE("space construction validates ids and edges") {
  CHECK_THROWS_AS(DigitalSpace({"a", "a"}, {}), PreconditionError);
  CHECK_THROWS_AS(DigitalSpace({"a-b"}, {}), PreconditionError);
  CHECK_THROWS_AS(DigitalSpace({"a"}, {{"a", "a"}}), PreconditionError);
  CHECK_THROWS_AS(DigitalSpace({"a"}, {{"a", "b"}}), UnknownPointError);
  CHECK(fresh_id(square(), "a") == "a0");
  CHECK(with_prefix(square(), "m_").contains("m_a"));
}
