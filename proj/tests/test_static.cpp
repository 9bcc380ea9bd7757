#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "dynec/oracle.hpp"
#include "dynec/simple_graph.hpp"
#include "dynec/static_colouring.hpp"

using namespace dynec;

namespace {

SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph clique(int n) {
  SimpleGraph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph star(int leaves) {
  SimpleGraph g(leaves + 1);
  for (VertexId v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

SimpleGraph grid(int side) {
  SimpleGraph g(side * side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      if (c + 1 < side) g.add_edge(r * side + c, r * side + c + 1);
      if (r + 1 < side) g.add_edge(r * side + c, (r + 1) * side + c);
    }
  return g;
}

SimpleGraph random_graph(int n, int percent, uint64_t seed) {
  SimpleGraph g(n);
  std::mt19937_64 rng(seed);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng() % 100 < static_cast<uint64_t>(percent)) g.add_edge(u, v);
  return g;
}

// Union of `f` random spanning-ish trees (duplicate edges skipped).
SimpleGraph forest_union(int n, int f, uint64_t seed) {
  SimpleGraph g(n);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < f; ++t)
    for (VertexId v = 1; v < n; ++v) {
      VertexId p = static_cast<VertexId>(rng() % v);
      if (!g.has_edge(v, p)) g.add_edge(v, p);
    }
  return g;
}

// Degeneracy straight from the definition: max over vertex subsets of the
// minimum degree inside the subset.  Exponential; n <= ~14.
int brute_degeneracy(const SimpleGraph& g) {
  int n = g.n();
  REQUIRE(n <= 14);
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int mindeg = n;
    for (VertexId v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      int d = 0;
      for (auto& [w, e] : g.adj(v)) d += mask >> w & 1;
      mindeg = std::min(mindeg, d);
    }
    best = std::max(best, mindeg);
  }
  return best;
}

int max_end_degree(const SimpleGraph& g, EdgeId e) {
  auto [u, v] = g.edges()[e];
  return std::max(g.degree(u), g.degree(v));
}

void check_proper(const SimpleGraph& g, const EdgeColouring& col) {
  auto report = oracle::verify_proper(g, col.colour);
  REQUIRE_MESSAGE(report.clean(), report.to_string());
}

}  // namespace

TEST_CASE("peeling order on small graphs, ties to the lowest id") {
  auto p = degeneracy_order(path(3));
  CHECK(p.order == std::vector<VertexId>{0, 1, 2});
  CHECK(p.degeneracy == 1);

  auto k = degeneracy_order(clique(4));
  CHECK(k.order == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(k.degeneracy == 3);

  // Three leaves peel first; the hub then ties the last leaf at degree 1 and
  // wins on id.
  auto s = degeneracy_order(star(4));
  CHECK(s.order == std::vector<VertexId>{1, 2, 3, 0, 4});
  CHECK(s.degeneracy == 1);

  CHECK(degeneracy_order(SimpleGraph(1)).degeneracy == 0);
  CHECK(degeneracy_order(SimpleGraph(0)).order.empty());
}

TEST_CASE("peeling matches the subset-minimum-degree definition") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);
    auto g = random_graph(n, 20 + static_cast<int>(seed * 7 % 60), seed);
    CAPTURE(seed);
    REQUIRE(degeneracy_order(g).degeneracy == brute_degeneracy(g));
  }
}

TEST_CASE("order colouring: exact colours on tiny graphs") {
  auto g = path(3);
  auto col = colour_by_order(g, degeneracy_order(g));
  CHECK(col.colour == std::vector<Colour>{2, 1});
  CHECK(col.max_colour == 2);

  auto st = star(3);
  auto cs = colour_by_order(st, degeneracy_order(st));
  CHECK(cs.colour == std::vector<Colour>{3, 2, 1});
  CHECK(cs.max_colour == 3);

  auto tri = clique(3);
  auto ct = colour_by_order(tri, degeneracy_order(tri));
  check_proper(tri, ct);
  CHECK(ct.max_colour == 3);
}

TEST_CASE("order colouring rejects non-permutations") {
  auto g = path(3);
  DegeneracyOrder bad;
  bad.order = {0, 0, 2};
  CHECK_THROWS_AS(colour_by_order(g, bad), std::invalid_argument);
  bad.order = {0, 1};
  CHECK_THROWS_AS(colour_by_order(g, bad), std::invalid_argument);
  bad.order = {0, 1, 3};
  CHECK_THROWS_AS(colour_by_order(g, bad), std::invalid_argument);
}

TEST_CASE("order colouring is proper and within degree plus twice arboricity") {
  for (uint64_t seed = 100; seed < 160; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);
    auto g = random_graph(n, 25 + static_cast<int>(seed % 50), seed);
    if (g.m() == 0) continue;
    int alpha = oracle::exact_arboricity(g);
    auto col = colour_by_order(g, degeneracy_order(g));
    check_proper(g, col);
    for (EdgeId e = 0; e < g.m(); ++e) {
      CAPTURE(seed);
      REQUIRE(col.colour[e] <= max_end_degree(g, e) + 2 * alpha - 2);
    }
  }
}

TEST_CASE("order colouring on grids stays within degree plus four") {
  for (int side : {3, 4, 6, 9}) {
    auto g = grid(side);
    auto col = colour_by_order(g, degeneracy_order(g));
    check_proper(g, col);
    for (EdgeId e = 0; e < g.m(); ++e)
      REQUIRE(col.colour[e] <= max_end_degree(g, e) + 4);
  }
}

TEST_CASE("level partition: stars split into leaves below the hub") {
  auto g = star(5);  // hub degree 5 > 4*alpha with alpha = 1
  auto part = build_hpartition(g, 1);
  CHECK(part.threshold == 4);
  CHECK(part.level_count == 2);
  for (VertexId v = 1; v <= 5; ++v) CHECK(part.level[v] == 1);
  CHECK(part.level[0] == 2);
}

TEST_CASE("level partition rejects thresholds too small to peel") {
  auto k6 = clique(6);  // min degree 5
  CHECK_THROWS_AS(build_hpartition(k6, 1), std::invalid_argument);
  auto part = build_hpartition(k6, 2);  // threshold 8 clears it in one round
  CHECK(part.level_count == 1);
  CHECK_THROWS_AS(build_hpartition(k6, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_hpartition(k6, -3), std::invalid_argument);
}

TEST_CASE("level partition: level count, halving sizes, bounded out-degree") {
  struct Case {
    SimpleGraph g;
    int alpha;
  };
  std::vector<Case> cases;
  for (uint64_t seed = 200; seed < 230; ++seed) {
    int n = 5 + static_cast<int>(seed % 10);
    auto g = random_graph(n, 20 + static_cast<int>(seed % 55), seed);
    cases.push_back({g, std::max(1, oracle::exact_arboricity(g))});
  }
  for (int side : {4, 6, 8}) cases.push_back({grid(side), 3});
  for (int f : {1, 2, 3}) cases.push_back({forest_union(64, f, 99 + f), f});

  for (auto& [g, alpha] : cases) {
    auto part = build_hpartition(g, alpha);
    int n = g.n();
    CHECK(part.threshold == 4 * alpha);
    REQUIRE(part.level_count <=
            static_cast<int>(std::floor(std::log2(std::max(1, n)))) + 1);

    std::vector<int> active(part.level_count + 2, 0);  // |{v : level >= i}|
    for (VertexId v = 0; v < n; ++v)
      for (int i = 1; i <= part.level[v]; ++i) ++active[i];
    for (int i = 1; i < part.level_count; ++i)
      REQUIRE(2 * active[i + 1] <= active[i]);

    for (VertexId v = 0; v < n; ++v) {
      int out = 0;
      for (auto& [w, e] : g.adj(v)) out += part.level[w] >= part.level[v];
      REQUIRE(out <= part.threshold);
    }
  }
}

TEST_CASE("level partition accepts a looser epsilon threshold") {
  auto g = forest_union(40, 2, 5);
  auto part = build_hpartition(g, 2, 1.0);  // ceil((2+1)*2) = 6
  CHECK(part.threshold == 6);
  auto col = colour_by_partition(g, part);
  check_proper(g, col);
}

TEST_CASE("partition colouring is proper and within degree plus threshold") {
  for (uint64_t seed = 300; seed < 330; ++seed) {
    int n = 5 + static_cast<int>(seed % 10);
    auto g = random_graph(n, 30 + static_cast<int>(seed % 45), seed);
    if (g.m() == 0) continue;
    int alpha = std::max(1, oracle::exact_arboricity(g));
    auto part = build_hpartition(g, alpha);
    auto col = colour_by_partition(g, part);
    check_proper(g, col);
    for (EdgeId e = 0; e < g.m(); ++e) {
      CAPTURE(seed);
      REQUIRE(col.colour[e] <= max_end_degree(g, e) + part.threshold - 1);
    }
  }
}

TEST_CASE("partition colouring validates the partition") {
  auto g = star(5);
  auto part = build_hpartition(g, 1);

  StaticHPartition wrong_size = part;
  wrong_size.level.pop_back();
  CHECK_THROWS_AS(colour_by_partition(g, wrong_size), std::invalid_argument);

  StaticHPartition out_of_range = part;
  out_of_range.level[3] = 7;
  CHECK_THROWS_AS(colour_by_partition(g, out_of_range), std::invalid_argument);
  out_of_range.level[3] = 0;
  CHECK_THROWS_AS(colour_by_partition(g, out_of_range), std::invalid_argument);

  // Hub forced to the bottom level: its out-degree exceeds the threshold.
  StaticHPartition flat = part;
  flat.level[0] = 1;
  CHECK_THROWS_AS(colour_by_partition(g, flat), std::invalid_argument);
}

TEST_CASE("static colourings are deterministic") {
  auto g = random_graph(12, 45, 9001);
  auto a = colour_by_order(g, degeneracy_order(g));
  auto b = colour_by_order(g, degeneracy_order(g));
  CHECK(a.colour == b.colour);
  int alpha = std::max(1, oracle::exact_arboricity(g));
  auto p1 = colour_by_partition(g, build_hpartition(g, alpha));
  auto p2 = colour_by_partition(g, build_hpartition(g, alpha));
  CHECK(p1.colour == p2.colour);
}
