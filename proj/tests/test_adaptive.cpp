#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>
#include <vector>

#include "dynec/engine.hpp"
#include "dynec/oracle.hpp"

using namespace dynec;

namespace {

void require_clean(const LevelEngine& eng) {
  auto rep = oracle::audit_engine(eng);
  REQUIRE_MESSAGE(rep.clean(), rep.to_string());
}

// Small grouped preset (single-level groups, beta 2) so the per-level caps
// are tiny: level 1 holds 8 out-edges, level 2 holds 16, and budgets are
// degree + 8 / + 16.  Default parameters would need hundreds of edges to
// push any vertex off level 1.
PartitionConfig tiny_groups(int levels = 8) {
  PartitionConfig cfg;
  cfg.beta = 2.0;
  cfg.L = 1;
  cfg.group_count = levels;
  cfg.k = levels;
  cfg.d = 2;
  cfg.out_cap = cfg.level_out_cap(1);
  return cfg;
}

}  // namespace

TEST_CASE("grouped config arithmetic") {
  AdaptiveEngine eng(241);
  const auto& cfg = eng.config();
  CHECK(cfg.L == 9);  // 1 + ceil(log2 241)
  CHECK(cfg.group_count == 8);
  CHECK(cfg.group_of(1) == 1);
  CHECK(cfg.group_of(9) == 1);
  CHECK(cfg.group_of(10) == 2);
  CHECK(cfg.level_threshold(1) == 2);
  CHECK(cfg.level_threshold(10) == 4);
  CHECK(cfg.level_out_cap(1) == 20);  // floor(2 * 5 * 2)
  CHECK(cfg.level_out_cap(10) == 40);

  AdaptiveEngine slack(100, 0.5);
  CHECK(slack.config().beta == doctest::Approx(3.5));
  CHECK(slack.config().L == 29);  // 1 + ceil((2/eps) * log2 100)
  CHECK(slack.config().group_count == 7);

  CHECK_THROWS_AS(AdaptiveEngine(10, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(AdaptiveEngine(10, std::nullopt, 1.5),
                  std::invalid_argument);
}

TEST_CASE("insert-only forests stay on the bottom level") {
  AdaptiveEngine eng(200);
  std::mt19937_64 rng(11);
  for (VertexId v = 1; v < 200; ++v)
    eng.insert(v, static_cast<VertexId>(rng() % v));
  CHECK(eng.max_level() == 1);  // degrees never near the level-1 cap of 20
  CHECK(eng.stats().increments == 0);
  require_clean(eng);
}

TEST_CASE("deletions prune colours that outgrew their budget") {
  // Star centre 0 over 13 roots, each root anchored by one leaf (colour 1),
  // under the tiny preset: the centre tops out at level 2 and the star edges
  // take colours 2..14.
  AdaptiveEngine eng(27, tiny_groups());
  for (VertexId i = 1; i <= 13; ++i) eng.insert(i, 13 + i);
  for (VertexId i = 1; i <= 13; ++i) eng.insert(0, i);
  REQUIRE(eng.adjacency().level(0) == 2);
  for (VertexId i = 1; i <= 13; ++i)
    REQUIRE(eng.colour_between(0, i) == static_cast<Colour>(i) + 1);
  require_clean(eng);
  REQUIRE(eng.stats().adaptation_recolours == 0);

  // Budget of a star edge: centre degree + 8.  Colour 14 becomes illegal
  // once the degree drops below 6; the eighth deletion triggers exactly one
  // adaptation probe hit.
  for (VertexId i = 1; i <= 7; ++i) {
    eng.remove(0, i);
    require_clean(eng);
  }
  CHECK(eng.stats().adaptation_recolours == 0);
  CHECK(eng.colour_between(0, 13) == 14);

  eng.remove(0, 8);
  CHECK(eng.stats().adaptation_recolours == 1);
  CHECK(eng.colour_between(0, 13) == 2);  // smallest joint free colour
  CHECK(eng.adjacency().level(0) == 2);   // shell 5 is still >= 4
  require_clean(eng);
}

TEST_CASE("sinking a level refreshes the out-edges") {
  // Hubs 0 and 1 both at level 2, joined by a same-level edge; trimming
  // hub 0's shell sinks it to level 1 and the joining edge is recoloured
  // under its (unchanged here) budget.
  AdaptiveEngine eng(20, tiny_groups());
  for (VertexId i = 2; i <= 10; ++i) eng.insert(0, i);
  for (VertexId i = 11; i <= 19; ++i) eng.insert(1, i);
  REQUIRE(eng.adjacency().level(0) == 2);
  REQUIRE(eng.adjacency().level(1) == 2);
  eng.insert(0, 1);
  REQUIRE(eng.colour_between(0, 1) == 10);
  REQUIRE(eng.adjacency().out_degree(0) == 1);
  require_clean(eng);

  for (VertexId i = 2; i <= 7; ++i) eng.remove(0, i);
  CHECK(eng.adjacency().level(0) == 2);  // shell 1 + 3 = 4, still enough
  auto before = eng.stats();
  eng.remove(0, 8);  // shell 3 < 4: decrement, out-list recoloured
  CHECK(eng.adjacency().level(0) == 1);
  CHECK(eng.stats().decrements - before.decrements == 1);
  CHECK(eng.stats().recolour_steps - before.recolour_steps == 1);
  CHECK(eng.colour_between(0, 1) == 10);  // re-derived, same value here
  require_clean(eng);
}

TEST_CASE("adaptive decrement alias enforces the same preconditions") {
  AdaptiveEngine eng(5, tiny_groups());
  eng.insert(0, 1);
  CHECK_THROWS_AS(eng.adaptive_decrement(0), std::logic_error);
}

TEST_CASE("random churn holds every budget against the exact arboricity") {
  const int n = 10;
  for (uint64_t seed : {21u, 22u, 23u, 24u, 25u}) {
    AdaptiveEngine eng(n);
    std::mt19937_64 rng(seed);
    for (int step = 0; step < 400; ++step) {
      VertexId u = static_cast<VertexId>(rng() % n);
      VertexId v = static_cast<VertexId>(rng() % n);
      if (u == v) continue;
      if (!eng.has_edge(u, v) && rng() % 5 < 3)
        eng.insert(u, v);
      else if (eng.has_edge(u, v))
        eng.remove(u, v);
      else
        continue;

      auto rep = oracle::audit_engine(eng);
      REQUIRE_MESSAGE(rep.clean(), rep.to_string());
      auto [g, colour] = oracle::snapshot(eng);
      if (g.m() == 0) continue;
      int alpha = oracle::exact_arboricity(g);
      for (EdgeId e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edges()[e];
        CAPTURE(seed);
        REQUIRE(colour[e] <=
                std::max(g.degree(a), g.degree(b)) + 80 * alpha);
      }
    }
  }
}

TEST_CASE("identical adaptive runs give identical colourings") {
  auto run = [] {
    AdaptiveEngine eng(18);
    std::mt19937_64 rng(5150);
    for (int step = 0; step < 700; ++step) {
      VertexId u = static_cast<VertexId>(rng() % 18);
      VertexId v = static_cast<VertexId>(rng() % 18);
      if (u == v) continue;
      if (!eng.has_edge(u, v) && rng() % 3 != 0)
        eng.insert(u, v);
      else if (eng.has_edge(u, v))
        eng.remove(u, v);
    }
    return oracle::snapshot(eng);
  };
  auto [g1, c1] = run();
  auto [g2, c2] = run();
  CHECK(g1.m() == g2.m());
  CHECK(c1 == c2);
}
