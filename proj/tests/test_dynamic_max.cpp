#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>
#include <vector>

#include "dynec/engine.hpp"
#include "dynec/oracle.hpp"
#include "engine_test_access.hpp"

using namespace dynec;

namespace {

void require_clean(const LevelEngine& eng) {
  auto rep = oracle::audit_engine(eng);
  REQUIRE_MESSAGE(rep.clean(), rep.to_string());
}

}  // namespace

TEST_CASE("first colours on a fresh engine") {
  DynamicMaxEngine eng(4, 1, 5);
  CHECK(eng.config().d == 4);
  CHECK(eng.config().out_cap == 20);
  eng.insert(0, 1);
  CHECK(eng.colour_between(0, 1) == 1);
  eng.insert(1, 2);
  CHECK(eng.colour_between(1, 2) == 2);
  eng.insert(2, 3);
  CHECK(eng.colour_between(2, 3) == 1);
  CHECK(eng.max_colour_in_use() == 2);
  CHECK(eng.max_level() == 1);
  require_clean(eng);
}

TEST_CASE("triangle takes exactly three colours") {
  DynamicMaxEngine eng(3, 1, 2);
  eng.insert(0, 1);
  eng.insert(1, 2);
  eng.insert(0, 2);
  std::set<Colour> got{eng.colour_between(0, 1), eng.colour_between(1, 2),
                       eng.colour_between(0, 2)};
  CHECK(got == std::set<Colour>{1, 2, 3});
  require_clean(eng);
}

TEST_CASE("duplicate inserts and absent removes are rejected") {
  DynamicMaxEngine eng(3, 1, 2);
  eng.insert(0, 1);
  CHECK_THROWS_AS(eng.insert(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(eng.insert(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(eng.insert(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(eng.remove(1, 2), std::invalid_argument);
  CHECK(eng.has_edge(0, 1));
  CHECK_FALSE(eng.has_edge(1, 2));
  require_clean(eng);
}

TEST_CASE("hub overflowing its out-cap rises one level") {
  DynamicMaxEngine eng(30, 1, 25);  // out-cap 20
  for (VertexId x = 1; x <= 20; ++x) eng.insert(0, x);
  CHECK(eng.max_level() == 1);
  CHECK(eng.stats().increments == 0);

  eng.insert(0, 21);  // 21st out-edge breaks invariant 1
  CHECK(eng.adjacency().level(0) == 2);
  CHECK(eng.max_level() == 2);
  CHECK(eng.stats().increments == 1);
  CHECK(eng.stats().level_moves == 1);
  CHECK(eng.stats().level_move_entries == 21);
  CHECK(eng.adjacency().out_degree(0) == 0);
  CHECK(eng.adjacency().lower_shell_degree(0) == 21);
  // Colours follow insertion order; the post-move edge continues the run.
  for (VertexId x = 1; x <= 21; ++x)
    CHECK(eng.colour_between(0, x) == static_cast<Colour>(x));
  require_clean(eng);
}

TEST_CASE("hub starved below the shell threshold sinks back") {
  DynamicMaxEngine eng(30, 1, 25);
  for (VertexId x = 1; x <= 21; ++x) eng.insert(0, x);
  REQUIRE(eng.adjacency().level(0) == 2);

  for (VertexId x = 1; x <= 17; ++x) eng.remove(0, x);
  CHECK(eng.adjacency().level(0) == 2);  // shell exactly at the threshold
  CHECK(eng.stats().decrements == 0);
  require_clean(eng);

  eng.remove(0, 18);  // shell 3 < 4
  CHECK(eng.adjacency().level(0) == 1);
  CHECK(eng.stats().decrements == 1);
  // Fixed-cap mode keeps the surviving colours as they are.
  CHECK(eng.colour_between(0, 19) == 19);
  CHECK(eng.colour_between(0, 20) == 20);
  CHECK(eng.colour_between(0, 21) == 21);
  require_clean(eng);
}

TEST_CASE("a displaced edge is recoloured one level further down") {
  DynamicMaxEngine eng(50, 1, 25);
  // Two level-2 hubs.  Hub 0 keeps 21 coloured down-edges; hub 1 is trimmed
  // until only colours 1..4 remain around it.
  for (VertexId x = 2; x <= 22; ++x) eng.insert(0, x);
  for (VertexId y = 23; y <= 43; ++y) eng.insert(1, y);
  REQUIRE(eng.adjacency().level(0) == 2);
  REQUIRE(eng.adjacency().level(1) == 2);
  for (VertexId y = 27; y <= 43; ++y) eng.remove(1, y);
  REQUIRE(eng.adjacency().level(1) == 2);

  auto before = eng.stats();
  eng.insert(0, 1);
  auto after = eng.stats();

  // The joint search lands on colour 5, which hub 0 already spends on edge
  // (0,6); that edge yields and finishes the walk at the bottom level.
  CHECK(eng.colour_between(0, 1) == 5);
  CHECK(eng.colour_between(0, 6) == 22);
  CHECK(after.cascade_conflicts - before.cascade_conflicts == 1);
  CHECK(after.recolour_steps - before.recolour_steps == 2);
  CHECK(after.palette_searches - before.palette_searches == 2);
  CHECK(after.level_moves == before.level_moves);
  require_clean(eng);
}

TEST_CASE("maintenance entry points verify their preconditions") {
  DynamicMaxEngine eng(30, 1, 25);
  eng.insert(0, 1);
  CHECK_THROWS_AS(eng.recolour(0, 1), std::logic_error);     // coloured
  CHECK_THROWS_AS(eng.recolour(0, 2), std::invalid_argument);  // absent
  CHECK_THROWS_AS(eng.increment(0), std::logic_error);  // no overflow
  CHECK_THROWS_AS(eng.decrement(0), std::logic_error);  // level 1

  for (VertexId x = 1; x <= 21; ++x)
    if (!eng.has_edge(0, x)) eng.insert(0, x);
  REQUIRE(eng.adjacency().level(0) == 2);
  CHECK_THROWS_AS(eng.decrement(0), std::logic_error);  // shell is healthy

  // A stripped colour is the one legal recolour target.
  EngineTestAccess::force_uncolour(eng, 0, 7);
  CHECK(eng.colour_between(0, 7) == kNoColour);
  eng.recolour(0, 7);
  CHECK(eng.colour_between(0, 7) != kNoColour);
  require_clean(eng);
}

TEST_CASE("recover without pending work is a no-op") {
  DynamicMaxEngine eng(10, 1, 5);
  eng.insert(0, 1);
  auto before = eng.stats();
  CHECK_FALSE(eng.has_pending_dirty());
  eng.recover();
  CHECK(eng.stats().level_moves == before.level_moves);
  require_clean(eng);
}

TEST_CASE("filling and draining leaves a spotless engine") {
  DynamicMaxEngine eng(20, 2, 19);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < 20; ++u)
    for (VertexId v = u + 1; v < 20 && edges.size() < 60; v += 3)
      edges.push_back({u, v});
  for (auto [u, v] : edges) eng.insert(u, v);
  require_clean(eng);
  for (auto [u, v] : edges) eng.remove(u, v);
  require_clean(eng);
  CHECK(eng.adjacency().edge_count() == 0);
  CHECK(eng.max_colour_in_use() == 0);
  CHECK(eng.max_level() == 1);
  for (VertexId v = 0; v < 20; ++v) {
    CHECK(eng.vertex_palette(v).used_count() == 0);
    CHECK(eng.out_palette(v).used_count() == 0);
    CHECK(eng.vertex_palette(v).capacity() == 2);  // shrunk all the way back
  }
}

TEST_CASE("mixed random churn: audits, colour bound, recourse") {
  const int n = 30;
  std::mt19937_64 rng(2024);
  // Build the op sequence first to learn a degeneracy-based cap for alpha.
  std::set<std::pair<VertexId, VertexId>> live;
  SimpleGraph unioned(n);
  std::vector<std::tuple<bool, VertexId, VertexId>> ops;
  for (int step = 0; step < 1500; ++step) {
    VertexId u = static_cast<VertexId>(rng() % n);
    VertexId v = static_cast<VertexId>(rng() % n);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (rng() % 3 != 0) {
      if (live.count({key.first, key.second})) continue;
      live.insert({key.first, key.second});
      if (!unioned.has_edge(u, v)) unioned.add_edge(u, v);
      ops.push_back({true, u, v});
    } else if (live.count({key.first, key.second})) {
      live.erase({key.first, key.second});
      ops.push_back({false, u, v});
    }
  }
  int alpha = oracle::degeneracy_bound(unioned);  // >= true arboricity

  DynamicMaxEngine eng(n, alpha, 0);
  int64_t done = 0;
  for (auto [ins, u, v] : ops) {
    if (ins)
      eng.insert(u, v);
    else
      eng.remove(u, v);
    ++done;
    if (done % 50 == 0) require_clean(eng);
  }
  require_clean(eng);
  CHECK(eng.stats().max_colour_assigned <=
        eng.stats().max_degree_seen + eng.config().out_cap);
  CHECK(eng.stats().level_moves <=
        10 * static_cast<int64_t>(eng.config().k) * done);
}

TEST_CASE("identical update sequences give identical colourings") {
  auto run = [] {
    DynamicMaxEngine eng(25, 2, 0);
    std::mt19937_64 rng(99);
    for (int step = 0; step < 800; ++step) {
      VertexId u = static_cast<VertexId>(rng() % 25);
      VertexId v = static_cast<VertexId>(rng() % 25);
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

TEST_CASE("epsilon preset tightens the cap accordingly") {
  DynamicMaxEngine eng(40, 1, 0, 0.5);
  CHECK(eng.config().d == 3);        // ceil(2.5 * 1)
  CHECK(eng.config().out_cap == 8);  // floor(3.5 * 2.5 * 1)
  std::mt19937_64 rng(7);
  // Forest churn keeps the true arboricity at 1.
  std::vector<VertexId> parent(40, -1);
  for (VertexId v = 1; v < 40; ++v) {
    parent[v] = static_cast<VertexId>(rng() % v);
    eng.insert(v, parent[v]);
  }
  for (int round = 0; round < 300; ++round) {
    VertexId v = 1 + static_cast<VertexId>(rng() % 39);
    eng.remove(v, parent[v]);
    eng.insert(v, parent[v]);
  }
  require_clean(eng);
  CHECK(eng.stats().max_colour_assigned <= eng.stats().max_degree_seen + 8);
}
