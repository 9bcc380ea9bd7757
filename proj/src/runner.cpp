#include "dynec/runner.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

#include "dynec/engine.hpp"
#include "dynec/greedy.hpp"
#include "dynec/oracle.hpp"
#include "dynec/static_colouring.hpp"

namespace dynec {

Algo parse_algo(const std::string& name) {
  if (name == "static-degeneracy") return Algo::StaticDegeneracy;
  if (name == "static-hpartition") return Algo::StaticHPartition;
  if (name == "dynamic-max") return Algo::DynamicMax;
  if (name == "dynamic-adaptive") return Algo::DynamicAdaptive;
  if (name == "greedy-baseline") return Algo::GreedyBaseline;
  throw UsageError("unknown algorithm '" + name + "'");
}

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::StaticDegeneracy: return "static-degeneracy";
    case Algo::StaticHPartition: return "static-hpartition";
    case Algo::DynamicMax: return "dynamic-max";
    case Algo::DynamicAdaptive: return "dynamic-adaptive";
    case Algo::GreedyBaseline: return "greedy-baseline";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int max_degree_of(const LevelledAdjacency& adj) {
  int best = 0;
  for (VertexId v = 0; v < adj.capacity(); ++v)
    best = std::max(best, adj.degree(v));
  return best;
}

// Peak over the whole stream of each event's max endpoint degree: the value
// the fixed-cap engine's colour bound is pinned against.
int stream_delta_max(const UpdateStream& s) {
  std::vector<int> deg(static_cast<size_t>(s.capacity), 0);
  int best = 0;
  for (const UpdateEvent& e : s.events) {
    if (e.insert) {
      best = std::max({best, ++deg[e.u], ++deg[e.v]});
    } else {
      --deg[e.u];
      --deg[e.v];
    }
  }
  return best;
}

RunMetrics run_static(const UpdateStream& s, const RunOptions& opt) {
  for (const UpdateEvent& e : s.events)
    if (!e.insert)
      throw UsageError("static algorithms require an insert-only stream");
  Clock::time_point t0 = Clock::now();
  SimpleGraph g = graph_after(s, s.events.size());

  EdgeColouring col;
  int alpha = opt.declared_alpha.value_or(0);
  if (opt.algo == Algo::StaticDegeneracy) {
    col = colour_by_order(g, degeneracy_order(g));
    if (alpha == 0) alpha = oracle::degeneracy_bound(g);
  } else {
    if (alpha == 0) alpha = std::max(1, oracle::degeneracy_bound(g));
    col = colour_by_partition(g, build_hpartition(g, alpha, opt.epsilon));
  }

  oracle::AuditReport rep = oracle::verify_proper(g, col.colour);
  if (!rep.clean())
    throw AuditFailure("final audit failed: " + rep.to_string());

  RunMetrics m;
  m.algo = algo_name(opt.algo);
  m.audits_run = 1;
  m.max_colour_assigned = col.max_colour;
  m.final_max_colour_in_use = col.max_colour;
  int maxdeg = 0;
  for (VertexId v = 0; v < g.n(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
  m.rows.push_back({static_cast<int64_t>(s.events.size()),
                    static_cast<int64_t>(g.m()), maxdeg, alpha, col.max_colour,
                    0, 0, 0, ms_since(t0)});
  return m;
}

RunMetrics run_greedy(const UpdateStream& s, const RunOptions& opt) {
  Clock::time_point t0 = Clock::now();
  GreedyColourer eng(s.capacity);
  RunMetrics m;
  m.algo = algo_name(opt.algo);

  auto audit = [&]() {
    auto [g, colour] = eng.snapshot();
    oracle::AuditReport rep = oracle::verify_proper(g, colour);
    ++m.audits_run;
    if (!rep.clean()) throw AuditFailure("audit failed: " + rep.to_string());
  };
  auto emit_row = [&](int64_t step) {
    int maxdeg = 0;
    for (VertexId v = 0; v < s.capacity; ++v)
      maxdeg = std::max(maxdeg, eng.degree(v));
    MetricsRow row;
    row.step = step;
    row.live_edges = eng.edge_count();
    row.max_degree = maxdeg;
    row.alpha_bound = opt.declared_alpha.value_or(-1);
    row.max_colour = eng.max_colour_in_use();
    row.palette_searches = eng.palette_searches();
    row.wall_ms = ms_since(t0);
    m.rows.push_back(row);
  };

  int64_t step = 0;
  for (const UpdateEvent& e : s.events) {
    if (e.insert)
      eng.insert(e.u, e.v);
    else
      eng.remove(e.u, e.v);
    ++step;
    if (opt.verify_every > 0 && step % opt.verify_every == 0) {
      audit();
      emit_row(step);
    }
  }
  audit();
  if (m.rows.empty() || m.rows.back().step != step) emit_row(step);
  m.max_colour_assigned = eng.max_colour_assigned();
  m.final_max_colour_in_use = eng.max_colour_in_use();
  m.total_palette_searches = eng.palette_searches();
  return m;
}

RunMetrics run_levelled(const UpdateStream& s, const RunOptions& opt) {
  // Size the fixed-cap engine before replay: declared bound, else override,
  // else degeneracy of everything the stream ever inserts.
  int alpha_cfg = 0;
  if (opt.algo == Algo::DynamicMax) {
    if (opt.alpha_max)
      alpha_cfg = *opt.alpha_max;
    else if (opt.declared_alpha)
      alpha_cfg = *opt.declared_alpha;
    else
      alpha_cfg = std::max(1, oracle::degeneracy_bound(union_graph(s)));
  }
  int delta_cfg = opt.delta_max.value_or(stream_delta_max(s));

  Clock::time_point t0 = Clock::now();
  std::unique_ptr<LevelEngine> eng;
  if (opt.algo == Algo::DynamicMax)
    eng = std::make_unique<DynamicMaxEngine>(s.capacity, alpha_cfg, delta_cfg,
                                             opt.epsilon, opt.beta);
  else
    eng = std::make_unique<AdaptiveEngine>(s.capacity, opt.epsilon, opt.beta);

  RunMetrics m;
  m.algo = algo_name(opt.algo);

  auto audit = [&](int64_t step) {
    oracle::AuditReport rep = oracle::audit_engine(*eng);
    ++m.audits_run;
    if (!rep.clean())
      throw AuditFailure("audit failed at step " + std::to_string(step) +
                         ": " + rep.to_string());
  };
  auto measured_alpha = [&]() -> int {
    if (opt.declared_alpha) return *opt.declared_alpha;
    auto [g, colour] = oracle::snapshot(*eng);
    (void)colour;
    return oracle::degeneracy_bound(g);
  };
  auto emit_row = [&](int64_t step) {
    const EngineStats& st = eng->stats();
    MetricsRow row;
    row.step = step;
    row.live_edges = eng->adjacency().edge_count();
    row.max_degree = max_degree_of(eng->adjacency());
    row.alpha_bound = measured_alpha();
    row.max_colour = eng->max_colour_in_use();
    row.palette_searches = st.palette_searches;
    row.recolour_steps = st.recolour_steps;
    row.level_moves = st.level_moves;
    row.wall_ms = ms_since(t0);
    m.rows.push_back(row);
  };

  int64_t step = 0;
  for (const UpdateEvent& e : s.events) {
    if (e.insert)
      eng->insert(e.u, e.v);
    else
      eng->remove(e.u, e.v);
    ++step;
    if (opt.verify_every > 0 && step % opt.verify_every == 0) {
      audit(step);
      emit_row(step);
    }
  }
  audit(step);
  if (m.rows.empty() || m.rows.back().step != step) emit_row(step);

  const EngineStats& st = eng->stats();
  m.max_colour_assigned = st.max_colour_assigned;
  m.final_max_colour_in_use = eng->max_colour_in_use();
  m.total_recolour_steps = st.recolour_steps;
  m.total_level_moves = st.level_moves;
  m.total_level_move_entries = st.level_move_entries;
  m.total_palette_searches = st.palette_searches;
  m.adaptation_recolours = st.adaptation_recolours;
  m.max_level = eng->max_level();
  return m;
}

}  // namespace

RunMetrics run_stream(const UpdateStream& s, const RunOptions& opt) {
  if (opt.verify_every < 0) throw UsageError("verify-every must be >= 0");
  switch (opt.algo) {
    case Algo::StaticDegeneracy:
    case Algo::StaticHPartition:
      return run_static(s, opt);
    case Algo::GreedyBaseline:
      return run_greedy(s, opt);
    case Algo::DynamicMax:
    case Algo::DynamicAdaptive:
      return run_levelled(s, opt);
  }
  throw UsageError("unhandled algorithm");
}

void write_metrics_csv(std::ostream& os, const RunMetrics& m) {
  os << "step,live_edges,max_degree,alpha_bound,max_colour,palette_searches,"
        "recolour_steps,level_moves,wall_ms\r\n";
  for (const MetricsRow& r : m.rows) {
    os << r.step << ',' << r.live_edges << ',' << r.max_degree << ','
       << r.alpha_bound << ',' << r.max_colour << ',' << r.palette_searches
       << ',' << r.recolour_steps << ',' << r.level_moves << ',' << r.wall_ms
       << "\r\n";
  }
}

}  // namespace dynec
