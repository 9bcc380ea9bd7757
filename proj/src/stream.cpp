#include "dynec/stream.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace dynec {

std::string UpdateStream::to_text() const {
  std::ostringstream os;
  os << "n " << capacity << "\n";
  for (const UpdateEvent& e : events)
    os << (e.insert ? '+' : '-') << ' ' << e.u << ' ' << e.v << "\n";
  return os.str();
}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line = 1, col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_ws_and_comments() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }
  // Next whitespace-delimited token plus its start position.
  std::string token(int* tline, int* tcol) {
    skip_ws_and_comments();
    *tline = line;
    *tcol = col;
    std::string t;
    while (!eof() && !std::isspace(static_cast<unsigned char>(peek())) &&
           peek() != '#') {
      t.push_back(peek());
      advance();
    }
    return t;
  }
};

int parse_int(const std::string& tok, int line, int col, const char* what) {
  if (tok.empty()) throw StreamParseError(line, col, std::string("expected ") + what);
  size_t idx = 0;
  long val = 0;
  try {
    val = std::stol(tok, &idx);
  } catch (const std::exception&) {
    throw StreamParseError(line, col, "bad integer '" + tok + "'");
  }
  if (idx != tok.size())
    throw StreamParseError(line, col, "trailing junk in '" + tok + "'");
  if (val < 0 || val > INT32_MAX)
    throw StreamParseError(line, col, std::string(what) + " out of range");
  return static_cast<int>(val);
}

}  // namespace

UpdateStream parse_stream(std::string_view text) {
  Cursor cur{text};
  int tl, tc;
  std::string tok = cur.token(&tl, &tc);
  if (tok != "n")
    throw StreamParseError(tl, tc, "expected capacity line 'n <count>'");
  tok = cur.token(&tl, &tc);
  UpdateStream s;
  s.capacity = parse_int(tok, tl, tc, "vertex count");

  std::set<std::pair<VertexId, VertexId>> live;
  while (true) {
    tok = cur.token(&tl, &tc);
    if (tok.empty()) break;
    bool insert;
    if (tok == "+")
      insert = true;
    else if (tok == "-")
      insert = false;
    else
      throw StreamParseError(tl, tc, "expected '+' or '-', got '" + tok + "'");
    int ul, uc, vl, vc;
    std::string ut = cur.token(&ul, &uc);
    VertexId u = parse_int(ut, ul, uc, "vertex id");
    std::string vt = cur.token(&vl, &vc);
    VertexId v = parse_int(vt, vl, vc, "vertex id");
    if (u >= s.capacity) throw StreamParseError(ul, uc, "vertex id beyond capacity");
    if (v >= s.capacity) throw StreamParseError(vl, vc, "vertex id beyond capacity");
    if (u == v) throw StreamParseError(tl, tc, "self-loop");
    auto key = std::minmax(u, v);
    if (insert) {
      if (!live.insert({key.first, key.second}).second)
        throw StreamParseError(tl, tc, "insert of an edge already present");
    } else {
      if (live.erase({key.first, key.second}) == 0)
        throw StreamParseError(tl, tc, "delete of an edge not present");
    }
    s.events.push_back({insert, u, v});
  }
  return s;
}

UpdateStream load_stream(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open stream file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_stream(buf.str());
}

namespace {

// All generators share the pattern: a deterministic growth phase up to the
// target shape, then steady churn (delete one, insert one) until the event
// budget is spent.  Randomness is reduced with plain modulo so streams are
// reproducible across standard library implementations.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  uint64_t next() { return eng(); }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

class ForestState {
 public:
  ForestState(int n, Rng& rng) : rng_(rng), parent_(n, -1), children_(n, 0) {
    for (VertexId v = 0; v < n; ++v) singles_.push_back(v);
    index_.assign(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < singles_.size(); ++i) index_[singles_[i]] = (int)i;
  }

  bool can_insert() const { return singles_.size() >= 1 && parent_.size() >= 2; }
  bool can_delete() const { return !leaves_.empty(); }

  // Candidate attachment: an isolated vertex below a random other vertex;
  // acyclic since the attached vertex has no edges.  Committed separately so
  // callers sharing a vertex set can reject colliding pairs first.
  std::pair<VertexId, VertexId> pick_reattach(int n) {
    VertexId x = singles_[rng_.below((int)singles_.size())];
    VertexId y = x;
    while (y == x) y = rng_.below(n);
    return {x, y};
  }

  UpdateEvent commit_insert(VertexId x, VertexId y) {
    remove_single(x);
    parent_[x] = y;
    promote_to_leaf(x);
    if (children_[y] == 0) {
      if (parent_[y] == -1)
        remove_single(y);
      else
        remove_leaf(y);
    }
    ++children_[y];
    return {true, x, y};
  }

  UpdateEvent do_delete() {
    VertexId x = leaves_[rng_.below((int)leaves_.size())];
    VertexId y = parent_[x];
    remove_leaf(x);
    parent_[x] = -1;
    add_single(x);
    if (--children_[y] == 0) {
      if (parent_[y] == -1)
        add_single(y);
      else
        promote_to_leaf(y);
    }
    return {false, x, y};
  }

  bool has_edge(VertexId u, VertexId v) const {
    return parent_[u] == v || parent_[v] == u;
  }
  size_t singles() const { return singles_.size(); }

 private:
  Rng& rng_;
  std::vector<VertexId> parent_;
  std::vector<int> children_;
  std::vector<VertexId> singles_, leaves_;
  std::vector<int> index_;  // position in singles_ (parent -1) or leaves_

  void add_single(VertexId v) {
    index_[v] = (int)singles_.size();
    singles_.push_back(v);
  }
  void remove_single(VertexId v) {
    int i = index_[v];
    singles_[i] = singles_.back();
    index_[singles_[i]] = i;
    singles_.pop_back();
    index_[v] = -1;
  }
  void promote_to_leaf(VertexId v) {
    index_[v] = (int)leaves_.size();
    leaves_.push_back(v);
  }
  void remove_leaf(VertexId v) {
    int i = index_[v];
    leaves_[i] = leaves_.back();
    index_[leaves_[i]] = i;
    leaves_.pop_back();
    index_[v] = -1;
  }
};

GeneratedStream gen_forest(int n, int64_t steps, uint64_t seed) {
  Rng rng(seed);
  GeneratedStream out;
  out.stream.capacity = n;
  out.alpha_bound = 1;
  if (n < 2) return out;
  ForestState f(n, rng);
  // Deterministically insert-only up to a spanning tree (vertex v hangs
  // below a random earlier vertex), then churn leaf deletions against
  // re-attachments.
  int64_t t = 0;
  for (VertexId v = 1; v < n && t < steps; ++v, ++t)
    out.stream.events.push_back(f.commit_insert(v, rng.below(v)));
  for (; t < steps; ++t) {
    if (f.singles() > 0) {
      auto [x, y] = f.pick_reattach(n);
      out.stream.events.push_back(f.commit_insert(x, y));
    } else if (f.can_delete()) {
      out.stream.events.push_back(f.do_delete());
    }
  }
  return out;
}

GeneratedStream gen_forests(int n, int64_t steps, uint64_t seed, int count) {
  Rng rng(seed);
  GeneratedStream out;
  out.stream.capacity = n;
  out.alpha_bound = count;
  if (n < 2 || count < 1) return out;
  std::vector<ForestState> fs;
  fs.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) fs.emplace_back(n, rng);
  std::vector<VertexId> next_grow(static_cast<size_t>(count), 1);
  std::set<std::pair<VertexId, VertexId>> live;
  auto alive = [&](VertexId u, VertexId v) {
    auto k = std::minmax(u, v);
    return live.count({k.first, k.second}) != 0;
  };
  auto note = [&](const UpdateEvent& e) {
    auto k = std::minmax(e.u, e.v);
    if (e.insert)
      live.insert({k.first, k.second});
    else
      live.erase({k.first, k.second});
    return e;
  };
  // Forests take turns; each grows its own spanning tree first (retrying
  // parents already claimed by a sibling forest), then churns leaves.
  for (int64_t t = 0; t < steps; ++t) {
    size_t fi = static_cast<size_t>(t) % fs.size();
    ForestState& f = fs[fi];
    bool done = false;
    if (next_grow[fi] < n) {
      VertexId v = next_grow[fi];
      for (int tries = 0; tries < 32 && !done; ++tries) {
        VertexId y = rng.below(v);
        if (!alive(v, y)) {
          out.stream.events.push_back(note(f.commit_insert(v, y)));
          done = true;
        }
      }
      // Low-id vertices can have every downward pair claimed by a sibling
      // forest; leave them detached here, churn re-attaches them upward.
      ++next_grow[fi];
    } else if (f.singles() > 0) {
      for (int tries = 0; tries < 32 && !done; ++tries) {
        auto [x, y] = f.pick_reattach(n);
        if (!alive(x, y)) {
          out.stream.events.push_back(note(f.commit_insert(x, y)));
          done = true;
        }
      }
    }
    if (!done && f.can_delete())
      out.stream.events.push_back(note(f.do_delete()));
  }
  return out;
}

// Churn over a fixed candidate edge list towards a live-set target.
GeneratedStream gen_candidate_churn(int n, int64_t steps, uint64_t seed,
                                    std::vector<std::pair<VertexId, VertexId>> cand,
                                    size_t target, std::optional<int> alpha) {
  Rng rng(seed);
  GeneratedStream out;
  out.stream.capacity = n;
  out.alpha_bound = alpha;
  if (cand.empty()) return out;
  if (target > cand.size()) target = cand.size();
  std::vector<int> pos(cand.size());  // position in free_ or -(1+pos in live_)
  std::vector<int> free_list, live_list;
  for (size_t i = 0; i < cand.size(); ++i) {
    pos[i] = (int)free_list.size();
    free_list.push_back((int)i);
  }
  auto take_free = [&](int idx) {
    int p = pos[idx];
    free_list[p] = free_list.back();
    pos[free_list[p]] = p;
    free_list.pop_back();
    pos[idx] = -1 - (int)live_list.size();
    live_list.push_back(idx);
  };
  auto take_live = [&](int idx) {
    int p = -1 - pos[idx];
    live_list[p] = live_list.back();
    pos[live_list[p]] = -1 - p;
    live_list.pop_back();
    pos[idx] = (int)free_list.size();
    free_list.push_back(idx);
  };
  for (int64_t t = 0; t < steps; ++t) {
    bool insert =
        live_list.size() < target ? true
                                  : (free_list.empty() ? false : rng.next() % 2 == 0);
    if (insert && !free_list.empty()) {
      int idx = free_list[rng.below((int)free_list.size())];
      take_free(idx);
      out.stream.events.push_back({true, cand[idx].first, cand[idx].second});
    } else if (!live_list.empty()) {
      int idx = live_list[rng.below((int)live_list.size())];
      take_live(idx);
      out.stream.events.push_back({false, cand[idx].first, cand[idx].second});
    }
  }
  return out;
}

GeneratedStream gen_grid(int n, int64_t steps, uint64_t seed) {
  int side = static_cast<int>(std::floor(std::sqrt((double)n)));
  std::vector<std::pair<VertexId, VertexId>> cand;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      int v = r * side + c;
      if (c + 1 < side) cand.emplace_back(v, v + 1);
      if (r + 1 < side) cand.emplace_back(v, v + side);
    }
  size_t target = cand.size() * 3 / 4;
  return gen_candidate_churn(n, steps, seed, std::move(cand), target, 3);
}

GeneratedStream gen_erdos_renyi(int n, int64_t steps, uint64_t seed, double p) {
  Rng rng(seed);
  GeneratedStream out;
  out.stream.capacity = n;
  if (n < 2) return out;
  double pairs = 0.5 * n * (n - 1.0);
  size_t target = static_cast<size_t>(p * pairs);
  if (target < 1) target = 1;
  std::set<std::pair<VertexId, VertexId>> live;
  std::vector<std::pair<VertexId, VertexId>> live_vec;
  auto insert_random = [&]() -> bool {
    for (int tries = 0; tries < 64; ++tries) {
      VertexId u = rng.below(n), v = rng.below(n);
      if (u == v) continue;
      auto k = std::minmax(u, v);
      if (live.insert({k.first, k.second}).second) {
        live_vec.push_back({k.first, k.second});
        out.stream.events.push_back({true, k.first, k.second});
        return true;
      }
    }
    return false;
  };
  auto delete_random = [&]() -> bool {
    if (live_vec.empty()) return false;
    size_t i = static_cast<size_t>(rng.below((int)live_vec.size()));
    auto k = live_vec[i];
    live_vec[i] = live_vec.back();
    live_vec.pop_back();
    live.erase(k);
    out.stream.events.push_back({false, k.first, k.second});
    return true;
  };
  for (int64_t t = 0; t < steps; ++t) {
    bool want_insert =
        live.size() < target ? true : rng.next() % 2 == 0;
    if (want_insert) {
      if (!insert_random() && !delete_random()) break;
    } else {
      if (!delete_random() && !insert_random()) break;
    }
  }
  return out;
}

GeneratedStream gen_sliding_window(int n, int64_t steps, uint64_t seed,
                                   int64_t window) {
  Rng rng(seed);
  GeneratedStream out;
  out.stream.capacity = n;
  if (n < 2 || window < 1) return out;
  std::set<std::pair<VertexId, VertexId>> live;
  std::vector<std::pair<VertexId, VertexId>> fifo;
  size_t head = 0;
  int64_t t = 0;
  while (t < steps) {
    bool inserted = false;
    for (int tries = 0; tries < 64 && !inserted; ++tries) {
      VertexId u = rng.below(n), v = rng.below(n);
      if (u == v) continue;
      auto k = std::minmax(u, v);
      if (live.insert({k.first, k.second}).second) {
        fifo.push_back({k.first, k.second});
        out.stream.events.push_back({true, k.first, k.second});
        inserted = true;
      }
    }
    ++t;
    if (static_cast<int64_t>(fifo.size() - head) > window && t < steps) {
      auto k = fifo[head++];
      live.erase(k);
      out.stream.events.push_back({false, k.first, k.second});
      ++t;
    }
    if (!inserted && fifo.size() == head) break;
  }
  return out;
}

struct KindSpec {
  std::string name;
  std::optional<double> param;
};

KindSpec parse_kind(const std::string& kind) {
  auto open = kind.find('(');
  if (open == std::string::npos) return {kind, std::nullopt};
  if (kind.back() != ')')
    throw std::invalid_argument("stream kind: missing ')' in '" + kind + "'");
  std::string name = kind.substr(0, open);
  std::string arg = kind.substr(open + 1, kind.size() - open - 2);
  try {
    size_t idx = 0;
    double val = std::stod(arg, &idx);
    if (idx != arg.size()) throw std::invalid_argument("");
    return {name, val};
  } catch (const std::exception&) {
    throw std::invalid_argument("stream kind: bad parameter '" + arg + "'");
  }
}

}  // namespace

GeneratedStream generate_stream(const std::string& kind, int n, int64_t steps,
                                uint64_t seed) {
  if (n < 0) throw std::invalid_argument("stream: negative vertex count");
  if (steps < 0) throw std::invalid_argument("stream: negative step count");
  KindSpec spec = parse_kind(kind);
  if (spec.name == "forest") {
    if (spec.param) throw std::invalid_argument("forest takes no parameter");
    return gen_forest(n, steps, seed);
  }
  if (spec.name == "forests") {
    int f = static_cast<int>(spec.param.value_or(2));
    if (f < 1) throw std::invalid_argument("forests(f): f must be >= 1");
    return gen_forests(n, steps, seed, f);
  }
  if (spec.name == "grid-planar") {
    if (spec.param) throw std::invalid_argument("grid-planar takes no parameter");
    return gen_grid(n, steps, seed);
  }
  if (spec.name == "erdos-renyi") {
    double p = spec.param.value_or(0.05);
    if (p <= 0 || p > 1)
      throw std::invalid_argument("erdos-renyi(p): p must be in (0, 1]");
    return gen_erdos_renyi(n, steps, seed, p);
  }
  if (spec.name == "sliding-window") {
    int64_t w = static_cast<int64_t>(spec.param.value_or(1000));
    if (w < 1) throw std::invalid_argument("sliding-window(w): w must be >= 1");
    return gen_sliding_window(n, steps, seed, w);
  }
  throw std::invalid_argument("unknown stream kind '" + kind + "'");
}

SimpleGraph graph_after(const UpdateStream& s, size_t prefix) {
  if (prefix > s.events.size()) prefix = s.events.size();
  std::set<std::pair<VertexId, VertexId>> live;
  for (size_t i = 0; i < prefix; ++i) {
    const UpdateEvent& e = s.events[i];
    auto k = std::minmax(e.u, e.v);
    if (e.insert)
      live.insert({k.first, k.second});
    else
      live.erase({k.first, k.second});
  }
  SimpleGraph g(s.capacity);
  for (auto [u, v] : live) g.add_edge(u, v);
  return g;
}

SimpleGraph union_graph(const UpdateStream& s) {
  SimpleGraph g(s.capacity);
  for (const UpdateEvent& e : s.events)
    if (e.insert && !g.has_edge(e.u, e.v)) g.add_edge(e.u, e.v);
  return g;
}

}  // namespace dynec
