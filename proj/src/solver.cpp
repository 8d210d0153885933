#include "gridlink/solver.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <optional>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace gridlink {

namespace {

struct Generated {
  Move move;
  GridDiagram diagram;
  CanonicalCode code;
};

// Moves of every diagram in the batch, applied and canonicalized; output order
// matches the serial order regardless of the thread count.
std::vector<std::vector<Generated>> generate(const std::vector<GridDiagram>& batch, const MoveSet& ms,
                                             int max_vertices, int threads) {
  std::vector<std::vector<Generated>> out(batch.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& d = batch[i];
      for (const auto& m : enumerate_moves(d, ms)) {
        if (m.kind == MoveKind::Stab && d.size() >= max_vertices) continue;
        auto nd = apply_move(d, m);
        auto c = canonical_code(nd);
        out[i].push_back({m, std::move(nd), std::move(c)});
      }
    }
  };
  const std::size_t t = std::max(1, threads);
  if (t == 1 || batch.size() < 2) {
    work(0, batch.size());
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (batch.size() + t - 1) / t;
  for (std::size_t lo = 0; lo < batch.size(); lo += chunk)
    pool.emplace_back(work, lo, std::min(batch.size(), lo + chunk));
  for (auto& th : pool) th.join();
  return out;
}

struct State {
  GridDiagram diagram;
  int parent = -1;
  Move move;
  bool queued = false;
};

// One search tree: diagrams linked to their parents, grouped by homology code.
struct Side {
  std::vector<State> states;
  std::unordered_map<CanonicalCode, int, CanonicalCodeHash> index;
  std::unordered_map<HomologyCode, int, HomologyCodeHash> reps;
  std::deque<HomologyCode> pending;
  std::deque<int> work;

  bool closed() const { return pending.empty() && work.empty(); }

  MoveSequence path_to(int s) const {
    std::vector<Move> steps;
    for (int i = s; states[i].parent >= 0; i = states[i].parent) steps.push_back(states[i].move);
    std::reverse(steps.begin(), steps.end());
    return {states[0].diagram, steps};
  }
};

constexpr std::size_t kBatch = 256;

class Search {
 public:
  Search(const GridDiagram& a, const GridDiagram& b, const ExplorationConfig& cfg, int bound)
      : cfg_(cfg), bound_(bound), moves_(MoveSet::for_type(cfg.type)), target_(canonical_code(b)) {
    for (Side* s : {&sides_[0], &sides_[1]}) s->states.reserve(1024);
    add(0, a, -1, {});
    add(1, b, -1, {});
  }

  Verdict run(SearchStats* stats) {
    std::optional<Verdict> result = try_meets();
    while (!result) {
      if (capped_) {
        result = Inconclusive{total_states(), bound_, "state limit reached"};
        break;
      }
      // Grow the smaller tree.
      int which = sides_[0].states.size() <= sides_[1].states.size() ? 0 : 1;
      if (sides_[0].closed() || sides_[1].closed()) {
        result = failed_stitches_ ? Verdict{Inconclusive{total_states(), bound_, "stitching failed"}}
                                  : Verdict{DistinctClosedGraph{total_states(), bound_}};
        break;
      }
      expand(which);
      result = try_meets();
    }
    if (stats) {
      stats->states = total_states();
      stats->codes = sides_[0].reps.size() + sides_[1].reps.size();
      stats->connect_fallback = fallback_;
    }
    if (!cfg_.cache_path.empty()) write_cache();
    return *result;
  }

 private:
  std::size_t total_states() const { return sides_[0].states.size() + sides_[1].states.size(); }

  int add(int side, const GridDiagram& d, int parent, const Move& m) {
    Side& s = sides_[side];
    auto c = canonical_code(d);
    if (auto it = s.index.find(c); it != s.index.end()) return it->second;
    if (parent >= 0 && total_states() >= cfg_.max_states) {
      capped_ = true;
      return -1;
    }
    const int id = int(s.states.size());
    s.states.push_back({d, parent, m, false});
    s.index.emplace(std::move(c), id);
    auto h = homology_code(d, cfg_.type);
    if (s.reps.emplace(h, id).second) {
      if (sides_[1 - side].reps.count(h)) meets_.push_back(h);
      s.pending.push_back(std::move(h));
    }
    return id;
  }

  // One batch of the class saturation: members of the current representative's
  // exchange class are expanded breadth-first; moves to other classes seed new codes.
  void expand(int side) {
    Side& s = sides_[side];
    if (s.work.empty()) {
      const int rep = s.reps.at(s.pending.front());
      s.pending.pop_front();
      if (s.states[rep].queued) return;
      s.states[rep].queued = true;
      s.work.push_back(rep);
    }
    std::vector<int> todo;
    while (!s.work.empty() && todo.size() < kBatch) {
      todo.push_back(s.work.front());
      s.work.pop_front();
    }
    std::vector<GridDiagram> batch;
    for (int id : todo) batch.push_back(s.states[id].diagram);
    auto gen = generate(batch, moves_, bound_, cfg_.threads);
    for (std::size_t i = 0; i < todo.size(); ++i)
      for (auto& g : gen[i]) {
        auto it = s.index.find(g.code);
        const int id = it != s.index.end() ? it->second : add(side, g.diagram, todo[i], g.move);
        if (id < 0) return;
        if (g.move.kind == MoveKind::Exchange && !s.states[id].queued) {
          s.states[id].queued = true;
          s.work.push_back(id);
        }
      }
  }

  std::optional<Verdict> try_meets() {
    while (!meets_.empty()) {
      const auto h = meets_.front();
      meets_.pop_front();
      const int ia = sides_[0].reps.at(h), ib = sides_[1].reps.at(h);
      try {
        ConnectLog log;
        ConnectOptions opts;
        opts.size_slack = std::max(0, bound_ - std::max(sides_[0].states[ia].diagram.size(),
                                                        sides_[1].states[ib].diagram.size()));
        auto mid = connect_within_type(sides_[0].states[ia].diagram, sides_[1].states[ib].diagram,
                                       cfg_.type, &log, opts);
        fallback_ = fallback_ || !log.code_preserving;
        auto cert = concat(concat(sides_[0].path_to(ia), mid), reversed(sides_[1].path_to(ib)));
        if (canonical_code(replay(cert)) != target_) {
          ++failed_stitches_;
          continue;
        }
        return Equivalent{std::move(cert)};
      } catch (const Error&) {
        ++failed_stitches_;
      }
    }
    return std::nullopt;
  }

  void write_cache() const {
    std::set<std::string> known;
    for (const auto& c : load_code_cache(cfg_.cache_path)) known.insert(c.hex());
    std::ofstream out(cfg_.cache_path, std::ios::app);
    for (const auto& s : sides_)
      for (const auto& [h, id] : s.reps)
        if (known.insert(h.hex()).second) out << h.hex() << '\n';
  }

  const ExplorationConfig& cfg_;
  const int bound_;
  const MoveSet moves_;
  const CanonicalCode target_;
  Side sides_[2];
  std::deque<HomologyCode> meets_;
  int failed_stitches_ = 0;
  bool fallback_ = false;
  bool capped_ = false;
};

int default_bound(const GridDiagram& a, const GridDiagram& b, int requested) {
  const int n = std::max(a.size(), b.size());
  return requested > 0 ? std::max(requested, n) : 2 * n + 4;
}

}  // namespace

std::string verdict_name(const Verdict& v) {
  static const char* names[] = {"Equivalent", "DistinctOmega", "DistinctClosedGraph", "Inconclusive"};
  return names[v.index()];
}

std::string verdict_to_json(const Verdict& v) {
  using nlohmann::json;
  json j;
  j["verdict"] = verdict_name(v);
  auto omega_json = [](const Omega& w) { return json::array({w.k, w.l, w.m}); };
  if (auto* e = std::get_if<Equivalent>(&v)) {
    j["certificate"] = json::parse(sequence_to_json(e->certificate));
  } else if (auto* d = std::get_if<DistinctOmega>(&v)) {
    j["omega"] = json::array({omega_json(d->first), omega_json(d->second)});
  } else if (auto* c = std::get_if<DistinctClosedGraph>(&v)) {
    j["states_explored"] = c->states_explored;
    j["bound"] = c->bound;
    j["note"] = "closed within the grid-size bound; conditional on the bound sufficing";
  } else if (auto* i = std::get_if<Inconclusive>(&v)) {
    j["states_explored"] = i->states_explored;
    j["bound"] = i->bound;
    j["reason"] = i->reason;
  }
  return j.dump();
}

Verdict decide(const GridDiagram& a, const GridDiagram& b, const ExplorationConfig& cfg, SearchStats* stats) {
  const Omega wa = omega(a, cfg.type), wb = omega(b, cfg.type);
  if (!(wa == wb)) return DistinctOmega{wa, wb};
  Search search(a, b, cfg, default_bound(a, b, cfg.max_vertices));
  return search.run(stats);
}

Verdict brute_bfs(const GridDiagram& a, const GridDiagram& b, OrientedType t, int max_vertices,
                  std::size_t max_states) {
  const int bound = default_bound(a, b, max_vertices);
  const auto target = canonical_code(b);
  const auto ms = MoveSet::for_type(t);
  std::vector<State> states{{a, -1, {}, false}};
  std::unordered_map<CanonicalCode, int, CanonicalCodeHash> index{{canonical_code(a), 0}};
  auto path = [&](int s) {
    std::vector<Move> steps;
    for (int i = s; states[i].parent >= 0; i = states[i].parent) steps.push_back(states[i].move);
    std::reverse(steps.begin(), steps.end());
    return MoveSequence{a, steps};
  };
  if (index.count(target)) return Equivalent{path(0)};
  for (std::size_t head = 0; head < states.size(); ++head) {
    const GridDiagram d = states[head].diagram;
    for (const auto& m : enumerate_moves(d, ms)) {
      if (m.kind == MoveKind::Stab && d.size() >= bound) continue;
      auto nd = apply_move(d, m);
      auto c = canonical_code(nd);
      if (index.count(c)) continue;
      if (states.size() >= max_states) return Inconclusive{states.size(), bound, "state limit reached"};
      const int id = int(states.size());
      states.push_back({std::move(nd), int(head), m, false});
      if (c == target) return Equivalent{path(id)};
      index.emplace(std::move(c), id);
    }
  }
  return DistinctClosedGraph{states.size(), bound};
}

std::vector<HomologyCode> load_code_cache(const std::string& path) {
  std::vector<HomologyCode> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(HomologyCode::from_hex(line));
  }
  return out;
}

}  // namespace gridlink
