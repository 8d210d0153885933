#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gridlink/grid.hpp"
#include "gridlink/moves.hpp"

namespace fixtures {

using gridlink::GridDiagram;

inline GridDiagram U4a() { return GridDiagram::validate(2, {0, 1}, {1, 0}); }
inline GridDiagram U4b() { return GridDiagram::validate(2, {1, 0}, {0, 1}); }
inline GridDiagram H6() { return GridDiagram::validate(3, {0, 1, 2}, {2, 0, 1}); }
inline GridDiagram W6() { return GridDiagram::validate(3, {0, 2, 1}, {2, 1, 0}); }

// Uniform valid diagram of size n: random pos, neg a random derangement relative to pos.
inline GridDiagram random_diagram(int n, std::mt19937& rng) {
  std::vector<int> pos(n), neg(n);
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  do {
    std::iota(neg.begin(), neg.end(), 0);
    std::shuffle(neg.begin(), neg.end(), rng);
  } while ([&] {
    for (int i = 0; i < n; ++i)
      if (pos[i] == neg[i]) return true;
    return false;
  }());
  return GridDiagram::validate(n, pos, neg);
}

// Every valid diagram of size n.
inline std::vector<GridDiagram> all_diagrams(int n) {
  std::vector<GridDiagram> out;
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  do {
    std::vector<int> neg(n);
    std::iota(neg.begin(), neg.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < n; ++i) ok = ok && pos[i] != neg[i];
      if (ok) out.push_back(GridDiagram::validate(n, pos, neg));
    } while (std::next_permutation(neg.begin(), neg.end()));
  } while (std::next_permutation(pos.begin(), pos.end()));
  return out;
}

// Random walk of `length` moves from `allowed`, bounded above by max_size.
inline gridlink::MoveSequence random_chain(const GridDiagram& start, int length,
                                           const gridlink::MoveSet& allowed, std::mt19937& rng,
                                           int max_size = 16) {
  gridlink::MoveSequence seq{start, {}};
  GridDiagram cur = start;
  for (int i = 0; i < length; ++i) {
    auto moves = gridlink::enumerate_moves(cur, allowed);
    std::erase_if(moves, [&](const gridlink::Move& m) {
      return m.kind == gridlink::MoveKind::Stab && cur.size() >= max_size;
    });
    if (moves.empty()) break;
    const auto& m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    cur = gridlink::apply_move(cur, m);
    seq.steps.push_back(m);
  }
  return seq;
}

}  // namespace fixtures
