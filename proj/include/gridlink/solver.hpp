#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "gridlink/homotype.hpp"
#include "gridlink/moves.hpp"
#include "gridlink/staircase.hpp"

namespace gridlink {

struct Equivalent {
  MoveSequence certificate;
};

struct DistinctOmega {
  Omega first, second;
};

// One side of the search ran out of states without meeting the other. Only
// conclusive under the grid-size bound that was used.
struct DistinctClosedGraph {
  std::size_t states_explored = 0;
  int bound = 0;
};

struct Inconclusive {
  std::size_t states_explored = 0;
  int bound = 0;
  std::string reason;
};

using Verdict = std::variant<Equivalent, DistinctOmega, DistinctClosedGraph, Inconclusive>;

std::string verdict_name(const Verdict& v);
std::string verdict_to_json(const Verdict& v);

struct ExplorationConfig {
  int max_vertices = 0;  // 0: 2 * max(n1, n2) + 4
  std::size_t max_states = 1000000;
  OrientedType type = OrientedType::II_fwd;
  // Worker threads for move generation; verdicts do not depend on it.
  int threads = 1;
  // Append-only file of visited homology codes (hex, one per line); empty disables.
  std::string cache_path;
};

struct SearchStats {
  std::size_t states = 0;        // diagrams expanded
  std::size_t codes = 0;         // distinct homology codes discovered
  bool connect_fallback = false; // stitching needed non-code-preserving moves
};

Verdict decide(const GridDiagram& a, const GridDiagram& b, const ExplorationConfig& cfg = {},
               SearchStats* stats = nullptr);

// Plain BFS over canonical diagrams under exchanges and type-t (de)stabilizations.
Verdict brute_bfs(const GridDiagram& a, const GridDiagram& b, OrientedType t, int max_vertices,
                  std::size_t max_states);

std::vector<HomologyCode> load_code_cache(const std::string& path);

}  // namespace gridlink
