#pragma once

#include <optional>
#include <vector>

#include "planeproj/graph.hpp"

namespace planeproj {

enum class ForestKind { kLinear, kCaterpillar };
enum class SearchMode { kExact, kHeuristic };

/// Edge-disjoint forests of one kind whose union is the host graph.
struct ForestDecomposition {
  ForestKind kind = ForestKind::kLinear;
  std::vector<std::vector<Edge>> parts;
};

struct DecomposeOptions {
  /// EXACT refuses graphs with more edges than this.
  int exact_edge_budget = 40;
};

/// Partitions E(g) into at most k forests of the given kind.
///
/// EXACT backtracks over edge-to-part assignments (first edge pinned to part
/// 0, parts opened in order) and returns nullopt only when no partition
/// exists. HEURISTIC is a greedy assignment by descending degree with a
/// one-step exchange repair; nullopt there certifies nothing.
///
/// Throws BAD_INPUT for k < 1 and TOO_LARGE_FOR_EXACT when EXACT is asked
/// for a graph above the edge budget.
std::optional<ForestDecomposition> decompose_forests(const Graph& g, int k, ForestKind kind,
                                                     SearchMode mode,
                                                     const DecomposeOptions& options = {});

/// True iff the parts are disjoint, cover E(g) exactly, and each part is a
/// forest of the declared kind.
bool is_valid_decomposition(const Graph& g, const ForestDecomposition& d);

/// Round-robin (Walecki) split of K_{2m} into m edge-disjoint Hamiltonian
/// paths. Path j visits j, j+1, j-1, j+2, j-2, ... (mod 2m).
std::vector<std::vector<int>> hamiltonian_path_decomposition(int m);

}  // namespace planeproj
