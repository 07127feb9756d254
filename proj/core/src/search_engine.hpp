#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "sepcol/factorisation.hpp"
#include "sepcol/word.hpp"

namespace sepcol::detail {

/// Lengths of the admissible pieces at a position, shortest first.
using CandidateFn = std::function<std::vector<std::size_t>(std::size_t pos)>;

struct NodeCounter {
  std::size_t budget = 0;
  std::size_t used = 0;
  bool exhausted = false;

  bool charge() {
    if (used >= budget) {
      exhausted = true;
      return false;
    }
    ++used;
    return true;
  }
};

struct ExhaustiveResult {
  Outcome outcome = Outcome::inconclusive;  // no_monochromatic, prefix_covered or inconclusive
  std::size_t nodes = 0;
  std::size_t roots = 0;
  std::size_t max_depth = 0;
  std::vector<FiniteWord> witness;  // pieces reaching the horizon
};

/// Depth-first walk of the factorisation tree whose edges are the admissible
/// pieces. Stops at the first branch reaching `horizon`. Positions whose
/// subtree was explored in full are not expanded again.
ExhaustiveResult explore_positions(const InfiniteWord& x, const CandidateFn& candidates, NodeCounter& counter,
                                   std::size_t horizon, SearchTrace* trace, Colour tag);

struct CycleResult {
  bool found = false;
  std::vector<FiniteWord> pieces;
  std::size_t entry = 0;
  std::size_t states_visited = 0;
  std::size_t max_depth = 0;
};

/// Reachable cycle in the graph on states of an (eventually) periodic word.
CycleResult find_cycle(const InfiniteWord& x, const CandidateFn& candidates, const Periodicity& periodicity);

}  // namespace sepcol::detail
