#include "search_engine.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace sepcol::detail {

namespace {

std::vector<FiniteWord> spell(const InfiniteWord& x, std::span<const std::size_t> lengths) {
  std::vector<FiniteWord> pieces;
  std::size_t at = 0;
  for (std::size_t len : lengths) {
    pieces.push_back(x.factor(at, len));
    at += len;
  }
  return pieces;
}

}  // namespace

ExhaustiveResult explore_positions(const InfiniteWord& x, const CandidateFn& candidates, NodeCounter& counter,
                                   std::size_t horizon, SearchTrace* trace, Colour tag) {
  struct Frame {
    std::size_t node;
    std::size_t pos;
    std::size_t depth;
    std::size_t piece_length;
    std::vector<std::size_t> lengths;
    std::size_t next = 0;
  };
  const auto record = [&](std::size_t parent, std::size_t pos, std::size_t len, std::size_t depth,
                          bool expanded) {
    if (trace == nullptr) return TraceNode::kNoParent;
    trace->nodes.push_back({parent, pos, len, depth, tag, expanded});
    return trace->nodes.size() - 1;
  };

  ExhaustiveResult result;
  std::unordered_set<std::size_t> finished;
  std::vector<Frame> stack;
  stack.push_back({TraceNode::kNoParent, 0, 0, 0, candidates(0)});
  result.roots = stack.back().lengths.size();

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.lengths.size()) {
      finished.insert(top.pos);
      stack.pop_back();
      continue;
    }
    const std::size_t len = top.lengths[top.next++];
    const std::size_t pos = top.pos + len;
    const std::size_t depth = top.depth + 1;
    const std::size_t parent = top.node;
    if (!counter.charge()) return result;
    result.nodes++;
    result.max_depth = std::max(result.max_depth, depth);

    if (pos >= horizon) {
      record(parent, pos, len, depth, false);
      std::vector<std::size_t> lengths;
      for (std::size_t i = 1; i < stack.size(); ++i) lengths.push_back(stack[i].piece_length);
      lengths.push_back(len);
      result.witness = spell(x, lengths);
      result.outcome = Outcome::prefix_covered;
      return result;
    }
    if (finished.contains(pos)) {
      record(parent, pos, len, depth, false);
      continue;
    }
    auto lengths = candidates(pos);
    const std::size_t self = record(parent, pos, len, depth, true);
    stack.push_back({self, pos, depth, len, std::move(lengths)});
  }
  result.outcome = Outcome::no_monochromatic;
  return result;
}

CycleResult find_cycle(const InfiniteWord& x, const CandidateFn& candidates, const Periodicity& periodicity) {
  enum class Mark : std::uint8_t { fresh, open, closed };
  struct Frame {
    std::size_t pos;
    std::size_t piece_length;
    std::vector<std::size_t> lengths;
    std::size_t next = 0;
  };

  CycleResult result;
  std::vector<Mark> marks(periodicity.preperiod + periodicity.period, Mark::fresh);
  std::vector<std::size_t> frame_of_state(marks.size(), 0);
  std::vector<Frame> stack;

  const auto open = [&](std::size_t pos, std::size_t piece_length) {
    const std::size_t state = x.state_of(pos);
    marks[state] = Mark::open;
    frame_of_state[state] = stack.size();
    stack.push_back({pos, piece_length, candidates(pos)});
    result.states_visited++;
    result.max_depth = std::max(result.max_depth, stack.size() - 1);
  };

  open(0, 0);
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.lengths.size()) {
      marks[x.state_of(top.pos)] = Mark::closed;
      stack.pop_back();
      continue;
    }
    const std::size_t len = top.lengths[top.next++];
    const std::size_t pos = top.pos + len;
    const std::size_t state = x.state_of(pos);
    if (marks[state] == Mark::open) {
      std::vector<std::size_t> lengths;
      for (std::size_t i = 1; i < stack.size(); ++i) lengths.push_back(stack[i].piece_length);
      lengths.push_back(len);
      result.pieces = spell(x, lengths);
      result.entry = frame_of_state[state];
      result.max_depth = std::max(result.max_depth, lengths.size());
      result.found = true;
      return result;
    }
    if (marks[state] == Mark::fresh) open(pos, len);
  }
  return result;
}

}  // namespace sepcol::detail
