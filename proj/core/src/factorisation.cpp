#include "sepcol/factorisation.hpp"

#include <algorithm>

#include "search_engine.hpp"

namespace sepcol {

namespace {

std::vector<std::size_t> candidate_lengths(const InfiniteWord& x, std::size_t pos,
                                           const ColouringScheme& scheme, Colour target,
                                           std::size_t max_len) {
  std::vector<std::size_t> lengths;
  FiniteWord v;
  v.reserve(max_len);
  for (std::size_t len = 1; len <= max_len; ++len) {
    v.push_back(x.at(pos + len - 1));
    if (scheme.colour(v) == target) lengths.push_back(len);
  }
  return lengths;
}

struct Explorer {
  const InfiniteWord& x;
  const ColouringScheme& scheme;
  const SearchCaps& caps;
  SearchTrace* trace;
  detail::NodeCounter counter;

  std::size_t record(std::size_t parent, std::size_t pos, std::size_t len, std::size_t depth,
                     Colour colour, bool expanded) {
    if (trace == nullptr) return TraceNode::kNoParent;
    trace->nodes.push_back({parent, pos, len, depth, colour, expanded});
    return trace->nodes.size() - 1;
  }
};

// Colour-c tree of the separating colouring of x, explored in full with the
// depth of every branch capped at S_1 of its root piece.
class BoundedTree {
 public:
  BoundedTree(Explorer& ex, const SeparatingPhi& phi_scheme, Colour colour)
      : ex_(ex),
        colour_(colour),
        budget_(phi_scheme.budget),
        zero_class_(ColouringScheme::separating(
            ex.x, colour == 0 ? phi_scheme.order : opposite(phi_scheme.order), phi_scheme.budget)) {}

  ClassSummary run() {
    summary_.colour = colour_;
    const std::vector<std::size_t> roots = candidates(0);
    summary_.roots = roots.size();
    for (std::size_t len : roots) {
      const SkValue bound = s_k(ex_.x, len, budget_);
      if (bound.is_unbounded()) throw PeriodicitySuspected(len, budget_);
      summary_.depth_bound = std::max(summary_.depth_bound.value_or(0), bound.value());
      visit(TraceNode::kNoParent, len, len, 1, SkValue::unbounded(), bound.value());
      if (ex_.counter.exhausted) break;
    }
    if (ex_.counter.exhausted) {
      summary_.outcome = Outcome::inconclusive;
    } else {
      summary_.outcome = summary_.bound_violations == 0 ? Outcome::no_monochromatic : Outcome::inconclusive;
    }
    return summary_;
  }

 private:
  // Colour-c pieces are the colour-0 pieces under the order that makes c the
  // smaller side; for c = 1 both computations must agree.
  std::vector<std::size_t> candidates(std::size_t pos) {
    std::vector<std::size_t> lengths = candidate_lengths(ex_.x, pos, zero_class_, 0, ex_.caps.piece_len_cap);
    if (colour_ != 0) {
      const auto direct = candidate_lengths(ex_.x, pos, ex_.scheme, colour_, ex_.caps.piece_len_cap);
      if (direct != lengths) {
        throw std::logic_error("order reversal disagrees with the colour-1 class at position " +
                               std::to_string(pos));
      }
    }
    return lengths;
  }

  void visit(std::size_t parent, std::size_t pos, std::size_t len, std::size_t depth, SkValue s_prev,
             std::size_t bound) {
    if (!ex_.counter.charge()) return;
    summary_.nodes++;
    summary_.max_depth = std::max(summary_.max_depth, depth);

    const SkValue s = s_k(ex_.x, pos, budget_);
    if (s.is_unbounded()) throw PeriodicitySuspected(pos, budget_);
    if (s > s_prev) ++summary_.bound_violations;

    const std::vector<std::size_t> children = candidates(pos);
    if (depth >= bound) {
      if (!children.empty()) ++summary_.bound_violations;
      ex_.record(parent, pos, len, depth, colour_, false);
      return;
    }
    const std::size_t self = ex_.record(parent, pos, len, depth, colour_, true);
    for (std::size_t child : children) {
      visit(self, pos + child, child, depth + 1, s, bound);
      if (ex_.counter.exhausted) return;
    }
  }

  Explorer& ex_;
  Colour colour_;
  std::size_t budget_;
  ColouringScheme zero_class_;
  ClassSummary summary_;
};

detail::CandidateFn colour_candidates(const InfiniteWord& x, const ColouringScheme& scheme, Colour colour,
                                      std::size_t cap) {
  return [&x, &scheme, colour, cap](std::size_t pos) { return candidate_lengths(x, pos, scheme, colour, cap); };
}

nlohmann::ordered_json pieces_json(std::span<const FiniteWord> pieces) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& p : pieces) out.push_back(to_digits(p));
  return out;
}

}  // namespace

FactorisationPrefix FactorisationPrefix::of(const InfiniteWord& x, std::vector<FiniteWord> pieces) {
  FactorisationPrefix f;
  for (const auto& piece : pieces) {
    if (piece.empty()) throw InvalidFactorisation("factorisation pieces must be nonempty");
    if (!x.matches_at(f.position_, piece)) {
      throw InvalidFactorisation("piece " + to_digits(piece) + " does not occur at position " +
                                 std::to_string(f.position_));
    }
    f.position_ += piece.size();
  }
  f.pieces_ = std::move(pieces);
  return f;
}

FiniteWord FactorisationPrefix::concatenation(std::size_t k) const {
  FiniteWord out;
  for (std::size_t i = 0; i < k && i < pieces_.size(); ++i) {
    out.insert(out.end(), pieces_[i].begin(), pieces_[i].end());
  }
  return out;
}

SkValue s_k(const InfiniteWord& x, std::size_t position, std::size_t budget) {
  if (position == 0) return SkValue::unbounded();
  const ShiftLcp lcp = lcp_with_shift(x, position, budget);
  if (!lcp.resolved()) return SkValue::unbounded();
  return SkValue::finite(position + *lcp.length);
}

SkValue s_k(const InfiniteWord& x, const FactorisationPrefix& f, std::size_t budget) {
  return s_k(x, f.position(), budget);
}

std::vector<FiniteWord> extend_candidates(const InfiniteWord& x, std::size_t pos,
                                          const ColouringScheme& scheme, Colour target,
                                          std::size_t max_len) {
  if (max_len == 0) throw std::invalid_argument("piece length cap must be >= 1");
  std::vector<FiniteWord> out;
  for (std::size_t len : candidate_lengths(x, pos, scheme, target, max_len)) {
    out.push_back(x.factor(pos, len));
  }
  return out;
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::no_monochromatic:
      return "NoMonochromatic";
    case Outcome::no_prefixal:
      return "NoPrefixal";
    case Outcome::cycle_certified:
      return "CycleCertified";
    case Outcome::prefix_covered:
      return "PrefixCovered";
    case Outcome::not_coverable:
      return "NotCoverable";
    case Outcome::inconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(InconclusiveReason reason) {
  switch (reason) {
    case InconclusiveReason::none:
      return "none";
    case InconclusiveReason::budget_exhausted:
      return "budget-exhausted";
    case InconclusiveReason::periodicity_suspected:
      return "periodicity-suspected";
    case InconclusiveReason::depth_bound_violated:
      return "depth-bound-violated";
  }
  return "?";
}

std::string_view to_string(SearchMethod method) {
  switch (method) {
    case SearchMethod::depth_bounded:
      return "depth-bounded";
    case SearchMethod::state_graph:
      return "state-graph";
    case SearchMethod::exhaustive:
      return "exhaustive";
  }
  return "?";
}

nlohmann::ordered_json to_json(const SearchReport& r) {
  nlohmann::ordered_json j;
  j["outcome"] = to_string(r.outcome);
  if (r.outcome == Outcome::inconclusive) j["reason"] = to_string(r.reason);
  j["method"] = to_string(r.method);
  j["constraint"] = r.constraint;
  j["colour_class"] = r.colour_class ? nlohmann::ordered_json(*r.colour_class) : nlohmann::ordered_json();
  j["word"] = r.word;
  j["scheme"] = r.scheme;
  j["piece_len_cap"] = r.piece_len_cap;
  j["nodes"] = r.nodes;
  j["max_depth"] = r.max_depth;
  if (!r.pieces.empty()) j["witness_pieces"] = pieces_json(r.pieces);
  if (r.cycle_entry) j["cycle_entry"] = *r.cycle_entry;
  if (r.failure_position) j["failure_position"] = *r.failure_position;
  j["budgets"] = {{"node_budget", r.node_budget}, {"compare_budget", r.compare_budget}, {"horizon", r.horizon}};
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : r.classes) {
    nlohmann::ordered_json cj;
    cj["colour"] = c.colour;
    cj["outcome"] = to_string(c.outcome);
    cj["roots"] = c.roots;
    cj["nodes"] = c.nodes;
    cj["max_depth"] = c.max_depth;
    if (c.depth_bound) cj["depth_bound"] = *c.depth_bound;
    if (c.bound_violations != 0) cj["bound_violations"] = c.bound_violations;
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

SearchReport verify_separating(const InfiniteWord& x, const ColouringScheme& scheme, const SearchCaps& caps,
                               SearchTrace* trace) {
  if (caps.piece_len_cap == 0) throw std::invalid_argument("piece length cap must be >= 1");

  SearchReport report;
  report.constraint = "monochromatic";
  report.word = x.describe();
  report.scheme = scheme.name();
  report.piece_len_cap = caps.piece_len_cap;
  report.node_budget = caps.node_budget;
  report.compare_budget = caps.compare_budget;
  report.horizon = caps.horizon;

  Explorer ex{x, scheme, caps, trace, {caps.node_budget}};
  try {
    const SeparatingPhi* sp = scheme.as_separating();
    if (sp != nullptr && sp->word == x) {
      report.method = SearchMethod::depth_bounded;
      report.outcome = Outcome::no_monochromatic;
      for (Colour c = 0; c < 2; ++c) {
        ClassSummary summary = BoundedTree(ex, *sp, c).run();
        report.classes.push_back(summary);
        report.max_depth = std::max(report.max_depth, summary.max_depth);
        if (summary.outcome == Outcome::inconclusive) {
          report.outcome = Outcome::inconclusive;
          report.colour_class = c;
          report.reason = ex.counter.exhausted ? InconclusiveReason::budget_exhausted
                                           : InconclusiveReason::depth_bound_violated;
          break;
        }
      }
    } else if (x.known_periodicity()) {
      SearchReport graph = find_monochromatic(x, scheme, caps.piece_len_cap);
      report.method = graph.method;
      report.outcome = graph.outcome;
      report.colour_class = graph.colour_class;
      report.pieces = std::move(graph.pieces);
      report.cycle_entry = graph.cycle_entry;
      report.classes = std::move(graph.classes);
      report.max_depth = graph.max_depth;
      ex.counter.used = graph.nodes;
    } else {
      report.method = SearchMethod::exhaustive;
      report.outcome = Outcome::no_monochromatic;
      for (Colour c = 0; c < scheme.colour_count(); ++c) {
        auto explored = detail::explore_positions(x, colour_candidates(x, scheme, c, caps.piece_len_cap),
                                                  ex.counter, caps.horizon, trace, c);
        ClassSummary summary;
        summary.colour = c;
        summary.outcome = explored.outcome;
        summary.nodes = explored.nodes;
        summary.roots = explored.roots;
        summary.max_depth = explored.max_depth;
        report.classes.push_back(summary);
        report.max_depth = std::max(report.max_depth, summary.max_depth);
        if (summary.outcome == Outcome::prefix_covered) {
          report.outcome = Outcome::prefix_covered;
          report.colour_class = c;
          report.pieces = std::move(explored.witness);
          break;
        }
        if (summary.outcome == Outcome::inconclusive) {
          report.outcome = Outcome::inconclusive;
          report.reason = InconclusiveReason::budget_exhausted;
          report.colour_class = c;
          break;
        }
      }
    }
  } catch (const PeriodicitySuspected& e) {
    report.outcome = Outcome::inconclusive;
    report.reason = InconclusiveReason::periodicity_suspected;
    report.detail = e.what();
  }
  report.nodes = ex.counter.used;
  return report;
}

SearchReport find_monochromatic(const InfiniteWord& x, const ColouringScheme& scheme, std::size_t piece_len_cap,
                                const MonochromaticOptions& options) {
  const auto periodicity = x.known_periodicity();
  if (!periodicity) throw std::invalid_argument("find_monochromatic needs an (eventually) periodic word");
  if (piece_len_cap == 0) throw std::invalid_argument("piece length cap must be >= 1");

  SearchReport report;
  report.method = SearchMethod::state_graph;
  report.constraint = "monochromatic";
  report.word = x.describe();
  report.scheme = scheme.name();
  report.piece_len_cap = piece_len_cap;

  // x = u u u ... with every piece equal to the block.
  if (options.try_block_first && periodicity->preperiod == 0 && periodicity->period <= piece_len_cap) {
    FiniteWord block = x.prefix(periodicity->period);
    const Colour c = scheme.colour(block);
    report.outcome = Outcome::cycle_certified;
    report.colour_class = c;
    report.pieces = {std::move(block)};
    report.cycle_entry = 0;
    report.nodes = 1;
    report.max_depth = 1;
    report.classes.push_back({c, Outcome::cycle_certified, 1, 1, 1, std::nullopt, 0});
    return report;
  }

  report.outcome = Outcome::no_monochromatic;
  for (Colour c = 0; c < scheme.colour_count(); ++c) {
    detail::CycleResult search =
        detail::find_cycle(x, colour_candidates(x, scheme, c, piece_len_cap), *periodicity);
    report.nodes += search.states_visited;
    report.max_depth = std::max(report.max_depth, search.max_depth);
    ClassSummary summary;
    summary.colour = c;
    summary.roots = candidate_lengths(x, 0, scheme, c, piece_len_cap).size();
    summary.nodes = search.states_visited;
    summary.max_depth = search.max_depth;
    summary.outcome = search.found ? Outcome::cycle_certified : Outcome::no_monochromatic;
    report.classes.push_back(summary);
    if (search.found) {
      if (!replay_cycle(x, scheme, search.pieces, search.entry)) {
        throw std::logic_error("cycle certificate failed replay");
      }
      report.outcome = Outcome::cycle_certified;
      report.colour_class = c;
      report.pieces = std::move(search.pieces);
      report.cycle_entry = search.entry;
      break;
    }
  }
  return report;
}

bool replay_cycle(const InfiniteWord& x, const ColouringScheme& scheme, std::span<const FiniteWord> pieces,
                  std::size_t entry) {
  if (pieces.empty() || entry >= pieces.size()) return false;
  const Colour colour = scheme.colour(pieces.front());
  std::size_t pos = 0;
  std::size_t entry_pos = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == entry) entry_pos = pos;
    if (pieces[i].empty() || !x.matches_at(pos, pieces[i]) || scheme.colour(pieces[i]) != colour) return false;
    pos += pieces[i].size();
  }
  return x.known_periodicity().has_value() && x.state_of(entry_pos) == x.state_of(pos);
}

std::vector<FactorisationPrefix> enumerate_monochromatic(const InfiniteWord& x, const ColouringScheme& scheme,
                                                         Colour target, std::size_t max_len,
                                                         std::size_t max_depth) {
  std::vector<FactorisationPrefix> out;
  std::vector<FiniteWord> pieces;
  const auto walk = [&](auto&& self, std::size_t pos) -> void {
    if (pieces.size() == max_depth) return;
    for (auto& v : extend_candidates(x, pos, scheme, target, max_len)) {
      const std::size_t next = pos + v.size();
      pieces.push_back(std::move(v));
      out.push_back(FactorisationPrefix::of(x, pieces));
      self(self, next);
      pieces.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

namespace {

void require_zero_pieces(const InfiniteWord& x, const FactorisationPrefix& f, std::size_t budget) {
  for (const auto& piece : f.pieces()) {
    if (phi(x, piece, SymbolOrder::identity, budget) != 0) {
      throw std::invalid_argument("piece " + to_digits(piece) + " does not have colour 0");
    }
  }
}

}  // namespace

bool check_L1(const InfiniteWord& x, const FactorisationPrefix& f, std::size_t budget) {
  require_zero_pieces(x, f, budget);
  for (std::size_t k = 1; k <= f.size(); ++k) {
    if (phi(x, f.concatenation(k), SymbolOrder::identity, budget) != 0) return false;
  }
  return true;
}

bool check_L2(const InfiniteWord& x, const FactorisationPrefix& f, std::size_t budget) {
  require_zero_pieces(x, f, budget);
  SkValue previous = SkValue::unbounded();
  std::size_t pos = 0;
  for (const auto& piece : f.pieces()) {
    pos += piece.size();
    const SkValue current = s_k(x, pos, budget);
    if (current > previous) return false;
    previous = current;
  }
  return true;
}

}  // namespace sepcol
