#include "sepcol/analysis.hpp"

#include <algorithm>

#include "search_engine.hpp"

namespace sepcol {

namespace {

nlohmann::ordered_json words_json(std::span<const FiniteWord> words) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& w : words) out.push_back(to_digits(w));
  return out;
}

void require_pieces(std::span<const FiniteWord> set) {
  if (set.empty()) throw std::invalid_argument("piece set must be nonempty");
  for (const auto& u : set) {
    if (u.empty()) throw std::invalid_argument("pieces must be nonempty words");
  }
}

std::vector<FiniteWord> unique_pieces(std::vector<FiniteWord> pieces) {
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
  return pieces;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds:
      return "true";
    case Verdict::fails:
      return "false";
    case Verdict::unresolved:
      return "unresolved";
  }
  return "?";
}

Verdict is_lyndon(const InfiniteWord& x, std::size_t budget, SymbolOrder order) {
  if (budget < 2) throw std::invalid_argument("is_lyndon: budget must be >= 2");
  bool unresolved = false;
  for (std::size_t k = 1; k <= budget; ++k) {
    switch (compare_with_shift(x, k, budget, order).kind) {
      case CompareOutcome::Kind::less:
        break;
      case CompareOutcome::Kind::greater:
        return Verdict::fails;
      case CompareOutcome::Kind::unresolved:
        unresolved = true;
        break;
    }
  }
  return unresolved ? Verdict::unresolved : Verdict::holds;
}

std::size_t occurrences_count(std::span<const Symbol> u, Symbol a) {
  return static_cast<std::size_t>(std::count(u.begin(), u.end(), a));
}

std::size_t max_occurrences(const InfiniteWord& x, std::size_t len, Symbol a, const RichnessWindow& window) {
  if (len == 0 || len > window.horizon) throw std::invalid_argument("factor length outside the window");
  const FiniteWord w = x.prefix(window.horizon);
  std::size_t count = occurrences_count(std::span(w).first(len), a);
  std::size_t best = count;
  for (std::size_t i = len; i < w.size(); ++i) {
    count += (w[i] == a ? 1 : 0);
    count -= (w[i - len] == a ? 1 : 0);
    best = std::max(best, count);
  }
  return best;
}

bool is_rich(const InfiniteWord& x, std::span<const Symbol> u, Symbol a, const RichnessWindow& window) {
  if (u.empty() || u.size() > window.horizon) throw std::invalid_argument("is_rich: bad factor length");
  const FiniteWord w = x.prefix(window.horizon);
  if (std::search(w.begin(), w.end(), u.begin(), u.end()) == w.end()) {
    throw std::invalid_argument("is_rich: " + to_digits(u) + " does not occur in the window");
  }
  return occurrences_count(u, a) >= max_occurrences(x, u.size(), a, window);
}

SearchReport prefixal_search(const InfiniteWord& x, std::size_t max_len, const PrefixalConstraint& constraint,
                             std::size_t node_budget, std::size_t horizon) {
  if (max_len == 0) throw std::invalid_argument("piece length cap must be >= 1");

  SearchReport report;
  report.constraint = "prefixal";
  if (constraint.rich_in) report.constraint += "-rich-in-" + std::to_string(*constraint.rich_in);
  report.word = x.describe();
  report.scheme = "prefix";
  report.piece_len_cap = max_len;
  report.node_budget = node_budget;
  report.horizon = horizon;

  const FiniteWord head = x.prefix(max_len);
  std::vector<bool> admissible(max_len + 1, true);
  if (constraint.rich_in) {
    const Symbol a = *constraint.rich_in;
    for (std::size_t len = 1; len <= max_len; ++len) {
      admissible[len] = occurrences_count(std::span(head).first(len), a) >=
                        max_occurrences(x, len, a, constraint.window);
    }
  }
  const detail::CandidateFn candidates = [&](std::size_t pos) {
    std::vector<std::size_t> lengths;
    for (std::size_t len = 1; len <= max_len && x.at(pos + len - 1) == head[len - 1]; ++len) {
      if (admissible[len]) lengths.push_back(len);
    }
    return lengths;
  };

  if (const auto periodicity = x.known_periodicity()) {
    report.method = SearchMethod::state_graph;
    detail::CycleResult cycle = detail::find_cycle(x, candidates, *periodicity);
    report.nodes = cycle.states_visited;
    report.max_depth = cycle.max_depth;
    if (cycle.found) {
      report.outcome = Outcome::cycle_certified;
      report.pieces = std::move(cycle.pieces);
      report.cycle_entry = cycle.entry;
    } else {
      report.outcome = Outcome::no_prefixal;
    }
    return report;
  }

  report.method = SearchMethod::exhaustive;
  detail::NodeCounter counter{node_budget};
  detail::ExhaustiveResult explored = detail::explore_positions(x, candidates, counter, horizon, nullptr, 0);
  report.nodes = explored.nodes;
  report.max_depth = explored.max_depth;
  switch (explored.outcome) {
    case Outcome::no_monochromatic:
      report.outcome = Outcome::no_prefixal;
      break;
    case Outcome::prefix_covered:
      report.outcome = Outcome::prefix_covered;
      report.pieces = std::move(explored.witness);
      break;
    default:
      report.outcome = Outcome::inconclusive;
      report.reason = InconclusiveReason::budget_exhausted;
      break;
  }
  return report;
}

InfiniteWord collapse(const InfiniteWord& x, Symbol a) {
  if (a >= kMaxAlphabet) throw std::invalid_argument("collapse: letter out of range");
  std::array<Symbol, kMaxAlphabet> coding{};
  for (std::size_t b = 0; b < kMaxAlphabet; ++b) coding[b] = b == a ? 1 : 0;
  return x.recoded(coding);
}

std::optional<APDescription> ap_extract(const InfiniteWord& x, Symbol a, std::size_t budget) {
  if (budget < 4) throw std::invalid_argument("ap_extract: budget must be >= 4");
  const FiniteWord window = collapse(x, a).prefix(budget);
  const std::size_t limit = budget / 4;
  for (std::size_t pre = 0; pre <= limit; ++pre) {
    const std::size_t period = smallest_period(std::span(window).subspan(pre));
    if (period > limit) continue;
    APDescription ap;
    ap.preperiod = pre;
    ap.period = period;
    ap.window = budget;
    for (std::size_t n = 0; n < pre; ++n) {
      if (window[n] == 1) ap.initial.push_back(n);
    }
    for (std::size_t n = pre; n < pre + period; ++n) {
      if (window[n] == 1) ap.residues.push_back(n % period);
    }
    std::sort(ap.residues.begin(), ap.residues.end());
    return ap;
  }
  return std::nullopt;
}

MembershipReport membership(const InfiniteWord& x, std::span<const FiniteWord> set, std::size_t horizon) {
  require_pieces(set);
  std::size_t longest = 0;
  for (const auto& u : set) longest = std::max(longest, u.size());
  if (horizon < longest) throw std::invalid_argument("membership: horizon shorter than the longest piece");

  MembershipReport report;
  report.horizon = horizon;

  if (const auto periodicity = x.known_periodicity()) {
    const detail::CandidateFn candidates = [&](std::size_t pos) {
      std::vector<std::size_t> lengths;
      for (const auto& u : set) {
        if (x.matches_at(pos, u)) lengths.push_back(u.size());
      }
      std::sort(lengths.begin(), lengths.end());
      lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
      return lengths;
    };
    detail::CycleResult cycle = detail::find_cycle(x, candidates, *periodicity);
    if (cycle.found) {
      report.outcome = Outcome::cycle_certified;
      report.pieces = std::move(cycle.pieces);
      report.cycle_entry = cycle.entry;
      return report;
    }
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const std::size_t limit = horizon + longest;
  std::vector<bool> reach(limit + 1, false);
  std::vector<std::size_t> back(limit + 1, kNone);
  reach[0] = true;
  std::size_t furthest = 0;
  for (std::size_t p = 0; p < horizon; ++p) {
    if (!reach[p]) continue;
    ++report.reachable;
    furthest = p;
    for (const auto& u : set) {
      const std::size_t q = p + u.size();
      if (!reach[q] && x.matches_at(p, u)) {
        reach[q] = true;
        back[q] = p;
      }
    }
  }

  std::size_t end = kNone;
  for (std::size_t q = horizon; q <= limit; ++q) {
    if (reach[q]) {
      end = q;
      break;
    }
  }
  if (end == kNone) {
    report.outcome = Outcome::not_coverable;
    report.failure_position = furthest;
    return report;
  }
  report.outcome = Outcome::prefix_covered;
  for (std::size_t q = end; q != 0; q = back[q]) {
    report.pieces.push_back(x.factor(back[q], q - back[q]));
  }
  std::reverse(report.pieces.begin(), report.pieces.end());
  return report;
}

namespace {

bool covered(const MembershipReport& r) {
  return r.outcome == Outcome::prefix_covered || r.outcome == Outcome::cycle_certified;
}

std::optional<std::size_t> period_evidence(const InfiniteWord& x, std::size_t horizon) {
  return horizon >= 2 ? detect_period(x, horizon) : std::nullopt;
}

}  // namespace

SubsetReport subset_factor_check(const InfiniteWord& x, std::span<const FiniteWord> set, std::size_t k,
                                 std::size_t horizon) {
  require_pieces(set);
  const std::vector<FiniteWord> pieces(set.begin(), set.end());
  if (unique_pieces(pieces).size() != pieces.size()) throw std::invalid_argument("piece set has duplicates");
  if (k == 0 || pieces.size() < 2 * k - 1) throw std::invalid_argument("subset check needs k >= 1 and |B| >= 2k-1");

  SubsetReport report;
  report.k = k;
  report.horizon = horizon;
  report.all_covered = true;

  std::vector<std::size_t> pick;
  const auto choose = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == k) {
      SubsetMembership entry;
      for (std::size_t i : pick) entry.subset.push_back(pieces[i]);
      entry.result = membership(x, entry.subset, horizon);
      report.all_covered = report.all_covered && covered(entry.result);
      report.subsets.push_back(std::move(entry));
      return;
    }
    for (std::size_t i = from; i < pieces.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  choose(choose, 0);
  report.detected_period = period_evidence(x, horizon);
  return report;
}

CyclicChainReport cyclic_chain_check(const InfiniteWord& x, std::span<const FiniteWord> chain,
                                     std::size_t horizon) {
  require_pieces(chain);
  if (chain.size() < 3 || chain.size() % 2 == 0) {
    throw std::invalid_argument("cyclic chain needs an odd number (>= 3) of words");
  }
  CyclicChainReport report;
  report.horizon = horizon;
  report.all_covered = true;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    SubsetMembership entry;
    entry.subset = unique_pieces({chain[i], chain[(i + 1) % chain.size()]});
    entry.result = membership(x, entry.subset, horizon);
    report.all_covered = report.all_covered && covered(entry.result);
    report.pairs.push_back(std::move(entry));
  }
  report.detected_period = period_evidence(x, horizon);
  return report;
}

IPChain ip_chain(const InfiniteWord& x, std::size_t max_chain, std::size_t len_cap) {
  if (max_chain == 0 || len_cap == 0) throw std::invalid_argument("ip_chain: caps must be >= 1");
  const FiniteWord head = x.prefix(len_cap);

  IPChain best;
  std::vector<FiniteWord> chain;
  std::size_t nodes = 0;
  // `sums` holds the lengths of all products over index sets, the empty one
  // included; each product is a prefix of x, so s extends the chain iff s
  // occurs at every such length.
  const auto grow = [&](auto&& self, const std::vector<std::size_t>& sums) -> bool {
    ++nodes;
    if (chain.size() > best.words.size()) best.words = chain;
    if (chain.size() == max_chain) return true;
    for (std::size_t len = 1; len <= len_cap; ++len) {
      const std::span<const Symbol> s = std::span(head).first(len);
      const bool fits = std::all_of(sums.begin(), sums.end(), [&](std::size_t at) { return x.matches_at(at, s); });
      if (!fits) continue;
      std::vector<std::size_t> next = sums;
      for (std::size_t at : sums) next.push_back(at + len);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      chain.emplace_back(s.begin(), s.end());
      if (self(self, next)) return true;
      chain.pop_back();
    }
    return false;
  };
  best.reached_max = grow(grow, std::vector<std::size_t>{0});
  best.nodes = nodes;
  return best;
}

std::optional<FiniteWord> self_return(const InfiniteWord& x, std::size_t budget) {
  const auto p = detect_period(x, budget);
  if (!p) return std::nullopt;
  return x.prefix(*p);
}

nlohmann::ordered_json to_json(const APDescription& ap) {
  nlohmann::ordered_json j;
  j["preperiod"] = ap.preperiod;
  j["period"] = ap.period;
  j["residues"] = ap.residues;
  j["initial"] = ap.initial;
  j["window"] = ap.window;
  return j;
}

nlohmann::ordered_json to_json(const MembershipReport& r) {
  nlohmann::ordered_json j;
  j["outcome"] = to_string(r.outcome);
  j["horizon"] = r.horizon;
  if (r.outcome != Outcome::cycle_certified) j["reachable"] = r.reachable;
  if (!r.pieces.empty()) j["witness_pieces"] = words_json(r.pieces);
  if (r.cycle_entry) j["cycle_entry"] = *r.cycle_entry;
  if (r.failure_position) j["failure_position"] = *r.failure_position;
  return j;
}

namespace {

nlohmann::ordered_json memberships_json(std::span<const SubsetMembership> entries) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["pieces"] = words_json(e.subset);
    j["outcome"] = to_string(e.result.outcome);
    if (e.result.failure_position) j["failure_position"] = *e.result.failure_position;
    out.push_back(std::move(j));
  }
  return out;
}

nlohmann::ordered_json period_json(const std::optional<std::size_t>& p) {
  return p ? nlohmann::ordered_json(*p) : nlohmann::ordered_json();
}

}  // namespace

nlohmann::ordered_json to_json(const SubsetReport& r) {
  nlohmann::ordered_json j;
  j["k"] = r.k;
  j["horizon"] = r.horizon;
  j["all_covered"] = r.all_covered;
  j["periodicity_predicted"] = r.all_covered;
  j["detected_period"] = period_json(r.detected_period);
  j["subsets"] = memberships_json(r.subsets);
  return j;
}

nlohmann::ordered_json to_json(const CyclicChainReport& r) {
  nlohmann::ordered_json j;
  j["horizon"] = r.horizon;
  j["all_covered"] = r.all_covered;
  j["periodicity_predicted"] = r.all_covered;
  j["detected_period"] = period_json(r.detected_period);
  j["pairs"] = memberships_json(r.pairs);
  return j;
}

nlohmann::ordered_json to_json(const IPChain& chain) {
  nlohmann::ordered_json j;
  j["length"] = chain.words.size();
  j["reached_max"] = chain.reached_max;
  j["chain"] = words_json(chain.words);
  j["nodes"] = chain.nodes;
  return j;
}

}  // namespace sepcol
