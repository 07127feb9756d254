#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sepcol/factorisation.hpp"
#include "sepcol/word.hpp"

namespace sepcol {

enum class Verdict { holds, fails, unresolved };
std::string_view to_string(Verdict verdict);

/// x is smaller than each suffix shift^k(x), 1 <= k <= budget. A single larger
/// suffix decides `fails`; otherwise any unresolved comparison gives
/// `unresolved`.
Verdict is_lyndon(const InfiniteWord& x, std::size_t budget, SymbolOrder order = SymbolOrder::identity);

/// |u|_a
std::size_t occurrences_count(std::span<const Symbol> u, Symbol a);

/// Factors of the prefix of length `horizon` stand in for all factors of x.
struct RichnessWindow {
  std::size_t horizon = 4096;
};

/// max |v|_a over factors v of length `len` of the window.
std::size_t max_occurrences(const InfiniteWord& x, std::size_t len, Symbol a, const RichnessWindow& window);

/// |u|_a is maximal among factors of the window of the same length. Throws
/// std::invalid_argument if u does not occur in the window.
bool is_rich(const InfiniteWord& x, std::span<const Symbol> u, Symbol a, const RichnessWindow& window);

struct PrefixalConstraint {
  std::optional<Symbol> rich_in;  // every piece also rich in this letter
  RichnessWindow window;
};

/// Searches factorisations of x into prefixes of x of length <= max_len.
/// Refutation is reported as NoPrefixal once the tree is exhausted.
SearchReport prefixal_search(const InfiniteWord& x, std::size_t max_len, const PrefixalConstraint& constraint,
                             std::size_t node_budget, std::size_t horizon = 4096);

/// The binary word with 1 where x has `a` and 0 elsewhere.
InfiniteWord collapse(const InfiniteWord& x, Symbol a);

/// {n : x_n = a} on the checked window: the listed positions below
/// `preperiod`, then every n >= preperiod with n mod period in `residues`.
struct APDescription {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  std::vector<std::size_t> residues;
  std::vector<std::size_t> initial;
  std::size_t window = 0;
  bool operator==(const APDescription&) const = default;
};

/// Tries preperiods 0..budget/4 in order and returns the first whose tail has
/// a period <= budget/4 on the window of length `budget`.
std::optional<APDescription> ap_extract(const InfiniteWord& x, Symbol a, std::size_t budget);

struct MembershipReport {
  Outcome outcome = Outcome::not_coverable;  // prefix_covered, not_coverable or cycle_certified
  std::size_t horizon = 0;
  std::vector<FiniteWord> pieces;
  std::optional<std::size_t> cycle_entry;
  std::optional<std::size_t> failure_position;
  std::size_t reachable = 0;  // reachable positions below the horizon
};

/// Forward reachability over positions 0..horizon with pieces from `set`.
/// For (eventually) periodic words a reachable cycle on states is reported
/// first, as an exact infinite factorisation.
MembershipReport membership(const InfiniteWord& x, std::span<const FiniteWord> set, std::size_t horizon);

struct SubsetMembership {
  std::vector<FiniteWord> subset;
  MembershipReport result;
};

struct SubsetReport {
  std::size_t k = 0;
  std::size_t horizon = 0;
  std::vector<SubsetMembership> subsets;
  bool all_covered = false;
  std::optional<std::size_t> detected_period;
};

/// Membership of x over every k-element subset of `set` (|set| >= 2k-1).
SubsetReport subset_factor_check(const InfiniteWord& x, std::span<const FiniteWord> set, std::size_t k,
                                 std::size_t horizon);

struct CyclicChainReport {
  std::size_t horizon = 0;
  std::vector<SubsetMembership> pairs;
  bool all_covered = false;
  std::optional<std::size_t> detected_period;
};

/// Membership over {u_1,u_2}, {u_2,u_3}, ..., {u_n,u_1} for odd n >= 3.
CyclicChainReport cyclic_chain_check(const InfiniteWord& x, std::span<const FiniteWord> chain,
                                     std::size_t horizon);

struct IPChain {
  std::vector<FiniteWord> words;
  bool reached_max = false;
  std::size_t nodes = 0;
};

/// Longest s_1..s_m (m <= max_chain) of prefixes of x of length <= len_cap such
/// that every product over a nonempty index set, in increasing index order, is
/// a prefix of x.
IPChain ip_chain(const InfiniteWord& x, std::size_t max_chain, std::size_t len_cap);

/// Shortest prefix s with x[i] == x[i+|s|] on the window (|s| <= budget/2).
std::optional<FiniteWord> self_return(const InfiniteWord& x, std::size_t budget);

nlohmann::ordered_json to_json(const APDescription& ap);
nlohmann::ordered_json to_json(const MembershipReport& report);
nlohmann::ordered_json to_json(const SubsetReport& report);
nlohmann::ordered_json to_json(const CyclicChainReport& report);
nlohmann::ordered_json to_json(const IPChain& chain);

}  // namespace sepcol
