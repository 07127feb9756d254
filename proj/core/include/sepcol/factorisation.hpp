#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sepcol/colouring.hpp"
#include "sepcol/word.hpp"

namespace sepcol {

class InvalidFactorisation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pieces u_1 ... u_k whose concatenation is the prefix of x of length
/// position().
class FactorisationPrefix {
 public:
  /// Throws InvalidFactorisation if a piece is empty or the pieces do not spell
  /// a prefix of x.
  static FactorisationPrefix of(const InfiniteWord& x, std::vector<FiniteWord> pieces);

  std::span<const FiniteWord> pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  std::size_t position() const { return position_; }

  /// u_1 ... u_k for k <= size().
  FiniteWord concatenation(std::size_t k) const;

 private:
  FactorisationPrefix() = default;
  std::vector<FiniteWord> pieces_;
  std::size_t position_ = 0;
};

/// S_k = |u_1| + ... + |u_k| + |x ∧ y_k|, with an explicit +infinity for S_0
/// and for suffixes that never separate from x within the budget.
class SkValue {
 public:
  static SkValue unbounded() { return SkValue(std::nullopt); }
  static SkValue finite(std::size_t v) { return SkValue(v); }

  bool is_unbounded() const { return !value_; }
  std::size_t value() const { return value_.value(); }

  std::strong_ordering operator<=>(const SkValue& other) const {
    if (value_ && other.value_) return *value_ <=> *other.value_;
    if (!value_ && !other.value_) return std::strong_ordering::equal;
    return value_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  bool operator==(const SkValue& other) const = default;

 private:
  explicit SkValue(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

/// S_k for the first k pieces ending at `position`; position 0 is S_0.
SkValue s_k(const InfiniteWord& x, std::size_t position, std::size_t budget);
SkValue s_k(const InfiniteWord& x, const FactorisationPrefix& f, std::size_t budget);

/// All factors v = x[pos, pos+|v|) with 1 <= |v| <= max_len and colour `target`,
/// shortest first.
std::vector<FiniteWord> extend_candidates(const InfiniteWord& x, std::size_t pos,
                                          const ColouringScheme& scheme, Colour target,
                                          std::size_t max_len);

struct SearchCaps {
  std::size_t piece_len_cap = 12;
  std::size_t node_budget = 1'000'000;
  std::size_t compare_budget = kDefaultCompareBudget;
  std::size_t horizon = 4096;
};

enum class Outcome { no_monochromatic, no_prefixal, cycle_certified, prefix_covered, not_coverable, inconclusive };
enum class InconclusiveReason { none, budget_exhausted, periodicity_suspected, depth_bound_violated };
enum class SearchMethod { depth_bounded, state_graph, exhaustive };

std::string_view to_string(Outcome outcome);
std::string_view to_string(InconclusiveReason reason);
std::string_view to_string(SearchMethod method);

struct ClassSummary {
  Colour colour = 0;
  Outcome outcome = Outcome::inconclusive;
  std::size_t nodes = 0;
  std::size_t roots = 0;
  std::size_t max_depth = 0;
  std::optional<std::size_t> depth_bound;  // max of S_1 over the roots
  std::size_t bound_violations = 0;
};

struct SearchReport {
  Outcome outcome = Outcome::inconclusive;
  InconclusiveReason reason = InconclusiveReason::none;
  SearchMethod method = SearchMethod::exhaustive;
  std::optional<Colour> colour_class;  // the class a witness or failure belongs to
  std::string constraint;              // "monochromatic", "prefixal", ...
  std::string word;
  std::string scheme;
  std::size_t piece_len_cap = 0;
  std::size_t node_budget = 0;
  std::size_t compare_budget = 0;
  std::size_t horizon = 0;
  std::size_t nodes = 0;
  std::size_t max_depth = 0;
  std::vector<FiniteWord> pieces;
  std::optional<std::size_t> cycle_entry;
  std::optional<std::size_t> failure_position;
  std::vector<ClassSummary> classes;
  std::string detail;
};

nlohmann::ordered_json to_json(const SearchReport& report);

/// One node of an explored search tree, recorded for independent replay.
struct TraceNode {
  static constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();
  std::size_t parent = kNoParent;
  std::size_t position = 0;  // after the piece
  std::size_t piece_length = 0;
  std::size_t depth = 0;
  Colour colour_class = 0;
  bool expanded = false;  // false for memo hits and depth-capped leaves
};

struct SearchTrace {
  std::vector<TraceNode> nodes;
};

/// Searches every colour class for a monochromatic factorisation of x with
/// pieces of length <= caps.piece_len_cap.
///
/// With the separating colouring of x itself, the colour-0 tree is explored in
/// full, and a branch rooted at u_1 never gets deeper than S_1(u_1) because
/// S_k is non-increasing and S_k >= k. Colour 1 is the colour-0 tree under the
/// reversed order; its pieces are recomputed under that order and checked
/// against the scheme. Words with a known period are decided on the finite
/// graph of positions modulo the period. Anything else is explored up to
/// caps.node_budget nodes, or until a branch reaches caps.horizon.
SearchReport verify_separating(const InfiniteWord& x, const ColouringScheme& scheme,
                               const SearchCaps& caps, SearchTrace* trace = nullptr);

struct MonochromaticOptions {
  bool try_block_first = true;  // the period block repeated, when it fits
};

/// Looks for a monochromatic factorisation of an (eventually) periodic word as
/// a reachable cycle in the graph of positions modulo the period. Throws
/// std::invalid_argument for words without a known period.
SearchReport find_monochromatic(const InfiniteWord& x, const ColouringScheme& scheme,
                                std::size_t piece_len_cap, const MonochromaticOptions& options = {});

/// Pieces are factors of x at consecutive positions, all of one colour, and
/// the positions before pieces[entry] and after the last piece have the same
/// state, so the tail repeats forever.
bool replay_cycle(const InfiniteWord& x, const ColouringScheme& scheme,
                  std::span<const FiniteWord> pieces, std::size_t entry);

/// Every factorisation prefix with at most `max_depth` pieces of colour
/// `target` and length <= max_len.
std::vector<FactorisationPrefix> enumerate_monochromatic(const InfiniteWord& x,
                                                         const ColouringScheme& scheme, Colour target,
                                                         std::size_t max_len, std::size_t max_depth);

/// phi(u_1 ... u_k) == 0 for every k, given phi(u_i) == 0 for every piece.
/// Throws std::invalid_argument when a piece is not of colour 0.
bool check_L1(const InfiniteWord& x, const FactorisationPrefix& f,
              std::size_t budget = kDefaultCompareBudget);

/// S_0 >= S_1 >= ... >= S_k under the same precondition.
bool check_L2(const InfiniteWord& x, const FactorisationPrefix& f,
              std::size_t budget = kDefaultCompareBudget);

}  // namespace sepcol
