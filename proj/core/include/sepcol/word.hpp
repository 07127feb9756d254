#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sepcol {

/// A letter of the alphabet, 0 <= code < sigma. Letters are written as single
/// decimal digits, so sigma never exceeds kMaxAlphabet.
using Symbol = std::uint8_t;
inline constexpr std::size_t kMaxAlphabet = 10;

using FiniteWord = std::vector<Symbol>;

/// Malformed word description (text grammar or structural rule).
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

FiniteWord parse_digits(std::string_view digits);
std::string to_digits(std::span<const Symbol> word);

/// Order on the alphabet. `identity` is ascending numeric order of the codes.
enum class SymbolOrder { identity, reversed };

constexpr SymbolOrder opposite(SymbolOrder order) {
  return order == SymbolOrder::identity ? SymbolOrder::reversed : SymbolOrder::identity;
}

constexpr std::strong_ordering compare_symbols(Symbol a, Symbol b, SymbolOrder order) {
  return order == SymbolOrder::identity ? a <=> b : b <=> a;
}

/// Lexicographic comparison of two words of equal length.
/// Throws std::invalid_argument when the lengths differ.
std::strong_ordering compare_finite(std::span<const Symbol> u, std::span<const Symbol> v,
                                    SymbolOrder order = SymbolOrder::identity);

struct Periodic {
  FiniteWord block;
  bool operator==(const Periodic&) const = default;
};

struct EventuallyPeriodic {
  FiniteWord preperiod;
  FiniteWord block;
  bool operator==(const EventuallyPeriodic&) const = default;
};

/// Fixed point of a morphism prolongable on `seed`.
struct Morphic {
  std::map<Symbol, FiniteWord> rules;
  Symbol seed = 0;
  bool operator==(const Morphic&) const = default;
};

using WordSpec = std::variant<Periodic, EventuallyPeriodic, Morphic>;

/// Checks the structural rules of a spec: nonempty blocks, digit symbols, and
/// for morphic specs a prolongable seed, nonempty images and a rule for every
/// letter reachable from the seed.
void validate(const WordSpec& spec);

/// Parses `periodic:<block>`, `eventual:<pre>|<block>` or
/// `morphic:<s>-><img>[,<s>-><img>]*;seed=<s>`.
WordSpec parse_word_spec(std::string_view text);
std::string format_word_spec(const WordSpec& spec);

/// Preperiod and period of an (eventually) periodic word, as given by its spec.
struct Periodicity {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  bool operator==(const Periodicity&) const = default;
};

/// A right-infinite word given by a finite generator.
///
/// Copies share the generator state, including the memoized prefix of morphic
/// words, which grows geometrically on demand and never changes once written.
/// The memo is not synchronized: a word (and all of its copies) must be used
/// from one thread at a time.
class InfiniteWord {
 public:
  explicit InfiniteWord(WordSpec spec);

  static InfiniteWord parse(std::string_view text) { return InfiniteWord(parse_word_spec(text)); }
  static InfiniteWord thue_morse();
  static InfiniteWord fibonacci();

  Symbol at(std::size_t i) const;
  FiniteWord prefix(std::size_t n) const;
  FiniteWord factor(std::size_t pos, std::size_t len) const;

  /// True iff `u` occurs at position `pos`.
  bool matches_at(std::size_t pos, std::span<const Symbol> u) const;
  bool has_prefix(std::span<const Symbol> u) const { return matches_at(0, u); }

  const WordSpec& spec() const;
  std::size_t sigma() const;

  /// Letter-to-letter image of the word; `coding[a]` replaces letter `a`.
  InfiniteWord recoded(const std::array<Symbol, kMaxAlphabet>& coding) const;
  bool is_recoded() const;

  /// Preperiod/period read off the spec; empty for morphic words.
  std::optional<Periodicity> known_periodicity() const;

  /// Canonical state of a position in an (eventually) periodic word: equal
  /// states have equal suffixes. Identity for morphic words.
  std::size_t state_of(std::size_t pos) const;

  /// Human-readable description (spec text, plus the coding if any).
  std::string describe() const;

  /// Same generator and coding (hence the same word).
  bool operator==(const InfiniteWord& other) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// |x ∧ shift^k(x)| when it is below `budget`.
struct ShiftLcp {
  std::optional<std::size_t> length;  // empty when unresolved
  std::size_t examined = 0;
  bool resolved() const { return length.has_value(); }
};

ShiftLcp lcp_with_shift(const InfiniteWord& x, std::size_t shift, std::size_t budget);

struct CompareOutcome {
  enum class Kind { less, greater, unresolved };
  Kind kind = Kind::unresolved;
  std::size_t examined = 0;
  bool operator==(const CompareOutcome&) const = default;
};

/// Compares x with its suffix shift^k(x) within a budget of positions.
CompareOutcome compare_with_shift(const InfiniteWord& x, std::size_t shift, std::size_t budget,
                                  SymbolOrder order = SymbolOrder::identity);

/// Smallest p >= 1 such that w[i] == w[i+p] wherever both are defined
/// (|w| for words without a proper period, 0 for the empty word).
std::size_t smallest_period(std::span<const Symbol> w);

/// Smallest period of the `budget`-prefix, if it is at most budget/2.
std::optional<std::size_t> detect_period(const InfiniteWord& x, std::size_t budget);

/// An occurrence of u u u' with u' a nonempty prefix of u.
struct Overlap {
  std::size_t position = 0;
  std::size_t period = 0;  // |u|
};

std::optional<Overlap> find_overlap(std::span<const Symbol> w);

}  // namespace sepcol
