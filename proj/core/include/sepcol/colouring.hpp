#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>

#include "sepcol/word.hpp"

namespace sepcol {

using Colour = std::uint32_t;

inline constexpr std::size_t kDefaultCompareBudget = 4096;

/// Raised by phi when u is a prefix of x and x cannot be told apart from its
/// suffix shift^|u|(x) within the comparison budget. The separating colouring
/// is only defined for non-periodic words, so no colour is made up.
class PeriodicitySuspected : public std::runtime_error {
 public:
  PeriodicitySuspected(std::size_t shift, std::size_t examined);

  std::size_t shift() const { return shift_; }
  std::size_t examined() const { return examined_; }

 private:
  std::size_t shift_;
  std::size_t examined_;
};

/// The separating 2-colouring of x: compare u with the prefix of x of the same
/// length; on a tie compare x with the suffix left after removing u.
/// 0 means "smaller", 1 means "larger", both under `order`.
Colour phi(const InfiniteWord& x, std::span<const Symbol> u, SymbolOrder order = SymbolOrder::identity,
           std::size_t budget = kDefaultCompareBudget);

/// The 3-colouring of a binary word: prefixes of x get their last letter, every
/// other word gets 2.
Colour tm3(const InfiniteWord& x, std::span<const Symbol> u);

struct SeparatingPhi {
  InfiniteWord word;
  SymbolOrder order = SymbolOrder::identity;
  std::size_t budget = kDefaultCompareBudget;
};

struct ThueMorsePrefix3 {
  InfiniteWord word;
};

struct TableColouring {
  std::map<FiniteWord, Colour> entries;
  Colour fallback = 0;
};

class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads `default <colour>` followed by `<word> <colour>` lines. Blank lines
/// and lines starting with '#' are ignored.
TableColouring parse_table(std::istream& in);
TableColouring load_table(const std::filesystem::path& path);
void write_table(std::ostream& out, const TableColouring& table);

/// A total colouring of nonempty finite words.
class ColouringScheme {
 public:
  using Variant = std::variant<SeparatingPhi, ThueMorsePrefix3, TableColouring>;

  static ColouringScheme separating(InfiniteWord word, SymbolOrder order = SymbolOrder::identity,
                                    std::size_t budget = kDefaultCompareBudget);
  static ColouringScheme thue_morse_prefix3(InfiniteWord word);
  static ColouringScheme table(TableColouring table);

  Colour colour(std::span<const Symbol> u) const;
  std::size_t colour_count() const;
  std::string name() const;

  const Variant& variant() const { return scheme_; }
  const SeparatingPhi* as_separating() const { return std::get_if<SeparatingPhi>(&scheme_); }

 private:
  explicit ColouringScheme(Variant v) : scheme_(std::move(v)) {}
  Variant scheme_;
};

}  // namespace sepcol
