#include "sepcol/colouring.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sepcol {

namespace {

void require_nonempty(std::span<const Symbol> u, const char* what) {
  if (u.empty()) throw std::invalid_argument(std::string(what) + ": the empty word has no colour");
}

Colour parse_colour(const std::string& token, std::size_t line_no) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw TableFormatError("line " + std::to_string(line_no) + ": bad colour id '" + token + "'");
  }
  return static_cast<Colour>(std::stoul(token));
}

}  // namespace

PeriodicitySuspected::PeriodicitySuspected(std::size_t shift, std::size_t examined)
    : std::runtime_error("periodicity suspected: x and its suffix at shift " + std::to_string(shift) +
                         " agree on " + std::to_string(examined) + " positions"),
      shift_(shift),
      examined_(examined) {}

Colour phi(const InfiniteWord& x, std::span<const Symbol> u, SymbolOrder order, std::size_t budget) {
  require_nonempty(u, "phi");
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Symbol p = x.at(i);
    if (u[i] != p) return compare_symbols(u[i], p, order) < 0 ? 0 : 1;
  }
  const CompareOutcome c = compare_with_shift(x, u.size(), budget, order);
  switch (c.kind) {
    case CompareOutcome::Kind::less:
      return 0;
    case CompareOutcome::Kind::greater:
      return 1;
    case CompareOutcome::Kind::unresolved:
      break;
  }
  throw PeriodicitySuspected(u.size(), c.examined);
}

Colour tm3(const InfiniteWord& x, std::span<const Symbol> u) {
  require_nonempty(u, "tm3");
  if (!x.has_prefix(u)) return 2;
  if (u.back() > 1) throw std::invalid_argument("tm3: defined for binary words only");
  return u.back();
}

TableColouring parse_table(std::istream& in) {
  TableColouring table;
  bool have_default = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string key;
    std::string value;
    if (!(fields >> key) || key.starts_with('#')) continue;
    std::string extra;
    if (!(fields >> value) || (fields >> extra)) {
      throw TableFormatError("line " + std::to_string(line_no) + ": expected '<word> <colour>'");
    }
    if (key == "default") {
      if (have_default) throw TableFormatError("line " + std::to_string(line_no) + ": duplicate default");
      table.fallback = parse_colour(value, line_no);
      have_default = true;
      continue;
    }
    if (!have_default) {
      throw TableFormatError("line " + std::to_string(line_no) + ": 'default <colour>' must come first");
    }
    FiniteWord word;
    try {
      word = parse_digits(key);
    } catch (const SpecError& e) {
      throw TableFormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!table.entries.emplace(std::move(word), parse_colour(value, line_no)).second) {
      throw TableFormatError("line " + std::to_string(line_no) + ": duplicate word " + key);
    }
  }
  if (!have_default) throw TableFormatError("missing 'default <colour>' header");
  return table;
}

TableColouring load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TableFormatError("cannot open table file " + path.string());
  return parse_table(in);
}

void write_table(std::ostream& out, const TableColouring& table) {
  out << "default " << table.fallback << '\n';
  for (const auto& [word, colour] : table.entries) out << to_digits(word) << ' ' << colour << '\n';
}

ColouringScheme ColouringScheme::separating(InfiniteWord word, SymbolOrder order, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("comparison budget must be positive");
  return ColouringScheme(SeparatingPhi{std::move(word), order, budget});
}

ColouringScheme ColouringScheme::thue_morse_prefix3(InfiniteWord word) {
  if (word.sigma() > 2) throw std::invalid_argument("tm3 colouring needs a binary word");
  return ColouringScheme(ThueMorsePrefix3{std::move(word)});
}

ColouringScheme ColouringScheme::table(TableColouring table) {
  for (const auto& [word, colour] : table.entries) {
    if (word.empty()) throw std::invalid_argument("table colouring entry for the empty word");
  }
  return ColouringScheme(std::move(table));
}

Colour ColouringScheme::colour(std::span<const Symbol> u) const {
  return std::visit(
      [&](const auto& s) -> Colour {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SeparatingPhi>) {
          return phi(s.word, u, s.order, s.budget);
        } else if constexpr (std::is_same_v<T, ThueMorsePrefix3>) {
          return tm3(s.word, u);
        } else {
          require_nonempty(u, "table colouring");
          const auto it = s.entries.find(FiniteWord(u.begin(), u.end()));
          return it == s.entries.end() ? s.fallback : it->second;
        }
      },
      scheme_);
}

std::size_t ColouringScheme::colour_count() const {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SeparatingPhi>) {
          return 2;
        } else if constexpr (std::is_same_v<T, ThueMorsePrefix3>) {
          return 3;
        } else {
          Colour top = s.fallback;
          for (const auto& entry : s.entries) top = std::max(top, entry.second);
          return std::size_t{top} + 1;
        }
      },
      scheme_);
}

std::string ColouringScheme::name() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SeparatingPhi>) {
          return s.order == SymbolOrder::identity ? "phi" : "phi-rev";
        } else if constexpr (std::is_same_v<T, ThueMorsePrefix3>) {
          return "tm3";
        } else {
          return "table";
        }
      },
      scheme_);
}

}  // namespace sepcol
