#include "sepcol/word.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sepcol {

namespace {

Symbol digit_symbol(char c) {
  if (c < '0' || c > '9') {
    throw SpecError(std::string("not a digit symbol: '") + c + "'");
  }
  return static_cast<Symbol>(c - '0');
}

std::array<Symbol, kMaxAlphabet> identity_coding() {
  std::array<Symbol, kMaxAlphabet> coding{};
  std::iota(coding.begin(), coding.end(), Symbol{0});
  return coding;
}

std::set<Symbol> letters_of(const WordSpec& spec) {
  std::set<Symbol> letters;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Periodic>) {
          letters.insert(s.block.begin(), s.block.end());
        } else if constexpr (std::is_same_v<T, EventuallyPeriodic>) {
          letters.insert(s.preperiod.begin(), s.preperiod.end());
          letters.insert(s.block.begin(), s.block.end());
        } else {
          // Letters reachable from the seed.
          std::vector<Symbol> todo{s.seed};
          letters.insert(s.seed);
          while (!todo.empty()) {
            const Symbol a = todo.back();
            todo.pop_back();
            const auto it = s.rules.find(a);
            if (it == s.rules.end()) continue;
            for (Symbol b : it->second) {
              if (letters.insert(b).second) todo.push_back(b);
            }
          }
        }
      },
      spec);
  return letters;
}

void check_letters(std::span<const Symbol> w) {
  for (Symbol a : w) {
    if (a >= kMaxAlphabet) throw SpecError("symbol out of range: " + std::to_string(a));
  }
}

}  // namespace

FiniteWord parse_digits(std::string_view digits) {
  FiniteWord w;
  w.reserve(digits.size());
  for (char c : digits) w.push_back(digit_symbol(c));
  return w;
}

std::string to_digits(std::span<const Symbol> word) {
  std::string s;
  s.reserve(word.size());
  for (Symbol a : word) s.push_back(static_cast<char>('0' + a));
  return s;
}

std::strong_ordering compare_finite(std::span<const Symbol> u, std::span<const Symbol> v,
                                    SymbolOrder order) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("compare_finite: lengths differ (" + std::to_string(u.size()) +
                                " vs " + std::to_string(v.size()) + ")");
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return compare_symbols(u[i], v[i], order);
  }
  return std::strong_ordering::equal;
}

void validate(const WordSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Periodic>) {
          if (s.block.empty()) throw SpecError("periodic block must be nonempty");
          check_letters(s.block);
        } else if constexpr (std::is_same_v<T, EventuallyPeriodic>) {
          if (s.block.empty()) throw SpecError("eventually periodic block must be nonempty");
          check_letters(s.preperiod);
          check_letters(s.block);
        } else {
          if (s.seed >= kMaxAlphabet) throw SpecError("seed out of range");
          for (const auto& [a, image] : s.rules) {
            if (a >= kMaxAlphabet) throw SpecError("rule letter out of range");
            if (image.empty()) {
              throw SpecError("rule image of " + std::to_string(a) + " is empty");
            }
            check_letters(image);
          }
          const auto seed_rule = s.rules.find(s.seed);
          if (seed_rule == s.rules.end()) throw SpecError("no rule for the seed");
          if (seed_rule->second.size() < 2 || seed_rule->second.front() != s.seed) {
            throw SpecError("morphism is not prolongable on the seed");
          }
          for (Symbol a : letters_of(s)) {
            if (!s.rules.contains(a)) {
              throw SpecError("no rule for reachable letter " + std::to_string(a));
            }
          }
        }
      },
      spec);
}

WordSpec parse_word_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw SpecError("missing ':' in word spec");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);

  WordSpec spec;
  if (kind == "periodic") {
    spec = Periodic{parse_digits(body)};
  } else if (kind == "eventual") {
    const auto bar = body.find('|');
    if (bar == std::string_view::npos) throw SpecError("eventual spec needs '<pre>|<block>'");
    spec = EventuallyPeriodic{parse_digits(body.substr(0, bar)), parse_digits(body.substr(bar + 1))};
  } else if (kind == "morphic") {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw SpecError("morphic spec needs ';seed=<s>'");
    const std::string_view rules_text = body.substr(0, semi);
    const std::string_view seed_text = body.substr(semi + 1);
    if (!seed_text.starts_with("seed=") || seed_text.size() != 6) {
      throw SpecError("malformed seed clause: " + std::string(seed_text));
    }
    Morphic m;
    m.seed = digit_symbol(seed_text[5]);
    std::size_t start = 0;
    while (start <= rules_text.size()) {
      auto comma = rules_text.find(',', start);
      if (comma == std::string_view::npos) comma = rules_text.size();
      const std::string_view rule = rules_text.substr(start, comma - start);
      if (rule.size() < 4 || rule.substr(1, 2) != "->") {
        throw SpecError("malformed rule: '" + std::string(rule) + "'");
      }
      const Symbol a = digit_symbol(rule[0]);
      if (!m.rules.emplace(a, parse_digits(rule.substr(3))).second) {
        throw SpecError("duplicate rule for " + std::string(1, rule[0]));
      }
      start = comma + 1;
    }
    spec = std::move(m);
  } else {
    throw SpecError("unknown word kind: '" + std::string(kind) + "'");
  }
  validate(spec);
  return spec;
}

std::string format_word_spec(const WordSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Periodic>) {
          return "periodic:" + to_digits(s.block);
        } else if constexpr (std::is_same_v<T, EventuallyPeriodic>) {
          return "eventual:" + to_digits(s.preperiod) + "|" + to_digits(s.block);
        } else {
          std::string out = "morphic:";
          bool first = true;
          for (const auto& [a, image] : s.rules) {
            if (!first) out += ',';
            first = false;
            out += static_cast<char>('0' + a);
            out += "->";
            out += to_digits(image);
          }
          out += ";seed=";
          out += static_cast<char>('0' + s.seed);
          return out;
        }
      },
      spec);
}

struct InfiniteWord::State {
  WordSpec spec;
  std::array<Symbol, kMaxAlphabet> coding = identity_coding();
  bool coded = false;
  std::size_t sigma = 1;
  std::optional<Periodicity> periodicity;

  // Morphic memo: buffer == image of the first `cursor` letters of buffer.
  FiniteWord buffer;
  std::size_t cursor = 0;

  void grow_to(std::size_t n) {
    const auto& m = std::get<Morphic>(spec);
    const std::size_t target = std::max(n, 2 * buffer.size());
    buffer.reserve(target);
    while (buffer.size() < target) {
      const FiniteWord& image = m.rules.at(buffer[cursor]);
      buffer.insert(buffer.end(), image.begin(), image.end());
      ++cursor;
    }
  }

  Symbol raw_at(std::size_t i) {
    switch (spec.index()) {
      case 0: {
        const auto& b = std::get<Periodic>(spec).block;
        return b[i % b.size()];
      }
      case 1: {
        const auto& e = std::get<EventuallyPeriodic>(spec);
        if (i < e.preperiod.size()) return e.preperiod[i];
        return e.block[(i - e.preperiod.size()) % e.block.size()];
      }
      default:
        if (i >= buffer.size()) grow_to(i + 1);
        return buffer[i];
    }
  }
};

InfiniteWord::InfiniteWord(WordSpec spec) : state_(std::make_shared<State>()) {
  validate(spec);
  state_->spec = std::move(spec);
  const auto letters = letters_of(state_->spec);
  state_->sigma = letters.empty() ? 1 : std::size_t{*letters.rbegin()} + 1;
  if (const auto* p = std::get_if<Periodic>(&state_->spec)) {
    state_->periodicity = Periodicity{0, p->block.size()};
  } else if (const auto* e = std::get_if<EventuallyPeriodic>(&state_->spec)) {
    state_->periodicity = Periodicity{e->preperiod.size(), e->block.size()};
  } else {
    const auto& m = std::get<Morphic>(state_->spec);
    state_->buffer = m.rules.at(m.seed);
    state_->cursor = 1;
  }
}

InfiniteWord InfiniteWord::thue_morse() {
  return InfiniteWord(Morphic{{{0, {0, 1}}, {1, {1, 0}}}, 0});
}

InfiniteWord InfiniteWord::fibonacci() {
  return InfiniteWord(Morphic{{{0, {0, 1}}, {1, {0}}}, 0});
}

Symbol InfiniteWord::at(std::size_t i) const {
  const Symbol a = state_->raw_at(i);
  return state_->coding[a];
}

FiniteWord InfiniteWord::prefix(std::size_t n) const { return factor(0, n); }

FiniteWord InfiniteWord::factor(std::size_t pos, std::size_t len) const {
  FiniteWord w(len);
  for (std::size_t i = 0; i < len; ++i) w[i] = at(pos + i);
  return w;
}

bool InfiniteWord::matches_at(std::size_t pos, std::span<const Symbol> u) const {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (at(pos + i) != u[i]) return false;
  }
  return true;
}

const WordSpec& InfiniteWord::spec() const { return state_->spec; }

std::size_t InfiniteWord::sigma() const { return state_->sigma; }

InfiniteWord InfiniteWord::recoded(const std::array<Symbol, kMaxAlphabet>& coding) const {
  for (Symbol a : coding) {
    if (a >= kMaxAlphabet) throw SpecError("coding letter out of range");
  }
  std::array<Symbol, kMaxAlphabet> composed{};
  for (std::size_t a = 0; a < kMaxAlphabet; ++a) composed[a] = coding[state_->coding[a]];
  const auto map_word = [&](const FiniteWord& w) {
    FiniteWord out(w.size());
    std::transform(w.begin(), w.end(), out.begin(), [&](Symbol a) { return composed[a]; });
    return out;
  };

  // Periodic shapes are closed under codings; only morphic words keep one.
  if (const auto* p = std::get_if<Periodic>(&state_->spec)) {
    return InfiniteWord(Periodic{map_word(p->block)});
  }
  if (const auto* e = std::get_if<EventuallyPeriodic>(&state_->spec)) {
    return InfiniteWord(EventuallyPeriodic{map_word(e->preperiod), map_word(e->block)});
  }
  // Letters that never occur keep their identity image so equal words compare equal.
  const auto letters = letters_of(state_->spec);
  for (std::size_t a = 0; a < kMaxAlphabet; ++a) {
    if (!letters.contains(static_cast<Symbol>(a))) composed[a] = static_cast<Symbol>(a);
  }
  InfiniteWord out(state_->spec);
  out.state_->coding = composed;
  out.state_->coded = composed != identity_coding();
  std::size_t sigma = 1;
  for (Symbol a : letters) sigma = std::max(sigma, std::size_t{composed[a]} + 1);
  out.state_->sigma = sigma;
  return out;
}

bool InfiniteWord::is_recoded() const { return state_->coded; }

std::optional<Periodicity> InfiniteWord::known_periodicity() const { return state_->periodicity; }

std::size_t InfiniteWord::state_of(std::size_t pos) const {
  if (!state_->periodicity) return pos;
  const auto [pre, period] = *state_->periodicity;
  return pos < pre ? pos : pre + (pos - pre) % period;
}

std::string InfiniteWord::describe() const {
  std::string text = format_word_spec(state_->spec);
  if (state_->coded) {
    text += " coded ";
    for (std::size_t a = 0; a < kMaxAlphabet; ++a) {
      text += std::to_string(a) + "->" + std::to_string(state_->coding[a]);
      if (a + 1 < kMaxAlphabet) text += ',';
    }
  }
  return text;
}

bool InfiniteWord::operator==(const InfiniteWord& other) const {
  if (state_ == other.state_) return true;
  return state_->spec == other.state_->spec && state_->coding == other.state_->coding;
}

ShiftLcp lcp_with_shift(const InfiniteWord& x, std::size_t shift, std::size_t budget) {
  if (shift == 0) throw std::invalid_argument("lcp_with_shift: shift must be >= 1");
  for (std::size_t i = 0; i < budget; ++i) {
    if (x.at(i) != x.at(shift + i)) return {i, i + 1};
  }
  return {std::nullopt, budget};
}

CompareOutcome compare_with_shift(const InfiniteWord& x, std::size_t shift, std::size_t budget,
                                  SymbolOrder order) {
  const ShiftLcp lcp = lcp_with_shift(x, shift, budget);
  if (!lcp.resolved()) return {CompareOutcome::Kind::unresolved, lcp.examined};
  const std::size_t m = *lcp.length;
  const bool less = compare_symbols(x.at(m), x.at(shift + m), order) < 0;
  return {less ? CompareOutcome::Kind::less : CompareOutcome::Kind::greater, lcp.examined};
}

std::size_t smallest_period(std::span<const Symbol> w) {
  if (w.empty()) return 0;
  // KMP failure function; the longest border gives the smallest period.
  std::vector<std::size_t> border(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  return w.size() - border.back();
}

std::optional<std::size_t> detect_period(const InfiniteWord& x, std::size_t budget) {
  if (budget < 2) throw std::invalid_argument("detect_period: budget must be >= 2");
  const std::size_t p = smallest_period(x.prefix(budget));
  if (p <= budget / 2) return p;
  return std::nullopt;
}

std::optional<Overlap> find_overlap(std::span<const Symbol> w) {
  // u u u' has period |u| and length 2|u|+1: look for p+1 consecutive matches
  // w[i] == w[i+p].
  for (std::size_t p = 1; 2 * p + 1 <= w.size(); ++p) {
    std::size_t run = 0;
    for (std::size_t i = 0; i + p < w.size(); ++i) {
      run = w[i] == w[i + p] ? run + 1 : 0;
      if (run == p + 1) return Overlap{i - p, p};
    }
  }
  return std::nullopt;
}

}  // namespace sepcol
