#include <gtest/gtest.h>

#include "sepcol/word.hpp"
#include "support/oracles.hpp"

namespace sepcol {
namespace {

FiniteWord w(std::string_view digits) { return parse_digits(digits); }

TEST(WordSpecParse, AcceptsTheThreeForms) {
  EXPECT_EQ(parse_word_spec("periodic:011"), WordSpec(Periodic{w("011")}));
  EXPECT_EQ(parse_word_spec("eventual:0|1"), WordSpec(EventuallyPeriodic{w("0"), w("1")}));
  EXPECT_EQ(parse_word_spec("eventual:|10"), WordSpec(EventuallyPeriodic{{}, w("10")}));
  const Morphic tm{{{0, w("01")}, {1, w("10")}}, 0};
  EXPECT_EQ(parse_word_spec("morphic:0->01,1->10;seed=0"), WordSpec(tm));
}

TEST(WordSpecParse, FormatRoundTrips) {
  for (const char* text : {"periodic:011", "eventual:0|1", "eventual:|10", "morphic:0->01,1->10;seed=0",
                           "morphic:0->01,1->0;seed=0", "morphic:0->012,1->1,2->20;seed=0"}) {
    EXPECT_EQ(format_word_spec(parse_word_spec(text)), text);
  }
}

TEST(WordSpecParse, RejectsMalformedText) {
  for (const char* text : {"", "periodic", "periodic:", "periodic:0a", "eventual:01", "eventual:0|",
                           "circular:01", "morphic:0->01,1->10", "morphic:0->01;seed=", "morphic:0-01;seed=0",
                           "morphic:0->01,0->10;seed=0", "morphic:0->01,1->10;seed=00"}) {
    EXPECT_THROW(parse_word_spec(text), SpecError) << text;
  }
}

TEST(WordSpecParse, RejectsStructurallyInvalidMorphisms) {
  // seed image must start with the seed and grow
  EXPECT_THROW(parse_word_spec("morphic:0->10,1->01;seed=0"), SpecError);
  EXPECT_THROW(parse_word_spec("morphic:0->0,1->10;seed=0"), SpecError);
  // empty image
  EXPECT_THROW(parse_word_spec("morphic:0->01,1->;seed=0"), SpecError);
  // letter 1 is reachable but has no rule
  EXPECT_THROW(parse_word_spec("morphic:0->01;seed=0"), SpecError);
  // an unreachable letter without a rule is fine
  EXPECT_NO_THROW(parse_word_spec("morphic:0->00,1->2;seed=0"));
}

TEST(InfiniteWordTest, ThueMorseSymbols) {
  const auto tm = InfiniteWord::thue_morse();
  EXPECT_EQ(tm.at(0), 0);
  EXPECT_EQ(tm.at(5), 0);
  EXPECT_EQ(to_digits(tm.prefix(21)), "011010011001011010010");
  EXPECT_EQ(to_digits(tm.prefix(4)), "0110");
  EXPECT_TRUE(tm.prefix(0).empty());
  EXPECT_EQ(tm.sigma(), 2u);
}

TEST(InfiniteWordTest, FibonacciAndPeriodicSymbols) {
  EXPECT_EQ(to_digits(InfiniteWord::fibonacci().prefix(5)), "01001");
  EXPECT_EQ(InfiniteWord::parse("periodic:01").at(7), 1);
  EXPECT_EQ(to_digits(InfiniteWord::parse("periodic:01").prefix(6)), "010101");
  EXPECT_EQ(to_digits(InfiniteWord::parse("eventual:0|1").prefix(5)), "01111");
  EXPECT_EQ(to_digits(InfiniteWord::parse("eventual:21|03").prefix(7)), "2103030");
}

TEST(InfiniteWordTest, FactorsAndMatches) {
  const auto tm = InfiniteWord::thue_morse();
  EXPECT_EQ(to_digits(tm.factor(3, 5)), "01001");
  EXPECT_TRUE(tm.matches_at(3, w("010")));
  EXPECT_FALSE(tm.matches_at(3, w("011")));
  EXPECT_TRUE(tm.has_prefix(w("0110")));
  EXPECT_FALSE(tm.has_prefix(w("00")));
}

TEST(InfiniteWordTest, KnownPeriodicityAndStates) {
  const auto ev = InfiniteWord::parse("eventual:001|011");
  ASSERT_TRUE(ev.known_periodicity().has_value());
  EXPECT_EQ(*ev.known_periodicity(), (Periodicity{3, 3}));
  EXPECT_EQ(ev.state_of(1), 1u);
  EXPECT_EQ(ev.state_of(3), 3u);
  EXPECT_EQ(ev.state_of(6), 3u);
  EXPECT_EQ(ev.state_of(8), 5u);
  EXPECT_FALSE(InfiniteWord::thue_morse().known_periodicity().has_value());
}

TEST(InfiniteWordTest, EqualityFollowsTheGenerator) {
  EXPECT_EQ(InfiniteWord::thue_morse(), InfiniteWord::parse("morphic:0->01,1->10;seed=0"));
  EXPECT_FALSE(InfiniteWord::thue_morse() == InfiniteWord::fibonacci());
}

TEST(InfiniteWordTest, CodingIsAppliedLetterwise) {
  std::array<Symbol, kMaxAlphabet> flip{};
  for (std::size_t a = 0; a < kMaxAlphabet; ++a) flip[a] = static_cast<Symbol>(a);
  flip[0] = 1;
  flip[1] = 0;
  const auto comp = InfiniteWord::thue_morse().recoded(flip);
  EXPECT_TRUE(comp.is_recoded());
  EXPECT_EQ(to_digits(comp.prefix(9)), "100101100");
  EXPECT_EQ(comp.recoded(flip), InfiniteWord::thue_morse());
}

TEST(CompareFinite, LexicographicAndLengthChecked) {
  EXPECT_EQ(compare_finite(w("00"), w("01")), std::strong_ordering::less);
  EXPECT_EQ(compare_finite(w("0110"), w("0110")), std::strong_ordering::equal);
  EXPECT_EQ(compare_finite(w("11"), w("01")), std::strong_ordering::greater);
  EXPECT_EQ(compare_finite(w("11"), w("01"), SymbolOrder::reversed), std::strong_ordering::less);
  EXPECT_THROW(compare_finite(w("0"), w("01")), std::invalid_argument);
}

TEST(ShiftComparison, LcpExamples) {
  const auto tm = InfiniteWord::thue_morse();
  EXPECT_EQ(lcp_with_shift(tm, 1, 64).length, 0u);
  EXPECT_EQ(lcp_with_shift(tm, 3, 64).length, 2u);
  const auto p = lcp_with_shift(InfiniteWord::parse("periodic:01"), 2, 64);
  EXPECT_FALSE(p.resolved());
  EXPECT_EQ(p.examined, 64u);
}

TEST(ShiftComparison, CompareExamples) {
  const auto tm = InfiniteWord::thue_morse();
  using K = CompareOutcome::Kind;
  EXPECT_EQ(compare_with_shift(tm, 1, 64).kind, K::less);
  EXPECT_EQ(compare_with_shift(tm, 3, 64).kind, K::greater);
  EXPECT_EQ(compare_with_shift(tm, 3, 64, SymbolOrder::reversed).kind, K::less);
  const auto zero = compare_with_shift(InfiniteWord::parse("periodic:0"), 1, 64);
  EXPECT_EQ(zero.kind, K::unresolved);
  EXPECT_EQ(zero.examined, 64u);
}

TEST(Periodicity, SmallestPeriodOfFiniteWords) {
  EXPECT_EQ(smallest_period(w("")), 0u);
  EXPECT_EQ(smallest_period(w("0")), 1u);
  EXPECT_EQ(smallest_period(w("01010")), 2u);
  EXPECT_EQ(smallest_period(w("0110")), 3u);
  EXPECT_EQ(smallest_period(w("011")), 3u);
}

TEST(Periodicity, DetectPeriodExamples) {
  EXPECT_EQ(detect_period(InfiniteWord::parse("periodic:011"), 300), 3u);
  EXPECT_EQ(detect_period(InfiniteWord::thue_morse(), 300), std::nullopt);
  EXPECT_EQ(detect_period(InfiniteWord::parse("eventual:0|1"), 300), std::nullopt);
  EXPECT_EQ(detect_period(InfiniteWord::parse("periodic:0101"), 300), 2u);
}

TEST(Periodicity, DetectPeriodAgreesWithOracleOnThueMorse) {
  const std::string tm = oracle::thue_morse(300);
  EXPECT_GT(oracle::smallest_period(tm), 150u);
}

TEST(Overlaps, FindsOverlapsInFiniteWords) {
  const auto hit = find_overlap(w("1001001"));
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->period, 3u);
  EXPECT_EQ(hit->position, 0u);
  EXPECT_TRUE(find_overlap(w("01010")).has_value());
  EXPECT_FALSE(find_overlap(w("00100")).has_value());
  EXPECT_FALSE(find_overlap(w("0110100110010110")).has_value());
  EXPECT_FALSE(find_overlap(w("0101")).has_value());
}

}  // namespace
}  // namespace sepcol
