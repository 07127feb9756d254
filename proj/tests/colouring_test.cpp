#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sepcol/colouring.hpp"

namespace sepcol {
namespace {

FiniteWord w(std::string_view digits) { return parse_digits(digits); }

TEST(Phi, ThueMorseExamples) {
  const auto tm = InfiniteWord::thue_morse();
  EXPECT_EQ(phi(tm, w("1"), SymbolOrder::identity, 64), 1u);
  EXPECT_EQ(phi(tm, w("0"), SymbolOrder::identity, 64), 0u);
  EXPECT_EQ(phi(tm, w("00"), SymbolOrder::identity, 64), 0u);
  EXPECT_EQ(phi(tm, w("0"), SymbolOrder::reversed, 64), 1u);
  // 011 is a prefix and shift^3 = 0100... is smaller than x
  EXPECT_EQ(phi(tm, w("011")), 1u);
}

TEST(Phi, PeriodicInputIsRefused) {
  const auto x = InfiniteWord::parse("periodic:01");
  try {
    phi(x, w("01"), SymbolOrder::identity, 64);
    FAIL() << "expected PeriodicitySuspected";
  } catch (const PeriodicitySuspected& e) {
    EXPECT_EQ(e.shift(), 2u);
    EXPECT_EQ(e.examined(), 64u);
  }
  // non-prefix words never need the suffix comparison
  EXPECT_EQ(phi(x, w("1")), 1u);
  EXPECT_EQ(phi(x, w("00")), 0u);
}

TEST(Phi, EmptyWordRejected) {
  EXPECT_THROW(phi(InfiniteWord::thue_morse(), FiniteWord{}), std::invalid_argument);
}

TEST(Tm3, ThreeCases) {
  const auto tm = InfiniteWord::thue_morse();
  EXPECT_EQ(tm3(tm, w("0")), 0u);
  EXPECT_EQ(tm3(tm, w("01")), 1u);
  EXPECT_EQ(tm3(tm, w("11")), 2u);
  EXPECT_EQ(tm3(tm, w("0110")), 0u);
  EXPECT_THROW(tm3(tm, FiniteWord{}), std::invalid_argument);
}

TEST(Tm3, SchemeNeedsBinaryWord) {
  EXPECT_THROW(ColouringScheme::thue_morse_prefix3(InfiniteWord::parse("periodic:012")), std::invalid_argument);
}

TEST(Schemes, DispatchAndNames) {
  const auto tm = InfiniteWord::thue_morse();
  const auto phi_id = ColouringScheme::separating(tm);
  const auto phi_rev = ColouringScheme::separating(tm, SymbolOrder::reversed, 64);
  const auto three = ColouringScheme::thue_morse_prefix3(tm);
  const auto table = ColouringScheme::table({{{w("01"), 1}}, 0});

  EXPECT_EQ(phi_rev.colour(w("0")), 1u);
  EXPECT_EQ(table.colour(w("01")), 1u);
  EXPECT_EQ(table.colour(w("11")), 0u);
  EXPECT_EQ(three.colour(w("11")), 2u);

  EXPECT_EQ(phi_id.name(), "phi");
  EXPECT_EQ(phi_rev.name(), "phi-rev");
  EXPECT_EQ(three.name(), "tm3");
  EXPECT_EQ(table.name(), "table");

  EXPECT_EQ(phi_id.colour_count(), 2u);
  EXPECT_EQ(three.colour_count(), 3u);
  EXPECT_EQ(table.colour_count(), 2u);
  EXPECT_NE(phi_id.as_separating(), nullptr);
  EXPECT_EQ(table.as_separating(), nullptr);
}

TEST(Schemes, TableColourCountCoversDefault) {
  const auto t = ColouringScheme::table({{{w("0"), 0}}, 4});
  EXPECT_EQ(t.colour_count(), 5u);
}

TEST(TableFormat, ParsesCommentsAndBlankLines) {
  std::istringstream in("# example\ndefault 0\n\n01 1\n011 2\n");
  const TableColouring t = parse_table(in);
  EXPECT_EQ(t.fallback, 0u);
  ASSERT_EQ(t.entries.size(), 2u);
  EXPECT_EQ(t.entries.at(w("011")), 2u);
}

TEST(TableFormat, RoundTrips) {
  const TableColouring t{{{w("0"), 1}, {w("01"), 0}, {w("110"), 1}}, 1};
  std::ostringstream out;
  write_table(out, t);
  std::istringstream in(out.str());
  const TableColouring back = parse_table(in);
  EXPECT_EQ(back.entries, t.entries);
  EXPECT_EQ(back.fallback, t.fallback);
}

TEST(TableFormat, RejectsMalformedInput) {
  for (const char* text : {"", "01 1\n", "default\n", "default x\n", "default 0\ndefault 1\n", "default 0\n01\n",
                           "default 0\n0a 1\n", "default 0\n01 1 2\n", "default 0\n01 1\n01 0\n",
                           "default 0\n01 -1\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_table(in), TableFormatError) << text;
  }
}

TEST(TableFormat, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "sepcol_colouring_test.table";
  {
    std::ofstream out(path);
    out << "default 1\n0 0\n";
  }
  const TableColouring t = load_table(path);
  EXPECT_EQ(t.fallback, 1u);
  EXPECT_EQ(t.entries.at(w("0")), 0u);
  std::filesystem::remove(path);
  EXPECT_THROW(load_table(path), TableFormatError);
}

}  // namespace
}  // namespace sepcol
