// Desk-scale acceptance suite: one PASS/FAIL line per criterion, nonzero exit
// status if any criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "sepcol/analysis.hpp"
#include "sepcol/factorisation.hpp"
#include "support/oracles.hpp"

using namespace sepcol;

namespace {

struct Check {
  std::string failure;
  void require(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

FiniteWord w(std::string_view d) { return parse_digits(d); }

void thue_morse_generation(Check& c) {
  const auto tm = InfiniteWord::thue_morse();
  c.require(to_digits(tm.prefix(21)) == "011010011001011010010", "first 21 symbols");
  const std::string parity = oracle::thue_morse(4096);
  for (std::size_t i = 0; i < 4096; ++i) c.require(tm.at(i) == parity[i] - '0', "digit-sum parity at " + std::to_string(i));
}

void overlap_freeness(Check& c) {
  const std::string window = to_digits(InfiniteWord::thue_morse().prefix(4096));
  c.require(!oracle::has_overlap(window), "overlap found by the quadratic scan");
}

void tm3_separating(Check& c) {
  const auto tm = InfiniteWord::thue_morse();
  SearchCaps caps;
  caps.piece_len_cap = 16;
  caps.node_budget = 1'000'000;
  caps.horizon = 4096;
  const SearchReport r = verify_separating(tm, ColouringScheme::thue_morse_prefix3(tm), caps);
  c.require(r.outcome == Outcome::no_monochromatic, "outcome " + std::string(to_string(r.outcome)));
  c.require(r.classes.size() == 3, "three colour classes");
  if (r.classes.size() != 3) return;
  c.require(r.classes[2].roots == 0 && r.classes[2].nodes == 0, "colour 2 not refuted at the root");
  for (int k = 0; k < 2; ++k) {
    c.require(r.classes[k].outcome == Outcome::no_monochromatic && r.classes[k].nodes > 0,
              "colour " + std::to_string(k) + " not refuted by exhaustion");
  }
}

void phi_separating(Check& c, const InfiniteWord& x) {
  SearchCaps caps;
  caps.piece_len_cap = 12;
  SearchTrace trace;
  const SearchReport r = verify_separating(x, ColouringScheme::separating(x), caps, &trace);
  c.require(r.outcome == Outcome::no_monochromatic, x.describe() + ": " + std::string(to_string(r.outcome)));
  // depth of every explored node against S_1 of its root; the lcp does not
  // depend on the order, so one bound serves both colour classes
  const std::string s = to_digits(x.prefix(4096 + caps.piece_len_cap));
  std::vector<std::size_t> root_of(trace.nodes.size());
  for (std::size_t i = 0; i < trace.nodes.size(); ++i) {
    const TraceNode& n = trace.nodes[i];
    root_of[i] = n.parent == TraceNode::kNoParent ? i : root_of[n.parent];
    const std::size_t len = trace.nodes[root_of[i]].piece_length;
    const auto lcp = oracle::lcp_shift(s, len);
    c.require(lcp.has_value(), "S_1 unresolved");
    if (!lcp) return;
    c.require(n.depth <= len + *lcp, "depth above S_1(root) at node " + std::to_string(i));
  }
}

void zero_piece_checks(Check& c) {
  for (const auto& x : {InfiniteWord::thue_morse(), InfiniteWord::fibonacci()}) {
    const auto all = enumerate_monochromatic(x, ColouringScheme::separating(x), 0, 8, 4);
    c.require(!all.empty(), "empty enumeration");
    for (const auto& f : all) {
      c.require(check_L1(x, f), x.describe() + ": L1 fails");
      c.require(check_L2(x, f), x.describe() + ": L2 fails");
    }
  }
}

void reversal_involution(Check& c) {
  const auto tm = InfiniteWord::thue_morse();
  std::set<FiniteWord> factors;
  for (std::size_t len = 1; len <= 12; ++len) {
    for (std::size_t i = 0; i + len <= 4096; ++i) factors.insert(tm.factor(i, len));
  }
  for (const auto& u : factors) {
    const Colour a = phi(tm, u, SymbolOrder::identity);
    const Colour b = phi(tm, u, SymbolOrder::reversed);
    c.require(a + b == 1, "exception at " + to_digits(u));
  }
}

void periodic_direction(Check& c) {
  const auto x = InfiniteWord::parse("periodic:011");
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    TableColouring table;
    table.fallback = static_cast<Colour>(bit(rng));
    for (std::size_t len = 1; len <= 6; ++len) {
      for (std::size_t start = 0; start < 3; ++start) table.entries[x.factor(start, len)] = static_cast<Colour>(bit(rng));
    }
    const auto scheme = ColouringScheme::table(table);
    const SearchReport r = find_monochromatic(x, scheme, 6);
    c.require(r.outcome == Outcome::cycle_certified, "no cycle for table " + std::to_string(trial));
    if (r.outcome != Outcome::cycle_certified) return;
    std::set<Colour> colours;
    std::size_t pos = 0;
    for (const auto& piece : r.pieces) {
      c.require(x.matches_at(pos, piece), "misaligned piece");
      colours.insert(scheme.colour(piece));
      pos += piece.size();
    }
    c.require(colours.size() == 1, "pieces of several colours");
    c.require(replay_cycle(x, scheme, r.pieces, r.cycle_entry.value_or(0)), "replay failed");
  }
}

void phi_on_periodic(Check& c) {
  bool raised = false;
  try {
    phi(InfiniteWord::parse("periodic:01"), w("01"));
  } catch (const PeriodicitySuspected&) {
    raised = true;
  }
  c.require(raised, "phi returned a colour");
  std::ostringstream out, err;
  const int code = cli::run({"colour", "--word", "periodic:01", "--scheme", "phi", "--piece", "01"}, out, err);
  c.require(code == 2, "CLI exit code " + std::to_string(code));
}

void corollary_checks(Check& c) {
  const auto tm = InfiniteWord::thue_morse();
  PrefixalConstraint rich0;
  rich0.rich_in = 0;
  const SearchReport r = prefixal_search(tm, 16, rich0, 100'000);
  c.require(r.outcome == Outcome::no_prefixal, "prefixal rich-in-0: " + std::string(to_string(r.outcome)));
  const auto ap = ap_extract(InfiniteWord::parse("periodic:001"), 0, 300);
  c.require(ap && ap->period == 3 && ap->residues == std::vector<std::size_t>{0, 1}, "ap on (001)^w");
  c.require(!ap_extract(tm, 0, 300), "ap on TM should be none");
}

void lyndon(Check& c) {
  const auto x = InfiniteWord::parse("eventual:0|1");
  c.require(is_lyndon(x, 256) == Verdict::holds, "is_lyndon");
  const SearchReport r = prefixal_search(x, 8, {}, 100'000);
  c.require(r.outcome == Outcome::no_prefixal && r.max_depth == 1, "prefixal search not refuted at depth 1");
}

void ip_sets(Check& c) {
  const auto p = InfiniteWord::parse("periodic:01");
  const auto tm = InfiniteWord::thue_morse();
  c.require(ip_chain(p, 5, 8).words.size() == 5, "(01)^w chain length");
  const IPChain chain = ip_chain(tm, 2, 8);
  std::vector<std::string> words;
  for (const auto& u : chain.words) words.push_back(to_digits(u));
  c.require(words == std::vector<std::string>{"011", "0"}, "TM chain");
  c.require(oracle::all_products_are_prefixes(oracle::thue_morse(64), words), "product replay");
  c.require(!self_return(tm, 1024), "self_return(TM)");
  c.require(self_return(p, 300) == w("01"), "self_return((01)^w)");
}

void membership_dp(Check& c) {
  const auto tm = InfiniteWord::thue_morse();
  const MembershipReport a = membership(tm, std::vector<FiniteWord>{w("01"), w("10")}, 1024);
  c.require(a.outcome == Outcome::prefix_covered, "{01,10} not covered");
  std::size_t pos = 0;
  for (const auto& piece : a.pieces) {
    c.require(piece == w("01") || piece == w("10"), "foreign piece");
    c.require(tm.matches_at(pos, piece), "witness misaligned");
    pos += piece.size();
  }
  c.require(pos >= 1024, "witness short of the horizon");
  const MembershipReport b = membership(tm, std::vector<FiniteWord>{w("00"), w("11")}, 64);
  c.require(b.outcome == Outcome::not_coverable && b.failure_position == 0u, "{00,11} not NotCoverable{0}");
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Thue-Morse generation", 1, thue_morse_generation},
      {2, "overlap-freeness of the 4096-prefix", 30, overlap_freeness},
      {3, "3-colouring separates TM (L=16)", 60, tm3_separating},
      {4, "phi separates TM (L=12)", 60, [](Check& c) { phi_separating(c, InfiniteWord::thue_morse()); }},
      {4, "phi separates Fibonacci (L=12)", 60, [](Check& c) { phi_separating(c, InfiniteWord::fibonacci()); }},
      {4, "phi separates eventual:0|1 (L=12)", 60,
       [](Check& c) { phi_separating(c, InfiniteWord::parse("eventual:0|1")); }},
      {5, "colour-0 products and S_k monotonicity", 10, zero_piece_checks},
      {6, "reversal involution on TM factors", 10, reversal_involution},
      {7, "periodic words admit monochromatic factorisations", 10, periodic_direction},
      {8, "phi refuses periodic input", 1, phi_on_periodic},
      {9, "prefixal, rich and arithmetic-progression checks", 10, corollary_checks},
      {10, "Lyndon word and prefixal refutation", 1, lyndon},
      {11, "IP chains and self-return", 10, ip_sets},
      {12, "membership DP", 1, membership_dp},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.failure.empty() && secs > crit.limit_s) check.failure = "over the time limit";
    const bool ok = check.failure.empty();
    failures += ok ? 0 : 1;
    std::printf("%s [%2d] %-52s %8.3f s (limit %g s)%s%s\n", ok ? "PASS" : "FAIL", crit.id, crit.name.c_str(), secs,
                crit.limit_s, ok ? "" : ": ", check.failure.c_str());
  }
  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
