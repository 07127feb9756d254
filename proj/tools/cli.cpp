#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "sepcol/analysis.hpp"
#include "sepcol/colouring.hpp"
#include "sepcol/factorisation.hpp"
#include "sepcol/word.hpp"

namespace sepcol::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string word;
  std::string scheme = "phi";
  std::size_t piece_len_cap = 12;
  std::size_t horizon = 4096;
  std::size_t node_budget = 1'000'000;
  std::size_t compare_budget = kDefaultCompareBudget;
  std::string output;
};

ColouringScheme make_scheme(const std::string& selector, const InfiniteWord& x, std::size_t budget) {
  if (selector == "phi") return ColouringScheme::separating(x, SymbolOrder::identity, budget);
  if (selector == "phi-rev") return ColouringScheme::separating(x, SymbolOrder::reversed, budget);
  if (selector == "tm3") return ColouringScheme::thue_morse_prefix3(x);
  if (selector.starts_with("table:")) return ColouringScheme::table(load_table(selector.substr(6)));
  throw UsageError("unknown scheme '" + selector + "' (expected phi, phi-rev, tm3 or table:<path>)");
}

std::vector<FiniteWord> parse_pieces(const std::vector<std::string>& texts) {
  std::vector<FiniteWord> pieces;
  for (const auto& t : texts) {
    if (t.empty()) throw UsageError("empty piece in --pieces");
    pieces.push_back(parse_digits(t));
  }
  return pieces;
}

Symbol parse_letter(int a) {
  if (a < 0 || a >= static_cast<int>(kMaxAlphabet)) throw UsageError("letter must be a single digit");
  return static_cast<Symbol>(a);
}

void require_positive(std::size_t value, const char* flag) {
  if (value == 0) throw UsageError(std::string(flag) + " must be positive");
}

void emit(const nlohmann::ordered_json& record, const std::string& output, std::ostream& out) {
  const std::string text = record.dump(2) + "\n";
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw UsageError("cannot write report to " + output);
  file << text;
}

int search_exit_code(Outcome outcome) {
  switch (outcome) {
    case Outcome::no_monochromatic:
    case Outcome::no_prefixal:
    case Outcome::not_coverable:
      return kVerified;
    case Outcome::cycle_certified:
    case Outcome::prefix_covered:
      return kWitnessFound;
    case Outcome::inconclusive:
      break;
  }
  return kInconclusive;
}

nlohmann::ordered_json header(const std::string& analysis, const InfiniteWord& x) {
  nlohmann::ordered_json j;
  j["analysis"] = analysis;
  j["word"] = x.describe();
  return j;
}

void merge(nlohmann::ordered_json& into, const nlohmann::ordered_json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

struct AnalyzeArgs {
  std::size_t budget = kDefaultCompareBudget;
  std::size_t horizon = 4096;
  std::size_t node_budget = 1'000'000;
  std::size_t piece_len_cap = 12;
  std::size_t chain = 8;
  std::size_t k = 2;
  int letter = 0;
  std::optional<int> rich_in;
  std::string piece;
  std::vector<std::string> pieces;
  std::string order = "identity";
};

int run_analysis(const std::string& name, const InfiniteWord& x, const AnalyzeArgs& a, const std::string& output,
                 std::ostream& out) {
  nlohmann::ordered_json record = header(name, x);
  int code = kVerified;

  if (name == "lyndon") {
    if (a.order != "identity" && a.order != "reversed") throw UsageError("--order must be identity or reversed");
    const SymbolOrder order = a.order == "identity" ? SymbolOrder::identity : SymbolOrder::reversed;
    const Verdict v = is_lyndon(x, a.budget, order);
    record["order"] = a.order;
    record["budget"] = a.budget;
    record["lyndon"] = to_string(v);
    if (v == Verdict::unresolved) code = kInconclusive;
  } else if (name == "rich") {
    if (a.piece.empty()) throw UsageError("--piece is required");
    const FiniteWord u = parse_digits(a.piece);
    const Symbol letter = parse_letter(a.letter);
    const RichnessWindow window{a.horizon};
    record["piece"] = a.piece;
    record["letter"] = letter;
    record["horizon"] = a.horizon;
    record["count"] = occurrences_count(u, letter);
    record["window_max"] = max_occurrences(x, u.size(), letter, window);
    record["rich"] = is_rich(x, u, letter, window);
  } else if (name == "ap") {
    const auto ap = ap_extract(x, parse_letter(a.letter), a.budget);
    record["letter"] = a.letter;
    record["budget"] = a.budget;
    record["found"] = ap.has_value();
    if (ap) merge(record, to_json(*ap));
  } else if (name == "member") {
    const auto set = parse_pieces(a.pieces);
    const MembershipReport r = membership(x, set, a.horizon);
    merge(record, to_json(r));
    code = search_exit_code(r.outcome);
  } else if (name == "subsets") {
    const auto set = parse_pieces(a.pieces);
    merge(record, to_json(subset_factor_check(x, set, a.k, a.horizon)));
  } else if (name == "cyclic") {
    const auto chain = parse_pieces(a.pieces);
    merge(record, to_json(cyclic_chain_check(x, chain, a.horizon)));
  } else if (name == "ip") {
    require_positive(a.chain, "--m");
    require_positive(a.piece_len_cap, "--lencap");
    record["m"] = a.chain;
    record["lencap"] = a.piece_len_cap;
    merge(record, to_json(ip_chain(x, a.chain, a.piece_len_cap)));
  } else if (name == "selfreturn") {
    const auto s = self_return(x, a.budget);
    record["budget"] = a.budget;
    record["self_return"] = s ? nlohmann::ordered_json(to_digits(*s)) : nlohmann::ordered_json();
  } else if (name == "prefixal") {
    PrefixalConstraint constraint;
    if (a.rich_in) constraint.rich_in = parse_letter(*a.rich_in);
    constraint.window.horizon = a.horizon;
    const SearchReport r = prefixal_search(x, a.piece_len_cap, constraint, a.node_budget, a.horizon);
    merge(record, to_json(r));
    code = search_exit_code(r.outcome);
  } else {
    throw UsageError("unknown analysis '" + name + "'");
  }
  emit(record, output, out);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separating colourings and monochromatic factorisations of infinite words", "sepcol"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::size_t gen_length = 0;
  std::string piece;

  auto* gen = app.add_subcommand("gen", "Print the prefix of a word");
  gen->add_option("--word", cfg.word, "Word spec")->required();
  gen->add_option("--n", gen_length, "Prefix length")->required();

  auto* colour = app.add_subcommand("colour", "Colour one finite word");
  colour->alias("color");
  colour->add_option("--word", cfg.word, "Word spec")->required();
  colour->add_option("--scheme", cfg.scheme, "phi | phi-rev | tm3 | table:<path>");
  colour->add_option("--piece", piece, "Word to colour (digits)")->required();
  colour->add_option("--budget", cfg.compare_budget, "Suffix comparison budget");

  auto* verify = app.add_subcommand("verify", "Search for monochromatic factorisations");
  verify->add_option("--word", cfg.word, "Word spec")->required();
  verify->add_option("--scheme", cfg.scheme, "phi | phi-rev | tm3 | table:<path>");
  verify->add_option("--L", cfg.piece_len_cap, "Piece length cap");
  verify->add_option("--horizon", cfg.horizon, "Search horizon for words without a period bound");
  verify->add_option("--node-budget", cfg.node_budget, "Maximum explored nodes");
  verify->add_option("--budget", cfg.compare_budget, "Suffix comparison budget");
  verify->add_option("--output", cfg.output, "Report path (default: standard output)");

  auto* analyze = app.add_subcommand("analyze", "Word analyses: Lyndon, richness, progressions, membership, IP chains");
  analyze->require_subcommand(1);
  AnalyzeArgs aargs;
  std::string analysis_output;
  std::string analysis_word;
  const std::vector<std::string> selectors = {"lyndon", "rich",   "ap", "member",     "subsets",
                                              "cyclic", "ip",     "selfreturn", "prefixal"};
  for (const auto& name : selectors) {
    auto* sub = analyze->add_subcommand(name);
    sub->add_option("--word", analysis_word, "Word spec")->required();
    sub->add_option("--output", analysis_output, "Report path (default: standard output)");
    if (name == "lyndon") {
      sub->add_option("--budget", aargs.budget);
      sub->add_option("--order", aargs.order, "identity | reversed");
    } else if (name == "rich") {
      sub->add_option("--piece", aargs.piece)->required();
      sub->add_option("--a", aargs.letter)->required();
      sub->add_option("--horizon", aargs.horizon);
    } else if (name == "ap") {
      sub->add_option("--a", aargs.letter)->required();
      sub->add_option("--budget", aargs.budget);
    } else if (name == "member" || name == "cyclic") {
      sub->add_option("--pieces", aargs.pieces, "Comma-separated words")->delimiter(',')->required();
      sub->add_option("--horizon", aargs.horizon);
    } else if (name == "subsets") {
      sub->add_option("--pieces", aargs.pieces, "Comma-separated words")->delimiter(',')->required();
      sub->add_option("--k", aargs.k);
      sub->add_option("--horizon", aargs.horizon);
    } else if (name == "ip") {
      sub->add_option("--m", aargs.chain, "Maximum chain length");
      sub->add_option("--lencap", aargs.piece_len_cap, "Maximum word length");
    } else if (name == "selfreturn") {
      sub->add_option("--budget", aargs.budget);
    } else if (name == "prefixal") {
      sub->add_option("--L", aargs.piece_len_cap);
      sub->add_option("--rich-in", aargs.rich_in, "Require pieces rich in this letter");
      sub->add_option("--horizon", aargs.horizon);
      sub->add_option("--node-budget", aargs.node_budget);
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kVerified : kUsageError;
  }

  try {
    if (gen->parsed()) {
      out << to_digits(InfiniteWord::parse(cfg.word).prefix(gen_length)) << '\n';
      return kVerified;
    }
    if (colour->parsed()) {
      require_positive(cfg.compare_budget, "--budget");
      const InfiniteWord x = InfiniteWord::parse(cfg.word);
      const ColouringScheme scheme = make_scheme(cfg.scheme, x, cfg.compare_budget);
      const FiniteWord u = parse_digits(piece);
      if (u.empty()) throw UsageError("--piece must be nonempty");
      try {
        out << scheme.colour(u) << '\n';
      } catch (const PeriodicitySuspected& e) {
        nlohmann::ordered_json record;
        record["outcome"] = "Inconclusive";
        record["reason"] = "periodicity-suspected";
        record["word"] = x.describe();
        record["piece"] = piece;
        record["shift"] = e.shift();
        record["examined"] = e.examined();
        out << record.dump(2) << '\n';
        return kInconclusive;
      }
      return kVerified;
    }
    if (verify->parsed()) {
      require_positive(cfg.piece_len_cap, "--L");
      require_positive(cfg.compare_budget, "--budget");
      require_positive(cfg.horizon, "--horizon");
      const InfiniteWord x = InfiniteWord::parse(cfg.word);
      const ColouringScheme scheme = make_scheme(cfg.scheme, x, cfg.compare_budget);
      const SearchCaps caps{cfg.piece_len_cap, cfg.node_budget, cfg.compare_budget, cfg.horizon};
      const SearchReport report = verify_separating(x, scheme, caps);
      emit(to_json(report), cfg.output, out);
      return search_exit_code(report.outcome);
    }
    for (const auto* sub : analyze->get_subcommands()) {
      if (sub->parsed()) {
        return run_analysis(sub->get_name(), InfiniteWord::parse(analysis_word), aargs, analysis_output, out);
      }
    }
    err << "no command given\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SpecError& e) {
    err << "error: bad word spec: " << e.what() << '\n';
  } catch (const TableFormatError& e) {
    err << "error: bad table colouring: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace sepcol::cli
