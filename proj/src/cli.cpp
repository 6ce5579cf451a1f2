#include "gtb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "gtb/axioms.hpp"
#include "gtb/bialgebra.hpp"
#include "gtb/corpus.hpp"
#include "gtb/format.hpp"
#include "gtb/linked_pairs.hpp"

namespace gtb::cli {
namespace {

struct Settings {
  std::string surface;
  bool nonzero_only = false;
  std::string output;
  std::string format = "text";
  std::string reading = "cyclic";
  std::vector<std::string> words;
  std::size_t max_len = 4;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::string laws = "all";
};

std::vector<LinkedPair> filtered(std::vector<LinkedPair> pairs, bool nonzero_only) {
  if (nonzero_only) std::erase_if(pairs, [](const LinkedPair& p) { return p.sign == 0; });
  return pairs;
}

std::string run_check(const Settings& s, const SurfaceSymbol& O, SignReading reading,
                      bool& failed) {
  const auto laws = parse_law_group(s.laws);
  if (!laws) throw Error(ErrorKind::kParseError, "unknown law group '" + s.laws + "'");
  const auto words = corpus(O.alphabet(), s.max_len, s.samples, s.seed);
  SuiteOptions opts;
  opts.laws = *laws;
  opts.seed = s.seed;
  const auto result = run_law_suite(words, standard_operations(O, reading), opts);

  std::ostringstream os;
  os << "surface=" << O.word().text() << " words=" << words.size() << '\n';
  for (const auto& t : result.tallies) {
    os << "law=" << law_name(t.law) << " checked=" << t.checked << " failed=" << t.failed
       << '\n';
    if (t.first_failure) {
      os << "witness=" << t.first_failure->witness << '\n'
         << "residual:\n" << t.first_failure->residual;
      if (t.first_failure->residual.back() != '\n') os << '\n';
    }
  }
  failed = !result.all_hold();
  return os.str();
}

std::string run_surface_info(const SurfaceSymbol& O) {
  std::ostringstream os;
  os << "surface=" << O.word().text() << '\n'
     << "generators=" << O.generators() << '\n'
     << "euler_characteristic=" << euler_characteristic(O) << '\n';
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bracket, cobracket and law checks on reduced cyclic words", "gtb"};
  app.require_subcommand(1);
  Settings s;

  auto common = [&s](CLI::App* sub) {
    sub->add_option("--surface", s.surface, "Surface symbol, e.g. a1a2A1A2")->required();
    sub->add_option("--output", s.output, "Write the result to this file");
    sub->add_option("--format", s.format, "text or records")
        ->check(CLI::IsMember({"text", "records"}));
    sub->add_option("--reading", s.reading, "Sign reading: cyclic or literal")
        ->check(CLI::IsMember({"cyclic", "literal"}));
  };

  auto* bracket_cmd = app.add_subcommand("bracket", "Bracket of two words");
  bracket_cmd->add_option("words", s.words)->required()->expected(2);
  common(bracket_cmd);
  auto* cobracket_cmd = app.add_subcommand("cobracket", "Cobracket of one word");
  cobracket_cmd->add_option("word", s.words)->required()->expected(1);
  common(cobracket_cmd);
  auto* lp1_cmd = app.add_subcommand("lp1", "Linked pairs inside one word");
  lp1_cmd->add_option("word", s.words)->required()->expected(1);
  lp1_cmd->add_flag("--nonzero-only", s.nonzero_only, "Drop sign-0 pairs");
  common(lp1_cmd);
  auto* lp2_cmd = app.add_subcommand("lp2", "Linked pairs between two words");
  lp2_cmd->add_option("words", s.words)->required()->expected(2);
  lp2_cmd->add_flag("--nonzero-only", s.nonzero_only, "Drop sign-0 pairs");
  common(lp2_cmd);
  auto* check_cmd = app.add_subcommand("check", "Check the algebraic laws on a corpus");
  check_cmd->add_option("--max-len", s.max_len, "Longest word in the corpus")
      ->check(CLI::Range(1, 12));
  check_cmd->add_option("--samples", s.samples, "Sampled words longer than 4");
  check_cmd->add_option("--seed", s.seed, "Sampling seed");
  check_cmd->add_option("--laws", s.laws, "all, algebra, coalgebra, compat or involutive");
  common(check_cmd);
  auto* info_cmd = app.add_subcommand("surface-info", "Describe the surface symbol");
  common(info_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "UsageError: " << e.what() << '\n';
    return 2;
  }

  try {
    const auto O = SurfaceSymbol::parse(s.surface);
    const auto reading =
        s.reading == "literal" ? SignReading::kLiteral : SignReading::kCyclicOrder;
    const auto fmt = s.format == "records" ? OutputFormat::kRecords : OutputFormat::kText;
    auto word = [&](std::size_t i) { return CyclicWord::parse(s.words.at(i), O.alphabet()); };

    std::string text;
    int code = 0;
    if (bracket_cmd->parsed()) {
      text = format(bracket(word(0), word(1), O, reading), fmt);
    } else if (cobracket_cmd->parsed()) {
      text = format(cobracket(word(0), O, reading), fmt);
    } else if (lp1_cmd->parsed()) {
      const auto W = word(0);
      Lp1Options opts;
      opts.reading = reading;
      text = format_pairs(filtered(enumerate_lp1(W, O, opts), s.nonzero_only), W, W, fmt);
    } else if (lp2_cmd->parsed()) {
      const auto V = word(0);
      const auto W = word(1);
      Lp2Options opts;
      opts.reading = reading;
      text = format_pairs(filtered(enumerate_lp2(V, W, O, opts), s.nonzero_only), V, W, fmt);
    } else if (check_cmd->parsed()) {
      bool failed = false;
      text = run_check(s, O, reading, failed);
      code = failed ? 1 : 0;
    } else {
      text = run_surface_info(O);
    }

    if (s.output.empty()) {
      out << text;
    } else {
      std::ofstream file(s.output, std::ios::binary);
      if (!file) {
        err << "IoError: cannot open " << s.output << '\n';
        return 2;
      }
      file << text;
    }
    return code;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace gtb::cli
