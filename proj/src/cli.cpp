#include "nsreal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>

#include "nsreal/dsl.hpp"
#include "nsreal/json_io.hpp"
#include "nsreal/wattenberg.hpp"

namespace nsreal::cli {

namespace {

using json_io::Json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUndetermined:
    case ErrorCode::kClassUndetermined:
    case ErrorCode::kSignUndetermined:
    case ErrorCode::kConvergenceUnknown:
    case ErrorCode::kNotConvergentAtDepth:
    case ErrorCode::kPrecisionExhausted:
      return 3;
    case ErrorCode::kSearchExhausted:
      return 4;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kParse:
    case ErrorCode::kDepthTooSmall:
    case ErrorCode::kZeroLeadingCoefficient:
    case ErrorCode::kZeroRoot:
    case ErrorCode::kRadiusViolation:
    case ErrorCode::kInvalidPermutation:
      return 2;
    default:
      return 1;
  }
}

std::vector<Rational> parse_coeffs(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

hermite::IntervalOracle alpha_oracle(const std::string& alpha) {
  if (alpha == "pi") return hermite::pi_interval;
  if (alpha == "e") return hermite::e_interval;
  Rational q = parse_rational(alpha);
  return [q](const Rational&) { return Interval::point(q); };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hyperreal, Dedekind-cut and Hermite-integer computations", "nsreal"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::uint64_t limit = 0;
  auto* gb = app.add_subcommand("goldbach", "Partial sum of 1/(k-1) over perfect powers k <= limit");
  gb->add_option("--limit", limit)->required()->check(CLI::Range(std::uint64_t{4}, std::uint64_t{1} << 40));

  std::uint64_t sieve_depth = 0, steps = 0;
  auto* sv = app.add_subcommand("sieve", "Stepwise removal of geometric series from the harmonic range");
  sv->add_option("--depth", sieve_depth)->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000000}));
  sv->add_option("--steps", steps)->required()->check(CLI::PositiveNumber);

  std::string series;
  std::size_t depth = kDefaultDepth;
  std::string tolerance = "1/1000000";
  auto* es = app.add_subcommand("extsum", "Flat sum of a series");
  es->add_option("--series", series)->required();
  es->add_option("--depth", depth)->check(CLI::Range(std::size_t{16}, std::size_t{1} << 20));
  es->add_option("--tolerance", tolerance);

  auto* hm = app.add_subcommand("hermite", "Hermite integers and certificates");
  hm->require_subcommand(1);
  unsigned hn = 1, hp = 2, hk = 0;
  auto* hmm = hm->add_subcommand("m", "The integer M_k(n, p)");
  hmm->add_option("--n", hn)->required()->check(CLI::Range(1u, 64u));
  hmm->add_option("--p", hp)->required()->check(CLI::Range(2u, 1000u));
  hmm->add_option("--k", hk)->required();
  std::string coeffs;
  auto* hc = hm->add_subcommand("cert", "Non-vanishing certificate for sum b_k e^k");
  hc->add_option("--coeffs", coeffs)->required();

  std::string alpha;
  std::size_t count = 4;
  auto* dr = app.add_subcommand("dirichlet", "Continued-fraction convergents");
  dr->add_option("--alpha", alpha)->required();
  dr->add_option("--count", count)->check(CLI::Range(std::size_t{1}, std::size_t{200}));

  unsigned lm = 1, ln = 1;
  auto* lv = app.add_subcommand("liouville", "Partial sums of the Liouville constant");
  lv->add_option("--m", lm)->required()->check(CLI::Range(1u, 1000u));
  lv->add_option("--n", ln)->required()->check(CLI::Range(1u, 8u));

  std::string expr;
  auto* wt = app.add_subcommand("wat", "Canonical form of a cut expression");
  wt->add_option("--expr", expr)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Json doc;
    std::string array_key;
    if (gb->parsed()) {
      doc = json_io::goldbach_summary(limit);
    } else if (sv->parsed()) {
      doc = json_io::sieve_report(goldbach::euler_sieve(sieve_depth, steps));
      array_key = "steps";
    } else if (es->parsed()) {
      extsum::FlatSumOptions opt;
      opt.depth = depth;
      opt.tolerance = parse_rational(tolerance);
      auto parsed = dsl::parse_series(series);
      doc = json_io::ext_sum(parsed.label, depth, extsum::flat_sum(parsed, opt));
    } else if (hmm->parsed()) {
      doc = json_io::hermite_m(hn, hp, hk, hermite::hermite_M(hn, hp, hk));
    } else if (hc->parsed()) {
      doc = json_io::certificate(hermite::nonvanish_certificate(parse_coeffs(coeffs)));
      array_key = "M";
    } else if (dr->parsed()) {
      doc = json_io::dirichlet(alpha, hermite::cf_convergents(alpha_oracle(alpha), count));
      array_key = "convergents";
    } else if (lv->parsed()) {
      auto [c, holds] = hermite::liouville_approx(lm, ln);
      doc = json_io::liouville(lm, ln, c, holds);
    } else if (wt->parsed()) {
      doc = json_io::canonical_form(expr, wattenberg::evaluate_expression(expr));
    }
    if (format == "csv") out << json_io::to_csv(doc, array_key);
    else out << doc.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace nsreal::cli
