#include "potsum/cli/cli.hpp"

#include <fstream>
#include <map>

#include <omp.h>

#include <CLI11.hpp>

#include "potsum/cli/commands.hpp"
#include "potsum/error.hpp"

namespace potsum::cli {

namespace {

bool is_verification(const RunReport& r) { return r.command == "verify"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of potent elements in finite fields", "potsum"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  OutputFormat format = OutputFormat::Text;
  std::string out_path;
  int jobs = 0;
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", out_path, "Write the report to PATH instead of stdout");
    sub->add_option("--jobs", jobs, "Worker threads (0 = all available)")
        ->check(CLI::NonNegativeNumber);
  };

  std::uint64_t m = 4, limit = 1000;
  BoundaryRule rule = BoundaryRule::AppendixExact;
  auto* search = app.add_subcommand("search", "Find (q, m, n) with C_m + C_n = GF(q)");
  search->add_option("--m", m, "First potent exponent")->check(CLI::Range(2u, 1u << 30));
  search->add_option("--limit", limit, "Largest field order")->check(CLI::Range(2u, 1000000u));
  search->add_option("--boundary", rule, "Admitted exponents: appendix (n < q-1) or theorem (n < q)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, BoundaryRule>{{"appendix", BoundaryRule::AppendixExact},
                                              {"theorem", BoundaryRule::TheoremBound}},
          CLI::ignore_case));
  add_common(search);

  const std::map<std::string, Suite> suites{{"potents", Suite::Potents},
                                            {"charsums", Suite::Charsums},
                                            {"bounds", Suite::Bounds},
                                            {"all", Suite::All}};
  std::string suite_name = "all";
  std::uint64_t qmax = 200;
  auto* verify = app.add_subcommand("verify", "Check the character-sum identities and bounds");
  verify->add_option("--suite", suite_name, "potents, charsums, bounds or all")
      ->check(CLI::IsMember(suites, CLI::ignore_case));
  verify->add_option("--qmax", qmax, "Largest field order")->check(CLI::Range(4u, 100000u));
  add_common(verify);

  std::uint64_t q = 0;
  std::optional<std::uint64_t> show_potents;
  auto* field = app.add_subcommand("field", "Describe the field model of order q");
  field->add_option("--q", q, "Field order")->required();
  field->add_option("--show-potents", show_potents, "List C_n for this n")
      ->check(CLI::Range(2u, 1u << 30));
  add_common(field);

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (jobs > 0) omp_set_num_threads(jobs);

  RunReport report;
  try {
    if (*search) {
      report = cmd_search(m, limit, rule, jobs);
    } else if (*verify) {
      report = cmd_verify(suites.at(CLI::detail::to_lower(suite_name)), qmax);
    } else {
      report = cmd_field(q, show_potents);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string text = render(report, format);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write " << out_path << "\n";
      return kExitFailure;
    }
  }
  return is_verification(report) && !report.failures.empty() ? kExitFailure : kExitOk;
}

}  // namespace potsum::cli
