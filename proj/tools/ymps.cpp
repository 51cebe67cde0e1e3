#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ymps/euler.hpp"
#include "ymps/hn.hpp"
#include "ymps/morse.hpp"
#include "ymps/spectral.hpp"
#include "ymps/text.hpp"

namespace {

using namespace ymps;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::size_t truncation_order() {
  if (const char* env = std::getenv("YMPS_TRUNCATION")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring invalid YMPS_TRUNCATION value '" << env << "'\n";
  }
  return 60;
}

std::string series_text(const RatFun& r, Format format) {
  return render(r, format == Format::latex ? Format::latex : Format::plain);
}

int run_series(const BundleSpec& bundle, int gbar, bool degree_class_given, Format format) {
  const RatFun series = flat_moduli_series(bundle, gbar);
  const bool note = bundle.rank == 3 && degree_class_given;
  if (format == Format::json) {
    nlohmann::json j{{"rank", bundle.rank},
                     {"degree_class", bundle.degree_class},
                     {"gbar", gbar},
                     {"series", render(series, Format::plain)}};
    if (note) j["degree_class_note"] = "no effect on series";
    std::cout << j.dump() << "\n";
  } else {
    std::cout << series_text(series, format) << "\n";
    if (note) std::cout << "note: degree-class has no effect on the rank-3 series\n";
  }
  return kExitPass;
}

int run_betti(const BundleSpec& bundle, int gbar, std::size_t max_degree, Format format) {
  const BettiTable table = betti_table(bundle, gbar, max_degree);
  if (format == Format::json) {
    std::cout << to_json(table).dump() << "\n";
    return kExitPass;
  }
  std::ostringstream row;
  for (std::size_t k = 0; k < table.entries.size(); ++k) {
    if (k > 0) row << ' ';
    row << table.entries[k].get_str();
  }
  std::cout << "betti: " << row.str() << "\n";
  std::cout << "series: " << series_text(table.series, format) << "\n";
  return kExitPass;
}

int run_strata(const BundleSpec& bundle, int gbar, int cutoff, Format format) {
  std::vector<StratumRecord> records;
  for (const auto& mu : index_set(bundle, gbar, cutoff)) {
    if (mu.is_semistable())
      records.push_back({mu, 0, flat_moduli_series(bundle, gbar), {}});
    else
      records.push_back(make_stratum_record(mu, gbar));
  }
  if (format == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : records) arr.push_back(to_json(rec));
    std::cout << arr.dump() << "\n";
    return kExitPass;
  }
  for (const auto& rec : records) {
    std::ostringstream mu;
    mu << '(';
    const auto slopes = rec.mu.slopes();
    for (std::size_t i = 0; i < slopes.size(); ++i) {
      if (i > 0) mu << ',';
      mu << to_string(slopes[i]);
    }
    mu << ')';
    std::cout << "mu=" << mu.str() << " index=" << rec.index
              << " series=" << series_text(rec.series, format) << " summands=[";
    for (std::size_t i = 0; i < rec.summands.size(); ++i) {
      if (i > 0) std::cout << ' ';
      std::cout << '(' << rec.summands[i].i << ',' << rec.summands[i].j
                << "):" << to_string(rec.summands[i].cls);
    }
    std::cout << "]\n";
  }
  return kExitPass;
}

int run_verify_theorem1(int gbar_max, Format format) {
  bool all_pass = true;
  nlohmann::json arr = nlohmann::json::array();
  for (int g = 0; g <= gbar_max; ++g) {
    const ClosedFormCheck check = verify_rank3_closed_form(g);
    all_pass = all_pass && check.pass;
    if (format == Format::json) {
      arr.push_back({{"gbar", g},
                     {"pass", check.pass},
                     {"assembled", render(check.assembled, Format::plain)},
                     {"closed_form", render(check.closed_form, Format::plain)}});
    } else {
      std::cout << "theorem1 g=" << g << ": " << (check.pass ? "pass" : "fail") << "\n";
      if (!check.pass) {
        std::cout << "  assembled:   " << render(check.assembled) << "\n";
        std::cout << "  closed form: " << render(check.closed_form) << "\n";
      }
    }
  }
  if (format == Format::json) std::cout << arr.dump() << "\n";
  return all_pass ? kExitPass : kExitFail;
}

void print_euler(const EulerReport& rep) {
  std::cout << "euler n=" << rep.rank << " g=" << rep.gbar
            << ": computed=" << to_string(rep.computed_limit)
            << " expected=" << rep.expected.get_str() << " oracle=" << rep.oracle.get_str()
            << " " << (rep.pass ? "pass" : "fail") << "\n";
}

int run_verify_euler(int rank, int gbar, Format format) {
  const EulerReport rep = euler_report(rank, gbar);
  if (format == Format::json)
    std::cout << to_json(rep).dump() << "\n";
  else
    print_euler(rep);
  return rep.pass ? kExitPass : kExitFail;
}

void print_failure(const FailureReport& rep) {
  std::cout << "prop-failure n=" << rep.rank << " g=" << rep.gbar
            << ": j_limit=" << to_string(rep.j_limit) << " budget=" << to_string(rep.budget)
            << " " << to_string(rep.verdict) << "\n";
}

int run_verify_failure(int rank, int gbar, Format format) {
  const FailureReport rep = antiperfection_failure_report(rank, gbar);
  if (format == Format::json)
    std::cout << to_json(rep).dump() << "\n";
  else
    print_failure(rep);
  return rep.verdict == FailureVerdict::contradiction ? kExitFail : kExitPass;
}

// Runs every suite against its expected outcome: the closed-form identity and
// the Euler limits must pass, rank 3 must meet the antiperfection budget
// exactly, and rank >= 4 must contradict it.
int run_verify_all(Format format) {
  bool ok = true;
  nlohmann::json out;
  nlohmann::json theorem = nlohmann::json::array();
  for (int g = 0; g <= 10; ++g) {
    const ClosedFormCheck check = verify_rank3_closed_form(g);
    ok = ok && check.pass;
    if (format == Format::json)
      theorem.push_back({{"gbar", g}, {"pass", check.pass}});
    else
      std::cout << "theorem1 g=" << g << ": " << (check.pass ? "pass" : "fail") << "\n";
  }
  nlohmann::json euler = nlohmann::json::array();
  for (int n : {2, 3})
    for (int g = 0; g <= 10; ++g) {
      const EulerReport rep = euler_report(n, g);
      ok = ok && rep.pass;
      if (format == Format::json)
        euler.push_back(to_json(rep));
      else
        print_euler(rep);
    }
  nlohmann::json failure = nlohmann::json::array();
  for (int n = 3; n <= 8; ++n)
    for (int g = 0; g <= 6; ++g) {
      const FailureReport rep = antiperfection_failure_report(n, g);
      const bool expected = n == 3 ? rep.verdict == FailureVerdict::consistent
                                   : rep.verdict == FailureVerdict::contradiction;
      ok = ok && expected;
      if (format == Format::json) {
        nlohmann::json j = to_json(rep);
        j["as_expected"] = expected;
        failure.push_back(j);
      } else {
        print_failure(rep);
      }
    }
  if (format == Format::json) {
    out["theorem1"] = theorem;
    out["euler"] = euler;
    out["prop_failure"] = failure;
    out["pass"] = ok;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "verify all: " << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

int run_ss_check(const std::string& path, long pmax, Format format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitUsage;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kExitUsage;
  }
  StratificationData data;
  try {
    data = stratification_from_json(j);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kExitUsage;
  }
  const Verdict valid = validate_stratification(data, truncation_order());
  const Verdict perfect = check_perfect(data);
  const Verdict antiperfect = check_antiperfect(data);
  const std::size_t columns =
      std::min<std::size_t>(static_cast<std::size_t>(pmax < 0 ? 0 : pmax) + 1, data.strata.size());
  if (format == Format::json) {
    nlohmann::json out{{"validate", {{"pass", valid.pass}, {"detail", valid.detail}}},
                       {"perfect", {{"pass", perfect.pass}, {"detail", perfect.detail}}},
                       {"antiperfect", {{"pass", antiperfect.pass}, {"detail", antiperfect.detail}}}};
    nlohmann::json cols = nlohmann::json::array();
    for (std::size_t p = 0; p < columns; ++p)
      cols.push_back(render(e1_column(data, p), Format::plain));
    out["e1_columns"] = cols;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "validate: " << (valid.pass ? "pass" : "fail (" + valid.detail + ")") << "\n";
    std::cout << "perfect: " << (perfect.pass ? "pass" : "fail") << "\n";
    std::cout << "antiperfect: " << (antiperfect.pass ? "pass" : "fail") << "\n";
    for (std::size_t p = 0; p < columns; ++p)
      std::cout << "E1 column p=" << p << ": " << series_text(e1_column(data, p), format) << "\n";
  }
  return valid.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ymps: exact equivariant Poincare series of Yang-Mills moduli stacks "
               "over nonorientable surfaces"};
  app.require_subcommand(1);

  bool as_json = false;
  bool as_latex = false;
  app.add_flag("--json", as_json, "emit JSON");
  app.add_flag("--latex", as_latex, "emit LaTeX series")->excludes("--json");

  int rank = 3;
  int gbar = 0;
  int degree_class = 0;
  int cutoff = 5;
  int gbar_max = 10;
  long max_degree = -1;
  long pmax = 3;
  std::string input_path;

  auto* series = app.add_subcommand("series", "flat-moduli Poincare series");
  series->add_option("--rank", rank, "bundle rank")->required()->check(CLI::IsMember({2, 3}));
  series->add_option("--gbar", gbar, "surface parameter (g+1 projective planes)")->required();
  auto* series_dc =
      series->add_option("--degree-class", degree_class, "c1 mod 2")->check(CLI::IsMember({0, 1}));

  auto* betti = app.add_subcommand("betti", "Betti table of the flat moduli stack");
  betti->add_option("--rank", rank, "bundle rank")->required()->check(CLI::IsMember({2, 3}));
  betti->add_option("--gbar", gbar, "surface parameter")->required();
  betti->add_option("--max-degree", max_degree, "highest Betti degree")->required();
  betti->add_option("--degree-class", degree_class, "c1 mod 2")->check(CLI::IsMember({0, 1}));

  auto* strata = app.add_subcommand("strata", "Harder-Narasimhan stratum records");
  strata->add_option("--rank", rank, "bundle rank")->required()->check(CLI::IsMember({2, 3}));
  strata->add_option("--gbar", gbar, "surface parameter")->required();
  strata->add_option("--cutoff", cutoff, "largest slope parameter r")->required();
  strata->add_option("--degree-class", degree_class, "c1 mod 2")->check(CLI::IsMember({0, 1}));

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* v_theorem =
      verify->add_subcommand("theorem1", "closed form of the rank-3 flat-moduli series");
  v_theorem->add_option("--gbar-max", gbar_max, "check g = 0..G");
  auto* v_euler = verify->add_subcommand("euler", "t -> 1 Euler limit vs fixed-point count");
  v_euler->add_option("--rank", rank, "bundle rank")->required()->check(CLI::IsMember({2, 3}));
  v_euler->add_option("--gbar", gbar, "surface parameter")->required();
  auto* v_failure =
      verify->add_subcommand("prop-failure", "antiperfection budget vs line-pair family limit");
  v_failure->add_option("--rank", rank, "bundle rank >= 3")->required();
  v_failure->add_option("--gbar", gbar, "surface parameter")->required();
  auto* v_all = verify->add_subcommand("all", "every suite over its standard range");

  auto* ss_check = app.add_subcommand("ss-check", "check a stratification JSON file");
  ss_check->add_option("--input", input_path, "strata.json path")->required();
  ss_check->add_option("--pmax", pmax, "highest E1 column to print");

  for (auto* sub : {series, betti, strata, verify, ss_check}) sub->fallthrough();
  for (auto* sub : {v_theorem, v_euler, v_failure, v_all}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const Format format = as_json ? Format::json : (as_latex ? Format::latex : Format::plain);

  try {
    if (gbar < 0) throw std::invalid_argument("gbar must be nonnegative");
    if (app.got_subcommand(series))
      return run_series(BundleSpec{rank, degree_class}, gbar, series_dc->count() > 0, format);
    if (app.got_subcommand(betti)) {
      if (max_degree < 0) throw std::invalid_argument("max-degree must be nonnegative");
      return run_betti(BundleSpec{rank, degree_class}, gbar, static_cast<std::size_t>(max_degree),
                       format);
    }
    if (app.got_subcommand(strata))
      return run_strata(BundleSpec{rank, degree_class}, gbar, cutoff, format);
    if (app.got_subcommand(verify)) {
      if (verify->got_subcommand(v_theorem)) {
        if (gbar_max < 0) throw std::invalid_argument("gbar-max must be nonnegative");
        return run_verify_theorem1(gbar_max, format);
      }
      if (verify->got_subcommand(v_euler)) return run_verify_euler(rank, gbar, format);
      if (verify->got_subcommand(v_failure)) return run_verify_failure(rank, gbar, format);
      return run_verify_all(format);
    }
    return run_ss_check(input_path, pmax, format);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
