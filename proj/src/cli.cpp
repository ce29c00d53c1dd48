#include "gaussdistill/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussdistill/entanglement.hpp"
#include "gaussdistill/errors.hpp"
#include "gaussdistill/lemmas.hpp"
#include "gaussdistill/optimizer.hpp"
#include "gaussdistill/report.hpp"
#include "gaussdistill/serialization.hpp"
#include "gaussdistill/sweep.hpp"

namespace gaussdistill::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateFlags {
  std::optional<double> a;
  std::optional<double> c;
  std::optional<double> r;

  void add_to(CLI::App& cmd) {
    auto* fa = cmd.add_option("--a", a, "Local variance a >= 1");
    auto* fc = cmd.add_option("--c", c, "Correlation 0 <= c <= sqrt(a^2 - 1)");
    auto* fr = cmd.add_option("--r", r, "Two-mode squeezing: a = cosh 2r, c = sinh 2r");
    fr->excludes(fa)->excludes(fc);
  }

  SymmetricStateParams resolve() const {
    SymmetricStateParams p;
    if (r) {
      p = SymmetricStateParams::from_squeezing(*r);
    } else {
      if (!a) throw UsageError("either --a (with optional --c) or --r is required");
      p.a = *a;
      p.c = c.value_or(0.0);
    }
    try {
      p.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return p;
  }
};

struct SqueezeFlags {
  double min = 0.2;
  double max = 5.0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--squeeze-min", min, "Smallest squeeze factor")->capture_default_str();
    cmd.add_option("--squeeze-max", max, "Largest squeeze factor")->capture_default_str();
  }

  SqueezeRange resolve() const {
    SqueezeRange range{min, max};
    try {
      range.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return range;
  }
};

std::size_t positive_count(long long value, const char* flag) {
  if (value < 1) throw UsageError(std::string(flag) + " must be >= 1");
  return static_cast<std::size_t>(value);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  file << content;
  file.close();
  if (!file) throw std::ios_base::failure("failed writing '" + path + "'");
}

std::string print_matrix(const Matrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ", ";
      out += format_number(m(i, j));
    }
    out += "]\n";
  }
  return out;
}

int cmd_eval(const StateFlags& state, const std::string& out_path, std::ostream& out) {
  const SymmetricStateParams p = state.resolve();
  const CovMatrix gamma = two_mode_symmetric(p);
  const double f = f_value(gamma);
  const double g = g_lower_bound(gamma);
  const double en = log_negativity_from_f(f);
  out << "a = " << format_number(p.a) << "\n"
      << "c = " << format_number(p.c) << "\n"
      << "covariance =\n"
      << print_matrix(gamma.entries()) << "f = " << format_number(f) << "\n"
      << "g = " << format_number(g) << "\n"
      << "E_N = " << format_number(en) << "\n";
  if (!out_path.empty()) {
    const nlohmann::json doc = {{"a", p.a},
                                {"c", p.c},
                                {"covariance", cov_matrix_to_json(gamma)},
                                {"f", f},
                                {"g", g},
                                {"log_negativity", en}};
    write_file(out_path, doc.dump(2) + "\n");
  }
  return kExitPass;
}

int cmd_verify(long long samples, std::uint64_t seed, const SqueezeFlags& squeeze,
               const std::string& out_path, const std::string& format, std::ostream& out) {
  SweepConfig config;
  config.samples = positive_count(samples, "--samples");
  config.seed = seed;
  config.squeeze = squeeze.resolve();
  const SweepResult result = sweep(config);
  const auto& s = result.summary;
  out << (s.pass ? "PASS" : "FAIL") << " theorem sweep: trials=" << s.trials
      << " max_margin=" << format_number(s.max_margin)
      << " tolerance=" << format_number(s.tolerance)
      << " min_chain_slack=" << format_number(s.min_chain_slack)
      << " separable=" << s.separable_count << "\n";
  out << summary_json(s).dump() << "\n";
  if (!out_path.empty()) {
    if (format == "json") {
      write_file(out_path, summary_json(s).dump(2) + "\n");
    } else {
      std::ostringstream csv;
      write_csv(csv, result.records);
      write_file(out_path, csv.str());
    }
  }
  return s.pass ? kExitPass : kExitViolation;
}

int cmd_check_lemmas(long long trials, std::uint64_t seed, const SqueezeFlags& squeeze,
                     const std::string& out_path, std::ostream& out) {
  const std::size_t n = positive_count(trials, "--trials");
  const SqueezeRange range = squeeze.resolve();
  const LemmaReport reports[] = {check_lemma3(n, seed, range), check_lemma4(n, seed, range),
                                 check_lemma5(n, seed)};
  bool all_pass = true;
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : reports) {
    out << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << ": trials=" << r.trials
        << " max_deviation=" << format_number(r.max_deviation)
        << " tolerance=" << format_number(r.tolerance) << "\n";
    all_pass = all_pass && r.pass;
    doc.push_back(lemma_json(r));
  }
  if (!out_path.empty()) write_file(out_path, doc.dump(2) + "\n");
  return all_pass ? kExitPass : kExitViolation;
}

int cmd_optimize(const StateFlags& state, long long restarts, std::uint64_t seed,
                 const SqueezeFlags& squeeze, const std::string& out_path, std::ostream& out) {
  OptimizeConfig config;
  config.params = state.resolve();
  config.restarts = positive_count(restarts, "--restarts");
  config.seed = seed;
  config.start_range = squeeze.resolve();
  const OptimizeResult result = optimize(config);
  const bool pass = result.best.margin <= kOptimizerTol;
  out << (pass ? "PASS" : "FAIL") << " optimize: restarts=" << result.restarts
      << " best_restart=" << result.best_restart
      << " en_initial=" << format_number(result.best.en_initial)
      << " best_en_final=" << format_number(result.best.en_final)
      << " best_margin=" << format_number(result.best.margin)
      << " converged=" << (result.converged ? "true" : "false") << "\n";
  out << "params =";
  for (double v : result.flat_params()) out << ' ' << format_number(v);
  out << "\n";
  if (!out_path.empty()) write_file(out_path, optimize_json(result).dump(2) + "\n");
  return pass ? kExitPass : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian two-copy distillation no-go verification toolkit", "gaussdistill"};
  app.require_subcommand(1);

  StateFlags eval_state;
  std::string eval_out;
  auto* eval = app.add_subcommand("eval", "Evaluate f, g and E_N of the symmetric two-mode state");
  eval_state.add_to(*eval);
  eval->add_option("--out", eval_out, "Optional JSON report path");

  long long samples = 10000;
  std::uint64_t verify_seed = 42;
  SqueezeFlags verify_squeeze;
  std::string verify_out;
  std::string format = "csv";
  auto* verify = app.add_subcommand("verify", "Random protocol sweep against the no-go bound");
  verify->add_option("--samples", samples, "Number of random protocol instances")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "Master seed")->capture_default_str();
  verify_squeeze.add_to(*verify);
  verify->add_option("--out", verify_out, "Output path (CSV records or JSON summary)");
  verify->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  long long trials = 1000;
  std::uint64_t lemma_seed = 7;
  SqueezeFlags lemma_squeeze;
  std::string lemma_out;
  auto* lemmas = app.add_subcommand("check-lemmas", "Randomized checks of the supporting bounds");
  lemmas->add_option("--trials", trials, "Trials per check")->capture_default_str();
  lemmas->add_option("--seed", lemma_seed, "Master seed")->capture_default_str();
  lemma_squeeze.add_to(*lemmas);
  lemmas->add_option("--out", lemma_out, "Optional JSON report path");

  StateFlags opt_state;
  long long restarts = 50;
  std::uint64_t opt_seed = 1;
  SqueezeFlags opt_squeeze;
  std::string opt_out;
  auto* opt = app.add_subcommand("optimize", "Search for the best local symplectics");
  opt_state.add_to(*opt);
  opt->add_option("--restarts", restarts, "Simplex restarts (restart 0 is the identity)")
      ->capture_default_str();
  opt->add_option("--seed", opt_seed, "Master seed")->capture_default_str();
  opt_squeeze.add_to(*opt);
  opt->add_option("--out", opt_out, "Optional JSON report path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_state, eval_out, out);
    if (*verify) return cmd_verify(samples, verify_seed, verify_squeeze, verify_out, format, out);
    if (*lemmas) return cmd_check_lemmas(trials, lemma_seed, lemma_squeeze, lemma_out, out);
    if (*opt) return cmd_optimize(opt_state, restarts, opt_seed, opt_squeeze, opt_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace gaussdistill::cli
