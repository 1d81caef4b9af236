// Command-line front end: flag parsing only. Parsed flags are harvested into
// a typed RunConfig and handed to the dispatcher in ncineq/cli.hpp.

#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncineq/cli.hpp"

namespace {

using ncineq::cli::RunConfig;

// Binds one flag to heap storage and records a harvest step that copies the
// value into the typed parameter map only when the flag was actually passed.
class Binder {
 public:
  Binder(CLI::App* cmd, RunConfig& cfg, std::vector<std::function<void()>>& harvest)
      : cmd_(cmd), cfg_(&cfg), harvest_(&harvest) {}

  void real(const std::string& name, const std::string& help) {
    auto val = std::make_shared<double>(0.0);
    auto* opt = cmd_->add_option("--" + name, *val, help);
    RunConfig* cfg = cfg_;
    harvest_->push_back([cfg, name, val, opt] {
      if (opt->count()) cfg->params[name] = *val;
    });
  }

  void integer(const std::string& name, const std::string& help) {
    auto val = std::make_shared<std::int64_t>(0);
    auto* opt = cmd_->add_option("--" + name, *val, help);
    RunConfig* cfg = cfg_;
    harvest_->push_back([cfg, name, val, opt] {
      if (opt->count()) cfg->params[name] = *val;
    });
  }

  void text(const std::string& name, const std::string& help) {
    auto val = std::make_shared<std::string>();
    auto* opt = cmd_->add_option("--" + name, *val, help);
    RunConfig* cfg = cfg_;
    harvest_->push_back([cfg, name, val, opt] {
      if (opt->count()) cfg->params[name] = *val;
    });
  }

  void flag(const std::string& name, const std::string& help) {
    auto val = std::make_shared<bool>(false);
    auto* opt = cmd_->add_flag("--" + name, *val, help);
    RunConfig* cfg = cfg_;
    harvest_->push_back([cfg, name, val, opt] {
      if (opt->count()) cfg->params[name] = *val;
    });
  }

  void seed() {
    auto val = std::make_shared<std::uint64_t>(0);
    auto* opt = cmd_->add_option("--seed", *val, "RNG seed (required; no entropy default)");
    RunConfig* cfg = cfg_;
    harvest_->push_back([cfg, val, opt] {
      if (opt->count()) {
        cfg->seed = *val;
        cfg->has_seed = true;
      }
    });
  }

  void common() {
    cmd_->add_option("--out", cfg_->out_path, "write the report to this path instead of stdout");
    cmd_->add_option("--format", cfg_->format, "output format: json or csv");
  }

  void names(const std::string& subcommand) {
    RunConfig* cfg = cfg_;
    cmd_->callback([cfg, subcommand] { cfg->subcommand = subcommand; });
  }

 private:
  CLI::App* cmd_;
  RunConfig* cfg_;
  std::vector<std::function<void()>>* harvest_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix concentration bounds, Monte Carlo tail checks, large-deviation "
               "rate functions, and partial-Fourier compressed sensing"};
  app.set_version_flag("--version", std::string("ncineq ") + ncineq::report::kVersion);
  app.require_subcommand(1);
  app.footer("Reports are JSON (schema ncineq-report/1) or flat CSV tables. NC_THREADS caps "
             "worker threads (0 = auto). Exit codes: 0 pass/complete, 1 failed assertion or "
             "module error, 2 usage.");

  RunConfig cfg;
  std::vector<std::function<void()>> harvest;

  auto* bounds = app.add_subcommand("bounds", "closed-form tail and moment bounds");
  bounds->require_subcommand(1);
  {
    Binder b(bounds->add_subcommand("eval", "evaluate one bound at a point"), cfg, harvest);
    b.names("bounds eval");
    b.text("kind", "bennett|bernstein|prohorov|rosenthal|cs-moment|cs-tail");
    b.real("S", "variance proxy of the summand profile");
    b.real("R", "uniform operator-norm bound of the profile");
    b.integer("n", "number of summands in the profile (default 1)");
    b.real("t", "tail threshold");
    b.real("p", "moment index");
    b.real("C", "absolute constant in the sampling bounds");
    b.real("r", "sparsity ratio s/k for cs-moment");
    b.real("k", "expected sample count for cs-moment");
    b.real("eps", "scale sqrt(s/k) for cs-tail");
    b.real("trace", "trace of the identity on the support for cs-tail");
    b.common();
  }

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimates against closed-form bounds");
  mc->require_subcommand(1);
  {
    Binder b(mc->add_subcommand("tail", "estimate the spectral tail on a threshold grid"), cfg,
             harvest);
    b.names("mc tail");
    b.text("spec", "built-in ensemble name, e.g. rademacher-d4-n8");
    b.real("lambda", "selector rate override for selector families");
    b.text("config", "experiment config JSON file");
    b.text("t-grid", "comma-separated thresholds (default: profile-derived 8-point grid)");
    b.integer("trials", "Monte Carlo trials");
    b.real("confidence", "two-sided confidence level (default 0.999)");
    b.seed();
    b.common();
  }
  {
    Binder b(mc->add_subcommand("rosenthal", "compare p-norm estimates to the moment bound"),
             cfg, harvest);
    b.names("mc rosenthal");
    b.text("spec", "built-in ensemble name");
    b.real("lambda", "selector rate override for selector families");
    b.text("config", "experiment config JSON file");
    b.text("p-list", "comma-separated moment indices (default 2,4,8,16)");
    b.integer("trials", "Monte Carlo trials");
    b.real("confidence", "unused for moments; accepted for config compatibility");
    b.seed();
    b.common();
  }
  {
    Binder b(mc->add_subcommand("dominance", "verify the empirical tail sits below each bound"),
             cfg, harvest);
    b.names("mc dominance");
    b.text("spec", "built-in ensemble name");
    b.real("lambda", "selector rate override for selector families");
    b.text("config", "experiment config JSON file");
    b.text("t-grid", "comma-separated thresholds (default: profile-derived 8-point grid)");
    b.integer("trials", "Monte Carlo trials");
    b.real("confidence", "two-sided confidence level (default 0.999)");
    b.seed();
    b.common();
  }

  auto* opt = app.add_subcommand("opt", "optimality oracles for the moment bounds");
  opt->require_subcommand(1);
  {
    Binder b(opt->add_subcommand("selector", "lower-bound witness chain for the correction term"),
             cfg, harvest);
    b.names("opt selector");
    b.real("p", "moment index (>= 4)");
    b.real("C", "assumed constant in the square-root term");
    b.text("variant", "fixed-gamma|optimized-gamma (default fixed-gamma)");
    b.common();
  }
  {
    Binder b(opt->add_subcommand("gaussian", "exact Gaussian p-norms"), cfg, harvest);
    b.names("opt gaussian");
    b.real("p", "moment index");
    b.text("p-list", "comma-separated moment indices");
    b.common();
  }

  auto* csc = app.add_subcommand("cs", "partial-Fourier compressed sensing");
  csc->require_subcommand(1);
  {
    Binder b(csc->add_subcommand("rip", "restricted-isometry constants of selector draws"), cfg,
             harvest);
    b.names("cs rip");
    b.integer("n", "signal dimension");
    b.integer("s", "support size");
    b.real("k", "expected number of selected rows");
    b.integer("trials", "independent selector draws");
    b.flag("exact", "enumerate all supports (default)");
    b.integer("supports", "sample this many supports instead of enumerating");
    b.seed();
    b.common();
  }
  {
    Binder b(csc->add_subcommand("recover", "sparse recovery success fractions"), cfg, harvest);
    b.names("cs recover");
    b.integer("n", "signal dimension");
    b.integer("s", "sparsity of the planted signal");
    b.text("k", "expected sample count (comma-separated list gives a phase sweep)");
    b.integer("trials", "trials per sample count");
    b.text("amp", "amplitude law: unit|gaussian (default unit)");
    b.real("confidence", "two-sided confidence level (default 0.999)");
    b.seed();
    b.common();
  }
  {
    Binder b(csc->add_subcommand("tail", "deviation-norm tail of the rescaled sampled Gram"),
             cfg, harvest);
    b.names("cs tail");
    b.integer("n", "signal dimension");
    b.real("k", "expected number of selected rows");
    b.integer("s", "support size (support is {0..s-1})");
    b.text("teps", "comma-separated thresholds on the deviation norm");
    b.integer("trials", "Monte Carlo trials");
    b.real("C", "constant in the reference tail bound (default 2)");
    b.real("confidence", "two-sided confidence level (default 0.999)");
    b.seed();
    b.common();
  }

  auto* ldp = app.add_subcommand("ldp", "scalar large-deviation calculators");
  ldp->require_subcommand(1);
  {
    Binder b(ldp->add_subcommand("eval", "evaluate MGF / log-MGF / rate / tail exponent"), cfg,
             harvest);
    b.names("ldp eval");
    b.text("law", "gauss|semicircle|mixture:theta");
    b.text("what", "mgf|logmgf|rate|upper");
    b.text("lam", "comma-separated transform arguments (mgf, logmgf)");
    b.text("x", "comma-separated evaluation points (rate, upper)");
    b.real("a", "semicircle center (default 0)");
    b.real("r", "semicircle radius (default 2)");
    b.common();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (auto& h : harvest) h();
  return ncineq::cli::execute(cfg, std::cout, std::cerr);
}
