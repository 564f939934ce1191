#include "framepot/cli.hpp"

#include "framepot/bounds.hpp"
#include "framepot/certify.hpp"
#include "framepot/constructions.hpp"
#include "framepot/designs.hpp"
#include "framepot/io.hpp"
#include "framepot/optimizer.hpp"
#include "framepot/potentials.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace framepot::cli {

namespace {

/// Bad user input caught after CLI11 parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_p(const std::string &text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return kInfinity;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception &) {
    throw UsageError("cannot parse p value '" + text + "'");
  }
  if (used != text.size() || std::isnan(v)) throw UsageError("cannot parse p value '" + text + "'");
  return v;
}

std::vector<double> parse_list(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stod(item, &used));
    } catch (const std::exception &) {
      throw UsageError("cannot parse list entry '" + item + "'");
    }
    if (used != item.size()) throw UsageError("cannot parse list entry '" + item + "'");
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::uint64_t parse_seed(const std::string &text, const std::string &what) {
  std::uint64_t v = 0;
  std::istringstream in(text);
  in >> v;
  if (!in || !in.eof() || text.empty() || text[0] == '-') throw UsageError("cannot parse " + what + " '" + text + "'");
  return v;
}

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::optional<int> even_integer(double p) {
  if (std::isfinite(p) && p >= 2.0 && p <= 1e6 && std::floor(p) == p && static_cast<long>(p) % 2 == 0) {
    return static_cast<int>(p);
  }
  return std::nullopt;
}

struct Options {
  std::string kind, config, p = "2", kernel = "gp", certify_kernel = "power", nodes, pmin_s, pmax_s;
  int n = 0, d = 0, k = 0, t = 0, restarts = 50, max_iters = 5000, threads = 0, steps = 0, grid = 10000;
  double tol = 1e-10;
  bool sharp = false, warm_start = false;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct Outcome {
  std::string text;
  std::optional<std::uint64_t> master_seed;
};

class Runner {
 public:
  Runner(const Options &o, std::ostream &err) : o_(o), err_(err) {}

  std::uint64_t master_seed() {
    std::uint64_t seed = kDefaultSeed;
    if (o_.seed) {
      seed = *o_.seed;
    } else if (const char *env = std::getenv("FRAMEPOT_SEED")) {
      seed = parse_seed(env, "FRAMEPOT_SEED");
    }
    err_ << "master seed: " << seed << '\n';
    return seed;
  }

  OptimizerSettings settings(std::uint64_t seed) const {
    OptimizerSettings s;
    s.restarts = o_.restarts;
    s.max_iters = o_.max_iters;
    s.threads = o_.threads;
    s.seed = seed;
    s.validate();
    return s;
  }

  Outcome construct() {
    Outcome res;
    if (o_.kind == "symmetrize") {
      if (o_.config.empty()) throw UsageError("--kind symmetrize needs --config");
      res.text = to_json(framepot::symmetrize(read_configuration(o_.config))).dump(2) + "\n";
      return res;
    }
    NamedConfig spec{parse_named_kind(o_.kind), o_.n, o_.d, o_.k, 0};
    if (spec.kind == NamedKind::RandomUniform) {
      spec.seed = master_seed();
      res.master_seed = spec.seed;
    }
    res.text = to_json(framepot::construct(spec)).dump(2) + "\n";
    return res;
  }

  Outcome eval() {
    const Configuration config = read_configuration(o_.config);
    double value = 0.0;
    if (o_.kernel == "coherence") {
      value = coherence(config);
    } else if (o_.kernel == "gp") {
      value = fp_eval(config, parse_p(o_.p));
    } else {
      throw UsageError("unknown kernel '" + o_.kernel + "' (expected gp or coherence)");
    }
    return {format17(value) + "\n", std::nullopt};
  }

  Outcome bounds() {
    const double p = parse_p(o_.p);
    Json list = Json::array();
    if (std::isinf(p)) {
      list.push_back(to_json(welch_bound(o_.n, o_.d)));
    } else {
      if (const auto even = even_integer(p)) list.push_back(to_json(design_bound(o_.n, o_.d, *even)));
      if (o_.n == o_.d + 1 && p > 0.0) {
        for (int k = 1; k <= o_.d; ++k) {
          const auto [lo, hi] = conjecture_interval(o_.d, k);
          if (p >= lo && p <= hi) {
            Json j{{"kind", to_string(BoundKind::LiftedEtfValue)},
                   {"value", lifted_etf_value(k, p)},
                   {"k", k},
                   {"applicability", "value of L_k^d; conjectured minimum for p in [p_{k-1}, p_k]"}};
            list.push_back(j);
          }
        }
      }
    }
    Json j{{"n", o_.n}, {"d", o_.d}, {"p", std::isinf(p) ? Json("inf") : Json(p)}, {"bounds", list}};
    if (const auto tau = tau_reference(o_.d, p)) j["tau"] = *tau;
    return {j.dump(2) + "\n", std::nullopt};
  }

  Outcome design_check() {
    const Configuration config = read_configuration(o_.config);
    DesignCheckOptions opts;
    opts.tol = o_.tol;
    Json j{{"t", o_.t}, {"design", to_json(framepot::design_check(config, o_.t, opts))}};
    if (o_.sharp) j["sharp"] = to_json(sharp_check(config, 1e-7, opts));
    return {j.dump(2) + "\n", std::nullopt};
  }

  Outcome minimize() {
    const double p = parse_p(o_.p);
    const std::uint64_t seed = master_seed();
    const OptimizerSettings s = settings(seed);
    const OptimizationResult r =
        std::isinf(p) ? minimize_coherence(o_.n, o_.d, s) : framepot::minimize(o_.n, o_.d, p, s);
    Json j = to_json(r);
    j["n"] = o_.n;
    j["d"] = o_.d;
    j["p"] = std::isinf(p) ? Json("inf") : Json(p);
    j["objective"] = std::isinf(p) ? "coherence" : "frame_potential";
    j["master_seed"] = seed;
    return {j.dump(2) + "\n", seed};
  }

  Outcome sweep() {
    const double lo = parse_p(o_.pmin_s);
    const double hi = parse_p(o_.pmax_s);
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo > 0.0) || hi < lo) {
      throw UsageError("sweep needs 0 < pmin <= pmax < inf");
    }
    if (o_.steps < 1 || (o_.steps == 1 && lo != hi)) throw UsageError("--steps must be at least 2 for a range");
    std::vector<double> grid;
    for (int i = 0; i < o_.steps; ++i) {
      grid.push_back(o_.steps == 1 ? lo : lo + (hi - lo) * i / (o_.steps - 1));
    }
    const std::uint64_t seed = master_seed();
    const SweepResult r = framepot::sweep(o_.n, o_.d, grid, settings(seed), o_.warm_start);
    return {sweep_csv(r), seed};
  }

  Outcome conjecture() {
    const std::uint64_t seed = master_seed();
    OptimizerSettings s = settings(seed);
    if (o_.k != 0) {
      Json j = to_json(conjecture_test(o_.d, o_.k, s));
      j["master_seed"] = seed;
      return {j.dump(2) + "\n", seed};
    }
    Json reports = Json::array();
    int total = 0;
    for (int k = 1; k <= o_.d; ++k) {
      const ConjectureReport r = conjecture_test(o_.d, k, s);
      total += r.significant_beat_count;
      reports.push_back(to_json(r));
    }
    Json j{{"d", o_.d}, {"reports", reports}, {"significant_beat_count", total}, {"master_seed", seed}};
    return {j.dump(2) + "\n", seed};
  }

  Outcome certify() {
    const double p = parse_p(o_.p);
    if (!std::isfinite(p) || !(p > 0.0)) throw UsageError("certify needs a finite p > 0");
    CertifyOptions opts;
    opts.grid_points = o_.grid;
    Json j;
    if (o_.nodes.empty()) {
      if (o_.d != 2) throw UsageError("certify without --nodes is the d = 2 half-circle certificate");
      j = to_json(certify_half_circle(o_.n, p, opts));
    } else {
      SmoothFunction a;
      if (o_.certify_kernel == "power") {
        a = inner_power_kernel(p);
      } else if (o_.certify_kernel == "transported") {
        a = transported_power_kernel(p);
      } else {
        throw UsageError("unknown kernel '" + o_.certify_kernel + "' (expected power or transported)");
      }
      j = Json{{"certificate", to_json(lp_certify(a, o_.n, o_.d, NodeSet::doubled(parse_list(o_.nodes)), opts))}};
    }
    j["n"] = o_.n;
    j["d"] = o_.d;
    j["p"] = p;
    if (const auto even = even_integer(p); even && o_.n >= 2) {
      const double bound = design_bound(o_.n, o_.d, *even).value;
      j["design_bound"] = bound;
      j["design_bound_gap"] = j["certificate"]["lower_bound"].get<double>() - bound;
    }
    return {j.dump(2) + "\n", std::nullopt};
  }

 private:
  const Options &o_;
  std::ostream &err_;
};

Json record_args(const CLI::App &sub) {
  Json args = Json::object();
  for (const CLI::Option *opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string name = opt->get_name();
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    const auto results = opt->results();
    args[name] = results.empty() ? "true" : results.back();
  }
  return args;
}

}  // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Frame potentials: construct, evaluate, minimise and certify unit-vector configurations",
               "framepot"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Options o;

  auto add_seed = [&](CLI::App *sub) {
    sub->add_option_function<std::uint64_t>("--seed", [&](std::uint64_t s) { o.seed = s; },
                                            "Master seed (default: FRAMEPOT_SEED or 12345)");
  };
  auto add_optimizer = [&](CLI::App *sub) {
    add_seed(sub);
    sub->add_option("--restarts", o.restarts, "Random restarts")->capture_default_str();
    sub->add_option("--max-iters", o.max_iters, "Iterations per descent")->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();
  };

  auto *construct = app.add_subcommand("construct", "Emit a named configuration as JSON");
  construct->add_option("--kind", o.kind,
                        "half-circle | onb-copies | onb-plus | simplex | lifted-etf | random | symmetrize")
      ->required();
  construct->add_option("--n", o.n, "Number of vectors (half-circle, random)");
  construct->add_option("--d", o.d, "Dimension");
  construct->add_option("--k", o.k, "Copies (onb-copies) or simplex block size (lifted-etf)");
  construct->add_option("--config", o.config, "Input configuration for symmetrize");
  add_seed(construct);

  auto *eval = app.add_subcommand("eval", "Evaluate the frame potential of a configuration");
  eval->add_option("--config", o.config, "Configuration JSON")->required();
  eval->add_option("--p", o.p, "Exponent p > 0 or inf")->capture_default_str();
  eval->add_option("--kernel", o.kernel, "gp | coherence")->capture_default_str();

  auto *bounds = app.add_subcommand("bounds", "Print the applicable lower bounds");
  bounds->add_option("--n", o.n, "Number of vectors")->required();
  bounds->add_option("--d", o.d, "Dimension")->required();
  bounds->add_option("--p", o.p, "Exponent p > 0 or inf")->required();

  auto *design = app.add_subcommand("design-check", "Check spherical design strength");
  design->add_option("--config", o.config, "Configuration JSON")->required();
  design->add_option("--t", o.t, "Design strength to check")->required();
  design->add_option("--tol", o.tol, "Moment residual tolerance")->capture_default_str();
  design->add_flag("--sharp", o.sharp, "Also report the m-sharp check");

  auto *minimize = app.add_subcommand("minimize", "Minimise the frame potential");
  minimize->add_option("--n", o.n, "Number of vectors")->required();
  minimize->add_option("--d", o.d, "Dimension")->required();
  minimize->add_option("--p", o.p, "Exponent p > 0 or inf")->required();
  add_optimizer(minimize);

  auto *sweep = app.add_subcommand("sweep", "Minimise over a grid of p values, CSV output");
  sweep->add_option("--n", o.n, "Number of vectors")->required();
  sweep->add_option("--d", o.d, "Dimension")->required();
  sweep->add_option("--pmin", o.pmin_s, "Smallest p")->required();
  sweep->add_option("--pmax", o.pmax_s, "Largest p")->required();
  sweep->add_option("--steps", o.steps, "Number of grid points")->required();
  sweep->add_flag("--warm-start", o.warm_start, "Start each p from the previous optimum");
  add_optimizer(sweep);

  auto *conjecture = app.add_subcommand("conjecture", "Compare random descents against lifted ETFs");
  conjecture->add_option("--d", o.d, "Dimension (N = d + 1)")->required();
  conjecture->add_option("--k", o.k, "Lifted ETF index; all k when omitted");
  add_optimizer(conjecture);

  auto *certify = app.add_subcommand("certify", "Linear-programming lower-bound certificate");
  certify->add_option("--n", o.n, "Number of vectors")->required();
  certify->add_option("--p", o.p, "Exponent p > 0")->required();
  certify->add_option("--d", o.d, "Dimension (2 for the half-circle certificate)");
  certify->add_option("--nodes", o.nodes, "Comma-separated inner products, each doubled");
  certify->add_option("--kernel", o.certify_kernel, "power | transported (with --nodes)")->capture_default_str();
  certify->add_option("--grid", o.grid, "Pointwise grid size")->capture_default_str();

  for (CLI::App *sub : app.get_subcommands({})) {
    sub->add_option("--out", o.out, "Write output to FILE and a run record to FILE.run.json");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion &) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  CLI::App *sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (command == "certify" && o.d == 0) o.d = 2;

  Runner runner(o, err);
  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    if (command == "construct") result = runner.construct();
    else if (command == "eval") result = runner.eval();
    else if (command == "bounds") result = runner.bounds();
    else if (command == "design-check") result = runner.design_check();
    else if (command == "minimize") result = runner.minimize();
    else if (command == "sweep") result = runner.sweep();
    else if (command == "conjecture") result = runner.conjecture();
    else if (command == "certify") result = runner.certify();
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (o.out.empty()) {
    out << result.text;
    return 0;
  }
  try {
    {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write " + o.out);
      file << result.text;
    }
    Json record{{"command", command},
                {"args", record_args(*sub)},
                {"master_seed", result.master_seed ? Json(*result.master_seed) : Json(nullptr)},
                {"outputs", Json::array({o.out})},
                {"wall_time", wall},
                {"tool_version", kToolVersion}};
    std::ofstream rec(o.out + ".run.json");
    if (!rec) throw std::runtime_error("cannot write " + o.out + ".run.json");
    rec << record.dump(2) << '\n';
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int dispatch(int argc, const char *const *argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace framepot::cli
