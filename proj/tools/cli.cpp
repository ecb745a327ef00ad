#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "noisebound/annealer.hpp"
#include "noisebound/baselines.hpp"
#include "noisebound/bounds.hpp"
#include "noisebound/errors.hpp"
#include "noisebound/instances.hpp"
#include "noisebound/oracle/suites.hpp"
#include "noisebound/partition.hpp"
#include "noisebound/sampler.hpp"
#include "noisebound/workflows.hpp"
#include "report.hpp"

namespace noisebound::cli {

namespace {

struct Common {
  std::string out_path;
  std::string csv_path;
  int threads = 1;
};

struct NoiseFlags {
  double p1 = 0.0;
  double p2 = 0.0;
  double pm = 0.0;
  double f1 = 0.5;
  double f2 = 0.5;
  bool include_measurement = false;

  DiscreteNoise noise() const { return {p1, p2, pm, f1, f2}; }
};

void add_noise_flags(CLI::App* app, NoiseFlags& flags) {
  app->add_option("--p1", flags.p1, "one-qubit layer depolarizing probability");
  app->add_option("--p2", flags.p2, "two-qubit layer depolarizing probability");
  app->add_option("--pm", flags.pm, "measurement depolarizing probability");
  app->add_option("--f1", flags.f1, "fraction of one-qubit layers");
  app->add_option("--f2", flags.f2, "fraction of two-qubit layers");
  app->add_flag("--include-measurement", flags.include_measurement, "apply measurement noise to budgets");
}

void add_common(CLI::App* app, Common& common, bool csv) {
  app->add_option("--out", common.out_path, "write the JSON report here instead of stdout");
  if (csv) app->add_option("--csv", common.csv_path, "write curve data as CSV");
  app->add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  return file;
}

std::string bitstring(const SpinConfig& s) {
  std::string out;
  for (auto v : s) out += v < 0 ? '1' : '0';
  return out;
}

IsingInstance load_tagged(const std::string& path, bool sk) {
  IsingInstance inst = load_instance(path);
  if (!sk) return inst;
  std::vector<Edge> edges(inst.edges().begin(), inst.edges().end());
  std::vector<double> fields(inst.fields().begin(), inst.fields().end());
  return IsingInstance(inst.size(), std::move(edges), std::move(fields), InstanceFamily::sherrington_kirkpatrick);
}

void report_depth(BoundReport& report, const std::string& name, const std::optional<double>& depth,
                  const std::string& provenance) {
  if (depth) {
    report.add(name, *depth, "layers", provenance);
  } else {
    report.add_text(name, "unbounded", provenance);
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Limits of noisy quantum optimizers: depth ceilings, Gibbs equivalents and lower bounds"};
  app.require_subcommand(1);
  Common common;

  // gen
  auto* gen = app.add_subcommand("gen", "generate an Ising instance");
  std::string gen_type;
  int gen_n = 0;
  int gen_degree = 3;
  int gen_sign = -1;
  std::uint64_t seed = 0;
  gen->add_option("--type", gen_type, "regular or sk")->required()->check(CLI::IsMember({"regular", "sk"}));
  gen->add_option("--n", gen_n, "number of spins")->required();
  gen->add_option("--degree", gen_degree, "degree of the regular graph");
  gen->add_option("--sign", gen_sign, "coupling sign for regular graphs (+1 or -1)");
  gen->add_option("--seed", seed, "generator seed")->required();
  gen->add_option("--out", common.out_path, "write the instance here instead of stdout");

  // depth-bound
  auto* depth = app.add_subcommand("depth-bound", "depth ceilings and thresholds");
  NoiseFlags depth_noise;
  double eps = 0.1;
  std::optional<double> log_term;
  std::string instance_path;
  std::optional<double> hnorm;
  std::optional<double> depth_value;
  std::optional<int> lattice_d;
  int kappa = 1;
  double coupling_strength = 1.0;
  double lattice_p = 0.0;
  std::optional<int> qaoa_n;
  int degree = 3;
  std::optional<double> xi;
  std::optional<double> alpha;
  double initial_bits = 0.0;
  add_noise_flags(depth, depth_noise);
  add_common(depth, common, false);
  depth->add_option("--eps", eps, "relative energy error")->required();
  depth->add_option("--log-term", log_term, "ln(||A|| n / ||H_I||)");
  depth->add_option("--instance", instance_path, "instance JSON used to compute the log term");
  depth->add_option("--hnorm", hnorm, "||H_I|| (or an upper bound); enumerated when omitted");
  depth->add_option("--depth", depth_value, "report the entropy budget at this depth");
  depth->add_option("--lattice-d", lattice_d, "lattice dimension for the lattice ceiling");
  depth->add_option("--kappa", kappa, "interaction locality");
  depth->add_option("--J", coupling_strength, "largest interaction strength");
  depth->add_option("--lattice-p", lattice_p, "depolarizing rate for the lattice ceiling");
  depth->add_option("--qaoa-n", qaoa_n, "system size for QAOA thresholds");
  depth->add_option("--degree", degree, "graph degree for QAOA thresholds");
  depth->add_option("--xi", xi, "correlation length for correlation thresholds");
  depth->add_option("--alpha", alpha, "per-layer contraction for the trace mixing depth");
  depth->add_option("--initial-bits", initial_bits, "initial relative entropy for the mixing depth");

  // lower-bound
  auto* lower = app.add_subcommand("lower-bound", "variational lower bound and crossing depth");
  NoiseFlags lower_noise;
  std::optional<double> budget_bits;
  double gamma = 0.0;
  BetaSearch search;
  std::optional<double> classical_energy;
  add_noise_flags(lower, lower_noise);
  add_common(lower, common, true);
  lower->add_option("--instance", instance_path, "instance JSON")->required();
  lower->add_option("--budget", budget_bits, "entropy budget in bits");
  lower->add_option("--depth", depth_value, "derive the budget from the noise flags at this depth");
  lower->add_option("--gamma", gamma, "bias of the product fixed point");
  lower->add_option("--beta-min", search.beta_min, "smallest grid inverse temperature");
  lower->add_option("--beta-max", search.beta_max, "largest grid inverse temperature");
  lower->add_option("--beta-points", search.points, "grid size");
  lower->add_option("--classical-energy", classical_energy, "energy to beat; reports the crossing depth");

  // gibbs-sample
  auto* gibbs = app.add_subcommand("gibbs-sample", "heat-bath Glauber sampling");
  double beta = 0.0;
  SamplingSchedule sampling;
  std::optional<int> burn_in;
  bool sk_tag = false;
  add_common(gibbs, common, true);
  gibbs->add_option("--instance", instance_path, "instance JSON")->required();
  gibbs->add_option("--beta", beta, "inverse temperature")->required();
  gibbs->add_option("--gamma", gamma, "per-site bias");
  gibbs->add_option("--sweeps", sampling.sweeps, "recorded sweeps per chain");
  gibbs->add_option("--burn-in", burn_in, "burn-in sweeps (default from the mixing certificate)");
  gibbs->add_option("--thin", sampling.thin, "keep every k-th sweep");
  gibbs->add_option("--chains", sampling.chains, "independent chains");
  gibbs->add_option("--seed", seed, "sampler seed")->required();
  gibbs->add_flag("--sk", sk_tag, "treat the instance as an SK draw for certification");

  // baseline
  auto* baseline = app.add_subcommand("baseline", "classical baselines");
  std::string method;
  AnnealingSchedule annealing;
  int restarts = 10;
  bool require_certified = false;
  RelaxationOptions relaxation;
  add_common(baseline, common, false);
  baseline->add_option("--instance", instance_path, "instance JSON")->required();
  baseline->add_option("--method", method, "sa or sdp")->required()->check(CLI::IsMember({"sa", "sdp"}));
  baseline->add_option("--seed", seed, "seed")->required();
  baseline->add_option("--beta-start", annealing.beta_start, "first inverse temperature");
  baseline->add_option("--beta-end", annealing.beta_end, "last inverse temperature");
  baseline->add_option("--sweeps", annealing.sweeps, "sweeps per restart");
  baseline->add_option("--restarts", restarts, "independent restarts");
  baseline->add_flag("--certified", require_certified, "reject beta_end outside the rapid-mixing range");
  baseline->add_option("--rank", relaxation.rank, "relaxation rank (0: ceil(sqrt(2n)))");
  baseline->add_option("--iterations", relaxation.iterations, "gradient iterations");
  baseline->add_option("--draws", relaxation.rounding_draws, "hyperplane roundings");
  baseline->add_flag("--sk", sk_tag, "treat the instance as an SK draw for certification");

  // anneal-bound
  auto* anneal = app.add_subcommand("anneal-bound", "continuous-time annealer bounds");
  ContinuousNoise cnoise;
  RealmInputs realm;
  std::optional<double> total_time;
  std::optional<int> realm_degree;
  double t_max = 1000.0;
  int t_points = 201;
  add_common(anneal, common, true);
  anneal->add_option("--r1", cnoise.r1, "amplitude-damping rate");
  anneal->add_option("--r2", cnoise.r2, "dephasing rate");
  anneal->add_option("--r3", cnoise.r3, "control-error rate");
  anneal->add_option("--n", realm.n, "number of qubits");
  anneal->add_option("--mean-field", realm.mean_field, "mean transverse field strength");
  anneal->add_option("--eps", realm.eps, "relative energy error");
  anneal->add_option("--coupling-norm", realm.coupling_norm, "||A||");
  anneal->add_option("--hamiltonian-norm", realm.hamiltonian_norm, "||H_I||");
  anneal->add_option("--degree", realm_degree, "unit-coupling regular device: sets ||A|| and ||H_I||");
  anneal->add_option("--time", total_time, "report the linear-path budget at this time");
  anneal->add_option("--t-max", t_max, "largest time in the CSV curve");
  anneal->add_option("--t-points", t_points, "points in the CSV curve");

  // verify
  auto* verify = app.add_subcommand("verify", "exact oracle verification suites");
  std::string suite;
  oracle::SuiteOptions suite_options;
  std::optional<int> n_min;
  add_common(verify, common, false);
  verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(oracle::suite_names()));
  verify->add_option("--n", suite_options.n_max, "largest system size");
  verify->add_option("--n-min", n_min, "smallest system size (default min(2, n))");
  verify->add_option("--seeds", suite_options.cases, "number of seeded cases; case k uses stream k");
  verify->add_option("--seed", suite_options.seed, "base seed");
  verify->add_option("--eps", suite_options.eps, "mirror-descent precision");
  verify->add_option("--gamma", suite_options.gamma, "fixed-point bias for the contraction suite");

  // figure
  auto* figure = app.add_subcommand("figure", "data behind the annealer and MAXCUT figures");
  std::string kind;
  double ratio = 1e-2;
  double control_rate = 2e-2;
  std::optional<int> fig_degree;
  int fig_n = 20;
  MaxcutFigureOptions maxcut;
  std::optional<std::uint64_t> fig_seed;
  add_common(figure, common, true);
  figure->add_option("--kind", kind, "annealer or maxcut")->required()->check(CLI::IsMember({"annealer", "maxcut"}));
  figure->add_option("--ratio", ratio, "r1 / r3 for the annealer figure");
  figure->add_option("--control-rate", control_rate, "r3 in units of J");
  figure->add_option("--eps", eps, "relative energy error");
  figure->add_option("--degree", fig_degree, "device degree (annealer, default 6) or graph degree (maxcut, default 3)");
  figure->add_option("--t-max", t_max, "largest time");
  figure->add_option("--t-points", t_points, "number of times");
  figure->add_option("--instance", instance_path, "MAXCUT instance JSON (otherwise generated)");
  figure->add_option("--n", fig_n, "generated MAXCUT size");
  figure->add_option("--seed", fig_seed, "seed for generation, annealing and rounding");
  figure->add_option("--restarts", maxcut.restarts, "annealing restarts");
  figure->add_option("--sweeps", maxcut.annealing.sweeps, "sweeps per annealing restart");
  figure->add_option("--draws", maxcut.relaxation.rounding_draws, "hyperplane roundings");
  figure->add_option("--points", maxcut.points, "entropy densities on the curve");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto* sub = app.get_subcommands().front();
  BoundReport report(sub->get_name(), args);

  try {
    if (sub == gen) {
      const IsingInstance inst = gen_type == "sk" ? generate_sk(gen_n, seed)
                                                  : generate_regular(gen_n, gen_degree, gen_sign, seed);
      write_text(common.out_path, to_json(inst), out);
      return kExitOk;
    }

    if (sub == depth) {
      const DiscreteNoise noise = depth_noise.noise();
      std::optional<double> term = log_term;
      std::optional<double> h = hnorm;
      int n = 0;
      if (!instance_path.empty()) {
        const IsingInstance inst = load_instance(instance_path);
        report.set_input(to_json(inst));
        n = inst.size();
        const double a_norm = spectral_norm(inst);
        if (!h) h = enumerate({inst, 0.0, 0.0}, {.max_qubits = 30, .threads = common.threads}).hamiltonian_norm;
        report.add("coupling_norm", a_norm, "energy", "power-iteration");
        report.add("hamiltonian_norm", *h, "energy", hnorm ? "user-supplied" : "exhaustive-enumeration");
        if (!term) term = ising_log_term(a_norm, *h, n);
      }
      require(term.has_value(), "depth-bound needs --log-term or --instance");
      report.add("log_term", *term, "nats", log_term ? "user-supplied" : "ln(||A|| n / ||H_I||)");
      const DepthCeiling ceiling = dmax_ising(noise, eps, *term);
      report_depth(report, "depth_ceiling", ceiling.approximate, "ising-depth-ceiling:small-noise-form");
      report_depth(report, "depth_ceiling_exact", ceiling.exact, "ising-depth-ceiling:exact-product-form");
      report.add("effective_noise_rate", noise.effective_rate(), "probability", "f1*p1+f2*p2");
      if (depth_value) {
        require(n > 0, "--depth needs --instance to fix the qubit count");
        const EntropyBudget b = entropy_budget(noise, *depth_value, n, depth_noise.include_measurement);
        report.add("entropy_budget", b.bits, "bits", b.provenance);
        report.add("beta_equivalent", beta_equivalent(b, *h, eps, false), "1/energy", "gibbs-equivalent:maximally-mixed");
        report.add("beta_equivalent_general", beta_equivalent(b, *h, eps, true), "1/energy",
                   "gibbs-equivalent:general-fixed-point");
      }
      if (lattice_d) {
        const LatticeSpec spec{*lattice_d, kappa, coupling_strength};
        const LatticeDepth ld = dmax_lattice(spec, eps, lattice_p);
        report_depth(report, "lattice_depth_ceiling", ld.depth, "lattice-depth-ceiling");
        report.add("lattice_beta_critical", ld.beta_critical, "1/energy", "lattice-critical-beta");
        if (xi) {
          const auto ct = correlation_thresholds(*xi, spec, eps);
          report.add("correlation_min_depth", ct.min_depth, "layers", "light-cone:xi/2");
          report.add("correlation_noise_threshold", ct.noise_threshold, "probability", "noisy-correlation-threshold");
        }
      }
      if (qaoa_n) {
        const auto qt = qaoa_thresholds(*qaoa_n, degree, eps);
        report.add("qaoa_min_rounds", qt.min_rounds, "rounds", "qaoa-light-cone");
        report.add("qaoa_noise_threshold", qt.noise_threshold, "probability", "qaoa-inverse-log-noise");
      }
      if (alpha) {
        report.add("trace_mixing_depth", trace_mixing_depth(*alpha, eps, initial_bits), "layers",
                   "pinsker-mixing-depth");
      }
    } else if (sub == lower) {
      const IsingInstance inst = load_instance(instance_path);
      report.set_input(to_json(inst));
      const EnergySpectrum spectrum(inst, {.max_qubits = EnergySpectrum::kMaxQubits, .threads = common.threads});
      const FreeEnergyBound bound(spectrum, gamma, search);
      const DiscreteNoise noise = lower_noise.noise();
      report.add("ground_energy", spectrum.ground_energy(), "energy", "exhaustive-enumeration");
      report.add("hamiltonian_norm", spectrum.hamiltonian_norm(), "energy", "exhaustive-enumeration");
      report.add("fixed_point_energy", bound.fixed_point_energy(), "energy", "tr(sigma H)");
      std::optional<double> bits = budget_bits;
      if (!bits && depth_value) {
        bits = entropy_budget(noise, *depth_value, inst.size(), lower_noise.include_measurement).bits;
      }
      if (bits) {
        const VariationalBound vb = bound.evaluate(*bits);
        report.add("budget", *bits, "bits", budget_bits ? "user-supplied" : "depolarizing-contraction");
        report.add("lower_bound", vb.bound, "energy", "variational-free-energy-bound");
        report.add("beta_star", vb.beta_star, "1/energy", "variational-free-energy-bound:argmax");
      }
      if (classical_energy) {
        const CrossingDepth cd = crossing_depth(bound, noise, *classical_energy, lower_noise.include_measurement);
        report.add("classical_energy", *classical_energy, "energy", "user-supplied");
        if (cd.depth) {
          report.add("crossing_depth", *cd.depth, "layers", "variational-crossing-depth");
          report.add("crossing_bound", cd.bound, "energy", "variational-free-energy-bound");
          report.add("crossing_budget", cd.budget_bits, "bits", "depolarizing-contraction");
        } else {
          report.add_text("crossing_depth", "never", "variational-crossing-depth");
        }
      }
      if (!common.csv_path.empty()) {
        std::vector<double> betas;
        for (int k = 0; k < search.points; ++k) {
          betas.push_back(search.beta_min *
                          std::pow(search.beta_max / search.beta_min, static_cast<double>(k) / (search.points - 1)));
        }
        auto file = open_csv(common.csv_path);
        write_partition_csv(file, spectrum, gamma, betas);
      }
    } else if (sub == gibbs) {
      const IsingInstance inst = load_tagged(instance_path, sk_tag);
      report.set_input(to_json(inst));
      sampling.burn_in = burn_in;
      sampling.threads = common.threads;
      const RapidMixing cert = rapid_mixing_check(inst, beta);
      const SampleSet samples = glauber_run({inst, beta, gamma}, sampling, seed);
      const EnergyEstimate est = estimate_energy(samples.energies);
      report.add("mean_energy", est.mean, "energy", "glauber-sample-mean");
      report.add("standard_error", est.standard_error, "energy", "batch-means");
      report.add("samples", static_cast<double>(samples.energies.size()), "count", "glauber-sampler");
      report.add("burn_in", samples.burn_in, "sweeps", burn_in ? "user-supplied" : "100*ceil(1/margin)");
      report.add_flag("certified", cert.ok, cert.label);
      report.add("certificate_margin", cert.margin, "dimensionless", cert.label);
      if (!common.csv_path.empty()) {
        auto file = open_csv(common.csv_path);
        write_samples_csv(file, samples);
      }
    } else if (sub == baseline) {
      const IsingInstance inst = load_tagged(instance_path, sk_tag);
      report.set_input(to_json(inst));
      if (method == "sa") {
        const auto sa = simulated_annealing(inst, annealing, restarts, seed, require_certified, common.threads);
        report.add("best_energy", sa.result.best_energy, "energy", "simulated-annealing:best");
        report.add("mean_final_energy", sa.mean_final_energy, "energy", "simulated-annealing:mean-final");
        report.add("sweeps_total", static_cast<double>(sa.result.iterations), "sweeps", "simulated-annealing");
        report.add_flag("certified", sa.certified, "rapid-mixing-check(beta_end)");
        report.add_text("best_config", bitstring(sa.result.best_config), "simulated-annealing:best");
      } else {
        const auto rr = burer_monteiro_round(inst, relaxation, seed);
        report.add("relaxation_value", rr.relaxation_value, "cut", "low-rank-cut-relaxation");
        report.add("best_cut", rr.best_cut, "cut", "hyperplane-rounding:best");
        report.add("mean_cut", rr.mean_cut, "cut", "hyperplane-rounding:mean");
        report.add("best_energy", rr.rounded.best_energy, "energy", "hyperplane-rounding:best");
        report.add("mean_energy", rr.mean_energy, "energy", "hyperplane-rounding:mean");
        report.add("iterations", rr.iterations, "count", "low-rank-cut-relaxation");
        report.add_text("best_config", bitstring(rr.rounded.best_config), "hyperplane-rounding:best");
      }
    } else if (sub == anneal) {
      if (realm_degree) {
        const RealmInputs unit = annealer_figure_inputs(*realm_degree, realm.eps);
        realm.coupling_norm = unit.coupling_norm;
        realm.hamiltonian_norm = unit.hamiltonian_norm * realm.n;
      }
      const FixedPointParams fp = fixed_point(cnoise);
      if (std::isfinite(fp.gamma)) {
        report.add("gamma", fp.gamma, "dimensionless", "fixed-point-bias");
      } else {
        report.add_text("gamma", "infinite", "fixed-point-bias");
      }
      report.add("alpha", fp.alpha, "1/time", "entropy-decay-rate:r1+2r3");
      report.add("p0", fp.p0, "probability", "fixed-point");
      const RealmTime rt = classical_realm_time(cnoise, realm);
      report.add("realm_threshold", rt.threshold_bits, "bits", "polynomial-sampling-threshold");
      switch (rt.kind) {
        case RealmTime::Kind::immediate: report.add_text("classical_realm_time", "immediate", "classical-realm-time"); break;
        case RealmTime::Kind::never: report.add_text("classical_realm_time", "never", "classical-realm-time"); break;
        case RealmTime::Kind::finite: report.add("classical_realm_time", rt.time, "1/J", "classical-realm-time"); break;
      }
      if (total_time) {
        const EntropyBudget b = linear_path_bound(cnoise, realm.mean_field, *total_time, realm.n);
        report.add("linear_path_budget", b.bits, "bits", b.provenance);
      }
      if (!common.csv_path.empty()) {
        require(t_points >= 2 && t_max > 0.0, "curve needs --t-points >= 2 and --t-max > 0");
        std::vector<double> times;
        for (int k = 0; k < t_points; ++k) times.push_back(t_max * k / (t_points - 1));
        auto file = open_csv(common.csv_path);
        write_annealer_csv(file, cnoise, realm, times);
      }
    } else if (sub == verify) {
      suite_options.n_min = n_min.value_or(std::min(2, suite_options.n_max));
      suite_options.threads = common.threads;
      const auto result = oracle::run_suite(suite, suite_options);
      report.add("min_margin", result.min_margin, "suite-dependent", suite);
      report.add("tolerance", result.tolerance, "suite-dependent", suite);
      report.add("cases", result.cases.size(), "count", suite);
      report.add_flag("passed", result.passed, suite);
      report.attach("cases", nlohmann::json::parse(oracle::to_json(result))["cases"]);
      write_text(common.out_path, report.dump(), out);
      return result.passed ? kExitOk : kExitRejected;
    } else if (sub == figure) {
      if (kind == "annealer") {
        const ContinuousNoise fn = annealer_figure_noise(ratio, control_rate);
        const RealmInputs inputs = annealer_figure_inputs(fig_degree.value_or(6), eps);
        const RealmTime rt = classical_realm_time(fn, inputs);
        report.add("ratio", ratio, "dimensionless", "user-supplied");
        report.add("realm_threshold", rt.threshold_bits, "bits per qubit", "polynomial-sampling-threshold");
        if (rt.kind == RealmTime::Kind::finite) {
          report.add("classical_realm_time", rt.time, "1/J", "classical-realm-time");
        } else {
          report.add_text("classical_realm_time", rt.kind == RealmTime::Kind::immediate ? "immediate" : "never",
                          "classical-realm-time");
        }
        if (!common.csv_path.empty()) {
          require(t_points >= 2 && t_max > 0.0, "curve needs --t-points >= 2 and --t-max > 0");
          std::vector<double> times;
          for (int k = 0; k < t_points; ++k) times.push_back(t_max * k / (t_points - 1));
          auto file = open_csv(common.csv_path);
          write_annealer_csv(file, fn, inputs, times);
        }
      } else {
        require(fig_seed.has_value(), "--seed is required for the MAXCUT figure");
        const IsingInstance inst = instance_path.empty() ? generate_regular(fig_n, fig_degree.value_or(3), -1, *fig_seed)
                                                         : load_instance(instance_path);
        report.set_input(to_json(inst));
        maxcut.threads = common.threads;
        const MaxcutFigure fig = maxcut_figure(inst, maxcut, *fig_seed);
        report.add("ground_energy", fig.ground_energy, "energy", "exhaustive-enumeration");
        report.add("max_cut", fig.max_cut, "cut", "exhaustive-enumeration");
        report.add("beta_max", fig.beta_max, "1/energy", "1/||A||");
        report.add("sa_energy", fig.sa_energy, "energy", "simulated-annealing:mean-final");
        report.add("sdp_energy", fig.sdp_energy, "energy", "hyperplane-rounding:mean");
        report.add("heuristic_energy", fig.heuristic_energy, "energy", "approximation-ratio*max-cut");
        report.add("sa_crossing_density", fig.sa_crossing, "bits per qubit", "variational-free-energy-bound");
        report.add("sdp_crossing_density", fig.sdp_crossing, "bits per qubit", "variational-free-energy-bound");
        report.add("heuristic_crossing_density", fig.heuristic_crossing, "bits per qubit",
                   "variational-free-energy-bound");
        report.add_flag("bound_monotone", fig.monotone, "variational-free-energy-bound");
        if (!common.csv_path.empty()) {
          auto file = open_csv(common.csv_path);
          write_maxcut_csv(file, fig, inst.size());
        }
      }
    }
    write_text(common.out_path, report.dump(), out);
    return kExitOk;
  } catch (const InputError& e) {
    err << "rejected: " << e.what() << "\n";
    return kExitRejected;
  } catch (const ComputationError& e) {
    err << "computation failed: " << e.what() << "\n";
    return kExitRejected;
  }
}

}  // namespace noisebound::cli
