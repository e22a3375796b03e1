// Command-line surface: parameter computation, verification batteries,
// profile sampling, figure reproduction, semi-trivial catalogs, propagation
// runs and randomized sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 domain/parameter error,
// 3 simulation instability.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "cnoidal/simulate.hpp"
#include "cnoidal/verify.hpp"

using namespace cnoidal;

namespace {

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::string system = "kdv-kdv";
  PhysicalParams phys{1.0, 0.25, 1.0, -1.0, 1.5};  // defaults: figure set
  double sigma = 2.0;
  double m = 0.5;
  int sign = +1;
  double tol = 0.0;  // 0 = library defaults (or CNOIDAL_TOL)
  std::string output;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_wave = true) {
  cmd->add_option("--system", o.system, "kdv-kdv | bbm-bbm | kdv-bbm | bbm-kdv")
      ->capture_default_str();
  cmd->add_option("--mu0", o.phys.mu0, "mu0 > 0")->capture_default_str();
  cmd->add_option("--mu1", o.phys.mu1, "mu1 > 0")->capture_default_str();
  cmd->add_option("--a", o.phys.a, "a0 / a1 > 0")->capture_default_str();
  cmd->add_option("--b", o.phys.b, "b")->capture_default_str();
  cmd->add_option("--c", o.phys.c, "c > 0")->capture_default_str();
  if (with_wave) {
    cmd->add_option("--sigma", o.sigma, "wave speed")->capture_default_str();
    cmd->add_option("--m", o.m, "elliptic modulus in [0, 1]")->capture_default_str();
    cmd->add_option("--sign", o.sign, "R branch: +1 or -1")->capture_default_str();
  }
  cmd->add_option("--tol", o.tol, "tolerance override for every check");
  cmd->add_option("--output", o.output, "write to file instead of stdout");
  cmd->add_option("--format", o.format, "json | csv")->capture_default_str();
}

RSign rsign_of(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("--sign must be +1 or -1");
  return sign == 1 ? RSign::plus : RSign::minus;
}

Tolerances tolerances(const CommonOpts& o) {
  Tolerances t = Tolerances::from_env();
  if (o.tol > 0) t = {o.tol, o.tol, o.tol, o.tol};
  return t;
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + o.output);
  out << text;
}

std::string solution_json(const CnoidalSolution& s, bool ratio_ok) {
  std::ostringstream os;
  os << "{\"system\": \"" << to_string(s.kind) << "\""
     << ", \"B\": " << num17(s.wave.B) << ", \"omega\": " << num17(s.wave.omega)
     << ", \"sigma\": " << num17(s.wave.sigma)
     << ", \"lambda\": " << num17(s.wave.lambda) << ", \"m\": " << num17(s.wave.m)
     << ", \"R\": " << num17(s.R) << ", \"d\": [" << num17(s.prof.d0) << ", "
     << num17(s.prof.d1) << ", " << num17(s.prof.d2) << "]"
     << ", \"h\": [" << num17(s.prof.h0) << ", " << num17(s.prof.h1) << ", "
     << num17(s.prof.h2) << "]"
     << ", \"ratio_check\": " << (ratio_ok ? "true" : "false") << "}\n";
  return os.str();
}

std::string solution_csv(const CnoidalSolution& s) {
  std::ostringstream os;
  os << "system,B,omega,sigma,lambda,m,R,d0,d1,d2,h0,h1,h2\n"
     << to_string(s.kind) << ',' << num17(s.wave.B) << ',' << num17(s.wave.omega)
     << ',' << num17(s.wave.sigma) << ',' << num17(s.wave.lambda) << ','
     << num17(s.wave.m) << ',' << num17(s.R) << ',' << num17(s.prof.d0) << ','
     << num17(s.prof.d1) << ',' << num17(s.prof.d2) << ',' << num17(s.prof.h0)
     << ',' << num17(s.prof.h1) << ',' << num17(s.prof.h2) << "\n";
  return os.str();
}

CnoidalSolution solution_from_json(const std::string& path, const PhysicalParams& phys) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open params file " + path);
  nlohmann::json j;
  in >> j;
  CnoidalSolution s;
  s.kind = system_from_string(j.at("system").get<std::string>());
  s.phys = phys;
  s.wave.B = j.at("B").get<double>();
  s.wave.omega = j.at("omega").get<double>();
  s.wave.sigma = j.at("sigma").get<double>();
  s.wave.lambda = j.at("lambda").get<double>();
  s.wave.m = j.at("m").get<double>();
  s.R = j.at("R").get<double>();
  const auto& d = j.at("d");
  const auto& h = j.at("h");
  s.prof = {d.at(0).get<double>(), d.at(1).get<double>(), d.at(2).get<double>(),
            h.at(0).get<double>(), h.at(1).get<double>(), h.at(2).get<double>()};
  return s;
}

void apply_perturbation(CnoidalSolution& s, const std::string& entry) {
  const auto eq = entry.find('=');
  if (eq == std::string::npos) {
    throw DomainError("--perturb expects name=delta, e.g. d2=1e-3");
  }
  const std::string name = entry.substr(0, eq);
  const double delta = std::stod(entry.substr(eq + 1));
  if (name == "d0") s.prof.d0 += delta;
  else if (name == "d1") s.prof.d1 += delta;
  else if (name == "d2") s.prof.d2 += delta;
  else if (name == "h0") s.prof.h0 += delta;
  else if (name == "h1") s.prof.h1 += delta;
  else if (name == "h2") s.prof.h2 += delta;
  else if (name == "B") s.wave.B += delta;
  else if (name == "omega") s.wave.omega += delta;
  else if (name == "lambda") s.wave.lambda += delta;
  else throw DomainError("--perturb: unknown coefficient " + name);
}

std::string trim(std::string s) {
  const auto a = s.find_first_not_of(" \t\r");
  const auto b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

// flat key=value file, '#' comments; keys mirror the long flags.  Keys also
// present on the command line are dropped: flags win over the file.
std::vector<std::string> load_config_args(const std::string& path,
                                          const std::vector<std::string>& given) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line is not key=value: " + line);
    }
    const std::string flag = "--" + trim(line.substr(0, eq));
    bool overridden = false;
    for (const auto& g : given) {
      if (g == flag || g.rfind(flag + "=", 0) == 0) {
        overridden = true;
        break;
      }
    }
    if (overridden) continue;
    out.push_back(flag);
    out.push_back(trim(line.substr(eq + 1)));
  }
  return out;
}

ParamMap parse_free(const std::vector<std::string>& entries) {
  ParamMap map;
  for (const auto& entry : entries) {
    std::stringstream ss(entry);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw DomainError("--free expects name=value[,name=value...]");
      }
      map[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
  }
  return map;
}

template <typename Solution>
std::string sample_csv(const Solution& sol, const WaveParams& wave, int n, double t) {
  double lo = 0, hi;
  if (wave.m >= 1.0) {
    hi = 10.0 / wave.lambda;
    lo = -hi;
  } else {
    hi = fundamental_period(sol);
  }
  std::ostringstream os;
  os << "xi,f,g,u_re,u_im,v\n";
  for (int i = 0; i < n; ++i) {
    const double xi = lo + (hi - lo) * i / (n - 1);
    const auto [f, g] = evaluate_profiles(sol, xi);
    const auto [u, v] = evaluate_fields(sol, xi + wave.sigma * t, t);
    os << num17(xi) << ',' << num17(f) << ',' << num17(g) << ',' << num17(u.real())
       << ',' << num17(u.imag()) << ',' << num17(v) << "\n";
  }
  return os.str();
}

int run_verify_reports(const CnoidalSolution& sol, const Tolerances& tol, bool with_pde,
                       const CommonOpts& o) {
  std::vector<ResidualReport> reports;
  reports.push_back(verify_coefficients(sol, tol.coefficients));
  reports.push_back(verify_ode(sol, 257, tol.ode));
  try {
    reports.push_back(verify_ratio(sol, tol.ratio));
  } catch (const DegenerateError&) {
    // constant profile (m = 0): ratio check not applicable
  }
  if (with_pde) {
    SampleGrid grid;
    const double period =
        sol.wave.m >= 1.0 ? 20.0 / sol.wave.lambda : fundamental_period(sol);
    for (int i = 0; i < 9; ++i) grid.x.push_back(period * i / 9.0);
    grid.t = 0.2;
    reports.push_back(verify_pde(sol, grid, 1e-3, tol.pde));
  }
  std::string text = "[";
  bool all = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    text += (i ? ",\n " : "") + reports[i].to_json();
    all = all && reports[i].passed;
  }
  text += "]\n";
  emit(o, text);
  return all ? 0 : 1;
}

struct FigureSet {
  SystemKind kind;
  PhysicalParams phys;
  double sigma;
};

std::vector<FigureSet> figure_sets() {
  return {
      {SystemKind::kdv_kdv, {1.0, 0.25, 1.0, -1.0, 1.5}, 2.0},
      {SystemKind::bbm_bbm, {1.0, 1.0, 1.0, -1.0, 2.5}, 1.0},
      {SystemKind::kdv_bbm, {1.0, 0.25, 1.0, -1.0, 1.5}, 1.5},
      {SystemKind::bbm_kdv, {1.0, 0.25, 1.0, -1.0, 1.5}, 0.5},
  };
}

std::string catalog_json(SystemKind kind, const PhysicalParams& phys,
                         const ParamMap& free, double ode_tol) {
  std::string text = "[";
  bool first = true;
  for (int fam = 1; fam <= semi_trivial_family_count(kind); ++fam) {
    if (!first) text += ",\n ";
    first = false;
    try {
      const auto sol = semi_trivial_family(kind, phys, fam, free);
      const auto rep = verify_ode(sol, 257, ode_tol);
      std::ostringstream os;
      os << "{\"family\": " << fam << ", \"free\": {";
      bool f1 = true;
      for (const auto& [k, v] : sol.free) {
        os << (f1 ? "" : ", ") << "\"" << k << "\": " << num17(v);
        f1 = false;
      }
      os << "}, \"derived\": {";
      f1 = true;
      for (const auto& [k, v] : sol.derived) {
        os << (f1 ? "" : ", ") << "\"" << k << "\": " << num17(v);
        f1 = false;
      }
      os << "}, \"d\": [" << num17(sol.prof.d0) << ", " << num17(sol.prof.d1) << ", "
         << num17(sol.prof.d2) << "], \"h\": [" << num17(sol.prof.h0) << ", "
         << num17(sol.prof.h1) << ", " << num17(sol.prof.h2) << "]"
         << ", \"ode_max_abs\": " << num17(rep.max_abs)
         << ", \"passed\": " << (rep.passed ? "true" : "false") << "}";
      text += os.str();
    } catch (const ConstraintError& e) {
      text += std::string("{\"family\": ") + std::to_string(fam) + ", \"error\": \"" +
              e.what() + "\"}";
    }
  }
  return text + "]\n";
}

std::string propagation_csv(const PropagationReport& rep) {
  std::ostringstream os;
  os << "t,err_u_linf,err_v_linf,mass_drift\n";
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    os << num17(rep.times[i]) << ',' << num17(rep.errors_over_time[i][0]) << ','
       << num17(rep.errors_over_time[i][1]) << ',' << num17(rep.mass_drift_over_time[i])
       << "\n";
  }
  return os.str();
}

// one randomized draw for the sweep subcommand
struct SweepDraw {
  SystemKind kind;
  PhysicalParams phys;
  double sigma, m;
};

std::vector<SweepDraw> make_draws(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_u(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> b_u(-5.0, 5.0);
  std::uniform_real_distribution<double> m_u(0.05, 0.95);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const SystemKind kinds[4] = {SystemKind::kdv_kdv, SystemKind::bbm_bbm,
                               SystemKind::kdv_bbm, SystemKind::bbm_kdv};
  std::vector<SweepDraw> draws;
  draws.reserve(n);
  while (int(draws.size()) < n) {
    SweepDraw d;
    d.kind = kinds[draws.size() % 4];
    d.phys.mu0 = std::exp(log_u(rng));
    d.phys.mu1 = std::exp(log_u(rng));
    d.phys.a = std::exp(log_u(rng));
    d.phys.b = b_u(rng);
    d.phys.c = std::exp(log_u(rng));
    d.m = m_u(rng);
    switch (d.kind) {
      case SystemKind::kdv_kdv:
      case SystemKind::bbm_bbm:
        if (!(2 * d.phys.c > d.phys.a)) continue;
        d.sigma = 0.1 + 9.9 * unit(rng);
        if (std::abs(d.phys.a - d.phys.c) <
            0.05 * std::max(d.phys.a, d.phys.c)) continue;
        break;
      case SystemKind::kdv_bbm: {
        const double lo = d.phys.a / (2 * d.phys.c);
        d.sigma = lo * (1.05 + 4.0 * unit(rng));
        if (std::abs(d.phys.a - d.phys.c * d.sigma) <
            0.05 * std::max(d.phys.a, d.phys.c * d.sigma)) continue;
        break;
      }
      case SystemKind::bbm_kdv: {
        const double hi = 2 * d.phys.c / d.phys.a;
        d.sigma = hi * (0.05 + 0.9 * unit(rng));
        if (std::abs(d.phys.a * d.sigma - d.phys.c) <
            0.05 * std::max(d.phys.a * d.sigma, d.phys.c)) continue;
        break;
      }
    }
    draws.push_back(d);
  }
  return draws;
}

int run_sweep(int n_draws, unsigned seed, int threads, const CommonOpts& o) {
  const auto draws = make_draws(n_draws, seed);
  const Tolerances tol = tolerances(o);
  std::vector<std::string> lines(draws.size());
  std::atomic<bool> all_ok{true};

  auto work = [&](std::size_t i) {
    const auto& d = draws[i];
    std::ostringstream os;
    os << i << ',' << to_string(d.kind);
    for (RSign sign : {RSign::plus, RSign::minus}) {
      if (!validity(d.kind, d.phys, d.sigma).feasible(sign)) continue;
      const auto sol = cnoidal_params(d.kind, d.phys, d.sigma, d.m, sign);
      const auto rep = verify_coefficients(sol, tol.coefficients);
      bool ok = rep.passed;
      if (sol.prof.d2 != 0.0) ok = ok && verify_ratio(sol, tol.ratio).passed;
      os << ',' << (sign == RSign::plus ? "+" : "-") << ':'
         << (ok ? "pass" : "FAIL") << ':' << num17(rep.max_abs);
      if (!ok) all_ok = false;
    }
    lines[i] = os.str();
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < draws.size(); ++i) work(i);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < threads; ++t) {
      futs.push_back(std::async(std::launch::async, [&]() {
        for (std::size_t i = next++; i < draws.size(); i = next++) work(i);
      }));
    }
    for (auto& f : futs) f.get();
  }

  std::string text = "draw,system,branches\n";
  for (const auto& line : lines) text += line + "\n";
  emit(o, text);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cnoidal and solitary waves of coupled Schrodinger-KdV/BBM systems"};
  app.require_subcommand(1);

  // flat key=value config: injected right after the subcommand so explicit
  // flags (parsed last) win
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i] == "--config") {
        const auto extra = load_config_args(args[i + 1], args);
        args.erase(args.begin() + i, args.begin() + i + 2);
        if (!args.empty() && !args[0].starts_with("-")) {
          args.insert(args.begin() + 1, extra.begin(), extra.end());
        }
        break;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::vector<char*> argv2{argv[0]};
  for (auto& a : args) argv2.push_back(a.data());

  CommonOpts o;

  auto* cmd_params = app.add_subcommand("params", "compute the closed-form solution");
  add_common(cmd_params, o);

  auto* cmd_verify = app.add_subcommand("verify", "run the verification batteries");
  add_common(cmd_verify, o);
  bool with_pde = false;
  std::string perturb, params_file;
  cmd_verify->add_flag("--with-pde", with_pde, "include the finite-difference PDE check");
  cmd_verify->add_option("--perturb", perturb, "perturb one coefficient, e.g. d2=1e-3");
  cmd_verify->add_option("--params-file", params_file,
                         "verify a params JSON file instead of recomputing");

  auto* cmd_sample = app.add_subcommand("sample", "sample profiles over one period");
  add_common(cmd_sample, o);
  int n_samples = 512;
  double t_sample = 0.0;
  int sample_family = 0;
  std::vector<std::string> sample_free;
  cmd_sample->add_option("--n", n_samples, "number of rows")->capture_default_str();
  cmd_sample->add_option("--t", t_sample, "evaluation time")->capture_default_str();
  cmd_sample->add_option("--family", sample_family,
                         "semi-trivial family to sample (0 = full cnoidal)")
      ->capture_default_str();
  cmd_sample->add_option("--free", sample_free, "free parameters for --family");

  auto* cmd_figures = app.add_subcommand("figures", "emit the four reference profiles");
  std::string out_dir = ".";
  cmd_figures->add_option("--out-dir", out_dir, "output directory")->capture_default_str();

  auto* cmd_catalog = app.add_subcommand("catalog", "list semi-trivial families");
  add_common(cmd_catalog, o, false);
  std::vector<std::string> free_entries;
  cmd_catalog->add_option("--free", free_entries, "free parameters, name=value[,...]");

  auto* cmd_simulate = app.add_subcommand("simulate", "pseudo-spectral propagation test");
  add_common(cmd_simulate, o);
  SpectralConfig scfg;
  int family = 0;
  int periods = 1;
  std::vector<std::string> sim_free;
  cmd_simulate->add_option("--modes", scfg.n_modes, "Fourier modes (power of two)")
      ->capture_default_str();
  cmd_simulate->add_option("--dt", scfg.dt, "time step")->capture_default_str();
  cmd_simulate->add_option("--t-end", scfg.t_end, "final time")->capture_default_str();
  cmd_simulate->add_flag("--no-dealias", "disable the 2/3 rule");
  cmd_simulate->add_option("--family", family,
                           "semi-trivial family to evolve (0 = full cnoidal)")
      ->capture_default_str();
  cmd_simulate->add_option("--periods", periods, "domain length in fundamental periods")
      ->capture_default_str();
  cmd_simulate->add_option("--free", sim_free, "free parameters for --family");

  auto* cmd_sweep = app.add_subcommand("sweep", "randomized verification sweep");
  add_common(cmd_sweep, o, false);
  int draws = 200;
  unsigned seed = 1;
  int threads = 1;
  cmd_sweep->add_option("--draws", draws, "number of draws")->capture_default_str();
  cmd_sweep->add_option("--seed", seed, "RNG seed")->capture_default_str();
  cmd_sweep->add_option("--threads", threads, "worker threads")->capture_default_str();

  CLI11_PARSE(app, int(argv2.size()), argv2.data());

  try {
    const SystemKind kind = system_from_string(o.system);
    const Tolerances tol = tolerances(o);

    if (cmd_params->parsed()) {
      const auto sol = cnoidal_params(kind, o.phys, o.sigma, o.m, rsign_of(o.sign));
      bool ratio_ok = true;
      try {
        ratio_ok = verify_ratio(sol, tol.ratio).passed;
      } catch (const DegenerateError&) {
        ratio_ok = true;  // m = 0: constant profiles, nothing to check
      }
      emit(o, o.format == "csv" ? solution_csv(sol) : solution_json(sol, ratio_ok));
      return 0;
    }

    if (cmd_verify->parsed()) {
      CnoidalSolution sol =
          params_file.empty()
              ? cnoidal_params(kind, o.phys, o.sigma, o.m, rsign_of(o.sign))
              : solution_from_json(params_file, o.phys);
      if (!perturb.empty()) apply_perturbation(sol, perturb);
      return run_verify_reports(sol, tol, with_pde, o);
    }

    if (cmd_sample->parsed()) {
      if (n_samples < 2) throw DomainError("--n must be >= 2");
      if (sample_family == 0) {
        const auto sol = cnoidal_params(kind, o.phys, o.sigma, o.m, rsign_of(o.sign));
        emit(o, sample_csv(sol, sol.wave, n_samples, t_sample));
      } else {
        const auto sol =
            semi_trivial_family(kind, o.phys, sample_family, parse_free(sample_free));
        emit(o, sample_csv(sol, sol.wave, n_samples, t_sample));
      }
      return 0;
    }

    if (cmd_figures->parsed()) {
      for (const auto& fs : figure_sets()) {
        CnoidalSolution sol;
        try {
          sol = cnoidal_params(fs.kind, fs.phys, fs.sigma, 0.5, RSign::plus);
        } catch (const std::exception& e) {
          std::cerr << "internal error: figure set " << to_string(fs.kind)
                    << " failed validity: " << e.what() << "\n";
          return 2;
        }
        const std::string path = out_dir + "/figure_" + to_string(fs.kind) + ".csv";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + path);
        out << sample_csv(sol, sol.wave, 512, 0.0);
        std::cout << path << "\n";
      }
      return 0;
    }

    if (cmd_catalog->parsed()) {
      emit(o, catalog_json(kind, o.phys, parse_free(free_entries), tol.ode));
      return 0;
    }

    if (cmd_simulate->parsed()) {
      scfg.dealias = cmd_simulate->count("--no-dealias") == 0;
      PropagationReport rep;
      if (family == 0) {
        const auto sol = cnoidal_params(kind, o.phys, o.sigma, o.m, rsign_of(o.sign));
        scfg.domain_length = periods * fundamental_period(sol);
        rep = run_propagation(sol, scfg);
      } else {
        const auto sol = semi_trivial_family(kind, o.phys, family, parse_free(sim_free));
        scfg.domain_length = periods * fundamental_period(sol);
        rep = run_propagation(sol, scfg);
      }
      emit(o, propagation_csv(rep));
      return 0;
    }

    if (cmd_sweep->parsed()) {
      return run_sweep(draws, seed, threads, o);
    }
  } catch (const StabilityError& e) {
    std::cerr << "instability: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
