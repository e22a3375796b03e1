#include "cnoidal/simulate.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>

namespace cnoidal {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// the FFTW planner mutates global state; plan execution on distinct plans
// needs no lock
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void validate(const SpectralConfig& cfg) {
  if (!power_of_two(cfg.n_modes)) {
    throw ConfigError("n_modes must be a power of two");
  }
  if (cfg.n_modes < 16) throw ConfigError("n_modes must be >= 16");
  if (!(cfg.dt > 0)) throw ConfigError("dt must be > 0");
  if (!(cfg.t_end >= cfg.dt)) throw ConfigError("t_end must be >= dt");
  if (cfg.n_records < 2) throw ConfigError("n_records must be >= 2");
}

}  // namespace

double conservation_probe(const std::vector<std::vector<double>>& v_states,
                          double domain_length) {
  if (v_states.size() < 2) {
    throw DomainError("conservation_probe: need at least two stored states");
  }
  auto integral = [&](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s * domain_length / double(v.size());
  };
  const double first = integral(v_states.front());
  double drift = 0;
  for (const auto& v : v_states) drift = std::max(drift, std::abs(integral(v) - first));
  return drift;
}

struct SpectralIntegrator::Impl {
  using C = std::complex<double>;

  SystemKind kind;
  PhysicalParams phys;
  double b_shift;
  SpectralConfig cfg;
  int n;
  double length;

  std::vector<double> x;          // grid
  std::vector<double> k;          // wavenumbers (v field)
  std::vector<double> k_shift;    // k + B (w field)
  std::vector<C> lin_w, lin_v;    // diagonal linear symbols (purely imaginary)
  std::vector<double> sym_w, sym_v;  // BBM symbol divisors (1 when KdV-type)
  std::vector<char> keep;         // 2/3-rule mask for the quadratic products

  fftw_plan fwd = nullptr, inv = nullptr;
  std::vector<C> fft_buf;

  // cached integrating factors for the current step size
  double cached_dt = -1;
  bool use_if = false;
  std::vector<C> ew_half, ew_full, ev_half, ev_full;

  Impl(SystemKind kind_, const PhysicalParams& phys_, double b_, const SpectralConfig& c)
      : kind(kind_), phys(phys_), b_shift(b_), cfg(c), n(c.n_modes),
        length(c.domain_length) {
    phys.validate();
    validate(cfg);
    if (!(length > 0)) throw ConfigError("domain_length must be > 0");

    x.resize(n);
    k.resize(n);
    k_shift.resize(n);
    keep.assign(n, 1);
    for (int j = 0; j < n; ++j) {
      x[j] = length * j / n;
      const int jj = j < n / 2 ? j : j - n;
      k[j] = kTwoPi / length * jj;
      k_shift[j] = k[j] + b_shift;
      if (std::abs(jj) > n / 3) keep[j] = 0;
    }

    lin_w.resize(n);
    lin_v.resize(n);
    sym_w.assign(n, 1.0);
    sym_v.assign(n, 1.0);
    const double a = phys.a, b = phys.b, c_ = phys.c, mu0 = phys.mu0;
    for (int j = 0; j < n; ++j) {
      const double ks = k_shift[j], kv = k[j];
      if (u_dispersion_is_bbm(kind)) {
        sym_w[j] = 1.0 + a * ks * ks;
        lin_w[j] = C(0.0, (b * ks * ks - mu0 * ks) / sym_w[j]);
      } else {
        lin_w[j] = C(0.0, a * ks * ks * ks + b * ks * ks - mu0 * ks);
      }
      if (v_dispersion_is_bbm(kind)) {
        sym_v[j] = 1.0 + c_ * kv * kv;
        lin_v[j] = C(0.0, -kv / sym_v[j]);
      } else {
        lin_v[j] = C(0.0, c_ * kv * kv * kv - kv);
      }
    }

    fft_buf.resize(n);
    std::lock_guard<std::mutex> lock(planner_mutex());
    fwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(fft_buf.data()),
                           reinterpret_cast<fftw_complex*>(fft_buf.data()),
                           FFTW_FORWARD, FFTW_ESTIMATE);
    inv = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(fft_buf.data()),
                           reinterpret_cast<fftw_complex*>(fft_buf.data()),
                           FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd) fftw_destroy_plan(fwd);
    if (inv) fftw_destroy_plan(inv);
  }

  void forward(std::vector<C>& data) {
    std::memcpy(fft_buf.data(), data.data(), n * sizeof(C));
    fftw_execute(fwd);
    std::memcpy(data.data(), fft_buf.data(), n * sizeof(C));
  }

  void inverse(std::vector<C>& data) {
    std::memcpy(fft_buf.data(), data.data(), n * sizeof(C));
    fftw_execute(inv);
    const double scale = 1.0 / n;
    for (int j = 0; j < n; ++j) data[j] = fft_buf[j] * scale;
  }

  double max_abs_symbol() const {
    double worst = 0;
    for (int j = 0; j < n; ++j) {
      worst = std::max({worst, std::abs(lin_w[j].imag()), std::abs(lin_v[j].imag())});
    }
    return worst;
  }

  // nonlinear terms in Fourier space, from spectral inputs
  void nonlinear(const std::vector<C>& w_hat, const std::vector<C>& v_hat,
                 std::vector<C>& nw, std::vector<C>& nv) {
    std::vector<C> w = w_hat, v = v_hat;
    inverse(w);
    inverse(v);
    std::vector<C> p(n), g(n);
    for (int j = 0; j < n; ++j) {
      const double vr = v[j].real();
      p[j] = w[j] * vr;
      g[j] = 0.5 * vr * vr + 0.5 * std::norm(w[j]);
    }
    forward(p);
    forward(g);
    const C i_unit(0, 1);
    nw.resize(n);
    nv.resize(n);
    for (int j = 0; j < n; ++j) {
      if (cfg.dealias && !keep[j]) {
        p[j] = 0;
        g[j] = 0;
      }
      nw[j] = (-i_unit * k_shift[j] * p[j] - i_unit * phys.mu1 * p[j]) / sym_w[j];
      nv[j] = (-i_unit * k[j] * g[j]) / sym_v[j];
    }
  }

  void refresh_factors(double dt) {
    if (dt == cached_dt) return;
    cached_dt = dt;
    use_if = max_abs_symbol() * dt > 1.0;
    if (!use_if) return;
    ew_half.resize(n);
    ew_full.resize(n);
    ev_half.resize(n);
    ev_full.resize(n);
    for (int j = 0; j < n; ++j) {
      ew_half[j] = std::exp(lin_w[j] * (0.5 * dt));
      ew_full[j] = std::exp(lin_w[j] * dt);
      ev_half[j] = std::exp(lin_v[j] * (0.5 * dt));
      ev_full[j] = std::exp(lin_v[j] * dt);
    }
  }

  struct Spec {
    std::vector<C> w, v;
  };

  void rhs_full(const Spec& s, Spec& out) {
    nonlinear(s.w, s.v, out.w, out.v);
    for (int j = 0; j < n; ++j) {
      out.w[j] += lin_w[j] * s.w[j];
      out.v[j] += lin_v[j] * s.v[j];
    }
  }

  static void axpy(Spec& y, double alpha, const Spec& x) {
    for (std::size_t j = 0; j < y.w.size(); ++j) {
      y.w[j] += alpha * x.w[j];
      y.v[j] += alpha * x.v[j];
    }
  }

  void step_plain(Spec& s, double dt) {
    Spec k1, k2, k3, k4, tmp;
    rhs_full(s, k1);
    tmp = s;
    axpy(tmp, dt / 2, k1);
    rhs_full(tmp, k2);
    tmp = s;
    axpy(tmp, dt / 2, k2);
    rhs_full(tmp, k3);
    tmp = s;
    axpy(tmp, dt, k3);
    rhs_full(tmp, k4);
    for (int j = 0; j < n; ++j) {
      s.w[j] += dt / 6.0 * (k1.w[j] + 2.0 * k2.w[j] + 2.0 * k3.w[j] + k4.w[j]);
      s.v[j] += dt / 6.0 * (k1.v[j] + 2.0 * k2.v[j] + 2.0 * k3.v[j] + k4.v[j]);
    }
  }

  // RK4 on the integrating-factor transformed variable; the linear dispersive
  // part is integrated exactly.
  void step_if(Spec& s, double dt) {
    Spec k1, k2, k3, k4, tmp;
    nonlinear(s.w, s.v, k1.w, k1.v);

    tmp = s;
    axpy(tmp, dt / 2, k1);
    mul(tmp, ew_half, ev_half);
    nonlinear(tmp.w, tmp.v, k2.w, k2.v);

    tmp = s;
    mul(tmp, ew_half, ev_half);
    axpy(tmp, dt / 2, k2);
    nonlinear(tmp.w, tmp.v, k3.w, k3.v);

    tmp = s;
    mul(tmp, ew_full, ev_full);
    Spec k3e = k3;
    mul(k3e, ew_half, ev_half);
    axpy(tmp, dt, k3e);
    nonlinear(tmp.w, tmp.v, k4.w, k4.v);

    mul(s, ew_full, ev_full);
    Spec k1e = k1;
    mul(k1e, ew_full, ev_full);
    Spec k2e = k2;
    mul(k2e, ew_half, ev_half);
    mul(k3, ew_half, ev_half);
    for (int j = 0; j < n; ++j) {
      s.w[j] += dt / 6.0 * (k1e.w[j] + 2.0 * k2e.w[j] + 2.0 * k3.w[j] + k4.w[j]);
      s.v[j] += dt / 6.0 * (k1e.v[j] + 2.0 * k2e.v[j] + 2.0 * k3.v[j] + k4.v[j]);
    }
  }

  static void mul(Spec& s, const std::vector<C>& ew, const std::vector<C>& ev) {
    for (std::size_t j = 0; j < s.w.size(); ++j) {
      s.w[j] *= ew[j];
      s.v[j] *= ev[j];
    }
  }

  void step(State& state, double dt) {
    Spec s;
    s.w = state.w;
    s.v.resize(n);
    for (int j = 0; j < n; ++j) s.v[j] = C(state.v[j], 0.0);
    forward(s.w);
    forward(s.v);
    refresh_factors(dt);
    if (use_if) {
      step_if(s, dt);
    } else {
      step_plain(s, dt);
    }
    inverse(s.w);
    inverse(s.v);
    state.w = std::move(s.w);
    for (int j = 0; j < n; ++j) state.v[j] = s.v[j].real();
    state.t += dt;
  }
};

SpectralIntegrator::SpectralIntegrator(SystemKind kind, const PhysicalParams& phys,
                                       double b_shift, const SpectralConfig& cfg)
    : impl_(std::make_unique<Impl>(kind, phys, b_shift, cfg)) {}

SpectralIntegrator::~SpectralIntegrator() = default;

const std::vector<double>& SpectralIntegrator::grid() const { return impl_->x; }

bool SpectralIntegrator::integrating_factor_engaged(double dt) const {
  return impl_->max_abs_symbol() * dt > 1.0;
}

void SpectralIntegrator::step(State& state, double dt) { impl_->step(state, dt); }

namespace {

// shared driver: evolve spectrally in one go, recording errors against the
// exactly translated solution
template <typename Solution>
PropagationReport propagate(const Solution& sol, SystemKind kind,
                            const PhysicalParams& phys, const WaveParams& wave,
                            const SpectralConfig& cfg_in) {
  SpectralConfig cfg = cfg_in;
  validate(cfg);
  if (cfg.domain_length <= 0) cfg.domain_length = fundamental_period(sol);

  SpectralIntegrator integ(kind, phys, wave.B, cfg);
  const auto& x = integ.grid();
  const int n = cfg.n_modes;
  const std::complex<double> i_unit(0, 1);

  SpectralIntegrator::State state;
  state.w.resize(n);
  state.v.resize(n);
  for (int j = 0; j < n; ++j) {
    const auto [f, g] = evaluate_profiles(sol, x[j]);
    state.w[j] = f;
    state.v[j] = g;
  }

  double initial_norm = 1e-300;
  for (int j = 0; j < n; ++j) {
    initial_norm = std::max({initial_norm, std::abs(state.w[j]), std::abs(state.v[j])});
  }

  const long n_steps = std::lround(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  const long stride = std::max(1L, n_steps / (cfg.n_records - 1));

  PropagationReport rep;
  std::vector<std::vector<double>> v_states;
  auto record = [&]() {
    double err_u = 0, err_v = 0;
    const double cap = 10.0 * initial_norm;
    for (int j = 0; j < n; ++j) {
      // NaN-proof blow-up predicate: !(x <= cap) also catches non-finites
      const double wa = std::abs(state.w[j]), va = std::abs(state.v[j]);
      if (!(wa <= cap) || !(va <= cap)) {
        throw StabilityError("solution norm exceeded 10x its initial value at t = " +
                             std::to_string(state.t));
      }
      const auto [ue, ve] = evaluate_fields(sol, x[j], state.t);
      const std::complex<double> we = std::exp(-i_unit * wave.B * x[j]) * ue;
      err_u = std::max(err_u, std::abs(state.w[j] - we));
      err_v = std::max(err_v, std::abs(state.v[j] - ve));
    }
    rep.times.push_back(state.t);
    rep.errors_over_time.push_back({err_u, err_v});
    rep.linf_error_u = std::max(rep.linf_error_u, err_u);
    rep.linf_error_v = std::max(rep.linf_error_v, err_v);
    v_states.push_back(state.v);
  };

  record();
  for (long s = 1; s <= n_steps; ++s) {
    const double dt =
        (s == n_steps) ? cfg.t_end - (n_steps - 1) * cfg.dt : cfg.dt;
    integ.step(state, dt);
    if (s == n_steps) state.t = cfg.t_end;  // pin against accumulation error
    if (s % stride == 0 || s == n_steps) record();
  }
  auto integral = [&](const std::vector<double>& v) {
    double acc = 0;
    for (double val : v) acc += val;
    return acc * cfg.domain_length / double(v.size());
  };
  const double mass0 = integral(v_states.front());
  for (const auto& v : v_states) {
    rep.mass_drift_over_time.push_back(std::abs(integral(v) - mass0));
  }
  rep.conserved_drift = conservation_probe(v_states, cfg.domain_length);
  return rep;
}

}  // namespace

PropagationReport run_propagation(const CnoidalSolution& sol, const SpectralConfig& cfg) {
  return propagate(sol, sol.kind, sol.phys, sol.wave, cfg);
}

PropagationReport run_propagation(const SemiTrivialSolution& sol,
                                  const SpectralConfig& cfg) {
  return propagate(sol, sol.kind, sol.phys, sol.wave, cfg);
}

}  // namespace cnoidal
