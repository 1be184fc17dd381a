#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace hcoop {

enum class CaseKind { Standard, Poisson, Endo, Exo };

inline const char* case_name(CaseKind k) {
  switch (k) {
    case CaseKind::Standard: return "standard";
    case CaseKind::Poisson: return "poisson";
    case CaseKind::Endo: return "endo";
    case CaseKind::Exo: return "exo";
  }
  return "?";
}

inline CaseKind case_from_name(const std::string& s) {
  if (s == "standard") return CaseKind::Standard;
  if (s == "poisson") return CaseKind::Poisson;
  if (s == "endo") return CaseKind::Endo;
  if (s == "exo") return CaseKind::Exo;
  throw std::invalid_argument("unknown case '" + s +
                              "' (expected standard|poisson|endo|exo)");
}

// Exponential-kernel excitation parameters shared by a whole population.
//   rho      baseline event rate (events per unit time)
//   alpha_n  strength of excitation by the agent's own past events
//   alpha_x  strength of excitation by each neighbor's past events
//   beta     decay ratio of the excitation
//   nu       spike-shape factor; scales jump height and decay together so the
//            long-run mean rate is unaffected
struct KernelParams {
  double rho = 1.0;
  double alpha_n = 0.0;
  double alpha_x = 0.0;
  double beta = 1.0;
  double nu = 1.0;
};

inline void validate_kernel(const KernelParams& p) {
  if (!(p.rho >= 0.0)) throw std::invalid_argument("rho must be >= 0");
  if (!(p.beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (!(p.nu > 0.0)) throw std::invalid_argument("nu must be > 0");
  if (!(p.alpha_n >= 0.0 && p.alpha_n < 1.0))
    throw std::invalid_argument("alpha_n must be in [0, 1)");
  if (!(p.alpha_x >= 0.0 && p.alpha_x < 1.0))
    throw std::invalid_argument("alpha_x must be in [0, 1)");
}

enum class Excitation { Endo, Exo };

// Additive intensity contribution of one event after elapsed time tau.
inline double kernel_eval(const KernelParams& p, Excitation which, double tau) {
  if (tau < 0.0) return 0.0;
  const double a = (which == Excitation::Endo) ? p.alpha_n : p.alpha_x;
  return a * p.nu * std::exp(-p.beta * p.nu * tau);
}

// Intensity at time t given explicit event histories. This is the defining
// sum; the samplers keep decayed accumulators instead of re-summing, and the
// tests use this form as the independent reference.
inline double intensity_at(const KernelParams& p,
                           std::span<const double> own_events,
                           std::span<const double> neighbor_events, double t) {
  double lam = p.rho;
  for (double s : own_events) {
    if (!(s < t))
      throw std::invalid_argument("intensity_at: own event time >= t");
    lam += kernel_eval(p, Excitation::Endo, t - s);
  }
  for (double s : neighbor_events) {
    if (!(s < t))
      throw std::invalid_argument("intensity_at: neighbor event time >= t");
    lam += kernel_eval(p, Excitation::Exo, t - s);
  }
  return lam;
}

// Expected number of direct offspring events per event. The nu factor scales
// the kernel's height and decay identically, so it drops out of the integral.
inline double branching_ratio(double alpha, double beta,
                              [[maybe_unused]] double nu) {
  if (!(beta > 0.0)) throw std::invalid_argument("branching_ratio: beta must be > 0");
  return alpha / beta;
}

// Long-run mean event rate of a single self-exciting stream: rho / (1 - gamma).
inline double expected_intensity_single(const KernelParams& p) {
  const double gamma = branching_ratio(p.alpha_n, p.beta, p.nu);
  if (!(gamma < 1.0))
    throw std::invalid_argument(
        "expected_intensity_single: branching ratio >= 1 (non-stationary)");
  return p.rho / (1.0 - gamma);
}

// Eigenvalue bounds of the branching matrix for a k-regular coupling:
// a single Gershgorin disk centered at alpha_n/beta with radius k*alpha_x/beta.
inline std::pair<double, double> gershgorin_bounds(double alpha_n,
                                                   double alpha_x, double beta,
                                                   int k) {
  if (!(beta > 0.0)) throw std::invalid_argument("gershgorin_bounds: beta must be > 0");
  const double center = alpha_n / beta;
  const double radius = k * alpha_x / beta;
  return {center - radius, center + radius};
}

inline void validate_stationary(const KernelParams& p, int k) {
  const auto [lo, hi] = gershgorin_bounds(p.alpha_n, p.alpha_x, p.beta, k);
  (void)lo;
  if (!(hi < 1.0))
    throw std::invalid_argument(
        "non-stationary excitation: Gershgorin bound (alpha_n + k*alpha_x)/beta = " +
        std::to_string(hi) + " >= 1 (alpha_n=" + std::to_string(p.alpha_n) +
        ", alpha_x=" + std::to_string(p.alpha_x) + ", beta=" +
        std::to_string(p.beta) + ", k=" + std::to_string(k) + ")");
}

// Baseline rate that makes every agent's expected rate equal target_rate when
// all agents share the same parameters on a k-regular lattice.
inline double calibrate_rho(double target_rate, double alpha_n, double alpha_x,
                            double beta, int k) {
  if (!(target_rate > 0.0))
    throw std::invalid_argument("calibrate_rho: target rate must be > 0");
  KernelParams probe{0.0, alpha_n, alpha_x, beta, 1.0};
  validate_stationary(probe, k);
  return target_rate * (1.0 - (alpha_n + k * alpha_x) / beta);
}

// Per-case kernel settings at excitation strength alpha. The baseline rho is
// calibrated so the expected per-agent rate equals target_rate:
//   poisson: alpha_n = alpha_x = 0, beta = 1, rho = target
//   endo:    alpha_n = alpha,  alpha_x = 0,     beta = 1, rho = target*(1-alpha)
//   exo:     alpha_n = 0,      alpha_x = alpha, beta = k, rho = target*(1-alpha)
inline KernelParams make_case_params(CaseKind kind, double alpha, double nu,
                                     int k, double target_rate) {
  if (kind == CaseKind::Standard)
    throw std::invalid_argument("standard case does not use a point process");
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must be in [0, 1)");
  KernelParams p;
  p.nu = nu;
  switch (kind) {
    case CaseKind::Poisson:
      p.alpha_n = 0.0;
      p.alpha_x = 0.0;
      p.beta = 1.0;
      break;
    case CaseKind::Endo:
      p.alpha_n = alpha;
      p.alpha_x = 0.0;
      p.beta = 1.0;
      break;
    case CaseKind::Exo:
      p.alpha_n = 0.0;
      p.alpha_x = alpha;
      p.beta = static_cast<double>(k);
      break;
    default:
      break;
  }
  p.rho = calibrate_rho(target_rate, p.alpha_n, p.alpha_x, p.beta, k);
  validate_kernel(p);
  return p;
}

// Consistency of a parameter set with its declared case. The beta convention
// is not checked here so that explicit beta overrides remain possible; the
// stationarity check is what actually guards those.
inline void validate_case_params(CaseKind kind, const KernelParams& p) {
  switch (kind) {
    case CaseKind::Poisson:
      if (p.alpha_n != 0.0 || p.alpha_x != 0.0)
        throw std::invalid_argument("poisson case requires alpha_n = alpha_x = 0");
      break;
    case CaseKind::Endo:
      if (p.alpha_x != 0.0)
        throw std::invalid_argument("endo case requires alpha_x = 0");
      break;
    case CaseKind::Exo:
      if (p.alpha_n != 0.0)
        throw std::invalid_argument("exo case requires alpha_n = 0");
      break;
    case CaseKind::Standard:
      throw std::invalid_argument("standard case does not use a point process");
  }
}

}  // namespace hcoop
