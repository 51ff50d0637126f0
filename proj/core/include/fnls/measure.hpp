#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fnls/dynamics.hpp"
#include "fnls/spectral_field.hpp"
#include "fnls/statistics.hpp"

namespace fnls {

// Draw from the Gaussian measure mu_s truncated to |n| <= p.N:
//   u_n = (a_n + i b_n) / <n>^s,  a_n, b_n iid N(0, 1),
// so E|u_n|^2 = 2 <n>^{-2s}. Mode n of sample `index` depends only on
// (seed, index, n); a sample drawn at a larger cutoff restricts exactly to
// the one drawn at a smaller cutoff.
SpectralField sample_mu(const SimParams& p, std::uint64_t seed,
                        std::uint64_t index);

// A seeded, lazily generated family of mu_s samples at cutoff params.N.
class Ensemble {
 public:
  Ensemble(SimParams params, std::uint64_t seed, int size);

  const SimParams& params() const { return params_; }
  std::uint64_t seed() const { return seed_; }
  int size() const { return size_; }

  SpectralField sample(int k) const;

 private:
  SimParams params_;
  std::uint64_t seed_;
  int size_;
};

// E ||u||_{L^2}^2 = sum_{|n| <= N} 2 <n>^{-2s}.
double expected_mass(const SimParams& p);
// 3 (E ||u||_{L^2}^2)^{1/2}.
double default_radius(const SimParams& p);

struct DensityValue {
  int indicator = 0;
  double weight = 0.0;  // e^{-R_{s,N}(P_N f) / 2}

  double value() const { return indicator ? weight : 0.0; }
};

// F_{N,r}(f) = 1{||f||_{L^2} <= r} exp(-R_{s,N}(P_N f) / 2), with N = p.N.
// The indicator sees the whole field f; only the correction is truncated.
DensityValue density_F(const SpectralField& f, const SimParams& p, double r);

// Scalar observables used by the moment estimators.
struct Statistic {
  enum class Kind { fl_norm, sobolev_norm, abs_coeff, l2_block };
  Kind kind = Kind::abs_coeff;
  double param = 0.0;  // sigma, sigma, mode, block length

  // Parses "fl_norm:0.7", "sobolev_norm:1", "abs_coeff:0", "l2_block:4".
  static Statistic parse(const std::string& text);
  std::string name() const;

  // l2_block(M) is (sum_{n=1}^M <n>^{2s} |u_n|^2)^{1/2}, the l^2 norm of the
  // underlying Gaussians on the block 1..M.
  double evaluate(const SpectralField& f, double s) const;
};

struct DensitySpec {
  double r = 0.0;
  int N = 0;  // cutoff of the correction; <= 0 means the ensemble cutoff
};

// || stat ||_{L^p}: the plain mu_s average, or the self-normalized
// F_{N,r}-weighted average when a density is given.
Estimate lp_moment(const Statistic& stat, double p, const Ensemble& e,
                   const std::optional<DensitySpec>& density = std::nullopt);

// || F_{N,r} ||_{L^q(mu_s)} over the ensemble.
Estimate density_norm(const Ensemble& e, const DensitySpec& density, double q);

struct MomentGrowth {
  std::vector<double> orders;
  std::vector<Estimate> norms;
  double exponent = 0.0;  // beta in ||stat||_{L^p} ~ C p^beta
};

MomentGrowth moment_growth(const Statistic& stat, const std::vector<double>& orders,
                           const Ensemble& e,
                           const std::optional<DensitySpec>& density = std::nullopt);

struct TailFit {
  std::vector<double> thresholds;
  std::vector<double> probabilities;
  // Largest c with P[X >= K] <= e^{-c K^2} on every threshold with a
  // non-zero empirical probability.
  double c_bound = 0.0;
  // -slope of log P against K^2 by least squares.
  double c_fit = 0.0;
};

TailFit tail_fit(int block, const std::vector<double>& thresholds, const Ensemble& e);

struct ConvergenceRow {
  int N = 0;
  Estimate difference;  // || R_{s,N}(P_N v) - R_{s,Nmax}(P_Nmax v) ||_{L^p}
};

// Cauchy differences of the truncated corrections against the largest
// cutoff in N_list; one row per smaller cutoff. N_list must ascend and stay
// within the ensemble cutoff.
std::vector<ConvergenceRow> r_convergence(const SimParams& p, const Ensemble& e,
                                          const std::vector<int>& N_list,
                                          double p_norm);

// Determinant of the central-difference Jacobian (h = 1e-5) of the flow map
// Phi_N(t) in real coordinates (Re, Im of each mode). Requires
// f0.cutoff() == p.N <= 4; throws UnsupportedDimension beyond that.
double flow_jacobian_det(const SpectralField& f0, const SimParams& p, double t);

// A = {||v - center||_{H^sigma} <= radius} intersected with the optional
// half-space {Re v_mode >= 0}.
struct SetSpec {
  double sigma = 0.0;
  double radius = kSetUnbounded;
  std::optional<SpectralField> center;
  std::optional<int> halfspace_mode;

  static constexpr double kSetUnbounded = 1e300;

  bool contains(const SpectralField& v) const;
};

struct PushforwardResult {
  Estimate lhs;  // E[F(v) 1_A(Phi(-t) v)]
  Estimate rhs;  // E[1_A(v) 1_ball exp(-E_s(Phi(t) v)/2 + ||v||_{H^s}^2 / 2)]
  double ratio = 0.0;
  bool overlap = false;
  int effective_samples = 0;
  double max_sample_gap = 0.0;  // max_k |lhs_k - rhs_k|
};

// Two Monte-Carlo routes to the unnormalized rho_{s,N,r}-mass of
// Phi_N(t)(A) in the fully truncated setting (ensemble cutoff = p.N). Throws
// DegenerateEstimator when no sample contributes.
PushforwardResult pushforward_check(const SetSpec& A, const SimParams& p, double r,
                                    double t, const Ensemble& e);

struct KsRow {
  std::string statistic;
  double distance = 0.0;
};

struct GaugeInvarianceReport {
  std::vector<KsRow> rows;
  double max_distance = 0.0;
  double critical_value = 0.0;  // 1% two-sample level
};

// Compares |u_n|^2 (|n| <= 3), ||u||_{L^2} and Re u_1 between the ensemble
// and its image under G_t. Requires s > 1/2.
GaugeInvarianceReport gauge_invariance_check(const SimParams& p, double t,
                                             const Ensemble& e);

}  // namespace fnls
