#pragma once

#include <compare>
#include <vector>

namespace fnls {

// Integer frequency quadruple (n1, n2, n3, n) with n1 - n2 + n3 = n.
struct FrequencyQuad {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  int n = 0;

  // Builds (n1, n2, n3, n1 - n2 + n3).
  static FrequencyQuad from_triple(int n1, int n2, int n3) {
    return {n1, n2, n3, n1 - n2 + n3};
  }

  bool satisfies_relation() const { return n1 - n2 + n3 == n; }
  // Membership in the non-resonant set: relation holds and n1, n3 != n.
  bool nonresonant() const { return satisfies_relation() && n1 != n && n3 != n; }
  int max_abs() const;

  FrequencyQuad negated() const { return {-n1, -n2, -n3, -n}; }
  FrequencyQuad swapped() const { return {n3, n2, n1, n}; }

  auto operator<=>(const FrequencyQuad&) const = default;
};

// |n|^{2 alpha}, with 0 mapped to 0.
double dispersion(int n, double alpha);
// <n>^{2s} = (1 + n^2)^s.
double sobolev_weight(int n, double s);

// phi = |n1|^{2a} - |n2|^{2a} + |n3|^{2a} - |n|^{2a}.
double phase(const FrequencyQuad& q, double alpha);
// psi_s = <n1>^{2s} - <n2>^{2s} + <n3>^{2s} - <n>^{2s}.
double psi(const FrequencyQuad& q, double s);
// psi_s / phi. Throws ResonantQuad when q is not non-resonant or phi = 0.
double multiplier(const FrequencyQuad& q, double s, double alpha);

// Tabulated |n|^{2 alpha} and <n>^{2s} for |n| <= radius, used by the O(N^3)
// lattice sums.
class WeightTable {
 public:
  WeightTable(int radius, double alpha, double s);

  int radius() const { return radius_; }
  double dispersion(int n) const { return disp_[idx(n)]; }
  double sobolev(int n) const { return sob_[idx(n)]; }

  double phase(int n1, int n2, int n3, int n) const {
    return disp_[idx(n1)] - disp_[idx(n2)] + disp_[idx(n3)] - disp_[idx(n)];
  }
  double psi(int n1, int n2, int n3, int n) const {
    return sob_[idx(n1)] - sob_[idx(n2)] + sob_[idx(n3)] - sob_[idx(n)];
  }

 private:
  std::size_t idx(int n) const { return static_cast<std::size_t>(n + radius_); }

  int radius_;
  std::vector<double> disp_;
  std::vector<double> sob_;
};

}  // namespace fnls
