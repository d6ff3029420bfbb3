#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncpart/extended_real.hpp"
#include "ncpart/membership.hpp"

namespace ncpart {

/// Weight sequence given by a formula. rho must be supplied; when it is
/// finite the caller also states what happens at t = rho: either the series
/// diverges there (so nu is infinite) or closed forms for Phi and Phi' are
/// known. A missing d2phi_at_rho means Phi''(rho) is infinite.
struct FormulaWeights {
  std::string name;
  std::function<double(std::size_t)> w;
  ExtendedReal rho = ExtendedReal::infinity();
  bool divergent_at_rho = false;
  std::optional<double> phi_at_rho;
  std::optional<double> dphi_at_rho;
  std::optional<double> d2phi_at_rho;
};

/// Partial sums M_j(t) = sum_k k^j w(k) t^k for j = 0, 1, 2.
struct PowerMoments {
  double m0 = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
};

/// Nonnegative weights w(0), w(1), ... with w(0) > 0 and w(k) > 0 for some k >= 2.
class WeightSeq {
 public:
  /// w(0) = 1 and w(k) = 1 exactly for k in the set. Throws DegenerateSet.
  static WeightSeq membership(MembershipSet set);
  /// Finitely supported weights w(0..size-1). Throws InvalidArgument.
  static WeightSeq explicit_values(std::vector<double> values);
  /// Throws RhoZero or InvalidArgument.
  static WeightSeq formula(FormulaWeights f);

  double operator()(std::size_t k) const;

  ExtendedReal rho() const;
  bool finite_support() const;
  /// Largest k with w(k) > 0; finite support only.
  std::size_t max_degree() const;
  /// gcd of {k >= 1 : w(k) > 0}; scanned up to 10^4 for formula weights.
  std::size_t support_gcd() const;
  /// Set of k >= 1 with w(k) > 0 when the weights are a membership set.
  const MembershipSet* membership_set() const;
  const std::vector<double>* explicit_list() const;

  /// M_j(t) for 0 <= t <= rho. Throws NonconvergentSeries.
  PowerMoments moments(double t) const;
  /// Psi(t) = t Phi'(t) / Phi(t).
  double psi(double t) const;
  /// Limit of Psi(t) as t increases to rho. Throws NonconvergentSeries.
  ExtendedReal nu() const;

  /// The equivalent sequence a * b^k * w(k).
  WeightSeq tilted(double a, double b) const;

  std::string describe() const;

 private:
  struct Impl;
  explicit WeightSeq(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Probability law pi(k) = w(k) xi^k / Phi(xi) equivalent to a weight sequence.
class TiltedLaw {
 public:
  const WeightSeq& weights() const noexcept { return weights_; }
  ExtendedReal rho() const noexcept { return rho_; }
  ExtendedReal nu() const noexcept { return nu_; }
  double xi() const noexcept { return xi_; }
  double phi_at_xi() const noexcept { return phi_at_xi_; }

  double pi(std::size_t k) const;
  /// pi(0..kmax).
  std::vector<double> pmf(std::size_t kmax) const;
  /// P(X > k).
  double tail_above(std::size_t k) const;
  /// Equals min(nu, 1).
  double mean() const noexcept { return mean_; }
  /// sigma^2; infinite when Phi''(rho) diverges in the xi = rho case.
  ExtendedReal variance() const noexcept { return variance_; }
  /// Mean one, i.e. nu >= 1.
  bool critical() const noexcept;

 private:
  friend TiltedLaw equivalent_distribution(const WeightSeq& w);
  explicit TiltedLaw(WeightSeq w) : weights_(std::move(w)) {}

  WeightSeq weights_;
  ExtendedReal rho_;
  ExtendedReal nu_;
  double xi_ = 0.0;
  double phi_at_xi_ = 1.0;
  double log_xi_ = 0.0;
  double log_phi_ = 0.0;
  double mean_ = 0.0;
  ExtendedReal variance_;
};

/// Throws RhoZero (from formula weights) or NonconvergentSeries.
TiltedLaw equivalent_distribution(const WeightSeq& w);

/// Solves 1 + sum_{i in A} xi^i = sum_{i in A} i xi^i. Throws DegenerateSet.
std::pair<double, TiltedLaw> xi_for_set(const MembershipSet& set);

}  // namespace ncpart
