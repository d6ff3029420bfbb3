#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncpart/extended_real.hpp"
#include "ncpart/series.hpp"
#include "ncpart/weights.hpp"

namespace ncpart {

/// Closed-form description of an R-transform R(z) = sum_n kappa_{n+1} z^n.
struct AnalyticR {
  std::function<double(double)> r;
  std::function<double(double)> dr;
  ExtendedReal rho;
  /// R or R' blows up at rho (so nu is infinite); otherwise r(rho) and dr(rho)
  /// must be finite.
  bool divergent_at_rho = true;
  /// Initial bracket for the xi equation, inside (0, rho].
  std::pair<double, double> bracket{0.0, 0.0};
};

/// Free cumulants kappa_1, kappa_2, ...: either finitely many (the rest zero),
/// or an infinite sequence with a closed-form R-transform, or an infinite
/// float sequence with no tail information.
class CumulantSeq {
 public:
  static CumulantSeq finite(std::vector<double> kappa, std::string name = "cumulants");
  static CumulantSeq exact(std::vector<Rational> kappa, std::string name = "cumulants");
  static CumulantSeq analytic(std::string name, std::function<double(std::size_t)> kappa,
                              AnalyticR r);
  /// kappa_1..kappa_m given, then kappa_k = kappa_m q^{k-m}.
  static CumulantSeq geometric_tail(std::vector<double> kappa, double q,
                                    std::string name = "cumulants");
  /// Infinite sequence known only through its first terms.
  static CumulantSeq untailed(std::vector<double> kappa, std::string name = "cumulants");

  /// semicircle, free-poisson:L, ortmann-uniform, levy-area, beta-tail:A,C.
  static CumulantSeq preset(std::string_view spec);

  double kappa(std::size_t k) const;
  const std::string& name() const noexcept { return name_; }
  /// Number of explicitly listed cumulants when the sequence is finite.
  std::optional<std::size_t> finite_length() const;
  const std::vector<Rational>* exact_values() const;
  bool has_tail() const noexcept { return analytic_.has_value() || finite_; }

  /// R(t) and R'(t) for t in (0, rho]. Throws RhoUndetermined.
  double r(double t) const;
  double dr(double t) const;
  ExtendedReal rho() const;

  /// Weights w(0) = 1, w(k) = kappa_k.
  WeightSeq weights() const;

 private:
  CumulantSeq() = default;

  std::string name_;
  bool finite_ = false;
  std::vector<double> values_;
  std::vector<Rational> exact_;
  std::function<double(std::size_t)> kappa_fn_;
  std::optional<AnalyticR> analytic_;
};

enum class SupportBranch { NuGe1, NuLt1 };
std::string_view to_string(SupportBranch b) noexcept;

struct SupportResult {
  ExtendedReal rho;
  ExtendedReal nu;
  double xi = 0.0;
  double s_max = 0.0;
  SupportBranch branch = SupportBranch::NuGe1;
  /// |xi^2 R'(xi) - 1|; zero in the nu < 1 branch.
  double residual = 0.0;
  /// Final bisection bracket with g(lo) <= 1 <= g(hi), g(t) = t^2 R'(t).
  std::pair<double, double> bracket{0.0, 0.0};
};

/// Maximum of the support of the measure with these free cumulants.
/// Throws NegativeCumulant, DiracInput or RhoUndetermined.
SupportResult support_max(const CumulantSeq& kappa);

/// m_1..m_N by summing over non-crossing partitions.
std::vector<Rational> moments_from_cumulants(std::span<const Rational> kappa, std::size_t count);
std::vector<double> moments_from_cumulants(const CumulantSeq& kappa, std::size_t count);

/// kappa_1..kappa_N solving the moment-cumulant relation order by order.
std::vector<Rational> cumulants_from_moments(std::span<const Rational> moments, std::size_t count);
std::vector<double> cumulants_from_moments(std::span<const double> moments, std::size_t count);

}  // namespace ncpart
