#include "ncpart/freeprob.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <charconv>
#include <cmath>
#include <numbers>

#include "ncpart/error.hpp"

namespace ncpart {

namespace {

constexpr std::size_t kCheckedTerms = 256;

double parse_double(std::string_view text, std::string_view context) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "bad number '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

CumulantSeq ortmann_uniform() {
  AnalyticR a;
  a.rho = ExtendedReal(1.0);
  a.r = [](double z) {
    const double head = std::abs(z) < 1e-3 ? z / 3.0 - z * z * z / 45.0 : 1.0 / std::tanh(z) - 1.0 / z;
    return head + 1.0 / (1.0 - z);
  };
  a.dr = [](double z) {
    double head;
    if (std::abs(z) < 1e-3) {
      head = 1.0 / 3.0 - z * z / 15.0;
    } else {
      const double s = std::sinh(z);
      head = 1.0 / (z * z) - 1.0 / (s * s);
    }
    return head + 1.0 / ((1.0 - z) * (1.0 - z));
  };
  a.bracket = {0.0, 1.0};
  // coth z - 1/z = sum_k (-1)^{k+1} 2 zeta(2k) pi^{-2k} z^{2k-1}.
  auto kappa = [](std::size_t k) {
    if (k == 0 || k % 2 == 1) return 1.0;
    const int half = static_cast<int>(k / 2);
    const double sign = half % 2 == 1 ? 1.0 : -1.0;
    return 1.0 + sign * 2.0 * boost::math::zeta(static_cast<double>(k)) *
                     std::pow(std::numbers::pi, -static_cast<double>(k));
  };
  return CumulantSeq::analytic("ortmann-uniform", kappa, std::move(a));
}

CumulantSeq levy_area() {
  const double pi = std::numbers::pi;
  AnalyticR a;
  a.rho = ExtendedReal(1.0);
  a.r = [pi](double z) {
    if (std::abs(z) < 1e-3) return pi * pi / 3.0 * z + std::pow(pi, 4) / 45.0 * z * z * z;
    return 1.0 / z - pi / std::tan(pi * z);
  };
  a.dr = [pi](double z) {
    if (std::abs(z) < 1e-3) return pi * pi / 3.0 + std::pow(pi, 4) / 15.0 * z * z;
    const double s = std::sin(pi * z);
    return pi * pi / (s * s) - 1.0 / (z * z);
  };
  a.bracket = {0.0, 1.0};
  auto kappa = [](std::size_t k) {
    if (k == 0 || k % 2 == 1) return 0.0;
    return 2.0 * boost::math::zeta(static_cast<double>(k));
  };
  return CumulantSeq::analytic("levy-area", kappa, std::move(a));
}

CumulantSeq beta_tail(double alpha, double c, std::string name) {
  if (!(alpha > 1.0) || !(c > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "beta-tail needs alpha > 1 and c > 0");
  }
  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  AnalyticR a;
  a.rho = ExtendedReal(1.0);
  a.divergent_at_rho = false;
  a.r = [alpha, c](double t) {
    if (t >= 1.0) return c / alpha;
    return Quad::integrate(
        [=](double x) { return t * c * std::pow(1.0 - x, alpha) / (1.0 - x * t); }, 0.0, 1.0, 15,
        1e-14);
  };
  a.dr = [alpha, c](double t) {
    if (t >= 1.0) return c / (alpha - 1.0);
    return Quad::integrate(
        [=](double x) {
          const double d = 1.0 - x * t;
          return c * std::pow(1.0 - x, alpha) / (d * d);
        },
        0.0, 1.0, 15, 1e-14);
  };
  a.bracket = {0.0, 1.0};
  auto kappa = [alpha, c](std::size_t k) {
    if (k < 2) return 0.0;
    const double kd = static_cast<double>(k);
    return c * std::exp(std::lgamma(1.0 + alpha) + std::lgamma(kd - 1.0) - std::lgamma(kd + alpha));
  };
  return CumulantSeq::analytic(std::move(name), kappa, std::move(a));
}

}  // namespace

CumulantSeq CumulantSeq::finite(std::vector<double> kappa, std::string name) {
  CumulantSeq s;
  s.name_ = std::move(name);
  s.finite_ = true;
  s.values_ = std::move(kappa);
  return s;
}

CumulantSeq CumulantSeq::exact(std::vector<Rational> kappa, std::string name) {
  std::vector<double> values;
  values.reserve(kappa.size());
  for (const Rational& k : kappa) values.push_back(k.convert_to<double>());
  CumulantSeq s = finite(std::move(values), std::move(name));
  s.exact_ = std::move(kappa);
  return s;
}

CumulantSeq CumulantSeq::analytic(std::string name, std::function<double(std::size_t)> kappa,
                                  AnalyticR r) {
  CumulantSeq s;
  s.name_ = std::move(name);
  s.kappa_fn_ = std::move(kappa);
  s.analytic_ = std::move(r);
  return s;
}

CumulantSeq CumulantSeq::geometric_tail(std::vector<double> kappa, double q, std::string name) {
  if (kappa.empty() || !(q > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "geometric tail needs cumulants and a ratio q > 0");
  }
  const std::size_t m = kappa.size();
  const double last = kappa.back();
  auto kappa_at = [kappa, q, m, last](std::size_t k) {
    if (k == 0) return 0.0;
    return k <= m ? kappa[k - 1] : last * std::pow(q, static_cast<double>(k - m));
  };
  AnalyticR a;
  a.rho = ExtendedReal(1.0 / q);
  a.r = [kappa, q, m, last](double z) {
    double poly = 0.0;
    for (std::size_t n = m; n-- > 0;) poly = poly * z + kappa[n];
    return poly + last * q * std::pow(z, static_cast<double>(m)) / (1.0 - q * z);
  };
  a.dr = [kappa, q, m, last](double z) {
    double poly = 0.0;
    for (std::size_t n = m; n-- > 1;) poly = poly * z + static_cast<double>(n) * kappa[n];
    const double md = static_cast<double>(m);
    const double d = 1.0 - q * z;
    const double tail = last * q * (md * std::pow(z, md - 1.0) * d + q * std::pow(z, md)) / (d * d);
    return poly + tail;
  };
  a.bracket = {0.0, 1.0 / q};
  return analytic(std::move(name), kappa_at, std::move(a));
}

CumulantSeq CumulantSeq::untailed(std::vector<double> kappa, std::string name) {
  CumulantSeq s;
  s.name_ = std::move(name);
  s.values_ = std::move(kappa);
  return s;
}

CumulantSeq CumulantSeq::preset(std::string_view spec) {
  if (spec == "semicircle") return finite({0.0, 1.0}, "semicircle");
  if (spec == "ortmann-uniform") return ortmann_uniform();
  if (spec == "levy-area") return levy_area();
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? "" : spec.substr(colon + 1);
  if (head == "free-poisson") {
    const double lambda = rest.empty() ? 1.0 : parse_double(rest, spec);
    if (!(lambda > 0.0)) throw Error(ErrorKind::InvalidArgument, "free-poisson needs lambda > 0");
    return geometric_tail({lambda}, 1.0, std::string(spec));
  }
  if (head == "beta-tail") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorKind::InvalidArgument, "beta-tail expects beta-tail:alpha,c");
    }
    return beta_tail(parse_double(rest.substr(0, comma), spec),
                     parse_double(rest.substr(comma + 1), spec), std::string(spec));
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown preset '" + std::string(spec) +
                  "' (semicircle, free-poisson:L, ortmann-uniform, levy-area, beta-tail:A,C)");
}

double CumulantSeq::kappa(std::size_t k) const {
  if (k == 0) return 0.0;
  if (kappa_fn_) return kappa_fn_(k);
  return k <= values_.size() ? values_[k - 1] : 0.0;
}

std::optional<std::size_t> CumulantSeq::finite_length() const {
  if (finite_) return values_.size();
  return std::nullopt;
}

const std::vector<Rational>* CumulantSeq::exact_values() const {
  return exact_.empty() ? nullptr : &exact_;
}

double CumulantSeq::r(double t) const {
  if (analytic_) return analytic_->r(t);
  if (!finite_) throw Error(ErrorKind::RhoUndetermined, "no closed form for R");
  double acc = 0.0;
  for (std::size_t n = values_.size(); n-- > 0;) acc = acc * t + values_[n];
  return acc;
}

double CumulantSeq::dr(double t) const {
  if (analytic_) return analytic_->dr(t);
  if (!finite_) throw Error(ErrorKind::RhoUndetermined, "no closed form for R'");
  double acc = 0.0;
  for (std::size_t n = values_.size(); n-- > 1;) acc = acc * t + static_cast<double>(n) * values_[n];
  return acc;
}

ExtendedReal CumulantSeq::rho() const {
  if (analytic_) return analytic_->rho;
  if (finite_) return ExtendedReal::infinity();
  throw Error(ErrorKind::RhoUndetermined,
              "rho cannot be inferred from finitely many terms of an infinite sequence; give a "
              "finite list, a geometric tail or a preset");
}

WeightSeq CumulantSeq::weights() const {
  if (finite_) {
    std::vector<double> w{1.0};
    w.insert(w.end(), values_.begin(), values_.end());
    return WeightSeq::explicit_values(std::move(w));
  }
  if (!analytic_) throw Error(ErrorKind::RhoUndetermined, "weights need a known tail");
  FormulaWeights f;
  f.name = name_;
  auto fn = kappa_fn_;
  f.w = [fn](std::size_t k) { return k == 0 ? 1.0 : fn(k); };
  f.rho = analytic_->rho;
  f.divergent_at_rho = analytic_->divergent_at_rho;
  if (!f.divergent_at_rho && f.rho.is_finite()) {
    const double rho = f.rho.value();
    const double r = analytic_->r(rho);
    const double dr = analytic_->dr(rho);
    f.phi_at_rho = 1.0 + rho * r;
    f.dphi_at_rho = r + rho * dr;
  }
  return WeightSeq::formula(std::move(f));
}

std::string_view to_string(SupportBranch b) noexcept {
  return b == SupportBranch::NuGe1 ? "nu_ge_1" : "nu_lt_1";
}

SupportResult support_max(const CumulantSeq& kappa) {
  const std::size_t checked = kappa.finite_length().value_or(kCheckedTerms);
  bool beyond_first = false;
  for (std::size_t k = 1; k <= checked; ++k) {
    const double v = kappa.kappa(k);
    if (v < 0.0) {
      throw Error(ErrorKind::NegativeCumulant, "kappa_" + std::to_string(k) + " = " +
                                                   std::to_string(v) + " is negative");
    }
    if (k >= 2 && v > 0.0) beyond_first = true;
  }
  if (!beyond_first) {
    throw Error(ErrorKind::DiracInput, "all cumulants of order >= 2 vanish (Dirac mass)");
  }

  SupportResult out;
  out.rho = kappa.rho();
  const auto g = [&](double t) { return t * t * kappa.dr(t); };

  bool evaluable_at_rho = false;
  if (auto len = kappa.finite_length()) {
    std::size_t top = *len;
    while (top > 0 && kappa.kappa(top) == 0.0) --top;
    out.nu = ExtendedReal(static_cast<double>(top));
  } else if (kappa.weights().nu().is_infinite()) {
    out.nu = ExtendedReal::infinity();
  } else {
    const double rho = out.rho.value();
    out.nu = ExtendedReal(1.0 + (g(rho) - 1.0) / (rho * kappa.r(rho) + 1.0));
    evaluable_at_rho = true;
  }

  const bool at_one = out.nu.is_finite() && std::abs(out.nu.value() - 1.0) < 1e-9;
  if (out.nu.is_finite() && (out.nu.value() < 1.0 || at_one)) {
    const double rho = out.rho.value();
    out.xi = rho;
    out.s_max = 1.0 / rho + kappa.r(rho);
    out.branch = at_one ? SupportBranch::NuGe1 : SupportBranch::NuLt1;
    out.residual = at_one ? std::abs(g(rho) - 1.0) : 0.0;
    out.bracket = {rho, rho};
    return out;
  }

  double lo = 0.0;
  double hi;
  if (out.rho.is_infinite()) {
    hi = 1.0;
    while (g(hi) < 1.0) {
      lo = hi;
      hi *= 2.0;
    }
  } else if (evaluable_at_rho) {
    hi = out.rho.value();
  } else {
    const double rho = out.rho.value();
    hi = rho / 2.0;
    for (int i = 0; g(hi) < 1.0; ++i) {
      if (i > 60) throw Error(ErrorKind::NonconvergentSeries, "no bracket for xi below rho");
      lo = hi;
      hi = rho - (rho - hi) / 2.0;
    }
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) < 1.0 ? lo : hi) = mid;
  }
  out.bracket = {lo, hi};
  out.xi = (lo > 0.0 && std::abs(g(lo) - 1.0) < std::abs(g(hi) - 1.0)) ? lo : hi;
  out.residual = std::abs(g(out.xi) - 1.0);
  out.s_max = 1.0 / out.xi + kappa.r(out.xi);
  out.branch = SupportBranch::NuGe1;
  return out;
}

std::vector<Rational> moments_from_cumulants(std::span<const Rational> kappa, std::size_t count) {
  std::vector<Rational> w(count + 1, Rational(0));
  w[0] = 1;
  for (std::size_t k = 1; k <= count && k <= kappa.size(); ++k) w[k] = kappa[k - 1];
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    out.push_back(tree_partition_function(std::span<const Rational>(w.data(), n + 1), n));
  }
  return out;
}

std::vector<double> moments_from_cumulants(const CumulantSeq& kappa, std::size_t count) {
  if (const auto* exact = kappa.exact_values()) {
    std::vector<double> out;
    for (const Rational& m : moments_from_cumulants(*exact, count)) {
      out.push_back(m.convert_to<double>());
    }
    return out;
  }
  std::vector<double> w(count + 1);
  w[0] = 1.0;
  for (std::size_t k = 1; k <= count; ++k) w[k] = kappa.kappa(k);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) {
    out.push_back(tree_partition_function_approx(std::span<const double>(w.data(), n + 1), n));
  }
  return out;
}

std::vector<Rational> cumulants_from_moments(std::span<const Rational> moments, std::size_t count) {
  if (moments.size() < count) throw Error(ErrorKind::InvalidArgument, "not enough moments");
  std::vector<Rational> w(count + 1, Rational(0));
  w[0] = 1;
  std::vector<Rational> out;
  for (std::size_t n = 1; n <= count; ++n) {
    // With kappa_n = 0 the sum misses exactly the single-block term kappa_n.
    const Rational rest = tree_partition_function(std::span<const Rational>(w.data(), n + 1), n);
    w[n] = moments[n - 1] - rest;
    out.push_back(w[n]);
  }
  return out;
}

std::vector<double> cumulants_from_moments(std::span<const double> moments, std::size_t count) {
  if (moments.size() < count) throw Error(ErrorKind::InvalidArgument, "not enough moments");
  std::vector<double> w(count + 1, 0.0);
  w[0] = 1.0;
  std::vector<double> out;
  for (std::size_t n = 1; n <= count; ++n) {
    const double rest = tree_partition_function_approx(std::span<const double>(w.data(), n + 1), n);
    w[n] = moments[n - 1] - rest;
    out.push_back(w[n]);
  }
  return out;
}

}  // namespace ncpart
