#include "ncpart/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ncpart/error.hpp"

namespace ncpart {

namespace {

constexpr std::size_t kMaxTerms = 1'000'000;
constexpr double kRelTol = 1e-16;
constexpr int kMaxBisection = 200;

}  // namespace

struct WeightSeq::Impl {
  enum class Kind { Membership, Explicit, Formula };
  Kind kind;
  std::optional<MembershipSet> set;
  std::vector<double> values;
  FormulaWeights formula;

  double at(std::size_t k) const {
    switch (kind) {
      case Kind::Membership: return (k == 0 || set->contains(k)) ? 1.0 : 0.0;
      case Kind::Explicit: return k < values.size() ? values[k] : 0.0;
      case Kind::Formula: return formula.w(k);
    }
    return 0.0;
  }
};

WeightSeq WeightSeq::membership(MembershipSet set) {
  if (set.empty()) throw Error(ErrorKind::DegenerateSet, "the set of block sizes is empty");
  if (set.is_finite() && set.max_element() < 2) {
    throw Error(ErrorKind::DegenerateSet, "the set {1} allows only the all-singleton partition");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Membership;
  impl->set = std::move(set);
  return WeightSeq(std::move(impl));
}

WeightSeq WeightSeq::explicit_values(std::vector<double> values) {
  if (values.empty() || !(values[0] > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "w(0) must be positive");
  }
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidArgument, "weights must be finite and nonnegative");
    }
  }
  while (values.size() > 1 && values.back() == 0.0) values.pop_back();
  if (values.size() < 3) {
    throw Error(ErrorKind::InvalidArgument, "w(k) must be positive for some k >= 2");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Explicit;
  impl->values = std::move(values);
  return WeightSeq(std::move(impl));
}

WeightSeq WeightSeq::formula(FormulaWeights f) {
  if (!f.w) throw Error(ErrorKind::InvalidArgument, "formula weights need an evaluator");
  if (!(f.w(0) > 0.0)) throw Error(ErrorKind::InvalidArgument, "w(0) must be positive");
  if (f.rho.is_finite() && f.rho.value() < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "rho must be nonnegative");
  }
  bool some_positive = false;
  for (std::size_t k = 2; k <= 1000 && !some_positive; ++k) some_positive = f.w(k) > 0.0;
  if (!some_positive) {
    throw Error(ErrorKind::InvalidArgument, "w(k) must be positive for some k >= 2");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Impl::Kind::Formula;
  impl->formula = std::move(f);
  return WeightSeq(std::move(impl));
}

double WeightSeq::operator()(std::size_t k) const { return impl_->at(k); }

ExtendedReal WeightSeq::rho() const {
  switch (impl_->kind) {
    case Impl::Kind::Membership:
      return impl_->set->is_finite() ? ExtendedReal::infinity() : ExtendedReal(1.0);
    case Impl::Kind::Explicit: return ExtendedReal::infinity();
    case Impl::Kind::Formula: return impl_->formula.rho;
  }
  return ExtendedReal::infinity();
}

bool WeightSeq::finite_support() const {
  return impl_->kind == Impl::Kind::Explicit ||
         (impl_->kind == Impl::Kind::Membership && impl_->set->is_finite());
}

std::size_t WeightSeq::max_degree() const {
  if (impl_->kind == Impl::Kind::Explicit) return impl_->values.size() - 1;
  if (impl_->kind == Impl::Kind::Membership && impl_->set->is_finite()) {
    return impl_->set->max_element();
  }
  throw Error(ErrorKind::InvalidArgument, "max_degree needs finitely supported weights");
}

std::size_t WeightSeq::support_gcd() const {
  if (impl_->kind == Impl::Kind::Membership) return impl_->set->gcd();
  const std::size_t bound = finite_support() ? max_degree() : 10'000;
  std::size_t g = 0;
  for (std::size_t k = 1; k <= bound && g != 1; ++k) {
    if (impl_->at(k) > 0.0) g = std::gcd(g, k);
  }
  return g;
}

const MembershipSet* WeightSeq::membership_set() const {
  return impl_->kind == Impl::Kind::Membership ? &*impl_->set : nullptr;
}

const std::vector<double>* WeightSeq::explicit_list() const {
  return impl_->kind == Impl::Kind::Explicit ? &impl_->values : nullptr;
}

PowerMoments WeightSeq::moments(double t) const {
  if (!(t >= 0.0)) throw Error(ErrorKind::InvalidArgument, "Phi evaluated at negative t");
  PowerMoments m;
  if (finite_support()) {
    const std::size_t top = max_degree();
    double tk = 1.0;
    for (std::size_t k = 0; k <= top; ++k, tk *= t) {
      const double term = impl_->at(k) * tk;
      const double kd = static_cast<double>(k);
      m.m0 += term;
      m.m1 += kd * term;
      m.m2 += kd * kd * term;
    }
    return m;
  }

  const ExtendedReal r = rho();
  if (r.is_finite() && t >= r.value()) {
    const FormulaWeights* f = impl_->kind == Impl::Kind::Formula ? &impl_->formula : nullptr;
    if (t > r.value() || f == nullptr || f->divergent_at_rho || !f->phi_at_rho ||
        !f->dphi_at_rho) {
      throw Error(ErrorKind::NonconvergentSeries,
                  "Phi has no closed form at t = rho = " + r.to_string());
    }
    m.m0 = *f->phi_at_rho;
    m.m1 = t * *f->dphi_at_rho;
    m.m2 = f->d2phi_at_rho ? t * t * *f->d2phi_at_rho + m.m1
                           : std::numeric_limits<double>::infinity();
    return m;
  }

  // Envelope e_k bounds |w(k)| t^k. For 0/1 weights e_k = t^k, and the tail
  // after k is bounded geometrically; formula weights need a run of small terms.
  const bool zero_one = impl_->kind == Impl::Kind::Membership;
  const double slack = r.is_finite() ? 1.0 - t / r.value() : 1.0;
  std::size_t quiet = 0;
  double tk = 1.0;
  for (std::size_t k = 0; k < kMaxTerms; ++k) {
    const double wk = impl_->at(k);
    const double kd = static_cast<double>(k);
    const double term = wk * tk;
    m.m0 += term;
    m.m1 += kd * term;
    m.m2 += kd * kd * term;
    if (k > 0) {
      const double envelope = (zero_one ? tk : std::abs(term)) * kd * kd;
      bool small;
      if (zero_one) {
        const double ratio = t * (1.0 + 1.0 / kd) * (1.0 + 1.0 / kd);
        small = ratio < 1.0 && envelope * ratio / (1.0 - ratio) < kRelTol * m.m2 &&
                tk * ratio / (1.0 - ratio) < kRelTol * m.m0;
        if (small) return m;
      } else {
        small = envelope <= kRelTol * slack * std::min(m.m0, m.m2 > 0 ? m.m2 : m.m0);
        quiet = small ? quiet + 1 : 0;
        if (quiet >= 64) return m;
      }
    }
    tk *= t;
    if (tk == 0.0) return m;
  }
  throw Error(ErrorKind::NonconvergentSeries,
              "Phi(" + std::to_string(t) + ") did not converge within 10^6 terms");
}

double WeightSeq::psi(double t) const {
  const PowerMoments m = moments(t);
  return m.m1 / m.m0;
}

ExtendedReal WeightSeq::nu() const {
  if (finite_support()) return ExtendedReal(static_cast<double>(max_degree()));
  if (impl_->kind == Impl::Kind::Membership) return ExtendedReal::infinity();
  const FormulaWeights& f = impl_->formula;
  if (f.rho.is_infinite() || f.divergent_at_rho) return ExtendedReal::infinity();
  if (f.rho.value() == 0.0) return ExtendedReal(0.0);
  if (!f.phi_at_rho || !f.dphi_at_rho) {
    throw Error(ErrorKind::NonconvergentSeries,
                "nu needs Phi(rho) and Phi'(rho) in closed form, or a divergence flag");
  }
  return ExtendedReal(f.rho.value() * *f.dphi_at_rho / *f.phi_at_rho);
}

WeightSeq WeightSeq::tilted(double a, double b) const {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tilting constants must be positive");
  }
  if (finite_support()) {
    const std::size_t top = max_degree();
    std::vector<double> values(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
      values[k] = a * std::pow(b, static_cast<double>(k)) * impl_->at(k);
    }
    return explicit_values(std::move(values));
  }
  FormulaWeights f;
  std::ostringstream name;
  name << "tilted(" << describe() << ", a=" << a << ", b=" << b << ")";
  f.name = name.str();
  auto base = impl_;
  f.w = [base, a, b](std::size_t k) {
    const double wk = base->at(k);
    return wk == 0.0 ? 0.0 : a * std::pow(b, static_cast<double>(k)) * wk;
  };
  const ExtendedReal r = rho();
  f.rho = r.is_infinite() ? r : ExtendedReal(r.value() / b);
  if (impl_->kind == Impl::Kind::Membership) {
    f.divergent_at_rho = true;
  } else {
    const FormulaWeights& g = impl_->formula;
    f.divergent_at_rho = g.divergent_at_rho;
    if (g.phi_at_rho) f.phi_at_rho = a * *g.phi_at_rho;
    if (g.dphi_at_rho) f.dphi_at_rho = a * b * *g.dphi_at_rho;
    if (g.d2phi_at_rho) f.d2phi_at_rho = a * b * b * *g.d2phi_at_rho;
  }
  return formula(std::move(f));
}

std::string WeightSeq::describe() const {
  switch (impl_->kind) {
    case Impl::Kind::Membership: return impl_->set->name();
    case Impl::Kind::Explicit: {
      std::ostringstream out;
      out << "explicit:[";
      for (std::size_t k = 0; k < impl_->values.size(); ++k) {
        out << (k ? "," : "") << impl_->values[k];
      }
      out << "]";
      return out.str();
    }
    case Impl::Kind::Formula: return impl_->formula.name;
  }
  return "";
}

namespace {

// Smallest t in (0, rho] with f(t) >= 1 for a nondecreasing f with f(0) < 1.
template <class F>
double solve_unit_level(F&& f, ExtendedReal rho, bool rho_evaluable) {
  double lo = 0.0;
  double hi;
  if (rho.is_infinite()) {
    hi = 1.0;
    for (int i = 0; f(hi) < 1.0; ++i) {
      if (i > 1000) throw Error(ErrorKind::NonconvergentSeries, "no bracket for xi");
      lo = hi;
      hi *= 2.0;
    }
  } else if (rho_evaluable) {
    hi = rho.value();
  } else {
    const double r = rho.value();
    hi = r / 2.0;
    for (int i = 0; f(hi) < 1.0; ++i) {
      if (i > 60) throw Error(ErrorKind::NonconvergentSeries, "no bracket for xi below rho");
      lo = hi;
      hi = r - (r - hi) / 2.0;
    }
  }
  for (int i = 0; i < kMaxBisection; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (lo == 0.0) return hi;
  return std::abs(f(lo) - 1.0) < std::abs(f(hi) - 1.0) ? lo : hi;
}

}  // namespace

double TiltedLaw::pi(std::size_t k) const {
  const double wk = weights_(k);
  if (wk <= 0.0) return 0.0;
  return std::exp(std::log(wk) + static_cast<double>(k) * log_xi_ - log_phi_);
}

std::vector<double> TiltedLaw::pmf(std::size_t kmax) const {
  std::vector<double> out(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) out[k] = pi(k);
  return out;
}

double TiltedLaw::tail_above(std::size_t k) const {
  if (weights_.finite_support()) {
    double sum = 0.0;
    for (std::size_t j = k + 1; j <= weights_.max_degree(); ++j) sum += pi(j);
    return sum;
  }
  double cdf = 0.0;
  for (std::size_t j = 0; j <= k; ++j) cdf += pi(j);
  const double rough = 1.0 - cdf;
  if (rough > 1e-6) return std::max(rough, 0.0);
  double sum = 0.0;
  std::size_t quiet = 0;
  for (std::size_t j = k + 1; j < k + 1 + kMaxTerms; ++j) {
    const double p = pi(j);
    sum += p;
    quiet = (p <= kRelTol * sum) ? quiet + 1 : 0;
    if (quiet >= 64) break;
  }
  return sum;
}

bool TiltedLaw::critical() const noexcept {
  return nu_.is_infinite() || nu_.value() >= 1.0;
}

TiltedLaw equivalent_distribution(const WeightSeq& w) {
  TiltedLaw law(w);
  law.rho_ = w.rho();
  if (law.rho_.is_finite() && law.rho_.value() == 0.0) {
    throw Error(ErrorKind::RhoZero, "rho = 0: no equivalent probability distribution");
  }
  law.nu_ = w.nu();
  const bool rho_evaluable = law.rho_.is_finite() && [&] {
    try {
      w.moments(law.rho_.value());
      return true;
    } catch (const Error&) {
      return false;
    }
  }();

  const bool above_one = law.nu_.is_infinite() || law.nu_.value() > 1.0;
  if (above_one) {
    law.xi_ = solve_unit_level([&](double t) { return w.psi(t); }, law.rho_, rho_evaluable);
  } else {
    law.xi_ = law.rho_.value();
  }
  const PowerMoments m = w.moments(law.xi_);
  law.phi_at_xi_ = m.m0;
  law.log_xi_ = std::log(law.xi_);
  law.log_phi_ = std::log(m.m0);
  law.mean_ = above_one ? m.m1 / m.m0 : law.nu_.value();
  if (std::isfinite(m.m2)) {
    law.variance_ = ExtendedReal(std::max(0.0, m.m2 / m.m0 - law.mean_ * law.mean_));
  } else {
    law.variance_ = ExtendedReal::infinity();
  }
  return law;
}

std::pair<double, TiltedLaw> xi_for_set(const MembershipSet& set) {
  if (set.empty()) throw Error(ErrorKind::DegenerateSet, "the set of block sizes is empty");
  if (set.is_finite() && set.max_element() < 2) {
    throw Error(ErrorKind::DegenerateSet, "the set {1} has no tilt parameter");
  }
  // F(t) = sum_{i in A} (i - 1) t^i; the equation reads F(xi) = 1.
  auto f = [&](double t) {
    if (set.is_finite()) {
      double sum = 0.0;
      for (std::size_t i : set.members()) sum += (static_cast<double>(i) - 1.0) * std::pow(t, i);
      return sum;
    }
    double sum = 0.0;
    double ti = t;
    for (std::size_t i = 1; i < kMaxTerms; ++i, ti *= t) {
      const double id = static_cast<double>(i);
      if (set.contains(i)) sum += (id - 1.0) * ti;
      const double ratio = t * (1.0 + 1.0 / id);
      if (ratio < 1.0 && id * ti * ratio / (1.0 - ratio) < kRelTol * sum) return sum;
      if (ti == 0.0) return sum;
    }
    throw Error(ErrorKind::NonconvergentSeries, "xi equation did not converge");
  };
  const ExtendedReal rho = set.is_finite() ? ExtendedReal::infinity() : ExtendedReal(1.0);
  const double xi = solve_unit_level(f, rho, false);
  return {xi, equivalent_distribution(WeightSeq::membership(set))};
}

}  // namespace ncpart
