#include "ncpart/series.hpp"

#include <cmath>
#include <numbers>

#include "ncpart/bijections.hpp"
#include "ncpart/error.hpp"
#include "ncpart/weights.hpp"

namespace ncpart {

namespace {

template <class T>
std::vector<T> multiply_truncated(const std::vector<T>& a, const std::vector<T>& b,
                                  std::size_t degree) {
  std::vector<T> out(std::min(degree + 1, a.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// [t^degree] p(t)^power, choosing between iterated multiplication (cheap for
// sparse p) and repeated squaring (cheap for dense p).
template <class T>
T power_coefficient(std::vector<T> p, std::size_t power, std::size_t degree) {
  if (p.size() > degree + 1) p.resize(degree + 1);
  std::size_t support = 0;
  for (const T& c : p) support += (c != 0);
  const double n = static_cast<double>(degree + 1);
  const double iterated_cost = static_cast<double>(power) * n * static_cast<double>(support);
  const double squaring_cost = 2.0 * std::log2(static_cast<double>(power) + 1.0) * n * n;

  std::vector<T> result{T(1)};
  if (iterated_cost <= squaring_cost) {
    for (std::size_t i = 0; i < power; ++i) result = multiply_truncated(result, p, degree);
  } else {
    std::vector<T> base = std::move(p);
    for (std::size_t e = power; e > 0; e >>= 1) {
      if (e & 1) result = multiply_truncated(result, base, degree);
      if (e > 1) base = multiply_truncated(base, base, degree);
    }
  }
  return degree < result.size() ? result[degree] : T(0);
}

}  // namespace

Rational tree_partition_function(std::span<const Rational> w, std::size_t n) {
  if (w.empty() || w[0] != 1) throw Error(ErrorKind::InvalidArgument, "w(0) must be 1");
  // With d the lcm of the denominators, b(k) = d^k w(k) is an integer and
  // Z_n(w) = Z_n(b) / d^n, since block sizes add up to n.
  const std::size_t top = std::min(w.size() - 1, n);
  BigInt d = 1;
  for (std::size_t k = 1; k <= top; ++k) {
    d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(w[k]));
  }
  std::vector<BigInt> b(top + 1);
  BigInt dk = 1;
  for (std::size_t k = 0; k <= top; ++k, dk *= d) {
    b[k] = boost::multiprecision::numerator(w[k]) * (dk / boost::multiprecision::denominator(w[k]));
  }
  const BigInt z = power_coefficient(std::move(b), n + 1, n) / (n + 1);
  return Rational(z, boost::multiprecision::pow(d, static_cast<unsigned>(n)));
}

double tree_partition_function_approx(std::span<const double> w, std::size_t n) {
  if (w.empty() || w[0] != 1.0) throw Error(ErrorKind::InvalidArgument, "w(0) must be 1");
  std::vector<double> phi(w.begin(), w.end());
  return power_coefficient(std::move(phi), n + 1, n) / static_cast<double>(n + 1);
}

BigInt count_constrained(const MembershipSet& set, std::size_t n) {
  if (set.empty()) throw Error(ErrorKind::DegenerateSet, "the set of block sizes is empty");
  if (n == 0) return 1;
  std::vector<BigInt> phi(n + 1, 0);
  phi[0] = 1;
  for (std::size_t k : set.members_up_to(n)) phi[k] = 1;
  return power_coefficient(std::move(phi), n + 1, n) / (n + 1);
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt catalan(std::size_t n) { return binomial(2 * n, n) / (n + 1); }

BigInt closed_form_counts(std::size_t k, std::size_t n, ClosedFormMode mode) {
  if (k < 2 || n < 1) throw Error(ErrorKind::InvalidArgument, "need k >= 2 and n >= 1");
  if (mode == ClosedFormMode::Equal) return binomial(k * n, n) / ((k - 1) * n + 1);
  return binomial((k + 1) * n, n) / (k * n + 1);
}

double log_big(const BigInt& x) {
  if (x <= 0) throw Error(ErrorKind::InvalidArgument, "log of a nonpositive integer");
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 53) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 53;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

double log_asymptotic_count(const MembershipSet& set, std::size_t n) {
  const std::size_t g = set.gcd();
  if (n == 0 || n % g != 0) {
    throw Error(ErrorKind::NotDivisible, std::to_string(n) + " is not a positive multiple of " +
                                             "gcd = " + std::to_string(g));
  }
  const WeightSeq w = WeightSeq::membership(set);
  const TiltedLaw law = equivalent_distribution(w);
  const double xi = law.xi();
  const PowerMoments m = w.moments(xi);
  const double phi = m.m0;
  const double phi2 = (m.m2 - m.m1) / (xi * xi);
  const double nd = static_cast<double>(n);
  return std::log(static_cast<double>(g)) +
         0.5 * std::log(phi / (2.0 * std::numbers::pi * phi2)) +
         (nd + 1.0) * std::log(phi / xi) - 1.5 * std::log(nd);
}

double asymptotic_count(const MembershipSet& set, std::size_t n) {
  return std::exp(log_asymptotic_count(set, n));
}

void enumerate_trees(std::size_t n, const std::function<void(const PlaneTree&)>& visit) {
  if (n > 16) throw Error(ErrorKind::TooLarge, "exhaustive enumeration is limited to n <= 16");
  std::vector<std::size_t> degrees(n + 1, 0);
  // open = number of vertices still owed (walk height + 1) before position j.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t j, std::size_t open) {
    const std::size_t remaining = n + 1 - j;
    if (j == n) {
      degrees[n] = 0;
      if (open == 1) visit(PlaneTree::from_degrees(degrees));
      return;
    }
    // After this vertex, open - 1 + d vertices are owed and must fit in
    // the remaining - 1 positions; at least one must be owed.
    for (std::size_t d = (open == 1 ? 1 : 0); open - 1 + d <= remaining - 1; ++d) {
      degrees[j] = d;
      extend(j + 1, open - 1 + d);
    }
  };
  extend(0, 1);
}

void brute_force_enumerate(std::size_t n, const std::function<void(const NCPartition&)>& visit) {
  enumerate_trees(n, [&](const PlaneTree& t) { visit(p_circ(t)); });
}

}  // namespace ncpart
