#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ncpart/membership.hpp"
#include "ncpart/partition.hpp"
#include "ncpart/plane_tree.hpp"

namespace ncpart {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Z_n = sum over NC partitions of [n] of prod_B w(|B|), computed exactly as
/// (1/(n+1)) [t^n] Phi(t)^{n+1}. w[k] is w(k); missing entries are zero;
/// w[0] must be 1. Throws InvalidArgument.
Rational tree_partition_function(std::span<const Rational> w, std::size_t n);

/// Floating-point variant of tree_partition_function. Coefficients are
/// accumulated in double, so cancellation-free but subject to rounding.
double tree_partition_function_approx(std::span<const double> w, std::size_t n);

/// Number of NC partitions of [n] with all block sizes in the set.
BigInt count_constrained(const MembershipSet& set, std::size_t n);

enum class ClosedFormMode { Equal, Divisible };

/// k-equal: C(kn, n) / ((k-1)n + 1), counting partitions of [kn] into blocks
/// of size k. k-divisible: C((k+1)n, n) / (kn + 1), blocks of size divisible by k.
BigInt closed_form_counts(std::size_t k, std::size_t n, ClosedFormMode mode);

BigInt binomial(std::size_t n, std::size_t k);
BigInt catalan(std::size_t n);

/// Natural log of a positive big integer.
double log_big(const BigInt& x);

/// log of gcd(A) sqrt(Phi(xi) / (2 pi Phi''(xi))) (Phi(xi)/xi)^{n+1} n^{-3/2}.
/// Throws NotDivisible or NonconvergentSeries.
double log_asymptotic_count(const MembershipSet& set, std::size_t n);
double asymptotic_count(const MembershipSet& set, std::size_t n);

/// Visits every NC partition of [n] once. Throws TooLarge for n > 16.
void brute_force_enumerate(std::size_t n, const std::function<void(const NCPartition&)>& visit);

/// Visits every plane tree with n + 1 vertices once, in lexicographic order of
/// degree sequences. Throws TooLarge for n > 16.
void enumerate_trees(std::size_t n, const std::function<void(const PlaneTree&)>& visit);

}  // namespace ncpart
