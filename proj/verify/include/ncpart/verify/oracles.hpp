#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "ncpart/luka_walk.hpp"
#include "ncpart/partition.hpp"
#include "ncpart/weights.hpp"

/// Slow reference implementations used to cross-check the library.
namespace ncpart::verify {

/// Direct quadruple test: no a<b<c<d with {a,c} and {b,d} in different blocks.
bool noncrossing_by_quadruples(const std::vector<Block>& blocks, std::size_t n);

/// Every set partition of [n] (restricted growth strings), blocks increasing.
std::vector<std::vector<Block>> all_set_partitions(std::size_t n);

/// Kreweras complement as the coarsest P' on the interleaved points 1' < ... < n'
/// with P u P' non-crossing, by exhaustive search (n <= 8).
NCPartition kreweras_by_refinement(const NCPartition& p);

/// Partition whose blocks are {s^j_1, ..., s^j_k} with
/// s^j_l = min{m >= j+1 : W_m = W_{j+1} - (l-1)}, read off the walk by scanning.
NCPartition partition_from_walk_by_definition(const LukaWalk& w);

/// Exact law of the weighted partition model on NC(n), by enumeration.
struct ExactLaw {
  std::vector<NCPartition> partitions;
  std::vector<double> probabilities;
  std::map<std::vector<Block>, std::size_t> index;
};
ExactLaw exact_partition_law(const WeightSeq& w, std::size_t n);

/// Upper-tail p-value of Pearson's statistic over cells with positive probability.
double chi_square_pvalue(const std::vector<std::size_t>& observed,
                         const std::vector<double>& probabilities);

/// sup |F_n - F| for a sample against a continuous CDF.
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);
/// sup |F_a - F_b| for two samples.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Trapezoid rule on the limit chord density after the substitution u = sqrt(1-2x).
double trapezoid_chord_cdf(double x, std::size_t steps);

/// Exact law of the size of the block containing 1 under the weighted model on NC(n).
std::vector<double> exact_s1_law(const WeightSeq& w, std::size_t n);

}  // namespace ncpart::verify
