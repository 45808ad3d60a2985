#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>

namespace gencorr::rng {

// SplitMix64-style avalanche of up to three words into one seed. Used to
// derive independent, order-insensitive substreams: one replicate's stream
// is mix(base_seed, rep_index, attempt).
std::uint64_t mix(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

// Seeded generator with self-contained distribution transforms, so draws
// are reproducible across platforms and standard-library versions
// (std::normal_distribution and friends are implementation-defined).
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on (0, 1], 53-bit resolution.
  double uniform01();

  // Standard normal via Box-Muller; the paired draw is cached.
  double normal();
  double normal(double mean, double sd) { return mean + sd * normal(); }

  bool bernoulli(double prob) { return uniform01() <= prob; }

  // Knuth's product-of-uniforms method; fine for the small lambdas used here.
  int poisson(double lambda);

  // Fisher-Yates shuffle of [0, n); used for train/validation splits.
  std::vector<Eigen::Index> permutation(Eigen::Index n);

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Lower-triangular Cholesky factor of the AR(1) correlation matrix
// [rho^|l-m|], q x q.
Eigen::MatrixXd ar1_cholesky(Eigen::Index q, double rho);

}  // namespace gencorr::rng
