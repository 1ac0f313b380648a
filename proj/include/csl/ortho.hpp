#pragma once

#include <cstdint>
#include <vector>

#include "csl/linalg.hpp"

namespace csl {

/// A rational orthogonal matrix Y = (1/q)·Z in canonical form: q > 0, the entries
/// of Z have gcd 1, and Zᵀ·Z = q²·I. Instances are only produced by the
/// validating factories below.
class RationalIsometry {
 public:
  static RationalIsometry identity(std::size_t n);
  /// Validates (q, z) as given; throws NotOrthogonal or DomainError.
  static RationalIsometry from_parts(Integer q, IntMatrix z);

  std::size_t dimension() const noexcept { return z_.rows(); }
  const Integer& q() const noexcept { return q_; }
  const IntMatrix& z() const noexcept { return z_; }
  RatMatrix as_rational() const { return RatMatrix(z_, q_); }
  bool is_identity() const;

  friend bool operator==(const RationalIsometry&, const RationalIsometry&) = default;

 private:
  RationalIsometry(Integer q, IntMatrix z) : q_(std::move(q)), z_(std::move(z)) {}

  Integer q_;
  IntMatrix z_;
};

enum class Parity { odd, even };

/// Primitive reflection axis with its first nonzero coordinate positive.
class ReflectionAxis {
 public:
  /// Divides out the content and fixes the sign; throws DomainError for v = 0.
  explicit ReflectionAxis(IntVector v);

  const IntVector& v() const noexcept { return v_; }
  std::size_t dimension() const noexcept { return v_.size(); }
  const Integer& norm() const noexcept { return norm_; }  // vᵀv
  Parity parity() const noexcept { return mpz_odd_p(norm_.get_mpz_t()) ? Parity::odd : Parity::even; }
  /// vᵀv when odd, vᵀv/2 when even: the denominator q of the reflection.
  Integer reduced_norm() const;

  friend bool operator==(const ReflectionAxis& a, const ReflectionAxis& b) { return a.v_ == b.v_; }

 private:
  IntVector v_;
  Integer norm_;
};

/// Exact orthogonality test plus canonicalization to (q, Z).
RationalIsometry from_rational_matrix(const RatMatrix& m);

/// R_v = I - 2vvᵀ/vᵀv in canonical form.
RationalIsometry reflection(const ReflectionAxis& axis);
RationalIsometry reflection(const IntVector& v);

/// (1/(a.q·b.q))·a.z·b.z, with the common factor of numerator and denominator removed.
RationalIsometry compose(const RationalIsometry& a, const RationalIsometry& b);

RationalIsometry transpose_inverse(const RationalIsometry& a);

/// SplitMix64. Chosen because it is fully specified by a few lines of integer
/// arithmetic, so corpora can be regenerated outside C++.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [lo, hi] by rejection on the top of the 64-bit range.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// Axis with coordinates drawn uniformly from [-bound, bound], redrawn while zero.
ReflectionAxis random_axis(SplitMix64& rng, std::size_t n, std::int64_t bound);

/// Product of `reflections` seeded random reflections, in draw order.
RationalIsometry random_isometry(std::size_t n, std::size_t reflections, std::int64_t coordinate_bound,
                                 std::uint64_t seed);

/// Reproducible corpus: element i is random_isometry(n, k_i, bound, seed_i) where
/// seed_i is the i-th output of SplitMix64(seed) and k_i = 1 + seed_i mod max_reflections.
std::vector<RationalIsometry> isometry_corpus(std::size_t n, std::size_t count, std::size_t max_reflections,
                                              std::int64_t coordinate_bound, std::uint64_t seed);

}  // namespace csl
