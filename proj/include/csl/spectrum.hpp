#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "csl/linalg.hpp"
#include "csl/ortho.hpp"

namespace csl {

/// target == Σ squares[i]²; content is the gcd of `squares` (0 only for target 0).
struct SquareWitness {
  Integer target;
  std::vector<Integer> squares;
  Integer content;
};

/// Reflection axes whose product has index `sigma` in dimension `dimension`.
/// Only built through make_index_witness, which checks the index with the
/// Hermite-form oracle.
struct IndexWitness {
  Integer sigma;
  std::size_t dimension;
  std::vector<ReflectionAxis> axes;

  RationalIsometry isometry() const;
};

/// Composes the axes in order, runs the Hermite-form oracle and throws
/// ConsistencyError unless the index equals `sigma`.
IndexWitness make_index_witness(std::size_t dimension, std::vector<ReflectionAxis> axes, const Integer& sigma);

/// True when m = 4^a(8k+7), i.e. m is not a sum of three squares.
bool is_excluded_three_square_form(const Integer& m);

/// (a, b, c) with a ≥ b ≥ c ≥ 0 and a²+b²+c² = m by bounded search, taking the
/// largest a first; std::nullopt exactly when no such triple exists.
std::optional<SquareWitness> three_square_decompose(const Integer& m);

/// Four integers with gcd 1 whose squares sum to the odd number m: writes
/// 2m-1 = a²+b²+c² with c odd, a = 2u, b = 2v, c = 2t+1 and returns
/// (u+v, u-v, t, t+1).
SquareWitness four_square_odd_decompose(const Integer& m);

/// Canonical (nonincreasing, nonnegative) primitive vectors of ℤⁿ with vᵀv = norm,
/// in descending lexicographic order.
std::vector<IntVector> primitive_shell(std::size_t n, const Integer& norm, std::size_t limit = SIZE_MAX);

/// A reflection axis with index sigma, searched on the shells vᵀv = sigma (odd
/// sigma only) and vᵀv = 2·sigma. std::nullopt means both shells hold no
/// primitive vector.
std::optional<ReflectionAxis> find_reflection_axis(std::size_t n, const Integer& sigma);

/// Every sigma ≤ bound that some single reflection of ℤⁿ attains, with a verified witness.
std::map<Integer, IndexWitness> reflection_spectrum(std::size_t n, std::uint64_t sigma_bound);

/// One reflection per target (none for target 1), so the composition has index
/// equal to the product. Throws CoprimalityViolated unless the targets are
/// pairwise coprime; std::nullopt when a target has no reflection in dimension n.
std::optional<IndexWitness> coprime_witness(std::span<const Integer> targets, std::size_t n);

/// Odd sigma in dimension n ≥ 4: the reflection along the four-square
/// decomposition of sigma, zero-padded.
IndexWitness four_square_witness(const Integer& sigma, std::size_t n);

/// Any sigma in dimension n ≥ 5. With sigma = 2^a·o, o odd: the axis (1, w) where
/// w is the four-square decomposition of 2^(a+1)-1 has index 2^a, and the
/// four-square axis of o has index o; the two indices are coprime.
IndexWitness covering_witness(const Integer& sigma, std::size_t n);

}  // namespace csl
