#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "csl/linalg.hpp"
#include "csl/ortho.hpp"

namespace csl {

enum class IndexMethod { fortes, closed_form, reflection, coprime_product, oracle_count, oracle_hnf };

std::string_view to_string(IndexMethod method);

/// Σ(Y) = [ℤⁿ : ℤⁿ ∩ Yℤⁿ] together with the data that produced it.
///
/// `factors` depends on the method:
///   fortes          the per-factor contributions q/gcd(q, d_i)
///   closed_form     (q, m, δ_m) with m = ⌊n/2⌋
///   reflection      (vᵀv)
///   coprime_product the reduced norms r_i
///   oracle_count    (q, number of residue solutions)
///   oracle_hnf      the diagonal of the intersection basis in Hermite form
/// `invariant_factors` holds d_1..d_n whenever the method computed them.
struct IndexReport {
  Integer sigma;
  IndexMethod method;
  std::vector<Integer> factors;
  std::vector<Integer> invariant_factors;
};

/// Σ = Π q/gcd(q, d_i) over the invariant factors d_i of Z.
IndexReport index_fortes(const RationalIsometry& y);

/// Σ = q^m / δ_m with m = ⌊n/2⌋. δ_m comes from the Smith form; for n ≤ 8 it is
/// also recomputed by minor enumeration and a mismatch throws ConsistencyError.
IndexReport index_closed_form(const RationalIsometry& y);

/// Σ of the reflection along v straight from vᵀv, without building a matrix.
IndexReport index_reflection(const IntVector& v);
IndexReport index_reflection(const ReflectionAxis& axis);

/// Σ(R_{v1}···R_{vk}) = r_1···r_k. Throws CoprimalityViolated unless the reduced
/// norms are pairwise coprime.
IndexReport index_coprime_product(std::span<const IntVector> axes);

/// Pairs (d_i, d_{n+1-i}) for i = 1..⌈n/2⌉.
std::vector<std::pair<Integer, Integer>> palindrome_factors(const RationalIsometry& y);

}  // namespace csl
