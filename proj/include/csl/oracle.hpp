#pragma once

// Formula-independent routes to Σ(Y) = [ℤⁿ : ℤⁿ ∩ Yℤⁿ].
//
// Both use ℤⁿ ∩ Yℤⁿ = Y·M with M = {z ∈ ℤⁿ : Z·z ≡ 0 (mod q)}. Since
// |det Y| = 1 the index equals [ℤⁿ : M]. The counting route never touches a
// Smith form of Z; the Hermite route only uses row-style Hermite reduction.

#include <cstdint>

#include "csl/index.hpp"
#include "csl/linalg.hpp"
#include "csl/ortho.hpp"

namespace csl {

inline constexpr std::uint64_t kDefaultCountCap = 10'000'000ULL;

/// Rows generate ℤⁿ ∩ Yℤⁿ, in Hermite form; index == |det basis|.
struct IntersectionBasis {
  IntMatrix basis;
  Integer index;
};

/// Σ = qⁿ / #{z ∈ (ℤ/q)ⁿ : Z·z ≡ 0}, counted exactly over all residues
/// (meet-in-the-middle over two halves of the coordinates).
/// Throws CapExceeded when qⁿ > cap.
IndexReport index_by_counting(const RationalIsometry& y, std::uint64_t cap = kDefaultCountCap);

/// Whether index_by_counting would run under `cap`.
bool counting_feasible(const RationalIsometry& y, std::uint64_t cap = kDefaultCountCap);

IntersectionBasis intersection_hnf(const RationalIsometry& y);

/// intersection_hnf wrapped as a report.
IndexReport index_by_hnf(const RationalIsometry& y);

}  // namespace csl
