#include "csl/oracle.hpp"

#include <algorithm>

#include "csl/errors.hpp"
#include "csl/normal_form.hpp"

namespace csl {
namespace {

Integer power(const Integer& base, std::size_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

// Exact count of {x ∈ (ℤ/q)ⁿ : Z·x ≡ 0} by meet-in-the-middle: the columns are
// split into a low half (sorted, never larger) and a high half, every residue assignment of each half is
// enumerated in mixed-radix order, and x = (lo, hi) solves the system exactly
// when Z_lo·lo ≡ -Z_hi·hi. Each image is packed into a base-q key < qⁿ.
class ResidueCounter {
 public:
  ResidueCounter(const IntMatrix& z, std::uint64_t modulus) : n_(z.rows()), q_(modulus), coeff_(n_ * n_) {
    const Integer qz(static_cast<unsigned long>(modulus));
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        Integer m;
        mpz_fdiv_r(m.get_mpz_t(), z(r, c).get_mpz_t(), qz.get_mpz_t());
        coeff_[c * n_ + r] = m.get_ui();  // column-major
      }
    }
  }

  std::uint64_t count() const {
    const std::size_t split = n_ / 2;
    std::vector<std::uint64_t> low = images(0, split, false);
    std::vector<std::uint64_t> high = images(split, n_, true);
    std::sort(low.begin(), low.end());
    std::uint64_t total = 0;
    for (std::uint64_t key : high) {
      auto [first, last] = std::equal_range(low.begin(), low.end(), key);
      total += static_cast<std::uint64_t>(last - first);
    }
    return total;
  }

 private:
  // Keys of Σ_{c in [first, last)} x_c·Z[:, c] (negated if asked) over all x.
  std::vector<std::uint64_t> images(std::size_t first, std::size_t last, bool negate) const {
    const std::size_t width = last - first;
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < width; ++i) size *= q_;
    std::vector<std::uint64_t> keys;
    keys.reserve(size);
    std::vector<std::uint64_t> digits(width, 0);
    std::vector<std::uint64_t> sums(n_, 0);
    while (true) {
      std::uint64_t key = 0;
      for (std::size_t r = n_; r-- > 0;) {
        const std::uint64_t v = negate && sums[r] != 0 ? q_ - sums[r] : sums[r];
        key = key * q_ + v;
      }
      keys.push_back(key);
      // Odometer step. A digit wrapping from q-1 to 0 has added its column q
      // times in total, which is ≡ 0, so the running sums stay exact.
      std::size_t k = 0;
      for (; k < width; ++k) {
        const std::uint64_t* column = &coeff_[(first + k) * n_];
        for (std::size_t r = 0; r < n_; ++r) {
          const std::uint64_t s = sums[r] + column[r];
          sums[r] = s >= q_ ? s - q_ : s;
        }
        if (++digits[k] < q_) break;
        digits[k] = 0;
      }
      if (k == width) break;
    }
    return keys;
  }

  std::size_t n_;
  std::uint64_t q_;
  std::vector<std::uint64_t> coeff_;
};

}  // namespace

bool counting_feasible(const RationalIsometry& y, std::uint64_t cap) {
  return power(y.q(), y.dimension()) <= Integer(static_cast<unsigned long>(cap));
}

IndexReport index_by_counting(const RationalIsometry& y, std::uint64_t cap) {
  const std::size_t n = y.dimension();
  const Integer total = power(y.q(), n);
  if (total > Integer(static_cast<unsigned long>(cap))) {
    throw CapExceeded("residue count " + total.get_str() + " exceeds cap " + std::to_string(cap));
  }
  ResidueCounter counter(y.z(), y.q().get_ui());
  const Integer solutions(static_cast<unsigned long>(counter.count()));
  if (!mpz_divisible_p(total.get_mpz_t(), solutions.get_mpz_t())) {
    throw ConsistencyError("solution count " + solutions.get_str() + " does not divide " + total.get_str());
  }
  return IndexReport{total / solutions, IndexMethod::oracle_count, {y.q(), solutions}, {}};
}

IntersectionBasis intersection_hnf(const RationalIsometry& y) {
  const std::size_t n = y.dimension();
  const IntMatrix& z = y.z();
  // Integer row vectors (x, w) with x·Zᵀ - q·w = 0 are the left kernel of [Zᵀ; -qI].
  IntMatrix stacked(2 * n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) stacked(r, c) = z(c, r);
  for (std::size_t i = 0; i < n; ++i) stacked(n + i, i) = -y.q();
  HermiteForm hf = hermite_normal_form(stacked);

  // The last n rows of u span the kernel; projecting to x is injective, so
  // their first n coordinates form a basis of M.
  IntMatrix solutions(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) solutions(r, c) = hf.u(n + r, c);

  IntMatrix mapped = mat_mul(solutions, z.transpose()).divided_exactly(y.q());
  HermiteForm canonical = hermite_normal_form(mapped);
  Integer index = 1;
  for (std::size_t i = 0; i < n; ++i) index *= canonical.h(i, i);
  return IntersectionBasis{std::move(canonical.h), std::move(index)};
}

IndexReport index_by_hnf(const RationalIsometry& y) {
  IntersectionBasis ib = intersection_hnf(y);
  std::vector<Integer> diag;
  for (std::size_t i = 0; i < ib.basis.rows(); ++i) diag.push_back(ib.basis(i, i));
  return IndexReport{std::move(ib.index), IndexMethod::oracle_hnf, std::move(diag), {}};
}

}  // namespace csl
