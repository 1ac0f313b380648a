#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace csl {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Integer>& entries() const noexcept { return data_; }

  IntMatrix transpose() const;
  IntMatrix scaled(const Integer& factor) const;
  /// Exact division of every entry; throws DomainError when some entry is not a multiple.
  IntMatrix divided_exactly(const Integer& divisor) const;
  IntVector apply(std::span<const Integer> v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// (1/denominator)·numerator, kept canonical: denominator > 0 and coprime to the
/// gcd of the numerator entries.
class RatMatrix {
 public:
  RatMatrix(IntMatrix numerator, Integer denominator);
  explicit RatMatrix(IntMatrix integral) : RatMatrix(std::move(integral), Integer(1)) {}

  const IntMatrix& numerator() const noexcept { return numerator_; }
  const Integer& denominator() const noexcept { return denominator_; }
  std::size_t rows() const noexcept { return numerator_.rows(); }
  std::size_t cols() const noexcept { return numerator_.cols(); }
  mpq_class at(std::size_t r, std::size_t c) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  IntMatrix numerator_;
  Integer denominator_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& a);

/// gcd of the absolute values of the nonzero entries. Throws DomainError on the zero matrix.
Integer gcd_entries(const IntMatrix& a);
Integer gcd_entries(std::span<const Integer> v);

/// Number of i×i minors above which minors_gcd refuses to enumerate.
inline constexpr unsigned long long kMaxMinorCount = 1'000'000ULL;

/// δ_i: gcd of all i×i minor determinants, by direct enumeration. Reference route only;
/// throws DomainError when the minor count exceeds kMaxMinorCount or all minors vanish.
Integer minors_gcd(const IntMatrix& a, std::size_t order);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);

/// Binomial coefficient, saturating at ULLONG_MAX.
unsigned long long binomial(std::size_t n, std::size_t k);

std::string to_string(const Integer& value);

}  // namespace csl
