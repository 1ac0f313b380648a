#include "csl/linalg.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "csl/errors.hpp"

namespace csl {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::scaled(const Integer& factor) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

IntMatrix IntMatrix::divided_exactly(const Integer& divisor) const {
  if (sgn(divisor) == 0) throw DomainError("division by zero");
  IntMatrix out = *this;
  for (auto& x : out.data_) {
    if (!mpz_divisible_p(x.get_mpz_t(), divisor.get_mpz_t())) {
      throw DomainError("entry " + x.get_str() + " is not divisible by " + divisor.get_str());
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
  }
  return out;
}

IntVector IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw DimensionError("vector length does not match matrix columns");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, a), (*this)(r, b));
}

RatMatrix::RatMatrix(IntMatrix numerator, Integer denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (sgn(denominator_) == 0) throw DomainError("zero denominator");
  if (sgn(denominator_) < 0) {
    denominator_ = -denominator_;
    numerator_ = numerator_.scaled(-1);
  }
  if (numerator_.is_zero()) {
    denominator_ = 1;
    return;
  }
  Integer g = gcd(gcd_entries(numerator_), denominator_);
  if (g != 1) {
    numerator_ = numerator_.divided_exactly(g);
    denominator_ /= g;
  }
}

mpq_class RatMatrix::at(std::size_t r, std::size_t c) const {
  mpq_class v(numerator_(r, c), denominator_);
  v.canonicalize();
  return v;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Integer det(const IntMatrix& a) {
  if (!a.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  Integer result = m(n - 1, n - 1);
  return sign < 0 ? Integer(-result) : result;
}

Integer gcd_entries(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (sgn(g) == 0) throw DomainError("gcd of entries is undefined for the zero matrix");
  return g;
}

Integer gcd_entries(const IntMatrix& a) { return gcd_entries(std::span<const Integer>(a.entries())); }

unsigned long long binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return mpz_fits_ulong_p(b.get_mpz_t()) ? b.get_ui() : ULLONG_MAX;
}

namespace {

// Visits every increasing index tuple of length k drawn from [0, n).
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Integer minors_gcd(const IntMatrix& a, std::size_t order) {
  if (order == 0 || order > std::min(a.rows(), a.cols())) {
    throw DomainError("minor order " + std::to_string(order) + " out of range");
  }
  const unsigned long long rc = binomial(a.rows(), order);
  const unsigned long long cc = binomial(a.cols(), order);
  if (rc > kMaxMinorCount || cc > kMaxMinorCount / rc) {
    throw DomainError("too many minors of order " + std::to_string(order) + "; use the normal-form route");
  }
  Integer g = 0;
  IntMatrix sub(order, order);
  for_each_combination(a.rows(), order, [&](const std::vector<std::size_t>& rows) {
    for_each_combination(a.cols(), order, [&](const std::vector<std::size_t>& cols) {
      for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) sub(i, j) = a(rows[i], cols[j]);
      Integer d = det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  if (sgn(g) == 0) throw DomainError("all minors of order " + std::to_string(order) + " vanish");
  return g;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionError("dot product of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace csl
