#include "csl/normal_form.hpp"

#include <optional>

#include "csl/errors.hpp"

namespace csl {
namespace {

// row[dst] += factor * row[src]
void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) mpz_addmul(m(dst, c).get_mpz_t(), factor.get_mpz_t(), m(src, c).get_mpz_t());
}

// row[dst] -= factor * row[src], in place
void subtract_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) mpz_submul(m(dst, c).get_mpz_t(), factor.get_mpz_t(), m(src, c).get_mpz_t());
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) mpz_addmul(m(r, dst).get_mpz_t(), factor.get_mpz_t(), m(r, src).get_mpz_t());
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (auto& x : m.row(r)) x = -x;
}

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntMatrix& m, std::size_t from) {
  std::optional<Position> best;
  for (std::size_t i = from; i < m.rows(); ++i) {
    for (std::size_t j = from; j < m.cols(); ++j) {
      if (sgn(m(i, j)) == 0) continue;
      if (!best || mpz_cmpabs(m(i, j).get_mpz_t(), m(best->row, best->col).get_mpz_t()) < 0) best = Position{i, j};
    }
  }
  return best;
}

}  // namespace

IntMatrix SmithDecomposition::diagonal(std::size_t rows, std::size_t cols) const {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
  return m;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t rank_bound = std::min(rows, cols);
  IntMatrix work = a;
  IntMatrix p = IntMatrix::identity(rows);
  IntMatrix q = IntMatrix::identity(cols);
  std::vector<Integer> d(rank_bound);

  Integer quotient;
  for (std::size_t k = 0; k < rank_bound; ++k) {
    bool exhausted = false;
    while (true) {
      auto pivot = smallest_nonzero(work, k);
      if (!pivot) {
        exhausted = true;
        break;
      }
      work.swap_rows(k, pivot->row);
      p.swap_rows(k, pivot->row);
      work.swap_cols(k, pivot->col);
      q.swap_cols(k, pivot->col);

      bool cleared = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (sgn(work(i, k)) == 0) continue;
        mpz_tdiv_q(quotient.get_mpz_t(), work(i, k).get_mpz_t(), work(k, k).get_mpz_t());
        Integer factor = -quotient;
        add_row_multiple(work, i, k, factor);
        add_row_multiple(p, i, k, factor);
        if (sgn(work(i, k)) != 0) cleared = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (sgn(work(k, j)) == 0) continue;
        mpz_tdiv_q(quotient.get_mpz_t(), work(k, j).get_mpz_t(), work(k, k).get_mpz_t());
        Integer factor = -quotient;
        add_col_multiple(work, j, k, factor);
        add_col_multiple(q, j, k, factor);
        if (sgn(work(k, j)) != 0) cleared = false;
      }
      if (!cleared) continue;

      // The pivot must divide the whole remaining block; otherwise fold the
      // offending row into row k and reduce again with a smaller remainder.
      std::optional<std::size_t> offending;
      for (std::size_t i = k + 1; i < rows && !offending; ++i) {
        for (std::size_t j = k + 1; j < cols; ++j) {
          if (!mpz_divisible_p(work(i, j).get_mpz_t(), work(k, k).get_mpz_t())) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      add_row_multiple(work, k, *offending, Integer(1));
      add_row_multiple(p, k, *offending, Integer(1));
    }
    if (exhausted) break;
    if (sgn(work(k, k)) < 0) {
      negate_row(work, k);
      negate_row(p, k);
    }
    d[k] = work(k, k);
  }
  return SmithDecomposition{std::move(p), std::move(q), std::move(d)};
}

std::vector<Integer> invariant_factors(const IntMatrix& a) { return smith_normal_form(a).d; }

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (rows < cols) throw DomainError("Hermite form needs at least as many rows as columns");
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(rows);

  Integer quotient;
  for (std::size_t col = 0; col < cols; ++col) {
    const std::size_t piv = col;
    // Euclid on the column: bring the smallest nonzero entry to the pivot row
    // and reduce every row below by it until they are all zero.
    while (true) {
      std::optional<std::size_t> smallest;
      for (std::size_t i = piv; i < rows; ++i) {
        if (sgn(h(i, col)) == 0) continue;
        if (!smallest || mpz_cmpabs(h(i, col).get_mpz_t(), h(*smallest, col).get_mpz_t()) < 0) smallest = i;
      }
      if (!smallest) break;
      h.swap_rows(piv, *smallest);
      u.swap_rows(piv, *smallest);
      bool done = true;
      for (std::size_t i = piv + 1; i < rows; ++i) {
        if (sgn(h(i, col)) == 0) continue;
        mpz_tdiv_q(quotient.get_mpz_t(), h(i, col).get_mpz_t(), h(piv, col).get_mpz_t());
        subtract_row_multiple(h, i, piv, quotient);
        subtract_row_multiple(u, i, piv, quotient);
        if (sgn(h(i, col)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h(piv, col)) == 0) throw DomainError("rank-deficient input: no pivot in column " + std::to_string(col));
    if (sgn(h(piv, col)) < 0) {
      negate_row(h, piv);
      negate_row(u, piv);
    }
    for (std::size_t i = 0; i < piv; ++i) {
      mpz_fdiv_q(quotient.get_mpz_t(), h(i, col).get_mpz_t(), h(piv, col).get_mpz_t());
      if (sgn(quotient) == 0) continue;
      Integer factor = -quotient;
      add_row_multiple(h, i, piv, factor);
      add_row_multiple(u, i, piv, factor);
    }
  }
  std::vector<Integer> basis(h.entries().begin(), h.entries().begin() + static_cast<std::ptrdiff_t>(cols * cols));
  return HermiteForm{IntMatrix(cols, cols, std::move(basis)), std::move(u)};
}

}  // namespace csl
