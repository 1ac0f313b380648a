#include "csl/ortho.hpp"

#include <limits>

#include "csl/errors.hpp"

namespace csl {

RationalIsometry RationalIsometry::identity(std::size_t n) {
  if (n == 0) throw DomainError("dimension must be positive");
  return RationalIsometry(Integer(1), IntMatrix::identity(n));
}

RationalIsometry RationalIsometry::from_parts(Integer q, IntMatrix z) {
  if (!z.square() || z.rows() == 0) throw DimensionError("isometry numerator must be a nonempty square matrix");
  if (sgn(q) <= 0) throw DomainError("isometry denominator must be positive");
  const std::size_t n = z.rows();
  const Integer q2 = q * q;
  // Columns of Z must be pairwise orthogonal with squared length q².
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Integer s = 0;
      for (std::size_t r = 0; r < n; ++r) s += z(r, a) * z(r, b);
      const Integer expected = a == b ? q2 : Integer(0);
      if (s != expected) {
        mpq_class ip(s, q2);
        ip.canonicalize();
        throw NotOrthogonal(a, b, ip.get_str());
      }
    }
  }
  if (gcd_entries(z) != 1) {
    throw DomainError("isometry numerator is not primitive (gcd of entries " + gcd_entries(z).get_str() + ")");
  }
  return RationalIsometry(std::move(q), std::move(z));
}

bool RationalIsometry::is_identity() const { return q_ == 1 && z_ == IntMatrix::identity(dimension()); }

ReflectionAxis::ReflectionAxis(IntVector v) : v_(std::move(v)) {
  if (v_.empty()) throw DomainError("reflection axis must have positive dimension");
  bool nonzero = false;
  for (const auto& x : v_) nonzero = nonzero || sgn(x) != 0;
  if (!nonzero) throw DomainError("reflection axis must be nonzero");
  Integer content = gcd_entries(std::span<const Integer>(v_));
  int lead = 0;
  for (const auto& x : v_) {
    if (sgn(x) != 0) {
      lead = sgn(x);
      break;
    }
  }
  if (lead < 0) content = -content;
  if (content != 1) {
    for (auto& x : v_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  }
  norm_ = dot(v_, v_);
}

Integer ReflectionAxis::reduced_norm() const {
  return parity() == Parity::odd ? norm_ : Integer(norm_ / 2);
}

RationalIsometry from_rational_matrix(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("isometry must be square");
  // RatMatrix already divides out gcd(denominator, content); for an orthogonal
  // matrix that leaves a primitive numerator.
  return RationalIsometry::from_parts(m.denominator(), m.numerator());
}

RationalIsometry reflection(const ReflectionAxis& axis) {
  const auto& v = axis.v();
  const std::size_t n = v.size();
  const Integer& s = axis.norm();
  IntMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = -2 * v[i] * v[j];
      if (i == j) t(i, j) += s;
    }
  }
  if (axis.parity() == Parity::even) return RationalIsometry::from_parts(s / 2, t.divided_exactly(2));
  return RationalIsometry::from_parts(s, std::move(t));
}

RationalIsometry reflection(const IntVector& v) { return reflection(ReflectionAxis(v)); }

RationalIsometry compose(const RationalIsometry& a, const RationalIsometry& b) {
  if (a.dimension() != b.dimension()) throw DimensionError("cannot compose isometries of different dimension");
  IntMatrix z = mat_mul(a.z(), b.z());
  Integer q = a.q() * b.q();
  Integer g = gcd_entries(z);
  if (g != 1) {
    z = z.divided_exactly(g);
    q = q / g;
  }
  return RationalIsometry::from_parts(std::move(q), std::move(z));
}

RationalIsometry transpose_inverse(const RationalIsometry& a) {
  return RationalIsometry::from_parts(a.q(), a.z().transpose());
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

ReflectionAxis random_axis(SplitMix64& rng, std::size_t n, std::int64_t bound) {
  if (n == 0) throw DomainError("dimension must be positive");
  if (bound < 1) throw DomainError("coordinate bound must be at least 1");
  IntVector v(n);
  while (true) {
    bool nonzero = false;
    for (auto& x : v) {
      x = static_cast<long>(rng.uniform(-bound, bound));
      nonzero = nonzero || sgn(x) != 0;
    }
    if (nonzero) return ReflectionAxis(v);
  }
}

RationalIsometry random_isometry(std::size_t n, std::size_t reflections, std::int64_t coordinate_bound,
                                 std::uint64_t seed) {
  if (n < 2) throw DomainError("random isometries need dimension at least 2");
  if (coordinate_bound < 1) throw DomainError("coordinate bound must be at least 1");
  SplitMix64 rng(seed);
  RationalIsometry y = RationalIsometry::identity(n);
  for (std::size_t i = 0; i < reflections; ++i) y = compose(y, reflection(random_axis(rng, n, coordinate_bound)));
  return y;
}

std::vector<RationalIsometry> isometry_corpus(std::size_t n, std::size_t count, std::size_t max_reflections,
                                              std::int64_t coordinate_bound, std::uint64_t seed) {
  if (max_reflections == 0) throw DomainError("max_reflections must be positive");
  SplitMix64 seeds(seed);
  std::vector<RationalIsometry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = seeds.next();
    out.push_back(random_isometry(n, 1 + s % max_reflections, coordinate_bound, s));
  }
  return out;
}

}  // namespace csl
