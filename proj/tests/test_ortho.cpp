#include <doctest.h>

#include "csl/errors.hpp"
#include "csl/matrix_io.hpp"
#include "csl/ortho.hpp"
#include "test_support.hpp"

using namespace csl;
using csl::testing::ints;

namespace {

void check_canonical(const RationalIsometry& y) {
  const std::size_t n = y.dimension();
  CHECK(mat_mul(y.z().transpose(), y.z()) == IntMatrix::identity(n).scaled(y.q() * y.q()));
  CHECK(gcd_entries(y.z()) == 1);
  Integer qn;
  mpz_pow_ui(qn.get_mpz_t(), y.q().get_mpz_t(), n);
  CHECK(abs(det(y.z())) == qn);
}

}  // namespace

TEST_CASE("from_rational_matrix") {
  const RationalIsometry id = from_rational_matrix(RatMatrix(IntMatrix::identity(3)));
  CHECK(id.q() == 1);
  CHECK(id.z() == IntMatrix::identity(3));

  const IntMatrix z{{3, -4, 0}, {4, 3, 0}, {0, 0, 5}};
  const RationalIsometry y = from_rational_matrix(RatMatrix(z, Integer(5)));
  CHECK(y.q() == 5);
  CHECK(y.z() == z);
  check_canonical(y);

  // (2/10)·[[3,-4],[4,3]] written with a non-canonical denominator
  const RationalIsometry scaled = from_rational_matrix(parse_rat_matrix("2 2\n6/10 -8/10\n8/10 6/10\n"));
  CHECK(scaled.q() == 5);
  CHECK(scaled.z() == IntMatrix{{3, -4}, {4, 3}});
}

TEST_CASE("from_rational_matrix rejects non-orthogonal input") {
  CHECK_THROWS_AS(from_rational_matrix(RatMatrix(IntMatrix{{1, 1}, {0, 1}})), NotOrthogonal);
  try {
    from_rational_matrix(RatMatrix(IntMatrix{{1, 1}, {0, 1}}, Integer(2)));
    FAIL("expected NotOrthogonal");
  } catch (const NotOrthogonal& e) {
    CHECK(e.col_a() == 0);
    CHECK(e.col_b() == 0);
    CHECK(e.inner_product() == "1/4");
  }
  CHECK_THROWS_AS(from_rational_matrix(RatMatrix(IntMatrix(2, 3))), DimensionError);
}

TEST_CASE("reflection examples") {
  const RationalIsometry a = reflection(ints({1, 1, 0}));
  CHECK(a.q() == 1);
  CHECK(a.z() == IntMatrix{{0, -1, 0}, {-1, 0, 0}, {0, 0, 1}});

  const RationalIsometry b = reflection(ints({1, 1, 1}));
  CHECK(b.q() == 3);
  CHECK(b.z() == IntMatrix{{1, -2, -2}, {-2, 1, -2}, {-2, -2, 1}});

  const RationalIsometry c = reflection(ints({1, 1, 1, 1}));
  CHECK(c.q() == 2);
  CHECK(c.z() == IntMatrix{{1, -1, -1, -1}, {-1, 1, -1, -1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}});

  CHECK_THROWS_AS(reflection(ints({0, 0, 0})), DomainError);
}

TEST_CASE("reflection axis normalization") {
  const ReflectionAxis axis(ints({0, -2, 4, -6}));
  CHECK(axis.v() == ints({0, 1, -2, 3}));
  CHECK(axis.norm() == 14);
  CHECK(axis.parity() == Parity::even);
  CHECK(axis.reduced_norm() == 7);
  CHECK(reflection(ints({0, -2, 4, -6})) == reflection(ints({0, 1, -2, 3})));
}

TEST_CASE("reflection properties") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 4));
    const ReflectionAxis axis = random_axis(rng, n, 5);
    const RationalIsometry r = reflection(axis);
    check_canonical(r);
    CHECK(compose(r, r).is_identity());
    CHECK(transpose_inverse(r) == r);

    // Vectors orthogonal to v are fixed: Z·w = q·w.
    const auto& v = axis.v();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        IntVector w(n);
        w[i] = v[j];
        w[j] = -v[i];
        IntVector image = r.z().apply(w);
        for (std::size_t k = 0; k < n; ++k) CHECK(image[k] == r.q() * w[k]);
      }
    }
    // Scale invariance.
    const long c = rng.uniform(-3, 3);
    if (c != 0) {
      IntVector scaled = v;
      for (auto& x : scaled) x *= c;
      CHECK(reflection(scaled) == r);
    }
    // v itself is negated.
    IntVector image = r.z().apply(v);
    for (std::size_t k = 0; k < n; ++k) CHECK(image[k] == -r.q() * v[k]);
  }
}

TEST_CASE("reflection numerator gcd follows the parity of the norm") {
  // Every primitive v in dimensions 2..5 with coordinates in [-3,3].
  for (std::size_t n = 2; n <= 5; ++n) {
    IntVector v(n, Integer(-3));
    while (true) {
      bool nonzero = false;
      for (const auto& x : v) nonzero = nonzero || sgn(x) != 0;
      if (nonzero && gcd_entries(std::span<const Integer>(v)) == 1) {
        const Integer s = dot(v, v);
        IntMatrix t = IntMatrix::identity(n).scaled(s);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) t(i, j) -= 2 * v[i] * v[j];
        CHECK(gcd_entries(t) == (mpz_odd_p(s.get_mpz_t()) ? 1 : 2));
      }
      std::size_t k = 0;
      while (k < n && v[k] == 3) v[k++] = -3;
      if (k == n) break;
      ++v[k];
    }
  }
}

TEST_CASE("compose") {
  const RationalIsometry r1 = reflection(ints({1, 1, 1}));
  const RationalIsometry r2 = reflection(ints({1, 2, 0}));
  const RationalIsometry product = compose(r1, r2);
  CHECK(product.q() == 15);
  check_canonical(product);
  CHECK(compose(r1, r1).is_identity());
  CHECK(compose(product, transpose_inverse(product)).is_identity());
  CHECK_THROWS_AS(compose(r1, reflection(ints({1, 1}))), DimensionError);
}

TEST_CASE("transpose_inverse") {
  CHECK(transpose_inverse(RationalIsometry::identity(3)).is_identity());
  const RationalIsometry y = RationalIsometry::from_parts(Integer(5), IntMatrix{{3, -4}, {4, 3}});
  const RationalIsometry t = transpose_inverse(y);
  CHECK(t.q() == 5);
  CHECK(t.z() == IntMatrix{{3, 4}, {-4, 3}});
}

TEST_CASE("group laws on a random corpus") {
  const auto corpus = isometry_corpus(4, 30, 3, 4, 123);
  for (std::size_t i = 0; i + 2 < corpus.size(); ++i) {
    const auto& a = corpus[i];
    const auto& b = corpus[i + 1];
    const auto& c = corpus[i + 2];
    check_canonical(a);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, transpose_inverse(a)).is_identity());
    CHECK(transpose_inverse(transpose_inverse(a)) == a);
    CHECK(transpose_inverse(compose(a, b)) == compose(transpose_inverse(b), transpose_inverse(a)));
    const Integer qq = a.q() * b.q();
    CHECK(mpz_divisible_p(qq.get_mpz_t(), compose(a, b).q().get_mpz_t()));
  }
}

TEST_CASE("random_isometry") {
  CHECK(random_isometry(3, 0, 4, 1).is_identity());
  CHECK(random_isometry(5, 3, 4, 42) == random_isometry(5, 3, 4, 42));
  CHECK(format_matrix(random_isometry(5, 3, 4, 42).as_rational()) ==
        format_matrix(random_isometry(5, 3, 4, 42).as_rational()));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RationalIsometry y = random_isometry(4, 3, 4, seed);
    CHECK(from_rational_matrix(y.as_rational()) == y);
  }
  CHECK_THROWS_AS(random_isometry(1, 1, 4, 0), DomainError);
  CHECK_THROWS_AS(random_isometry(3, 1, 0, 0), DomainError);
}

TEST_CASE("SplitMix64 reference outputs") {
  // First outputs for seed 0 of the published SplitMix64 reference.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  SplitMix64 bounded(7);
  for (int i = 0; i < 1000; ++i) {
    const auto x = bounded.uniform(-4, 4);
    CHECK(x >= -4);
    CHECK(x <= 4);
  }
}
