#include "csl/spectrum.hpp"

#include <functional>

#include "csl/errors.hpp"
#include "csl/oracle.hpp"

namespace csl {
namespace {

Integer isqrt(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Integer content_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector padded(const std::vector<Integer>& head, std::size_t n) {
  IntVector v(n);
  for (std::size_t i = 0; i < head.size() && i < n; ++i) v[i] = head[i];
  return v;
}

}  // namespace

RationalIsometry IndexWitness::isometry() const {
  RationalIsometry y = RationalIsometry::identity(dimension);
  for (const auto& axis : axes) y = compose(y, reflection(axis));
  return y;
}

IndexWitness make_index_witness(std::size_t dimension, std::vector<ReflectionAxis> axes, const Integer& sigma) {
  for (const auto& axis : axes) {
    if (axis.dimension() != dimension) throw DimensionError("witness axis has the wrong dimension");
  }
  IndexWitness w{sigma, dimension, std::move(axes)};
  const Integer got = intersection_hnf(w.isometry()).index;
  if (got != sigma) {
    throw ConsistencyError("witness claims index " + sigma.get_str() + " but the oracle gives " + got.get_str());
  }
  return w;
}

bool is_excluded_three_square_form(const Integer& m) {
  if (sgn(m) <= 0) return false;
  Integer x = m;
  while (mpz_divisible_ui_p(x.get_mpz_t(), 4)) x /= 4;
  return mpz_fdiv_ui(x.get_mpz_t(), 8) == 7;
}

std::optional<SquareWitness> three_square_decompose(const Integer& m) {
  if (sgn(m) <= 0) throw DomainError("three_square_decompose needs m >= 1");
  for (Integer a = isqrt(m); sgn(a) >= 0; --a) {
    const Integer rest = m - a * a;
    Integer b = isqrt(rest);
    if (b > a) b = a;
    for (; sgn(b) >= 0; --b) {
      const Integer last = rest - b * b;
      if (last > b * b) break;  // c ≤ b would be violated for every smaller b too
      if (mpz_perfect_square_p(last.get_mpz_t())) {
        std::vector<Integer> squares{a, b, isqrt(last)};
        Integer content = content_of(squares);
        return SquareWitness{m, std::move(squares), std::move(content)};
      }
    }
  }
  return std::nullopt;
}

SquareWitness four_square_odd_decompose(const Integer& m) {
  if (sgn(m) <= 0 || mpz_even_p(m.get_mpz_t())) throw DomainError("four_square_odd_decompose needs an odd m >= 1");
  const Integer shifted = 2 * m - 1;  // ≡ 1 (mod 4), never of the excluded form
  auto triple = three_square_decompose(shifted);
  if (!triple) throw ConsistencyError(shifted.get_str() + " has no three-square decomposition");

  // Squares are 0 or 1 mod 4, so exactly one of the three is odd.
  std::vector<Integer> even;
  Integer odd;
  for (const auto& x : triple->squares) {
    if (mpz_odd_p(x.get_mpz_t()))
      odd = x;
    else
      even.push_back(x);
  }
  if (even.size() != 2) throw ConsistencyError("expected exactly one odd square in " + shifted.get_str());
  const Integer u = even[0] / 2;
  const Integer v = even[1] / 2;
  const Integer t = (odd - 1) / 2;
  std::vector<Integer> squares{u + v, u - v, t, t + 1};
  Integer sum = 0;
  for (const auto& x : squares) sum += x * x;
  if (sum != m) throw ConsistencyError("four-square construction does not sum to " + m.get_str());
  Integer content = content_of(squares);
  return SquareWitness{m, std::move(squares), std::move(content)};
}

std::vector<IntVector> primitive_shell(std::size_t n, const Integer& norm, std::size_t limit) {
  std::vector<IntVector> out;
  if (n == 0 || sgn(norm) <= 0) return out;
  IntVector current(n);
  // Fills position k onward with nonincreasing coordinates ≤ cap summing (in squares) to rest.
  std::function<void(std::size_t, const Integer&, const Integer&)> fill = [&](std::size_t k, const Integer& rest,
                                                                                  const Integer& cap) {
    if (out.size() >= limit) return;
    if (k == n) {
      if (sgn(rest) == 0 && content_of(current) == 1) out.push_back(current);
      return;
    }
    Integer top = isqrt(rest);
    if (top > cap) top = cap;
    const Integer slots(static_cast<unsigned long>(n - k));
    for (Integer x = top; sgn(x) >= 0; --x) {
      if (x * x * slots < rest) break;  // the remaining slots cannot reach rest
      current[k] = x;
      fill(k + 1, rest - x * x, x);
      if (out.size() >= limit) return;
    }
    current[k] = 0;
  };
  fill(0, norm, norm);
  return out;
}

std::optional<ReflectionAxis> find_reflection_axis(std::size_t n, const Integer& sigma) {
  if (sgn(sigma) <= 0) throw DomainError("sigma must be positive");
  if (mpz_odd_p(sigma.get_mpz_t())) {
    auto shell = primitive_shell(n, sigma, 1);
    if (!shell.empty()) return ReflectionAxis(shell.front());
  }
  auto shell = primitive_shell(n, 2 * sigma, 1);
  if (!shell.empty()) return ReflectionAxis(shell.front());
  return std::nullopt;
}

std::map<Integer, IndexWitness> reflection_spectrum(std::size_t n, std::uint64_t sigma_bound) {
  if (n < 2) throw DomainError("reflection_spectrum needs n >= 2");
  std::map<Integer, IndexWitness> out;
  for (std::uint64_t s = 1; s <= sigma_bound; ++s) {
    const Integer sigma(static_cast<unsigned long>(s));
    if (auto axis = find_reflection_axis(n, sigma)) {
      out.emplace(sigma, make_index_witness(n, {*axis}, sigma));
    }
  }
  return out;
}

std::optional<IndexWitness> coprime_witness(std::span<const Integer> targets, std::size_t n) {
  if (n < 2) throw DomainError("coprime_witness needs n >= 2");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (sgn(targets[i]) <= 0) throw DomainError("targets must be positive");
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), targets[i].get_mpz_t(), targets[j].get_mpz_t());
      if (g != 1) throw CoprimalityViolated(i, j, g.get_str());
    }
  }
  std::vector<ReflectionAxis> axes;
  Integer product = 1;
  for (const auto& target : targets) {
    product *= target;
    if (target == 1) continue;
    auto axis = find_reflection_axis(n, target);
    if (!axis) return std::nullopt;
    axes.push_back(*axis);
  }
  return make_index_witness(n, std::move(axes), product);
}

IndexWitness four_square_witness(const Integer& sigma, std::size_t n) {
  if (n < 4) throw DomainError("four-square witnesses need n >= 4");
  SquareWitness sq = four_square_odd_decompose(sigma);
  return make_index_witness(n, {ReflectionAxis(padded(sq.squares, n))}, sigma);
}

IndexWitness covering_witness(const Integer& sigma, std::size_t n) {
  if (n < 5) throw DomainError("covering witnesses need n >= 5");
  if (sgn(sigma) <= 0) throw DomainError("sigma must be positive");
  Integer odd_part = sigma;
  unsigned long twos = mpz_scan1(sigma.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(odd_part.get_mpz_t(), sigma.get_mpz_t(), twos);

  std::vector<ReflectionAxis> axes;
  if (twos > 0) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, twos + 1);
    SquareWitness sq = four_square_odd_decompose(power - 1);
    std::vector<Integer> head{Integer(1)};
    head.insert(head.end(), sq.squares.begin(), sq.squares.end());
    axes.emplace_back(padded(head, n));
  }
  if (odd_part != 1) axes.emplace_back(padded(four_square_odd_decompose(odd_part).squares, n));
  return make_index_witness(n, std::move(axes), sigma);
}

}  // namespace csl
