#include "csl/index.hpp"

#include "csl/errors.hpp"
#include "csl/normal_form.hpp"

namespace csl {

std::string_view to_string(IndexMethod method) {
  switch (method) {
    case IndexMethod::fortes: return "fortes";
    case IndexMethod::closed_form: return "closed_form";
    case IndexMethod::reflection: return "reflection";
    case IndexMethod::coprime_product: return "coprime_product";
    case IndexMethod::oracle_count: return "oracle_count";
    case IndexMethod::oracle_hnf: return "oracle_hnf";
  }
  return "unknown";
}

IndexReport index_fortes(const RationalIsometry& y) {
  IndexReport report{Integer(1), IndexMethod::fortes, {}, invariant_factors(y.z())};
  const Integer& q = y.q();
  for (const auto& d : report.invariant_factors) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
    Integer part = q / g;
    report.sigma *= part;
    report.factors.push_back(std::move(part));
  }
  return report;
}

IndexReport index_closed_form(const RationalIsometry& y) {
  const std::size_t n = y.dimension();
  const std::size_t m = n / 2;
  std::vector<Integer> d = invariant_factors(y.z());
  Integer delta = 1;
  for (std::size_t i = 0; i < m; ++i) delta *= d[i];
  if (m > 0 && n <= 8) {
    Integer enumerated = minors_gcd(y.z(), m);
    if (enumerated != delta) {
      throw ConsistencyError("delta_" + std::to_string(m) + " from Smith form is " + delta.get_str() +
                             " but minor enumeration gives " + enumerated.get_str());
    }
  }
  Integer qm;
  mpz_pow_ui(qm.get_mpz_t(), y.q().get_mpz_t(), m);
  if (!mpz_divisible_p(qm.get_mpz_t(), delta.get_mpz_t())) {
    throw ConsistencyError("q^m is not divisible by delta_m");
  }
  Integer sigma = qm / delta;
  return IndexReport{std::move(sigma), IndexMethod::closed_form, {y.q(), Integer(static_cast<unsigned long>(m)), delta},
                     std::move(d)};
}

IndexReport index_reflection(const ReflectionAxis& axis) {
  return IndexReport{axis.reduced_norm(), IndexMethod::reflection, {axis.norm()}, {}};
}

IndexReport index_reflection(const IntVector& v) { return index_reflection(ReflectionAxis(v)); }

IndexReport index_coprime_product(std::span<const IntVector> axes) {
  if (axes.empty()) throw DomainError("coprime product needs at least one axis");
  std::vector<Integer> reduced;
  reduced.reserve(axes.size());
  for (const auto& v : axes) {
    if (v.size() != axes.front().size()) throw DimensionError("axes of different dimension");
    reduced.push_back(ReflectionAxis(v).reduced_norm());
  }
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), reduced[i].get_mpz_t(), reduced[j].get_mpz_t());
      if (g != 1) throw CoprimalityViolated(i, j, g.get_str());
    }
  }
  Integer sigma = 1;
  for (const auto& r : reduced) sigma *= r;
  return IndexReport{std::move(sigma), IndexMethod::coprime_product, std::move(reduced), {}};
}

std::vector<std::pair<Integer, Integer>> palindrome_factors(const RationalIsometry& y) {
  std::vector<Integer> d = invariant_factors(y.z());
  const std::size_t n = d.size();
  std::vector<std::pair<Integer, Integer>> pairs;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) pairs.emplace_back(d[i], d[n - 1 - i]);
  return pairs;
}

}  // namespace csl
