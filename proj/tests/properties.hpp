#pragma once

// Randomized oracle suites shared by the unit tests and the acceptance run.
// Each returns how many cases ran and a description of the first mismatch.

#include "support.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace qgor::testing {

struct SuiteResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

// f in I for homogeneous I and f of degree d iff f is a k-combination of
// m*g with g a generator and m a monomial of degree d - deg g.
inline bool member_by_linear_algebra(const Polynomial& f, const std::vector<Polynomial>& gens) {
  const RingPtr& r = f.ring();
  if (f.is_zero()) return true;
  const std::uint32_t d = f.total_degree();
  LinearSpan span(r);
  for (const Polynomial& g : gens) {
    if (g.is_zero() || g.total_degree() > d) continue;
    for (const Monomial& m : monomials_of_degree(r->num_vars(), d - g.total_degree())) {
      span.insert(g.times_term(r->one(), m));
    }
  }
  return span.contains(f);
}

// Largest variable subset containing no generator's support.
inline std::size_t dimension_by_subsets(std::size_t n, const std::vector<std::uint32_t>& supports) {
  std::size_t best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    bool ok = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~set) == 0; });
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(set)));
  }
  return best;
}

// Coefficients of ∏(1 - t^d_i) / (1 - t)^n up to t^top.
inline std::vector<std::int64_t> complete_intersection_series(std::size_t n, const std::vector<std::uint32_t>& degrees,
                                                              std::size_t top) {
  std::vector<std::int64_t> c(top + 1, 0);
  c[0] = 1;
  for (std::uint32_t d : degrees) {
    for (std::size_t k = top + 1; k-- > d;) c[k] -= c[k - d];
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 1; k <= top; ++k) c[k] += c[k - 1];
  }
  return c;
}

/// 100 random homogeneous ideals in at most 3 variables, generator degree
/// at most 3: membership of known members and of random forms against the
/// linear algebra oracle, and S-polynomial closure of each basis.
inline SuiteResult membership_suite(std::uint32_t seed = 42) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nvars(1, 3), ngens(1, 3), deg(1, 3);
  SuiteResult out;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(static_cast<std::size_t>(nvars(rng)));
    RingPtr r = qq(names);
    std::vector<Polynomial> gens;
    for (int k = ngens(rng); k > 0; --k) gens.push_back(random_form(rng, r, static_cast<std::uint32_t>(deg(rng))));
    Ideal ideal(r, gens);
    out.record(is_groebner_basis(ideal.groebner_basis().elements()), "S-polynomial closure of " + ideal.to_string());
    for (std::uint32_t d = 1; d <= 4; ++d) {
      Polynomial inside(r);
      for (const Polynomial& g : gens) {
        if (g.total_degree() <= d) inside += random_form(rng, r, d - g.total_degree()) * g;
      }
      for (const Polynomial& f : {inside, random_form(rng, r, d)}) {
        out.record(ideal.contains(f) == member_by_linear_algebra(f, gens),
                   "membership of " + f.to_string() + " in " + ideal.to_string());
      }
    }
  }
  return out;
}

/// 50 random monomial ideals in 2..6 variables.
inline SuiteResult dimension_suite(std::uint32_t seed = 17) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nvars(2, 6), ngens(1, 5);
  std::uniform_int_distribution<std::uint32_t> exponent(0, 2);
  SuiteResult out;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(nvars(rng));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    RingPtr r = qq(names);
    std::vector<Polynomial> gens;
    std::vector<std::uint32_t> supports;
    for (int k = ngens(rng); k > 0; --k) {
      Monomial m;
      for (std::size_t v = 0; v < n; ++v) m.set(v, exponent(rng));
      if (m.is_one()) m.set(0, 1);
      gens.push_back(Polynomial::monomial(r, m, r->one()));
      supports.push_back(m.support());
    }
    Ideal ideal(r, gens);
    out.record(dimension(ideal) == dimension_by_subsets(n, supports), "dimension of " + ideal.to_string());
  }
  return out;
}

/// 20 random degree tuples; each realized by random forms in 4 variables
/// that form a regular sequence (homogeneous, codim = number of forms).
inline SuiteResult complete_intersection_suite(std::uint32_t seed = 8) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<std::uint32_t> deg(1, 3);
  RingPtr r = qq({"a", "b", "c", "d"});
  SuiteResult out;
  int tuples = 0;
  while (tuples < 20) {
    std::vector<std::uint32_t> degrees;
    std::vector<Polynomial> gens;
    for (int k = count(rng); k > 0; --k) {
      degrees.push_back(deg(rng));
      gens.push_back(random_form(rng, r, degrees.back(), 0.8));
    }
    Ideal ideal(r, gens);
    if (ideal.is_unit() || codimension(ideal) != gens.size()) continue;
    ++tuples;
    auto series = complete_intersection_series(4, degrees, 8);
    bool ok = true;
    for (std::uint64_t n = 0; n <= 8; ++n) {
      ok = ok && static_cast<std::int64_t>(hilbert_function(ideal, n)) == series[n];
    }
    out.record(ok, "Hilbert function of " + ideal.to_string());
  }
  return out;
}

/// 200 random integral divisors on P^1: Riemann-Roch, Serre duality against
/// K = -2*P(inf), and an explicit count of the section basis.
inline SuiteResult riemann_roch_suite(std::uint32_t seed = 2718) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coeff(-6, 6), where(-3, 4);
  std::uniform_int_distribution<int> count(0, 4);
  IntegralDivisor canonical;
  canonical.add(CurvePoint::infinity(), -2);
  SuiteResult out;
  for (int trial = 0; trial < 200; ++trial) {
    IntegralDivisor e;
    QDivisor as_q;
    for (int k = count(rng); k > 0; --k) {
      long p = where(rng), c = coeff(rng);
      CurvePoint point = p == 4 ? CurvePoint::infinity() : CurvePoint::affine(p);
      e.add(point, c);
      as_q.add(point, c);
    }
    IntegralDivisor dual = canonical;
    for (const auto& [p, c] : e.coefficients()) dual.add(p, -c);
    SectionSpace s = section_basis(as_q, 1);
    bool ok = h0(e) - h1(e) == e.degree() + 1 && h1(e) == h0(dual) && h0(e) == h1(dual) &&
              static_cast<long>(s.numerators.size()) == h0(e);
    for (const Polynomial& f : s.numerators) ok = ok && is_section(f, s.denominator, e);
    out.record(ok, "divisor " + e.to_string());
  }
  return out;
}

}  // namespace qgor::testing
