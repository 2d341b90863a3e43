#pragma once

#include "qgor/qgor.hpp"

#include <random>
#include <string>
#include <vector>

namespace qgor::testing {

inline RingPtr ring_over(Field f, std::vector<std::string> names) { return Ring::make(f, std::move(names)); }
inline RingPtr qq(std::vector<std::string> names) { return ring_over(Field::rationals(), std::move(names)); }

inline Polynomial poly(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline std::vector<Polynomial> polys(const RingPtr& r, const std::string& text) {
  return parse_polynomial_list(text, r);
}

inline Ideal ideal(const RingPtr& r, const std::string& text) { return Ideal(r, polys(r, text)); }

/// Every monomial of total degree d in n variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  Monomial m;
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == n) {
      m.set(i, left);
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  if (n == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

/// Random form of degree d with small integer coefficients; `density` is
/// the chance that each monomial appears.
inline Polynomial random_form(std::mt19937& rng, const RingPtr& r, std::uint32_t d, double density = 0.6) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::bernoulli_distribution keep(density);
  std::vector<Term> terms;
  for (const Monomial& m : monomials_of_degree(r->num_vars(), d)) {
    if (!keep(rng)) continue;
    int c = coeff(rng);
    if (c != 0) terms.push_back({m, Scalar::from_int(r->field(), c)});
  }
  if (terms.empty()) terms.push_back({monomials_of_degree(r->num_vars(), d).front(), r->one()});
  return Polynomial::from_terms(r, std::move(terms));
}

/// Random polynomial with terms in degrees 0..max_degree.
inline Polynomial random_polynomial(std::mt19937& rng, const RingPtr& r, std::uint32_t max_degree) {
  Polynomial out(r);
  for (std::uint32_t d = 0; d <= max_degree; ++d) out += random_form(rng, r, d, 0.3);
  return out;
}

}  // namespace qgor::testing
