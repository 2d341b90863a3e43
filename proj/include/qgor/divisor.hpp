#pragma once

// Q-divisors on P^1 = Proj k[w,z] and the graded rings they define,
// R(P^1, D) = ⊕_n H^0(P^1, O(⌊nD⌋)), together with cohomology tables for
// Segre products of two such curves (or of two plane cubics).

#include "qgor/ideal.hpp"
#include "qgor/linalg.hpp"
#include "qgor/parse.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qgor {

/// A point of P^1: either the zero of w + i*z for a rational i, or the point
/// at infinity, the zero of z.
class CurvePoint {
 public:
  static CurvePoint affine(mpq_class i) {
    CurvePoint p;
    i.canonicalize();
    p.at_ = std::move(i);
    return p;
  }
  static CurvePoint infinity() { return CurvePoint{}; }

  bool is_infinity() const { return !at_.has_value(); }
  const mpq_class& parameter() const { return *at_; }

  std::string label() const { return is_infinity() ? "P(inf)" : "P(" + at_->get_str() + ")"; }

  /// The linear form cutting out this point.
  Polynomial linear_form(const RingPtr& wz) const {
    Polynomial z = Polynomial::variable(wz, 1);
    if (is_infinity()) return z;
    return Polynomial::variable(wz, 0) + Scalar::from_mpq(wz->field(), *at_) * z;
  }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) { return a.at_ == b.at_; }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
    if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
    return *a.at_ < *b.at_;
  }

 private:
  std::optional<mpq_class> at_;
};

/// Integral divisor on P^1.
class IntegralDivisor {
 public:
  void add(const CurvePoint& p, long c) {
    long& slot = coefficients_[p];
    slot += c;
    if (slot == 0) coefficients_.erase(p);
  }
  long coefficient(const CurvePoint& p) const {
    auto it = coefficients_.find(p);
    return it == coefficients_.end() ? 0 : it->second;
  }
  long degree() const {
    long d = 0;
    for (const auto& [p, c] : coefficients_) d += c;
    return d;
  }
  const std::map<CurvePoint, long>& coefficients() const { return coefficients_; }

  std::string to_string() const {
    if (coefficients_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : coefficients_) {
      out += (c < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + "));
      out += std::to_string(std::labs(c)) + "*" + p.label();
    }
    return out;
  }

  friend bool operator==(const IntegralDivisor&, const IntegralDivisor&) = default;

 private:
  std::map<CurvePoint, long> coefficients_;
};

/// Formal Q-linear combination of points of P^1; zero coefficients pruned.
class QDivisor {
 public:
  void add(const CurvePoint& p, const mpq_class& c) {
    mpq_class& slot = coefficients_[p];
    slot += c;
    if (slot == 0) coefficients_.erase(p);
  }
  mpq_class coefficient(const CurvePoint& p) const {
    auto it = coefficients_.find(p);
    return it == coefficients_.end() ? mpq_class(0) : it->second;
  }
  mpq_class degree() const {
    mpq_class d = 0;
    for (const auto& [p, c] : coefficients_) d += c;
    return d;
  }
  const std::map<CurvePoint, mpq_class>& coefficients() const { return coefficients_; }

  std::string to_string() const {
    if (coefficients_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : coefficients_) {
      out += (sgn(c) < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + "));
      out += mpq_class(abs(c)).get_str() + "*" + p.label();
    }
    return out;
  }

 private:
  std::map<CurvePoint, mpq_class> coefficients_;
};

namespace detail {

inline long floor_to_long(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("divisor coefficient out of range");
  return f.get_si();
}

inline long ceil_to_long(const mpq_class& q) {
  mpz_class f;
  mpz_cdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("divisor coefficient out of range");
  return f.get_si();
}

}  // namespace detail

/// ⌊nD⌋, coefficient by coefficient.
inline IntegralDivisor floor_multiple(const QDivisor& d, long n) {
  IntegralDivisor out;
  for (const auto& [p, c] : d.coefficients()) out.add(p, detail::floor_to_long(c * n));
  return out;
}

/// Riemann-Roch on P^1: h^0 = max(0, deg + 1), h^1 = max(0, -deg - 1).
inline long h0(const IntegralDivisor& e) { return std::max(0L, e.degree() + 1); }
inline long h1(const IntegralDivisor& e) { return std::max(0L, -e.degree() - 1); }

/// The polynomial ring k[w,z] over Q holding section numerators.
inline RingPtr projective_line_ring() {
  static const RingPtr ring = Ring::make(Field::rationals(), {"w", "z"});
  return ring;
}

/// Sections of O(⌊nD⌋) as numerator / denominator with a common denominator:
/// denominator = ∏ l_P^{e_P} over the positive coefficients e_P, numerators =
/// (∏ l_P^{-e_P} over negative e_P) * (monomials w^{d-k} z^k), d = deg ⌊nD⌋.
struct SectionSpace {
  long degree = 0;
  IntegralDivisor divisor;
  Polynomial denominator{projective_line_ring()};
  std::vector<Polynomial> numerators;
};

inline SectionSpace section_basis(const QDivisor& d, long n) {
  const RingPtr& wz = projective_line_ring();
  SectionSpace out;
  out.degree = n;
  out.divisor = floor_multiple(d, n);
  Polynomial den = Polynomial::constant(wz, 1);
  Polynomial forced = Polynomial::constant(wz, 1);
  for (const auto& [p, e] : out.divisor.coefficients()) {
    Polynomial l = p.linear_form(wz);
    if (e > 0) {
      den *= l.pow(static_cast<unsigned>(e));
    } else {
      forced *= l.pow(static_cast<unsigned>(-e));
    }
  }
  out.denominator = den;
  const long deg = out.divisor.degree();
  for (long k = 0; k <= deg; ++k) {
    Monomial m;
    m.set(0, static_cast<std::uint32_t>(deg - k));
    m.set(1, static_cast<std::uint32_t>(k));
    out.numerators.push_back(forced.times_term(Scalar::one(wz->field()), m));
  }
  return out;
}

/// Multiplicity of the point p in the form f (f nonzero).
inline long order_at(const Polynomial& f, const CurvePoint& p) {
  if (f.is_zero()) throw std::domain_error("order of the zero form is infinite");
  const Polynomial l = p.linear_form(f.ring());
  const std::vector<Polynomial> basis{l};
  Polynomial rest = f;
  long k = 0;
  while (normal_form(rest, basis).is_zero()) {
    rest = divide_exact(rest, l);
    ++k;
  }
  return k;
}

/// div(num/den) + E >= 0 at every point of the support of E and of den.
inline bool is_section(const Polynomial& numerator, const Polynomial& denominator, const IntegralDivisor& e) {
  if (numerator.is_zero()) return true;
  for (const auto& [p, c] : e.coefficients()) {
    if (order_at(numerator, p) - order_at(denominator, p) + c < 0) return false;
  }
  return true;
}

struct GeneratorDegrees {
  std::vector<long> generators;
  std::vector<long> relations;
  std::string warning;
};

/// Degrees of a minimal homogeneous generating set of R(P^1, D) up to
/// `bound`, and the degrees of the minimal relations among them.
///
/// Every section of degree n is rescaled to the common denominator
/// U_n = ∏ l_P^{n*u_P}, u_P = max(0, ceil(c_P)); since U_m*U_n = U_{m+n}, the
/// ring structure becomes plain multiplication of numerators. New generators
/// in degree n span a complement of ∑ R_i R_{n-i}; relations in degree n are
/// the kernel of the evaluation map on generator monomials modulo multiples
/// of lower-degree relations.
inline GeneratorDegrees generator_degrees(const QDivisor& d, long bound) {
  if (bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  const RingPtr& wz = projective_line_ring();
  GeneratorDegrees out;

  std::map<CurvePoint, long> lift;
  for (const auto& [p, c] : d.coefficients()) lift[p] = std::max(0L, detail::ceil_to_long(c));

  std::vector<std::vector<Polynomial>> lifted(static_cast<std::size_t>(bound) + 1);
  std::vector<Polynomial> generator_elements;
  bool any_section = false;
  for (long n = 1; n <= bound; ++n) {
    SectionSpace s = section_basis(d, n);
    Polynomial scale = Polynomial::constant(wz, 1);
    for (const auto& [p, u] : lift) {
      long e = n * u - std::max(0L, s.divisor.coefficient(p));
      if (e > 0) scale *= p.linear_form(wz).pow(static_cast<unsigned>(e));
    }
    for (const Polynomial& num : s.numerators) lifted[n].push_back(num * scale);
    any_section = any_section || !lifted[n].empty();

    LinearSpan span(wz);
    for (long i = 1; 2 * i <= n; ++i) {
      for (const Polynomial& a : lifted[i]) {
        for (const Polynomial& b : lifted[n - i]) span.insert(a * b);
      }
    }
    for (const Polynomial& v : lifted[n]) {
      if (span.insert(v)) {
        out.generators.push_back(n);
        generator_elements.push_back(v);
      }
    }
  }
  if (!any_section) {
    out.warning = "no nonzero sections in degrees 1.." + std::to_string(bound);
    return out;
  }

  // Relations: work in k[w,z,X_1..X_k] with {w,z} as a dominant block, so a
  // reduced evaluation row whose leading monomial avoids w,z is a pure
  // relation among the X's.
  const std::size_t k = generator_elements.size();
  if (k + 2 > kMaxVariables) throw UnsupportedError("too many generators to search for relations");
  std::vector<std::string> names{"w", "z"};
  std::vector<std::uint32_t> weights{1, 1};
  for (std::size_t g = 0; g < k; ++g) {
    names.push_back("X" + std::to_string(g + 1));
    weights.push_back(static_cast<std::uint32_t>(out.generators[g]));
  }
  RingPtr big = Ring::make(Field::rationals(), names, weights,
                           MonomialOrder::elimination(0b11u, MonomialOrder::grevlex(k + 2)));
  const std::vector<std::size_t> embed{0, 1};
  std::vector<Polynomial> generator_big;
  for (const Polynomial& g : generator_elements) generator_big.push_back(g.map_to(big, embed));

  std::vector<std::pair<long, Polynomial>> relations;
  for (long n = 1; n <= bound; ++n) {
    std::vector<Monomial> monomials;
    Monomial m;
    auto enumerate = [&](auto&& self, std::size_t g, long remaining) -> void {
      if (g == k) {
        if (remaining == 0) monomials.push_back(m);
        return;
      }
      for (long e = 0; e * out.generators[g] <= remaining; ++e) {
        m.set(g + 2, static_cast<std::uint32_t>(e));
        self(self, g + 1, remaining - e * out.generators[g]);
      }
      m.set(g + 2, 0);
    };
    enumerate(enumerate, 0, n);
    if (monomials.empty()) continue;

    LinearSpan multiples(big);
    for (const auto& [deg, r] : relations) {
      // Shift r by every X-monomial of degree n - deg.
      std::vector<Monomial> cofactors;
      Monomial c;
      auto cof = [&](auto&& self, std::size_t g, long remaining) -> void {
        if (g == k) {
          if (remaining == 0) cofactors.push_back(c);
          return;
        }
        for (long e = 0; e * out.generators[g] <= remaining; ++e) {
          c.set(g + 2, static_cast<std::uint32_t>(e));
          self(self, g + 1, remaining - e * out.generators[g]);
        }
        c.set(g + 2, 0);
      };
      cof(cof, 0, n - deg);
      for (const Monomial& cf : cofactors) multiples.insert(r.times_term(Scalar::one(big->field()), cf));
    }

    LinearSpan evaluation(big);
    for (const Monomial& mono : monomials) {
      Polynomial value = Polynomial::constant(big, 1);
      for (std::size_t g = 0; g < k; ++g) {
        if (mono[g + 2]) value *= generator_big[g].pow(mono[g + 2]);
      }
      auto row = evaluation.insert(value + Polynomial::monomial(big, mono, Scalar::one(big->field())));
      if (!row || (row->leading_monomial().support() & 0b11u) != 0) continue;
      if (multiples.insert(*row)) {
        out.relations.push_back(n);
        relations.emplace_back(n, *row);
      }
    }
  }
  return out;
}

/// Watanabe's criterion on P^1: with D = ∑ (p_i/q_i) P_i in lowest terms and
/// D' = ∑ ((q_i - 1)/q_i) P_i, R(P^1, D) is Gorenstein with a-invariant a iff
/// K + D' - aD is integral and principal, i.e. integral of degree 0 (deg K = -2).
inline bool watanabe_gorenstein(const QDivisor& d, long a) {
  if (a == 0) throw std::invalid_argument("a-invariant must be nonzero");
  mpq_class degree = -2;
  for (const auto& [p, c] : d.coefficients()) {
    const mpz_class& q = c.get_den();
    mpq_class fractional(q - 1, q);
    fractional.canonicalize();
    mpq_class value = fractional - a * c;
    if (value.get_den() != 1) return false;
    degree += value;
  }
  return degree == 0;
}

/// h^0 and h^1 of a family of line bundles indexed by n on a curve.
class CohomologyTable {
 public:
  /// P^1 with O(⌊nD⌋).
  static CohomologyTable projective_line(QDivisor d) {
    CohomologyTable t;
    t.divisor_ = std::move(d);
    return t;
  }

  /// A plane cubic (genus 1) with O(n) of its degree-3 embedding:
  /// h^0(n) = 1 at n = 0, 3n for n >= 1, 0 otherwise; h^1(n) = h^0(-n).
  static CohomologyTable elliptic_cubic() { return CohomologyTable{}; }

  bool is_elliptic() const { return !divisor_.has_value(); }
  int genus() const { return is_elliptic() ? 1 : 0; }

  long h0(long n) const {
    if (is_elliptic()) return n == 0 ? 1 : (n > 0 ? 3 * n : 0);
    return qgor::h0(floor_multiple(*divisor_, n));
  }

  long h1(long n) const {
    if (is_elliptic()) return h0(-n);
    return qgor::h1(floor_multiple(*divisor_, n));
  }

  /// Degree of the n-th line bundle.
  long degree(long n) const {
    if (is_elliptic()) return 3 * n;
    return floor_multiple(*divisor_, n).degree();
  }

  std::string describe() const {
    if (is_elliptic()) return "elliptic cubic";
    return "P^1 with D = " + divisor_->to_string();
  }

 private:
  std::optional<QDivisor> divisor_;
};

/// dim of the degree-n piece of the Segre product: h^0_1(n) * h^0_2(n).
inline long segre_hilbert(const CohomologyTable& t1, const CohomologyTable& t2, long n) {
  if (n < 0) throw std::invalid_argument("Segre product degrees are non-negative");
  return t1.h0(n) * t2.h0(n);
}

/// dim H^i_{S+}(S)_n = dim H^{i-1}(X1 x X2, O(n) ⊠ O(n)) for i >= 2, by the
/// Künneth formula: ∑_{p+q=i-1} h^p_1(n) h^q_2(n).
inline long segre_local_cohomology_dim(const CohomologyTable& t1, const CohomologyTable& t2, int i, long n) {
  if (i <= 1) throw std::invalid_argument("only local cohomology in degrees i >= 2 is sheaf cohomology");
  auto h = [n](const CohomologyTable& t, int p) { return p == 0 ? t.h0(n) : t.h1(n); };
  long total = 0;
  for (int p = 0; p <= 1; ++p) {
    int q = i - 1 - p;
    if (q < 0 || q > 1) continue;
    total += h(t1, p) * h(t2, q);
  }
  return total;
}

/// Necessary condition for ω_S ≅ S(a) on a surface Segre product, checked
/// on Hilbert functions only: dim H^3_{S+}(S)_{-n} = dim S_{n+a} for all n
/// in [lo, hi]. A true result does not certify the isomorphism.
inline bool quasi_gorenstein_hilbert_check(const CohomologyTable& t1, const CohomologyTable& t2, long a, long lo,
                                           long hi) {
  for (long n = lo; n <= hi; ++n) {
    long top = segre_local_cohomology_dim(t1, t2, 3, -n);
    long piece = n + a < 0 ? 0 : segre_hilbert(t1, t2, n + a);
    if (top != piece) return false;
  }
  return true;
}

/// Parses "D = 2*P(0) - 5/8*P(1) - 5/8*P(2)"; P(i) is the zero of w + i*z and
/// P(inf) the zero of z. The leading "name =" is optional and any one-letter
/// point label (P, Q, ...) is accepted.
inline QDivisor parse_divisor(std::string_view text) {
  detail::TokenStream ts(text);
  using detail::Tok;
  using detail::TokenStream;
  if (ts.peek().kind == Tok::Ident && ts.peek(1).kind == Tok::Symbol && ts.peek(1).text == "=") {
    ts.next();
    ts.next();
  }
  auto rational = [&]() {
    const detail::Token& num = ts.expect(Tok::Integer, "number");
    mpq_class q{mpz_class(num.text)};
    if (ts.accept("/")) {
      const detail::Token& den = ts.expect(Tok::Integer, "denominator");
      mpz_class dv(den.text);
      if (dv == 0) TokenStream::fail("zero denominator", den);
      q = mpq_class(mpz_class(num.text), dv);
      q.canonicalize();
    }
    return q;
  };
  QDivisor out;
  if (ts.peek().kind == Tok::Integer && ts.peek().text == "0" && ts.peek(1).kind == Tok::End) {
    ts.next();
    return out;
  }
  bool first = true;
  while (!ts.at_end()) {
    mpq_class sign = 1;
    if (ts.accept("-")) {
      sign = -1;
    } else if (!ts.accept("+") && !first) {
      TokenStream::fail("expected '+' or '-'", ts.peek());
    }
    first = false;
    mpq_class coeff = 1;
    if (ts.peek().kind == Tok::Integer) {
      coeff = rational();
      ts.accept("*");
    }
    const detail::Token& label = ts.expect(Tok::Ident, "point label such as P(1)");
    if (label.text.size() != 1) TokenStream::fail("point labels are single letters", label);
    ts.expect_symbol("(");
    CurvePoint point = CurvePoint::infinity();
    if (ts.peek().kind == Tok::Ident) {
      const detail::Token& inf = ts.next();
      if (inf.text != "inf") TokenStream::fail("expected a number or 'inf'", inf);
    } else {
      mpq_class s = ts.accept("-") ? mpq_class(-1) : mpq_class(1);
      point = CurvePoint::affine(s * rational());
    }
    ts.expect_symbol(")");
    out.add(point, sign * coeff);
  }
  if (first) TokenStream::fail("empty divisor", ts.peek());
  return out;
}

}  // namespace qgor
