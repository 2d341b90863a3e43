#pragma once

// Sparse multivariate polynomials kept in canonical form: terms strictly
// descending in the ring's monomial order, no zero coefficients.

#include "qgor/ring.hpp"

#include <algorithm>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgor {

struct Term {
  Monomial monomial;
  Scalar coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c) {
    return monomial(std::move(ring), Monomial{}, c);
  }
  static Polynomial constant(RingPtr ring, long c) {
    Scalar s = Scalar::from_int(ring->field(), c);
    return constant(std::move(ring), s);
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t index) {
    if (index >= ring->num_vars()) throw std::out_of_range("variable index out of range");
    Scalar one = ring->one();
    return monomial(std::move(ring), Monomial::variable(index), one);
  }

  /// Canonicalizes an arbitrary term list (any order, repeats, zeros).
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    const Ring& r = *ring;
    std::sort(terms.begin(), terms.end(),
              [&r](const Term& a, const Term& b) { return r.compare(a.monomial, b.monomial) > 0; });
    Polynomial p(std::move(ring));
    for (Term& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
        if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      } else if (!t.coefficient.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Trusts that `terms` is already canonical (strictly descending, no zeros).
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coefficient() const { return leading_term().coefficient; }

  /// Maximum weighted degree over the terms.
  std::uint64_t weighted_degree() const {
    if (terms_.empty()) throw std::domain_error("weighted degree of the zero polynomial is undefined");
    std::uint64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, ring_->weighted_degree(t.monomial));
    return d;
  }

  std::uint32_t total_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.monomial.total_degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::uint64_t d = ring_->weighted_degree(terms_.front().monomial);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return ring_->weighted_degree(t.monomial) == d; });
  }

  /// Union of the supports of all terms.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (const Term& t : terms_) s |= t.monomial.support();
    return s;
  }

  Polynomial& make_monic() {
    if (terms_.empty() || terms_.front().coefficient.is_one()) return *this;
    Scalar inv = terms_.front().coefficient.inverse();
    for (Term& t : terms_) t.coefficient *= inv;
    return *this;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  Polynomial& operator+=(const Polynomial& b) { return *this = combine(*this, b, false); }
  Polynomial& operator-=(const Polynomial& b) { return *this = combine(*this, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (b.size() == 1) return a.times_term(b.terms_[0].coefficient, b.terms_[0].monomial);
    if (a.size() == 1) return b.times_term(a.terms_[0].coefficient, a.terms_[0].monomial);
    std::vector<Term> products;
    products.reserve(a.size() * b.size());
    for (const Term& s : a.terms_) {
      for (const Term& t : b.terms_) products.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    }
    return from_terms(a.ring_, std::move(products));
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend Polynomial operator*(const Scalar& c, const Polynomial& p) { return p.times_term(c, Monomial{}); }

  /// c * m * this; the order is multiplicative so no re-sorting is needed.
  Polynomial times_term(const Scalar& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      Scalar s = t.coefficient * c;
      if (!s.is_zero()) r.terms_.push_back({t.monomial * m, std::move(s)});
    }
    return r;
  }

  /// this -= c * m * g, merging in one pass.
  Polynomial& subtract_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) {
    check_ring(g);
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    const Ring& r = *ring_;
    std::size_t i = 0, j = 0;
    const Scalar neg = -c;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial gm = g.terms_[j].monomial * m;
      if (i == terms_.size()) {
        out.push_back({gm, g.terms_[j++].coefficient * neg});
        continue;
      }
      auto cmp = r.compare(terms_[i].monomial, gm);
      if (cmp > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp < 0) {
        out.push_back({gm, g.terms_[j++].coefficient * neg});
      } else {
        // `c` may alias a coefficient of *this; only `neg` is safe here.
        Scalar s = std::move(terms_[i].coefficient);
        s += g.terms_[j].coefficient * neg;
        if (!s.is_zero()) out.push_back({gm, std::move(s)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Re-expresses this polynomial in `target`, sending variable i to
  /// variable index_map[i]. Both rings must share the coefficient field.
  Polynomial map_to(const RingPtr& target, std::span<const std::size_t> index_map) const {
    if (!(target->field() == ring_->field())) throw std::invalid_argument("field mismatch in ring map");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
      Monomial m;
      for (std::uint32_t s = t.monomial.support(); s; s &= s - 1) {
        int i = __builtin_ctz(s);
        m.set(index_map[i], t.monomial[i]);
      }
      out.push_back({m, t.coefficient});
    }
    return from_terms(target, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
      std::string coeff = t.coefficient.to_string();
      bool negative = t.coefficient.is_negative();
      if (negative) coeff.erase(0, 1);
      if (!first || negative) out += negative ? "-" : "+";
      first = false;
      std::string mono = monomial_string(t.monomial);
      if (mono.empty()) {
        out += coeff;
      } else if (coeff == "1") {
        out += mono;
      } else {
        out += coeff + "*" + mono;
      }
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += ring_->names()[i];
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
  }

  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("ring mismatch");
  }

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_ring(b);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    const Ring& ring = *a.ring_;
    std::size_t i = 0, j = 0;
    auto take_b = [&](const Term& t) {
      r.terms_.push_back({t.monomial, subtract ? -t.coefficient : t.coefficient});
    };
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size()) {
        take_b(b.terms_[j++]);
      } else {
        auto cmp = ring.compare(a.terms_[i].monomial, b.terms_[j].monomial);
        if (cmp > 0) {
          r.terms_.push_back(a.terms_[i++]);
        } else if (cmp < 0) {
          take_b(b.terms_[j++]);
        } else {
          Scalar s = subtract ? a.terms_[i].coefficient - b.terms_[j].coefficient
                              : a.terms_[i].coefficient + b.terms_[j].coefficient;
          if (!s.is_zero()) r.terms_.push_back({a.terms_[i].monomial, std::move(s)});
          ++i;
          ++j;
        }
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace qgor
