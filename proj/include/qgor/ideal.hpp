#pragma once

// Ideals with a lazily cached reduced Groebner basis, and the ideal algebra
// built on it: sums, products, intersections, colons, elimination, Krull
// dimension of the quotient, Hilbert functions.

#include "qgor/groebner.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgor {

/// A request the library deliberately does not handle (e.g. Hilbert
/// functions in a ring with a weight-0 variable).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trace sink for Groebner computations on the current thread; set through
/// ScopedTrace by the command line front end.
inline std::ostream*& trace_sink() {
  thread_local std::ostream* sink = nullptr;
  return sink;
}

class ScopedTrace {
 public:
  explicit ScopedTrace(std::ostream* out) : saved_(trace_sink()) { trace_sink() = out; }
  ~ScopedTrace() { trace_sink() = saved_; }
  ScopedTrace(const ScopedTrace&) = delete;
  ScopedTrace& operator=(const ScopedTrace&) = delete;

 private:
  std::ostream* saved_;
};

namespace detail {

/// Turns a Groebner basis (not necessarily reduced) into the reduced one.
inline GroebnerBasis reduced_from_groebner(const RingPtr& ring, std::vector<Polynomial> elements) {
  std::erase_if(elements, [](const Polynomial& p) { return p.is_zero(); });
  const Ring& r = *ring;
  std::stable_sort(elements.begin(), elements.end(), [&r](const Polynomial& a, const Polynomial& b) {
    return r.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (Polynomial& g : elements) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& m) {
      return m.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> reduced;
  std::vector<const Polynomial*> others;
  for (const Polynomial& g : minimal) {
    others.clear();
    for (const Polynomial& o : minimal) {
      if (&o != &g) others.push_back(&o);
    }
    std::vector<Term> work = g.terms();
    reduce_terms(r, work, others, 1);
    reduced.push_back(Polynomial::from_sorted_terms(ring, std::move(work)).make_monic());
  }
  return GroebnerBasis(ring, std::move(reduced));
}

}  // namespace detail

class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const Polynomial& g : generators_) {
      if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("generator from a different ring");
    }
  }

  /// Ideal generated by a reduced basis; the cache starts filled.
  explicit Ideal(GroebnerBasis basis) : Ideal(basis.ring(), basis.elements()) {
    std::call_once(cache_->once, [&] { cache_->basis.emplace(std::move(basis)); });
  }

  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }
  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  bool is_zero() const {
    return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_zero(); });
  }

  /// Reduced Groebner basis in the ring's order. Computed at most once per
  /// ideal value; safe to call from several threads. Empty for (0).
  const GroebnerBasis& groebner_basis() const {
    std::call_once(cache_->once, [this] {
      if (is_zero()) {
        cache_->basis.emplace(ring_, std::vector<Polynomial>{});
      } else {
        cache_->basis.emplace(buchberger(generators_, trace_sink()));
      }
    });
    return *cache_->basis;
  }

  bool contains(const Polynomial& f) const {
    f.check_ring(Polynomial(ring_));
    if (f.is_zero()) return true;
    return groebner_basis().contains(f);
  }

  bool is_unit() const { return !is_zero() && groebner_basis().is_unit(); }

  /// Every generator of this ideal lies in `other`.
  bool is_subset_of(const Ideal& other) const {
    return std::all_of(generators_.begin(), generators_.end(), [&](const Polynomial& g) { return other.contains(g); });
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    return a.groebner_basis().elements() == b.groebner_basis().elements();
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < generators_.size(); ++i) out += (i ? ", " : "") + generators_[i].to_string();
    return out + ")";
  }

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

inline void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("ring mismatch");
}

inline bool ideal_membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators()) {
    for (const Polynomial& g : b.generators()) {
      Polynomial p = f * g;
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  }
  return Ideal(a.ring(), std::move(gens));
}

/// The ideal (x_1, ..., x_n) of all variables.
inline Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

namespace detail {

inline std::string fresh_name(const Ring& ring) {
  std::string name = "__t";
  for (int k = 0; ring.index_of(name); ++k) name = "__t" + std::to_string(k);
  return name;
}

inline std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return map;
}

}  // namespace detail

/// Exact quotient f / g; throws if g does not divide f.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  f.check_ring(g);
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial rest = f;
  std::vector<Term> quotient;
  const Scalar lc_inv = g.leading_coefficient().inverse();
  while (!rest.is_zero()) {
    const Term& lead = rest.leading_term();
    if (!g.leading_monomial().divides(lead.monomial)) throw std::domain_error("inexact polynomial division");
    Term q{lead.monomial / g.leading_monomial(), lead.coefficient * lc_inv};
    rest.subtract_multiple(q.coefficient, q.monomial, g);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(quotient));
}

/// I ∩ J via a fresh dominant variable t: the t-free part of a Groebner basis
/// of t*I + (1-t)*J. The t-free elements form the reduced basis of the
/// intersection in the original order, which seeds the result's cache.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;

  const Ring& base = *a.ring();
  const std::size_t n = base.num_vars();
  if (n + 1 > kMaxVariables) throw UnsupportedError("no room for an elimination variable");
  std::vector<std::string> names = base.names();
  names.push_back(detail::fresh_name(base));
  std::vector<std::uint32_t> weights = base.weights();
  weights.push_back(1);
  RingPtr ext = Ring::make(base.field(), names, weights, MonomialOrder::elimination(1u << n, base.order()));

  const std::vector<std::size_t> up = detail::identity_map(n);
  const Polynomial t = Polynomial::variable(ext, n);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators()) {
    if (!f.is_zero()) gens.push_back(t * f.map_to(ext, up));
  }
  for (const Polynomial& g : b.generators()) {
    if (!g.is_zero()) gens.push_back(one_minus_t * g.map_to(ext, up));
  }
  GroebnerBasis gb = buchberger(gens, trace_sink());

  std::vector<std::size_t> down = detail::identity_map(n + 1);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.elements()) {
    if (g.leading_monomial()[n] == 0) kept.push_back(g.map_to(a.ring(), down));
  }
  return Ideal(GroebnerBasis(a.ring(), std::move(kept)));
}

/// I : (f) = (1/f) * (I ∩ (f)).
inline Ideal colon(const Ideal& ideal, const Polynomial& f) {
  f.check_ring(Polynomial(ideal.ring()));
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (ideal.contains(f)) return Ideal::unit(ideal.ring());
  Ideal meet = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> quotients;
  for (const Polynomial& g : meet.groebner_basis().elements()) quotients.push_back(divide_exact(g, f));
  return Ideal(detail::reduced_from_groebner(ideal.ring(), std::move(quotients)));
}

/// I : J as the intersection of I : (g) over the generators g of J.
inline Ideal colon(const Ideal& ideal, const Ideal& by) {
  check_same_ring(ideal, by);
  if (by.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  Ideal result = Ideal::unit(ideal.ring());
  for (const Polynomial& g : by.generators()) {
    if (g.is_zero() || ideal.contains(g)) continue;
    result = intersect(result, colon(ideal, g));
  }
  return result;
}

/// I ∩ k[remaining variables], returned as an ideal of the same ring.
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& variables) {
  const Ring& base = *ideal.ring();
  std::uint32_t mask = 0;
  for (const std::string& v : variables) {
    auto idx = base.index_of(v);
    if (!idx) throw std::invalid_argument("unknown variable " + v);
    mask |= 1u << *idx;
  }
  if (mask == 0) return ideal;
  if (ideal.is_zero()) return ideal;
  const std::size_t n = base.num_vars();
  RingPtr elim = Ring::make(base.field(), base.names(), base.weights(), MonomialOrder::elimination(mask, base.order()));
  const std::vector<std::size_t> same = detail::identity_map(n);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.generators()) gens.push_back(g.map_to(elim, same));
  GroebnerBasis gb = buchberger(gens, trace_sink());
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.elements()) {
    if ((g.leading_monomial().support() & mask) == 0) kept.push_back(g.map_to(ideal.ring(), same));
  }
  if (kept.empty()) return Ideal::zero(ideal.ring());
  return Ideal(GroebnerBasis(ideal.ring(), std::move(kept)));
}

namespace detail {

// Largest variable set containing no leading-monomial support.
inline std::size_t max_independent_set(std::size_t nvars, const std::vector<std::uint32_t>& supports) {
  std::size_t best = 0;
  auto feasible = [&](std::uint32_t set) {
    return std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~set) == 0; });
  };
  // Depth-first over variables, deciding include/exclude; prune on bound.
  auto search = [&](auto&& self, std::size_t var, std::uint32_t set, std::size_t size) -> void {
    if (size + (nvars - var) <= best) return;
    if (var == nvars) {
      best = size;
      return;
    }
    std::uint32_t with = set | (1u << var);
    if (feasible(with)) self(self, var + 1, with, size + 1);
    self(self, var + 1, set, size);
  };
  search(search, 0, 0u, 0);
  return best;
}

}  // namespace detail

/// Krull dimension of ring/I from the initial ideal of the cached basis.
inline std::size_t dimension(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->num_vars();
  if (ideal.is_zero()) return n;
  const GroebnerBasis& gb = ideal.groebner_basis();
  if (gb.is_unit()) throw std::domain_error("dimension of the unit ideal is undefined");
  std::vector<std::uint32_t> supports;
  for (const Polynomial& g : gb.elements()) supports.push_back(g.leading_monomial().support());
  return detail::max_independent_set(n, supports);
}

inline std::size_t codimension(const Ideal& ideal) { return ideal.ring()->num_vars() - dimension(ideal); }

/// dim_k (ring/I)_n for a homogeneous ideal in a positively weighted ring.
inline std::uint64_t hilbert_function(const Ideal& ideal, std::uint64_t degree) {
  const Ring& ring = *ideal.ring();
  if (ring.has_zero_weight()) {
    throw UnsupportedError("Hilbert functions need all variable weights positive; graded pieces of a ring "
                           "with a weight-0 variable are infinite-dimensional");
  }
  for (const Polynomial& g : ideal.generators()) {
    if (!g.is_homogeneous()) throw UnsupportedError("Hilbert function requested for a non-homogeneous ideal");
  }
  std::vector<Monomial> leads;
  if (!ideal.is_zero()) leads = ideal.groebner_basis().leading_monomials();

  std::uint64_t count = 0;
  Monomial m;
  auto visit = [&](auto&& self, std::size_t var, std::uint64_t remaining) -> void {
    if (var + 1 == ring.num_vars()) {
      if (remaining % ring.weights()[var] != 0) return;
      m.set(var, static_cast<std::uint32_t>(remaining / ring.weights()[var]));
      bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
      if (standard) ++count;
      m.set(var, 0);
      return;
    }
    const std::uint64_t w = ring.weights()[var];
    for (std::uint64_t e = 0; e * w <= remaining; ++e) {
      m.set(var, static_cast<std::uint32_t>(e));
      self(self, var + 1, remaining - e * w);
    }
    m.set(var, 0);
  };
  if (ring.num_vars() == 0) return degree == 0 ? 1 : 0;
  visit(visit, 0, degree);
  return count;
}

/// f is a nonzerodivisor on ring/I, tested as I : f == I.
inline bool is_regular_element(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial is never regular");
  if (ideal.is_unit()) throw std::domain_error("regularity test needs a proper ideal");
  return colon(ideal, f) == ideal;
}

}  // namespace qgor
