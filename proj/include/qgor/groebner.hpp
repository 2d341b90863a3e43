#pragma once

// Buchberger's algorithm with Gebauer-Moeller pair pruning and the normal
// selection strategy. Output is the reduced (monic, interreduced) basis.

#include "qgor/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace qgor {

namespace detail {

inline void check_same_ring(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const Polynomial& g : basis) f.check_ring(g);
}

/// Reduces `terms` (descending) in place: scans from the top, reducing each
/// reducible term by the first listed reducer before moving on.
inline void reduce_terms(const Ring& ring, std::vector<Term>& work, std::span<const Polynomial* const> reducers,
                         std::size_t start = 0) {
  std::vector<Term> merged;
  std::size_t pos = start;
  while (pos < work.size()) {
    const Monomial& m = work[pos].monomial;
    const Polynomial* hit = nullptr;
    for (const Polynomial* g : reducers) {
      if (g->leading_monomial().divides(m)) {
        hit = g;
        break;
      }
    }
    if (hit == nullptr) {
      ++pos;
      continue;
    }
    const std::vector<Term>& gt = hit->terms();
    const Monomial shift = m / gt.front().monomial;
    Scalar factor = work[pos].coefficient;
    if (!gt.front().coefficient.is_one()) factor /= gt.front().coefficient;
    const Scalar neg = -factor;

    // Merge work[pos+1..] with -factor*shift*g[1..]; the leading terms cancel.
    merged.clear();
    merged.reserve(work.size() - pos + gt.size());
    std::size_t i = pos + 1, j = 1;
    while (i < work.size() && j < gt.size()) {
      Monomial gm = gt[j].monomial * shift;
      auto cmp = ring.compare(work[i].monomial, gm);
      if (cmp > 0) {
        merged.push_back(std::move(work[i++]));
      } else if (cmp < 0) {
        merged.push_back({gm, gt[j++].coefficient * neg});
      } else {
        Scalar s = std::move(work[i].coefficient);
        s -= gt[j].coefficient * factor;
        if (!s.is_zero()) merged.push_back({gm, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < work.size(); ++i) merged.push_back(std::move(work[i]));
    for (; j < gt.size(); ++j) merged.push_back({gt[j].monomial * shift, gt[j].coefficient * neg});
    work.resize(pos);
    for (Term& t : merged) work.push_back(std::move(t));
  }
}

}  // namespace detail

/// Remainder of f on division by `basis`: f - r lies in the ideal of the
/// basis and no term of r is divisible by a leading monomial of the basis.
/// Deterministic: the largest reducible term is always reduced first, by the
/// first listed element whose leading monomial divides it.
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  detail::check_same_ring(f, basis);
  std::vector<const Polynomial*> reducers;
  for (const Polynomial& g : basis) {
    if (!g.is_zero()) reducers.push_back(&g);
  }
  std::vector<Term> work = f.terms();
  detail::reduce_terms(*f.ring(), work, reducers);
  return Polynomial::from_sorted_terms(f.ring(), std::move(work));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  f.check_ring(g);
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(f.leading_coefficient().inverse(), l / f.leading_monomial());
  return a.subtract_multiple(g.leading_coefficient().inverse(), l / g.leading_monomial(), g);
}

/// Direct Buchberger criterion (every S-pair reduces to zero), no pruning.
inline bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].is_zero() || basis[j].is_zero()) continue;
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

/// Reduced Groebner basis, sorted by leading monomial ascending.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

  Polynomial reduce(const Polynomial& f) const { return normal_form(f, elements_); }
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements_.size());
    for (const Polynomial& g : elements_) out.push_back(g.leading_monomial());
    return out;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_pruned = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_additions = 0;
};

namespace detail {

class Buchberger {
 public:
  Buchberger(RingPtr ring, std::ostream* trace) : ring_(std::move(ring)), trace_(trace) {}

  void add_generator(const Polynomial& f) {
    Polynomial h = reduce(f);
    if (!h.is_zero()) insert(std::move(h.make_monic()));
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (before(pairs_[k], pairs_[best])) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ++stats_.pairs_considered;

      Polynomial h = reduce(s_polynomial(polys_[p.i], polys_[p.j]));
      if (trace_) {
        *trace_ << "pair (" << p.i << "," << p.j << ") lcm-degree " << p.degree;
      }
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        if (trace_) *trace_ << " -> 0\n";
        continue;
      }
      h.make_monic();
      if (trace_) *trace_ << " -> new element " << polys_.size() << " lead " << h.monomial_string(h.leading_monomial()) << "\n";
      insert(std::move(h));
    }
  }

  GroebnerBasis finish() {
    std::vector<const Polynomial*> members;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) members.push_back(&polys_[k]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(members.size());
    std::vector<const Polynomial*> others;
    for (const Polynomial* g : members) {
      others.clear();
      for (const Polynomial* o : members) {
        if (o != g) others.push_back(o);
      }
      std::vector<Term> work = g->terms();
      reduce_terms(*ring_, work, others, 1);
      reduced.push_back(Polynomial::from_sorted_terms(ring_, std::move(work)).make_monic());
    }
    const Ring& r = *ring_;
    std::sort(reduced.begin(), reduced.end(), [&r](const Polynomial& a, const Polynomial& b) {
      return r.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    if (trace_) {
      *trace_ << "groebner: " << stats_.pairs_considered << " pairs reduced, " << stats_.pairs_pruned
              << " pruned, " << stats_.zero_reductions << " zero reductions, basis size " << reduced.size()
              << "\n";
    }
    return GroebnerBasis(ring_, std::move(reduced));
  }

  const BuchbergerStats& stats() const { return stats_; }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint64_t degree;
  };

  bool before(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto c = ring_->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    Monomial l = Monomial::lcm(lms_[i], lms_[j]);
    return Pair{i, j, l, ring_->weighted_degree(l)};
  }

  Polynomial reduce(const Polynomial& f) const {
    std::vector<const Polynomial*> reducers;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) reducers.push_back(&polys_[k]);
    }
    std::vector<Term> work = f.terms();
    reduce_terms(*ring_, work, reducers);
    return Polynomial::from_sorted_terms(ring_, std::move(work));
  }

  // Gebauer-Moeller update (Becker-Weispfenning, UPDATE).
  void insert(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial hm = h.leading_monomial();
    polys_.push_back(std::move(h));
    lms_.push_back(hm);
    active_.push_back(false);
    ++stats_.basis_additions;

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k]) candidates.push_back(make_pair(k, hi));
    }

    // Chain criterion among the new pairs; coprime pairs survive this step
    // so they can shadow others, then are dropped.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool keep = lms_[p.i].coprime(hm);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (candidates[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) {
        kept.push_back(p);
      } else {
        ++stats_.pairs_pruned;
      }
    }
    std::erase_if(kept, [&](const Pair& p) {
      if (lms_[p.i].coprime(hm)) {
        ++stats_.pairs_pruned;
        return true;
      }
      return false;
    });

    // Old pairs whose lcm is strictly shadowed through h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!hm.divides(p.lcm)) return false;
      Monomial li = Monomial::lcm(lms_[p.i], hm);
      Monomial lj = Monomial::lcm(lms_[p.j], hm);
      if (li == p.lcm || lj == p.lcm) return false;
      ++stats_.pairs_pruned;
      return true;
    });
    for (Pair& p : kept) pairs_.push_back(std::move(p));

    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && hm.divides(lms_[k])) active_[k] = false;
    }
    active_[hi] = true;
  }

  RingPtr ring_;
  std::ostream* trace_;
  std::vector<Polynomial> polys_;
  std::vector<Monomial> lms_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  BuchbergerStats stats_;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `generators` in their
/// ring's monomial order. Optional line-oriented trace of pair processing.
inline GroebnerBasis buchberger(std::span<const Polynomial> generators, std::ostream* trace = nullptr) {
  const Polynomial* first = nullptr;
  for (const Polynomial& g : generators) {
    if (first) first->check_ring(g);
    if (!first) first = &g;
  }
  if (first == nullptr) throw std::invalid_argument("no generators");
  const bool all_zero = std::all_of(generators.begin(), generators.end(), [](const Polynomial& g) { return g.is_zero(); });
  if (all_zero) throw std::invalid_argument("all generators are zero");

  detail::Buchberger engine(first->ring(), trace);
  for (const Polynomial& g : generators) {
    if (!g.is_zero()) engine.add_generator(g);
  }
  engine.run();
  return engine.finish();
}

}  // namespace qgor
