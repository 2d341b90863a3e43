#pragma once

// Exact Gaussian elimination over the coefficient field, with polynomials
// read as coefficient vectors indexed by monomials.

#include "qgor/polynomial.hpp"

#include <optional>
#include <vector>

namespace qgor {

/// Incrementally maintained k-span of polynomials in echelon form: pivots
/// are distinct leading monomials, each pivot row monic.
class LinearSpan {
 public:
  explicit LinearSpan(RingPtr ring) : ring_(std::move(ring)) {}

  /// Fully reduces v against the pivot rows (every term, not only the lead).
  Polynomial reduce(const Polynomial& v) const {
    Polynomial work = v;
    std::vector<Term> done;
    while (!work.is_zero()) {
      const Term lead = work.leading_term();
      const Polynomial* pivot = find(lead.monomial);
      if (pivot == nullptr) {
        done.push_back(lead);
        work = Polynomial::from_sorted_terms(ring_, {work.terms().begin() + 1, work.terms().end()});
      } else {
        work.subtract_multiple(lead.coefficient, Monomial{}, *pivot);
      }
    }
    return Polynomial::from_sorted_terms(ring_, std::move(done));
  }

  /// Adds v; returns the reduced new row, or nullopt if v was dependent.
  std::optional<Polynomial> insert(const Polynomial& v) {
    Polynomial r = reduce(v);
    if (r.is_zero()) return std::nullopt;
    r.make_monic();
    rows_.push_back(r);
    return r;
  }

  bool contains(const Polynomial& v) const { return reduce(v).is_zero(); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Polynomial>& rows() const { return rows_; }

 private:
  const Polynomial* find(const Monomial& m) const {
    for (const Polynomial& r : rows_) {
      if (r.leading_monomial() == m) return &r;
    }
    return nullptr;
  }

  RingPtr ring_;
  std::vector<Polynomial> rows_;
};

inline std::size_t rank(const std::vector<Polynomial>& vectors) {
  if (vectors.empty()) return 0;
  LinearSpan span(vectors.front().ring());
  for (const Polynomial& v : vectors) span.insert(v);
  return span.rank();
}

}  // namespace qgor
