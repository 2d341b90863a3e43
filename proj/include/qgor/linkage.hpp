#pragma once

// Canonical modules through linkage. For a complete intersection c inside a
// of the same codimension, the canonical module of A/a is presented as
// (c : a) / c. Its minimal number of generators at the ideal of all
// variables decides quasi-Gorensteinness (cyclic canonical module).

#include "qgor/ideal.hpp"
#include "qgor/linalg.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qgor {

class LinkageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (a, c) with c a complete intersection in a of equal codimension, and the
/// linked ideal d = c : a.
class LinkagePair {
 public:
  const Ideal& ideal() const { return a_; }
  const Ideal& complete_intersection() const { return c_; }
  const Ideal& linked() const { return d_; }
  std::size_t codim() const { return codim_; }

 private:
  friend LinkagePair build_linkage(const Ideal& a, const Ideal& c);
  LinkagePair(Ideal a, Ideal c, Ideal d, std::size_t codim)
      : a_(std::move(a)), c_(std::move(c)), d_(std::move(d)), codim_(codim) {}

  Ideal a_;
  Ideal c_;
  Ideal d_;
  std::size_t codim_;
};

/// Checks c ⊆ a and codim(c) = codim(a) = #generators(c), then computes c : a.
inline LinkagePair build_linkage(const Ideal& a, const Ideal& c) {
  check_same_ring(a, c);
  std::vector<Polynomial> ci;
  for (const Polynomial& g : c.generators()) {
    if (!g.is_zero()) ci.push_back(g);
  }
  if (ci.empty()) throw LinkageError("the complete intersection has no nonzero generators");
  for (const Polynomial& g : ci) {
    if (!a.contains(g)) throw LinkageError("generator " + g.to_string() + " of the link is not in the ideal");
  }
  Ideal link(c.ring(), ci);
  if (link.is_unit()) throw LinkageError("the link is the unit ideal");
  const std::size_t codim_c = codimension(link);
  const std::size_t codim_a = codimension(a);
  if (codim_c != codim_a || codim_c != ci.size()) {
    throw LinkageError("not a valid link: codim(c) = " + std::to_string(codim_c) + ", codim(a) = " +
                       std::to_string(codim_a) + ", generators(c) = " + std::to_string(ci.size()));
  }
  Ideal d = colon(link, a);
  return LinkagePair(a, std::move(link), std::move(d), codim_c);
}

/// Generators of d and their count mu, the minimal number of generators of
/// d / c localized at the ideal of all variables.
struct CanonicalModulePresentation {
  std::vector<Polynomial> generators;
  std::size_t minimal_generators = 0;
};

/// mu(d / c) by Nakayama: with H a Groebner basis of c + m*d (m = all
/// variables), the images of the generators of d in d / (c + m*d) are their
/// normal forms modulo H, and mu is the rank of those normal forms over k.
inline std::size_t minimal_generator_count(const Ideal& c, const std::vector<Polynomial>& d_generators) {
  if (d_generators.empty()) return 0;
  const RingPtr& ring = c.ring();
  std::vector<Polynomial> gens = c.generators();
  for (std::size_t v = 0; v < ring->num_vars(); ++v) {
    const Polynomial x = Polynomial::variable(ring, v);
    for (const Polynomial& g : d_generators) gens.push_back(x * g);
  }
  Ideal h(ring, std::move(gens));
  const GroebnerBasis& gb = h.groebner_basis();
  std::vector<Polynomial> images;
  for (const Polynomial& g : d_generators) images.push_back(gb.reduce(g));
  return rank(images);
}

inline CanonicalModulePresentation canonical_module(const LinkagePair& pair) {
  CanonicalModulePresentation out;
  out.generators = pair.linked().generators();
  out.minimal_generators = minimal_generator_count(pair.complete_intersection(), out.generators);
  return out;
}

inline std::size_t minimal_generator_count(const LinkagePair& pair) {
  return minimal_generator_count(pair.complete_intersection(), pair.linked().generators());
}

/// The canonical module presented by the link is cyclic.
inline bool is_quasi_gorenstein(const LinkagePair& pair) { return minimal_generator_count(pair) == 1; }

inline bool is_quasi_gorenstein(const Ideal& a, const Ideal& c) {
  return is_quasi_gorenstein(build_linkage(a, c));
}

/// c : (c : a), the intersection of the top-dimensional components of a.
inline Ideal unmixed_part(const LinkagePair& pair) { return colon(pair.complete_intersection(), pair.linked()); }

inline bool is_unmixed(const LinkagePair& pair) { return unmixed_part(pair) == pair.ideal(); }

/// Greedy choice of a link: scans the generators of a in order, keeping each
/// one that raises the codimension, until codim(a) generators are chosen.
/// Backtracks when the greedy prefix cannot be completed. Returns nullopt if
/// no subset of the generators works.
inline std::optional<Ideal> select_link(const Ideal& a) {
  const std::size_t target = codimension(a);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.generators()) {
    if (!g.is_zero()) gens.push_back(g);
  }
  std::vector<Polynomial> chosen;
  auto search = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == target) return true;
    for (std::size_t k = from; k < gens.size(); ++k) {
      if (gens.size() - k < target - chosen.size()) return false;
      chosen.push_back(gens[k]);
      Ideal trial(a.ring(), chosen);
      if (!trial.is_unit() && codimension(trial) == chosen.size() && self(self, k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (target == 0 || !search(search, 0)) return std::nullopt;
  return Ideal(a.ring(), chosen);
}

}  // namespace qgor
