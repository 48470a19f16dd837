#pragma once

/*
 * The lattice order a Boolean power inherits when its scalars form a
 * totally ordered ring: everything is pointwise, positivity can be read
 * off the orthogonal decomposition, and the multiplicative law that
 * distinguishes these lattice-ordered algebras is checkable per triple.
 */

#include <cstdint>

#include "specker/functors.hpp"

namespace specker {

class OrderedContext {
 public:
  // UnorderedRing unless the scalars carry a compatible total order
  explicit OrderedContext(SpeckerAlgebra algebra);

  const SpeckerAlgebra& algebra() const { return algebra_; }

  bool leq(const SpeckerElem& f, const SpeckerElem& g) const;
  SpeckerElem join(const SpeckerElem& f, const SpeckerElem& g) const;
  SpeckerElem meet(const SpeckerElem& f, const SpeckerElem& g) const;
  SpeckerElem abs(const SpeckerElem& f) const;

  // f >= 0 iff every coefficient in its decomposition is >= 0; computed
  // from the decomposition and cross-checked pointwise
  bool is_positive(const SpeckerElem& f) const;

  // a /\ b = 0 and c >= 0 imply ac /\ b = 0; reports whether the
  // preconditions held and, when they did, whether the law did
  struct LawCheck {
    bool preconditions_met = false;
    bool holds = false;
  };
  LawCheck multiplicative_law(const SpeckerElem& a, const SpeckerElem& b,
                              const SpeckerElem& c) const;

  // join/meet/abs preservation of a hom on sampled pairs, plus the
  // identity 2(f v g) = f + g + |f - g| on the source
  bool lattice_hom_check(const AlgebraHom& hom, int samples = 200,
                         std::uint64_t seed = 0) const;

 private:
  SpeckerAlgebra algebra_;
};

}  // namespace specker
