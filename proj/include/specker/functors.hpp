#pragma once

/*
 * R-algebra homomorphisms between Boolean powers of a fixed ring, and
 * the two constructions they factor through: B -> R[B] on algebras and
 * hom lifting on maps.  A hom R[B] -> T is determined by a Boolean hom
 * B -> Id(T), which is exactly what gets stored; application, identity
 * and composition all reduce to that datum.
 */

#include <vector>

#include "specker/specker_algebra.hpp"

namespace specker {

class AlgebraHom {
 public:
  // datum: source.algebra() -> Id(target), atomically encoded
  AlgebraHom(SpeckerAlgebra source, SpeckerAlgebra target, BoolHom datum);
  static AlgebraHom identity(const SpeckerAlgebra& s);

  const SpeckerAlgebra& source() const { return source_; }
  const SpeckerAlgebra& target() const { return target_; }
  const BoolHom& datum() const { return datum_; }
  const IdempotentAlgebra& target_idempotents() const { return target_id_; }

  SpeckerElem apply(const SpeckerElem& s) const;
  // the Boolean hom Id(source) -> Id(target) this map restricts to
  BoolHom restrict_to_idempotents() const;
  // Decided on the idempotent restriction: an R-algebra map between
  // Boolean powers is invertible exactly when its restriction to the
  // idempotent algebras is a Boolean isomorphism (the inverse lifts
  // back).  Checked against carrier bijectivity in the test suite.
  bool is_isomorphism() const;

  friend bool operator==(const AlgebraHom& f, const AlgebraHom& g) {
    return f.source_ == g.source_ && f.target_ == g.target_ &&
           f.datum_ == g.datum_;
  }
  friend bool operator!=(const AlgebraHom& f, const AlgebraHom& g) {
    return !(f == g);
  }

 private:
  SpeckerAlgebra source_;
  SpeckerAlgebra target_;
  IdempotentAlgebra target_id_;
  BoolHom datum_;
};

AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f);

// The power construction, on objects and on Boolean homs.
SpeckerAlgebra power_algebra(const Ring& r, const BoolAlgebra& b);
AlgebraHom power_hom(const Ring& r, const BoolHom& h);

// The unique R-algebra hom R[B] -> T restricting to sigma on B.
// sigma must land in Id(T) (TargetMismatch otherwise).
AlgebraHom lift(const BoolHom& sigma, const SpeckerAlgebra& target);

// B -> Id(R[B]), e |-> y_e; an isomorphism iff R is indecomposable.
BoolHom insertion(const BoolAlgebra& b, const Ring& r);
// R[Id(S)] -> S, the lift of the identity datum; measures how far S is
// from a genuine Boolean power of R.
AlgebraHom counit(const SpeckerAlgebra& s);

// All R-algebra homs S -> T (finitely many: one per Boolean hom
// B_S -> Id(T)).  RingMismatch unless the scalars agree.
std::vector<AlgebraHom> enumerate_algebra_homs(const SpeckerAlgebra& s,
                                               const SpeckerAlgebra& t);

struct EquivalenceReport {
  std::vector<int> sizes;          // atom counts probed
  std::vector<bool> insertion_iso;  // per size: B -> Id(R[B]) invertible
  std::vector<bool> counit_iso;     // per size: R[Id(R[B])] -> R[B] invertible
  bool ring_indecomposable = false;
  bool equivalence = false;  // all probes invertible
  bool consistent = false;   // equivalence agrees with indecomposability
};

// Probes whether the two constructions invert each other over r at the
// given atom counts; they do for every size iff r has no idempotents
// besides 0 and 1, and the report cross-checks that.
EquivalenceReport equivalence_report(const Ring& r,
                                     const std::vector<int>& sizes);

}  // namespace specker
