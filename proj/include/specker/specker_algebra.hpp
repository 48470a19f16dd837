#pragma once

/*
 * The Boolean power R[B] of a commutative ring R by a finite Boolean
 * algebra B: functions from the atoms of B into R, with pointwise
 * operations.  The pointwise value vector is the canonical storage;
 * orthogonal decompositions, formal linear combinations of idempotent
 * generators, and finite-support functions R -> B are the other three
 * presentations, each with its own conversion path so that they can
 * cross-check one another.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "specker/bool_algebra.hpp"
#include "specker/ring.hpp"

namespace specker {

class SpeckerElem;

class SpeckerAlgebra {
 public:
  SpeckerAlgebra(Ring ring, BoolAlgebra algebra);

  const Ring& ring() const { return ring_; }
  const BoolAlgebra& algebra() const { return algebra_; }

  SpeckerElem zero() const;
  SpeckerElem one() const;
  SpeckerElem constant(const RingElem& a) const;
  // y_e, the characteristic function of e (1 on its atoms, 0 elsewhere)
  SpeckerElem generator(const BoolElem& e) const;
  SpeckerElem atom_char(int atom) const;
  SpeckerElem element(std::vector<RingElem> values) const;

  std::optional<Int> carrier_size() const;
  // all |R|^atoms elements; TooLarge beyond the limit
  std::vector<SpeckerElem> enumerate(std::uint64_t limit = 1u << 20) const;
  SpeckerElem sample(std::mt19937_64& rng) const;

  friend bool operator==(const SpeckerAlgebra& a, const SpeckerAlgebra& b) {
    return a.ring_ == b.ring_ && a.algebra_ == b.algebra_;
  }
  friend bool operator!=(const SpeckerAlgebra& a, const SpeckerAlgebra& b) {
    return !(a == b);
  }

 private:
  Ring ring_;
  BoolAlgebra algebra_;
};

class SpeckerElem {
 public:
  SpeckerElem(SpeckerAlgebra parent, std::vector<RingElem> values);

  const SpeckerAlgebra& parent() const { return parent_; }
  const std::vector<RingElem>& values() const { return values_; }
  const RingElem& value(int atom) const;

  SpeckerElem add(const SpeckerElem& other) const;
  SpeckerElem sub(const SpeckerElem& other) const;
  SpeckerElem negate() const;
  SpeckerElem mul(const SpeckerElem& other) const;
  SpeckerElem scale(const RingElem& r) const;  // module action of R
  bool is_zero() const;

  friend bool operator==(const SpeckerElem& a, const SpeckerElem& b) {
    return a.parent_ == b.parent_ && a.values_ == b.values_;
  }
  friend bool operator!=(const SpeckerElem& a, const SpeckerElem& b) {
    return !(a == b);
  }

 private:
  SpeckerAlgebra parent_;
  std::vector<RingElem> values_;
};

// deterministic container order
struct ElemLess {
  bool operator()(const SpeckerElem& a, const SpeckerElem& b) const;
};

struct OrthPart {
  RingElem coeff;
  BoolElem idem;
};

// An arbitrary formal sum of coefficient * characteristic-function
// terms; no orthogonality or distinctness promised.
class FormalCombination {
 public:
  FormalCombination(SpeckerAlgebra parent, std::vector<OrthPart> terms);
  const SpeckerAlgebra& parent() const { return parent_; }
  const std::vector<OrthPart>& terms() const { return terms_; }
  SpeckerElem evaluate() const;  // pointwise oracle for the same sum

 private:
  SpeckerAlgebra parent_;
  std::vector<OrthPart> terms_;
};

// The canonical presentation: distinct nonzero coefficients on pairwise
// disjoint nonzero idempotents, parts ordered by least atom.  Only the
// two normalization routes below construct these.
class OrthogonalForm {
 public:
  const SpeckerAlgebra& parent() const { return parent_; }
  const std::vector<OrthPart>& parts() const { return parts_; }
  // parts plus an explicit zero part on the uncovered idempotent, so
  // the idempotents partition the top; unchanged if already full
  std::vector<OrthPart> full_parts() const;
  FormalCombination as_combination() const;

 private:
  friend OrthogonalForm normalize(const FormalCombination& c);
  friend OrthogonalForm from_pointwise(const SpeckerElem& s);
  OrthogonalForm(SpeckerAlgebra parent, std::vector<OrthPart> parts);
  SpeckerAlgebra parent_;
  std::vector<OrthPart> parts_;
};

// Minterm route: refine the term idempotents into disjoint blocks, sum
// coefficients per block, merge blocks with equal sums, drop zeros.
OrthogonalForm normalize(const FormalCombination& c);
// Value route: group atoms by their ring value.  Independent of the
// minterm route on purpose.
OrthogonalForm from_pointwise(const SpeckerElem& s);
SpeckerElem to_pointwise(const OrthogonalForm& f);

// Finite-support presentation: a function R -> B whose nonzero fibers
// partition the top.  f(a) = "where the element takes value a".
class FosterFunction {
 public:
  FosterFunction(SpeckerAlgebra parent,
                 std::map<RingElem, BoolElem, ReprLess> fibers);
  static FosterFunction from_element(const SpeckerElem& s);
  SpeckerElem to_element() const;

  const SpeckerAlgebra& parent() const { return parent_; }
  const std::map<RingElem, BoolElem, ReprLess>& fibers() const {
    return fibers_;
  }
  BoolElem at(const RingElem& a) const;  // bottom off the support

 private:
  SpeckerAlgebra parent_;
  std::map<RingElem, BoolElem, ReprLess> fibers_;
};

// The convolution-style operations on the function presentation:
//   (f+g)(a) = join of f(b) meet g(c) over b + c = a
//   (f*g)(a) = join of f(b) meet g(c) over b * c = a
//   (r.f)(a) = join of f(c) over r * c = a
FosterFunction foster_add(const FosterFunction& f, const FosterFunction& g);
FosterFunction foster_mul(const FosterFunction& f, const FosterFunction& g);
FosterFunction foster_scalar(const RingElem& r, const FosterFunction& f);

// Valuewise test, cross-checked against s*s == s.
bool is_idempotent(const SpeckerElem& s);
// The ring values of an idempotent element lie in Id(R); faithful means
// they join to 1 there.  NotIdempotent on non-idempotent input.
bool is_faithful(const SpeckerElem& s);

// Closure of a set of idempotent elements under meet, join and
// complement (a Boolean subalgebra of Id(R[B]) when it contains 0, 1).
std::vector<SpeckerElem> idempotent_closure(const std::vector<SpeckerElem>& gens);
// Whether gens generate R[B] as an R-algebra with every nonzero member
// of the closure faithful.
bool is_faithful_generating(const SpeckerAlgebra& algebra,
                            const std::vector<SpeckerElem>& gens,
                            std::uint64_t exhaustive_limit = 10000);

// Id(R[B]) as a Boolean algebra: its atoms are the products
// (atom of Id(R)) * (characteristic function of an atom of B), indexed
// ring-major, which is exactly the coproduct layout of Id(R) and B.
struct IdempotentAlgebra {
  SpeckerAlgebra parent;
  IdAlgebra ring_id;
  BoolAlgebra algebra;

  int atom_index(int ring_atom, int alg_atom) const;
  SpeckerElem element_of(const BoolElem& e) const;
  BoolElem mask_of(const SpeckerElem& s) const;  // NotIdempotent if not one
};

IdempotentAlgebra idempotent_algebra(const SpeckerAlgebra& s);

// R[B] / P(R[B]) for a prime p of R: apply the ring projection atomwise.
struct SpeckerQuotient {
  SpeckerAlgebra algebra;
  std::function<SpeckerElem(const SpeckerElem&)> project;
};

SpeckerQuotient quotient_mod_prime(const SpeckerAlgebra& s, const RingElem& p);

}  // namespace specker
