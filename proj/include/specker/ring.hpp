#pragma once

/*
 * Commutative unital rings with exactly the capabilities the rest of
 * the library needs: arithmetic, idempotent enumeration, annihilator
 * witnesses, prime quotients, optional total order, and deterministic
 * sampling.  Shipped backends: the integers, the rationals, Z/n, and
 * binary products of backends.  Everything is immutable; a Ring is a
 * cheap value handle onto a shared backend.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "specker/bool_algebra.hpp"
#include "specker/errors.hpp"

namespace specker {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Deterministic helper; uniform enough for test sampling, and identical
// across platforms (std::uniform_int_distribution is not).
Int rand_between(std::mt19937_64& rng, long lo, long hi);

// One element of some ring.  The representation is canonical per
// backend (integers as themselves, rationals in lowest terms, residues
// in [0, n), product elements as pairs of canonical components), so
// structural equality is ring equality.
class RingElem {
 public:
  RingElem();  // the integer 0
  static RingElem of_int(Int v);
  static RingElem of_rat(Rat v);
  static RingElem of_pair(RingElem left, RingElem right);

  bool is_int() const;
  bool is_rat() const;
  bool is_pair() const;
  const Int& int_value() const;
  const Rat& rat_value() const;
  const RingElem& first() const;
  const RingElem& second() const;

  // display form: "5", "-2/3", "(1,0)", "((1,0),2)"
  std::string repr() const;

  // arbitrary total order on representations, for containers
  static int compare_repr(const RingElem& a, const RingElem& b);

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return compare_repr(a, b) == 0;
  }
  friend bool operator!=(const RingElem& a, const RingElem& b) {
    return !(a == b);
  }

 private:
  struct Pair;
  // int index 0, rat index 1, pair index 2
  std::variant<Int, Rat, std::shared_ptr<const Pair>> rep_;
};

struct RingElem::Pair {
  RingElem first;
  RingElem second;
};

struct ReprLess {
  bool operator()(const RingElem& a, const RingElem& b) const {
    return RingElem::compare_repr(a, b) < 0;
  }
};

struct RingImpl;
struct RingQuotient;

struct RingClassification {
  bool is_indecomposable = false;
  bool is_domain = false;
  bool is_weak_baer = false;
  bool is_totally_ordered = false;
};

class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring modular(const Int& modulus);  // 2 <= modulus <= 10^6
  static Ring product(const Ring& left, const Ring& right);

  enum class Kind { integers, rationals, modular, product };
  Kind kind() const;
  const Int& modulus() const;  // modular only
  Ring left() const;           // product only
  Ring right() const;          // product only
  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(const Int& v) const;  // image under the unique hom from Z
  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  bool is_zero(const RingElem& a) const;
  bool is_one(const RingElem& a) const;
  // whether the representation is a canonical element of this ring
  bool accepts(const RingElem& a) const;

  // Idempotents, deterministically ordered (numeric / componentwise scan).
  std::vector<RingElem> idempotents() const;
  bool is_idempotent(const RingElem& a) const;
  bool is_indecomposable() const;  // exactly two idempotents

  bool is_domain() const;
  bool is_finite() const;
  std::optional<Int> cardinality() const;
  std::vector<RingElem> elements() const;  // finite backends only

  bool is_totally_ordered() const;
  int compare(const RingElem& a, const RingElem& b) const;  // ordered only
  RingElem abs(const RingElem& a) const;                    // ordered only

  // The idempotent e with ann(a) = eR, or NotWeakBaerAt(a) if none exists.
  RingElem annihilator_witness(const RingElem& a) const;
  bool is_weak_baer() const;
  // First element (enumeration order) with no witness; finite backends only.
  std::optional<RingElem> weak_baer_failure() const;

  // R/(p); p must generate a prime ideal (checked by factor search).
  // Supported for the integer and modular backends.
  RingQuotient quotient_by_prime(const RingElem& p) const;

  RingElem sample(std::mt19937_64& rng) const;

  // Re-derives the declared flags from element-level evidence and fails
  // with InconsistentBackend on any mismatch.
  RingClassification classify() const;

 private:
  explicit Ring(std::shared_ptr<const RingImpl> impl);
  friend Ring make_ring(std::shared_ptr<const RingImpl> impl);
  std::shared_ptr<const RingImpl> impl_;
};

struct RingQuotient {
  Ring ring;
  std::function<RingElem(const RingElem&)> project;
};

// The idempotents of R organised as a Boolean algebra: one atom per
// minimal nonzero idempotent, every idempotent the sum of the atoms
// below it.
struct IdAlgebra {
  Ring ring;
  BoolAlgebra algebra;
  std::vector<RingElem> atom_idems;  // atom i -> its idempotent
  std::vector<RingElem> all_idems;   // enumeration order of Ring::idempotents

  RingElem idem_of(const BoolElem& e) const;
  BoolElem mask_of(const RingElem& idem) const;  // NotIdempotent if not one
};

IdAlgebra idem_algebra(const Ring& r);

}  // namespace specker
