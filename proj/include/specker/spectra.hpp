#pragma once

/*
 * The finite avatars of the spectral side: the space of R-algebra maps
 * S -> R with its zero-set subbasis, minimal primes as kernels of those
 * maps when R is a domain, annihilator ideals with their idempotent
 * witnesses, the weak Baer / Baer classification, and the hull that
 * repairs a non-Baer algebra by completing its idempotent algebra.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "specker/functors.hpp"

namespace specker {

struct HomSpace {
  SpeckerAlgebra algebra;
  SpeckerAlgebra base;              // R itself, as a one-atom power
  std::vector<AlgebraHom> points;   // all R-algebra maps S -> R

  // indices of the points sending s to 0; when R is indecomposable this
  // is cross-checked against intersecting the generator zero sets
  std::vector<std::size_t> zero_set(const SpeckerElem& s) const;
};

HomSpace hom_space(const SpeckerAlgebra& s);

// A minimal prime of S, carried by the evaluation map it is the kernel
// of.  Only available over domains (NotADomain otherwise).
class MinimalPrime {
 public:
  explicit MinimalPrime(AlgebraHom witness);
  const AlgebraHom& witness() const { return witness_; }
  // the atom the witness evaluates at
  int atom() const;
  bool contains(const SpeckerElem& s) const;

 private:
  AlgebraHom witness_;
};

std::vector<MinimalPrime> min_spectrum(const SpeckerAlgebra& s);

struct VerifyOptions {
  std::uint64_t exhaustive_limit = 10000;
  int samples = 1000;
  std::uint64_t seed = 0;
};

// The idempotent e with ann(s) = eS, assembled atomwise from the ring
// witnesses (NotWeakBaerAt bubbles up from there).  Both inclusions are
// re-verified: exhaustively on small carriers, by sampling otherwise.
SpeckerElem annihilator(const SpeckerElem& s, const VerifyOptions& opts = {});
// ann of a set = meet of the member witnesses; the empty set gets 1.
SpeckerElem annihilator_of_set(const SpeckerAlgebra& algebra,
                               const std::vector<SpeckerElem>& set,
                               const VerifyOptions& opts = {});

struct BaerReport {
  bool weak_baer = false;
  bool id_complete = false;  // Id(S) closed under arbitrary joins
  bool baer = false;
  std::optional<RingElem> witness_failure;  // ring element with no witness
};

BaerReport baer_report(const SpeckerAlgebra& s, const VerifyOptions& opts = {});

// S embedded in R[completion of Id(S)]; at these finite sizes the
// completion adds nothing, which is itself worth witnessing.
struct HullReport {
  SpeckerAlgebra hull;
  AlgebraHom embedding;
  bool embedding_is_isomorphism = false;
  bool hull_is_baer = false;
};

HullReport injective_hull(const SpeckerAlgebra& s,
                          const VerifyOptions& opts = {});

}  // namespace specker
