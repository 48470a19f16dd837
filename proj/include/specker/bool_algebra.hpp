#pragma once

/*
 * Finite Boolean algebras presented by their atoms.  An algebra with n
 * atoms (1 <= n <= 64) has 2^n elements; each element is the set of
 * atoms below it, stored as a bit mask.  Homomorphisms are stored
 * dually: a hom A -> B is a total map from the atoms of B to the atoms
 * of A, and e maps to the set of B-atoms whose image lies in e.  This
 * makes composition, enumeration and isomorphism checks mechanical.
 */

#include <cstdint>
#include <vector>

#include "specker/errors.hpp"

namespace specker {

class BoolElem;
class BoolHom;

class BoolAlgebra {
 public:
  explicit BoolAlgebra(int atom_count);

  int atoms() const { return atom_count_; }
  std::uint64_t top_mask() const;
  std::uint64_t size() const;  // 2^atoms; requires atoms < 64 to be exact

  BoolElem bottom() const;
  BoolElem top() const;
  BoolElem atom(int i) const;
  BoolElem element(std::uint64_t mask) const;
  // all 2^n elements in increasing mask order; guarded for small n only
  std::vector<BoolElem> all_elements() const;

  friend bool operator==(const BoolAlgebra& a, const BoolAlgebra& b) {
    return a.atom_count_ == b.atom_count_;
  }
  friend bool operator!=(const BoolAlgebra& a, const BoolAlgebra& b) {
    return !(a == b);
  }

 private:
  int atom_count_;
};

class BoolElem {
 public:
  BoolElem(BoolAlgebra algebra, std::uint64_t mask);

  const BoolAlgebra& algebra() const { return algebra_; }
  std::uint64_t mask() const { return mask_; }

  bool contains(int atom) const;
  bool is_bottom() const { return mask_ == 0; }
  bool is_top() const;
  int count() const;       // number of atoms below
  int least_atom() const;  // -1 for bottom
  std::vector<int> atom_list() const;

  BoolElem meet(const BoolElem& other) const;
  BoolElem join(const BoolElem& other) const;
  BoolElem complement() const;
  bool leq(const BoolElem& other) const;
  bool disjoint(const BoolElem& other) const;

  friend bool operator==(const BoolElem& a, const BoolElem& b) {
    return a.algebra_ == b.algebra_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const BoolElem& a, const BoolElem& b) {
    return !(a == b);
  }

 private:
  BoolAlgebra algebra_;
  std::uint64_t mask_;
};

class BoolHom {
 public:
  // dual_map[q] = the source atom that the q-th target atom sits under.
  BoolHom(BoolAlgebra source, BoolAlgebra target, std::vector<int> dual_map);
  static BoolHom identity(const BoolAlgebra& algebra);

  const BoolAlgebra& source() const { return source_; }
  const BoolAlgebra& target() const { return target_; }
  const std::vector<int>& dual_map() const { return dual_map_; }

  BoolElem apply(const BoolElem& e) const;
  bool is_isomorphism() const;  // the dual map is a bijection

  friend bool operator==(const BoolHom& f, const BoolHom& g) {
    return f.source_ == g.source_ && f.target_ == g.target_ &&
           f.dual_map_ == g.dual_map_;
  }
  friend bool operator!=(const BoolHom& f, const BoolHom& g) {
    return !(f == g);
  }

 private:
  BoolAlgebra source_;
  BoolAlgebra target_;
  std::vector<int> dual_map_;
};

// g after f; fails with MixedAlgebras unless f.target() == g.source().
BoolHom compose(const BoolHom& g, const BoolHom& f);

// Coarsest partition of the atoms refining every generator: atoms are
// grouped by their membership pattern across gens.  Blocks are ordered
// by least atom.  No generators -> the single block `top`.
std::vector<BoolElem> minterm_refinement(const BoolAlgebra& algebra,
                                         const std::vector<BoolElem>& gens);

// All homs a -> b in lexicographic dual-map order; atoms(a)^atoms(b)
// of them, guarded by TooLarge.
std::vector<BoolHom> enumerate_homs(const BoolAlgebra& a,
                                    const BoolAlgebra& b);

struct BoolCoproduct {
  BoolAlgebra algebra;  // atoms(a) * atoms(b) atoms
  BoolHom left;         // a -> algebra
  BoolHom right;        // b -> algebra
  int atom_index(int left_atom, int right_atom) const;
  // The unique hom h with h . left == f and h . right == g.
  BoolHom mediate(const BoolHom& f, const BoolHom& g) const;
};

BoolCoproduct coproduct(const BoolAlgebra& a, const BoolAlgebra& b);

// Smallest complete algebra a finite algebra embeds in: itself.  Kept
// as a named operation so completion arguments read as intended.
BoolAlgebra dm_completion(const BoolAlgebra& b);

// Arbitrary joins/meets exist in a finite algebra; empty family gives
// bottom resp. top.
BoolElem complete_join(const BoolAlgebra& algebra,
                       const std::vector<BoolElem>& family);
BoolElem complete_meet(const BoolAlgebra& algebra,
                       const std::vector<BoolElem>& family);

inline bool isomorphic(const BoolAlgebra& a, const BoolAlgebra& b) {
  return a.atoms() == b.atoms();
}

}  // namespace specker
