#include "specker/bool_algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace specker {

namespace {

void check_same(const BoolAlgebra& a, const BoolAlgebra& b) {
  if (a != b)
    fail(Errc::mixed_algebras, "elements belong to different algebras");
}

}  // namespace

BoolAlgebra::BoolAlgebra(int atom_count) : atom_count_(atom_count) {
  if (atom_count < 1)
    fail(Errc::parse_error, "a Boolean algebra needs at least one atom");
  if (atom_count > 64)
    fail(Errc::too_large, "atom counts beyond 64 are not representable");
}

std::uint64_t BoolAlgebra::top_mask() const {
  return atom_count_ == 64 ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << atom_count_) - 1;
}

std::uint64_t BoolAlgebra::size() const {
  if (atom_count_ >= 64)
    fail(Errc::too_large, "carrier size exceeds 2^63");
  return std::uint64_t{1} << atom_count_;
}

BoolElem BoolAlgebra::bottom() const { return BoolElem(*this, 0); }

BoolElem BoolAlgebra::top() const { return BoolElem(*this, top_mask()); }

BoolElem BoolAlgebra::atom(int i) const {
  if (i < 0 || i >= atom_count_)
    fail(Errc::parse_error, "atom index " + std::to_string(i) +
                                " out of range for " +
                                std::to_string(atom_count_) + " atoms");
  return BoolElem(*this, std::uint64_t{1} << i);
}

BoolElem BoolAlgebra::element(std::uint64_t mask) const {
  if ((mask & ~top_mask()) != 0)
    fail(Errc::parse_error, "mask mentions atoms outside the algebra");
  return BoolElem(*this, mask);
}

std::vector<BoolElem> BoolAlgebra::all_elements() const {
  if (atom_count_ > 20)
    fail(Errc::too_large, "refusing to enumerate 2^" +
                              std::to_string(atom_count_) + " elements");
  std::vector<BoolElem> out;
  out.reserve(std::size_t{1} << atom_count_);
  for (std::uint64_t m = 0; m <= top_mask(); ++m) out.emplace_back(*this, m);
  return out;
}

BoolElem::BoolElem(BoolAlgebra algebra, std::uint64_t mask)
    : algebra_(algebra), mask_(mask) {
  if ((mask & ~algebra_.top_mask()) != 0)
    fail(Errc::parse_error, "mask mentions atoms outside the algebra");
}

bool BoolElem::contains(int atom) const {
  return atom >= 0 && atom < algebra_.atoms() &&
         ((mask_ >> atom) & std::uint64_t{1}) != 0;
}

bool BoolElem::is_top() const { return mask_ == algebra_.top_mask(); }

int BoolElem::count() const { return std::popcount(mask_); }

int BoolElem::least_atom() const {
  return mask_ == 0 ? -1 : std::countr_zero(mask_);
}

std::vector<int> BoolElem::atom_list() const {
  std::vector<int> out;
  for (int i = 0; i < algebra_.atoms(); ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

BoolElem BoolElem::meet(const BoolElem& other) const {
  check_same(algebra_, other.algebra_);
  return BoolElem(algebra_, mask_ & other.mask_);
}

BoolElem BoolElem::join(const BoolElem& other) const {
  check_same(algebra_, other.algebra_);
  return BoolElem(algebra_, mask_ | other.mask_);
}

BoolElem BoolElem::complement() const {
  return BoolElem(algebra_, ~mask_ & algebra_.top_mask());
}

bool BoolElem::leq(const BoolElem& other) const {
  check_same(algebra_, other.algebra_);
  return (mask_ & ~other.mask_) == 0;
}

bool BoolElem::disjoint(const BoolElem& other) const {
  check_same(algebra_, other.algebra_);
  return (mask_ & other.mask_) == 0;
}

BoolHom::BoolHom(BoolAlgebra source, BoolAlgebra target,
                 std::vector<int> dual_map)
    : source_(source), target_(target), dual_map_(std::move(dual_map)) {
  if (static_cast<int>(dual_map_.size()) != target_.atoms())
    fail(Errc::parse_error,
         "dual map must assign a source atom to each of the " +
             std::to_string(target_.atoms()) + " target atoms");
  for (int v : dual_map_)
    if (v < 0 || v >= source_.atoms())
      fail(Errc::parse_error,
           "dual map value " + std::to_string(v) + " is not a source atom");
}

BoolHom BoolHom::identity(const BoolAlgebra& algebra) {
  std::vector<int> dual(static_cast<std::size_t>(algebra.atoms()));
  for (int i = 0; i < algebra.atoms(); ++i) dual[static_cast<std::size_t>(i)] = i;
  return BoolHom(algebra, algebra, std::move(dual));
}

BoolElem BoolHom::apply(const BoolElem& e) const {
  check_same(source_, e.algebra());
  std::uint64_t out = 0;
  for (int q = 0; q < target_.atoms(); ++q)
    if (e.contains(dual_map_[static_cast<std::size_t>(q)]))
      out |= std::uint64_t{1} << q;
  return BoolElem(target_, out);
}

bool BoolHom::is_isomorphism() const {
  if (source_.atoms() != target_.atoms()) return false;
  std::vector<bool> hit(static_cast<std::size_t>(source_.atoms()), false);
  for (int v : dual_map_) {
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

BoolHom compose(const BoolHom& g, const BoolHom& f) {
  if (f.target() != g.source())
    fail(Errc::mixed_algebras, "homs do not compose: target/source mismatch");
  // dual of (g . f) = dual(f) . dual(g)
  std::vector<int> dual(static_cast<std::size_t>(g.target().atoms()));
  for (int q = 0; q < g.target().atoms(); ++q)
    dual[static_cast<std::size_t>(q)] =
        f.dual_map()[static_cast<std::size_t>(
            g.dual_map()[static_cast<std::size_t>(q)])];
  return BoolHom(f.source(), g.target(), std::move(dual));
}

std::vector<BoolElem> minterm_refinement(const BoolAlgebra& algebra,
                                         const std::vector<BoolElem>& gens) {
  for (const BoolElem& g : gens) check_same(algebra, g.algebra());
  // signature of an atom = which generators contain it
  std::map<std::vector<bool>, std::uint64_t> blocks;
  for (int a = 0; a < algebra.atoms(); ++a) {
    std::vector<bool> sig;
    sig.reserve(gens.size());
    for (const BoolElem& g : gens) sig.push_back(g.contains(a));
    blocks[sig] |= std::uint64_t{1} << a;
  }
  std::vector<BoolElem> out;
  out.reserve(blocks.size());
  for (const auto& [sig, mask] : blocks) out.push_back(algebra.element(mask));
  std::sort(out.begin(), out.end(), [](const BoolElem& x, const BoolElem& y) {
    return x.least_atom() < y.least_atom();
  });
  return out;
}

std::vector<BoolHom> enumerate_homs(const BoolAlgebra& a,
                                    const BoolAlgebra& b) {
  double estimate = 1.0;
  for (int i = 0; i < b.atoms(); ++i) {
    estimate *= a.atoms();
    if (estimate > 2e6)
      fail(Errc::too_large, "hom set has more than 2e6 members");
  }
  std::vector<BoolHom> out;
  std::vector<int> dual(static_cast<std::size_t>(b.atoms()), 0);
  for (;;) {
    out.emplace_back(a, b, dual);
    // odometer increment, most significant digit first for lexicographic order
    int pos = b.atoms() - 1;
    while (pos >= 0 && dual[static_cast<std::size_t>(pos)] == a.atoms() - 1) {
      dual[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++dual[static_cast<std::size_t>(pos)];
  }
  return out;
}

int BoolCoproduct::atom_index(int left_atom, int right_atom) const {
  if (left_atom < 0 || left_atom >= left.source().atoms() || right_atom < 0 ||
      right_atom >= right.source().atoms())
    fail(Errc::parse_error, "coproduct atom index out of range");
  return left_atom * right.source().atoms() + right_atom;
}

BoolHom BoolCoproduct::mediate(const BoolHom& f, const BoolHom& g) const {
  if (f.source() != left.source() || g.source() != right.source())
    fail(Errc::mixed_algebras, "mediating homs must start at the summands");
  if (f.target() != g.target())
    fail(Errc::mixed_algebras, "mediating homs must share a target");
  std::vector<int> dual(static_cast<std::size_t>(f.target().atoms()));
  for (int q = 0; q < f.target().atoms(); ++q)
    dual[static_cast<std::size_t>(q)] =
        atom_index(f.dual_map()[static_cast<std::size_t>(q)],
                   g.dual_map()[static_cast<std::size_t>(q)]);
  return BoolHom(algebra, f.target(), std::move(dual));
}

BoolCoproduct coproduct(const BoolAlgebra& a, const BoolAlgebra& b) {
  long long n = static_cast<long long>(a.atoms()) * b.atoms();
  if (n > 64)
    fail(Errc::too_large, "coproduct would need " + std::to_string(n) +
                              " atoms, more than 64");
  BoolAlgebra c(static_cast<int>(n));
  // dual of the left coprojection forgets the right coordinate, and
  // symmetrically; atom (i, j) of the coproduct gets index i*atoms(b)+j.
  std::vector<int> dual_left(static_cast<std::size_t>(n));
  std::vector<int> dual_right(static_cast<std::size_t>(n));
  for (int i = 0; i < a.atoms(); ++i)
    for (int j = 0; j < b.atoms(); ++j) {
      dual_left[static_cast<std::size_t>(i * b.atoms() + j)] = i;
      dual_right[static_cast<std::size_t>(i * b.atoms() + j)] = j;
    }
  return BoolCoproduct{c, BoolHom(a, c, std::move(dual_left)),
                       BoolHom(b, c, std::move(dual_right))};
}

BoolAlgebra dm_completion(const BoolAlgebra& b) { return b; }

BoolElem complete_join(const BoolAlgebra& algebra,
                       const std::vector<BoolElem>& family) {
  BoolElem acc = algebra.bottom();
  for (const BoolElem& e : family) acc = acc.join(e);
  return acc;
}

BoolElem complete_meet(const BoolAlgebra& algebra,
                       const std::vector<BoolElem>& family) {
  BoolElem acc = algebra.top();
  for (const BoolElem& e : family) acc = acc.meet(e);
  return acc;
}

}  // namespace specker
