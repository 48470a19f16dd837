#include "specker/specker_algebra.hpp"

#include <algorithm>
#include <set>

namespace specker {

namespace {

void check_parent(const SpeckerAlgebra& a, const SpeckerAlgebra& b) {
  if (a != b)
    fail(Errc::mixed_algebras, "elements belong to different Boolean powers");
}

void check_value(const Ring& r, const RingElem& v) {
  if (!r.accepts(v))
    fail(Errc::parse_error,
         v.repr() + " is not a canonical element of " + r.name());
}

}  // namespace

// ----------------------------------------------------------- SpeckerAlgebra

SpeckerAlgebra::SpeckerAlgebra(Ring ring, BoolAlgebra algebra)
    : ring_(std::move(ring)), algebra_(algebra) {}

SpeckerElem SpeckerAlgebra::zero() const { return constant(ring_.zero()); }

SpeckerElem SpeckerAlgebra::one() const { return constant(ring_.one()); }

SpeckerElem SpeckerAlgebra::constant(const RingElem& a) const {
  check_value(ring_, a);
  return SpeckerElem(
      *this, std::vector<RingElem>(static_cast<std::size_t>(algebra_.atoms()), a));
}

SpeckerElem SpeckerAlgebra::generator(const BoolElem& e) const {
  if (e.algebra() != algebra_)
    fail(Errc::mixed_algebras, "idempotent is from a different algebra");
  std::vector<RingElem> values(static_cast<std::size_t>(algebra_.atoms()),
                               ring_.zero());
  for (int x : e.atom_list()) values[static_cast<std::size_t>(x)] = ring_.one();
  return SpeckerElem(*this, std::move(values));
}

SpeckerElem SpeckerAlgebra::atom_char(int atom) const {
  return generator(algebra_.atom(atom));
}

SpeckerElem SpeckerAlgebra::element(std::vector<RingElem> values) const {
  return SpeckerElem(*this, std::move(values));
}

std::optional<Int> SpeckerAlgebra::carrier_size() const {
  auto card = ring_.cardinality();
  if (!card) return std::nullopt;
  Int total = 1;
  for (int i = 0; i < algebra_.atoms(); ++i) total *= *card;
  return total;
}

std::vector<SpeckerElem> SpeckerAlgebra::enumerate(std::uint64_t limit) const {
  auto total = carrier_size();
  if (!total)
    fail(Errc::unsupported_capability,
         "cannot enumerate a Boolean power of " + ring_.name());
  if (*total > limit)
    fail(Errc::too_large, "carrier has " + total->str() +
                              " elements, above the limit of " +
                              std::to_string(limit));
  std::vector<RingElem> base = ring_.elements();
  std::vector<SpeckerElem> out;
  out.reserve(total->convert_to<std::size_t>());
  std::vector<std::size_t> odo(static_cast<std::size_t>(algebra_.atoms()), 0);
  for (;;) {
    std::vector<RingElem> values;
    values.reserve(odo.size());
    for (std::size_t idx : odo) values.push_back(base[idx]);
    out.emplace_back(*this, std::move(values));
    std::size_t pos = 0;
    while (pos < odo.size() && odo[pos] == base.size() - 1) odo[pos++] = 0;
    if (pos == odo.size()) break;
    ++odo[pos];
  }
  return out;
}

SpeckerElem SpeckerAlgebra::sample(std::mt19937_64& rng) const {
  std::vector<RingElem> values;
  values.reserve(static_cast<std::size_t>(algebra_.atoms()));
  for (int i = 0; i < algebra_.atoms(); ++i) values.push_back(ring_.sample(rng));
  return SpeckerElem(*this, std::move(values));
}

// -------------------------------------------------------------- SpeckerElem

SpeckerElem::SpeckerElem(SpeckerAlgebra parent, std::vector<RingElem> values)
    : parent_(std::move(parent)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != parent_.algebra().atoms())
    fail(Errc::parse_error,
         "element needs one value per atom, expected " +
             std::to_string(parent_.algebra().atoms()) + " got " +
             std::to_string(values_.size()));
  for (const RingElem& v : values_) check_value(parent_.ring(), v);
}

const RingElem& SpeckerElem::value(int atom) const {
  if (atom < 0 || atom >= static_cast<int>(values_.size()))
    fail(Errc::parse_error, "atom index out of range");
  return values_[static_cast<std::size_t>(atom)];
}

SpeckerElem SpeckerElem::add(const SpeckerElem& other) const {
  check_parent(parent_, other.parent_);
  std::vector<RingElem> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    out.push_back(parent_.ring().add(values_[i], other.values_[i]));
  return SpeckerElem(parent_, std::move(out));
}

SpeckerElem SpeckerElem::sub(const SpeckerElem& other) const {
  return add(other.negate());
}

SpeckerElem SpeckerElem::negate() const {
  std::vector<RingElem> out;
  out.reserve(values_.size());
  for (const RingElem& v : values_) out.push_back(parent_.ring().neg(v));
  return SpeckerElem(parent_, std::move(out));
}

SpeckerElem SpeckerElem::mul(const SpeckerElem& other) const {
  check_parent(parent_, other.parent_);
  std::vector<RingElem> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    out.push_back(parent_.ring().mul(values_[i], other.values_[i]));
  return SpeckerElem(parent_, std::move(out));
}

SpeckerElem SpeckerElem::scale(const RingElem& r) const {
  check_value(parent_.ring(), r);
  std::vector<RingElem> out;
  out.reserve(values_.size());
  for (const RingElem& v : values_) out.push_back(parent_.ring().mul(r, v));
  return SpeckerElem(parent_, std::move(out));
}

bool SpeckerElem::is_zero() const {
  for (const RingElem& v : values_)
    if (!parent_.ring().is_zero(v)) return false;
  return true;
}

bool ElemLess::operator()(const SpeckerElem& a, const SpeckerElem& b) const {
  if (a.values().size() != b.values().size())
    return a.values().size() < b.values().size();
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    int c = RingElem::compare_repr(a.values()[i], b.values()[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// -------------------------------------------------- presentations and forms

FormalCombination::FormalCombination(SpeckerAlgebra parent,
                                     std::vector<OrthPart> terms)
    : parent_(std::move(parent)), terms_(std::move(terms)) {
  for (const OrthPart& t : terms_) {
    if (t.idem.algebra() != parent_.algebra())
      fail(Errc::mixed_algebras, "term idempotent is from a different algebra");
    check_value(parent_.ring(), t.coeff);
  }
}

SpeckerElem FormalCombination::evaluate() const {
  SpeckerElem acc = parent_.zero();
  for (const OrthPart& t : terms_)
    acc = acc.add(parent_.generator(t.idem).scale(t.coeff));
  return acc;
}

OrthogonalForm::OrthogonalForm(SpeckerAlgebra parent,
                               std::vector<OrthPart> parts)
    : parent_(std::move(parent)), parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].idem.is_bottom() ||
        parent_.ring().is_zero(parts_[i].coeff))
      fail(Errc::inconsistent_backend, "degenerate part in canonical form");
    for (std::size_t j = i + 1; j < parts_.size(); ++j) {
      if (!parts_[i].idem.disjoint(parts_[j].idem))
        fail(Errc::inconsistent_backend, "overlapping parts in canonical form");
      if (parts_[i].coeff == parts_[j].coeff)
        fail(Errc::inconsistent_backend, "repeated coefficient in canonical form");
    }
  }
}

std::vector<OrthPart> OrthogonalForm::full_parts() const {
  BoolElem covered = parent_.algebra().bottom();
  for (const OrthPart& p : parts_) covered = covered.join(p.idem);
  std::vector<OrthPart> out = parts_;
  if (!covered.is_top())
    out.push_back(OrthPart{parent_.ring().zero(), covered.complement()});
  std::sort(out.begin(), out.end(), [](const OrthPart& a, const OrthPart& b) {
    return a.idem.least_atom() < b.idem.least_atom();
  });
  return out;
}

FormalCombination OrthogonalForm::as_combination() const {
  return FormalCombination(parent_, parts_);
}

OrthogonalForm normalize(const FormalCombination& c) {
  const SpeckerAlgebra& s = c.parent();
  std::vector<BoolElem> gens;
  gens.reserve(c.terms().size());
  for (const OrthPart& t : c.terms()) gens.push_back(t.idem);
  std::vector<BoolElem> blocks = minterm_refinement(s.algebra(), gens);

  // coefficient of a block = sum over the terms covering it
  std::map<RingElem, BoolElem, ReprLess> by_coeff;
  for (const BoolElem& block : blocks) {
    RingElem sum = s.ring().zero();
    for (const OrthPart& t : c.terms())
      if (block.leq(t.idem)) sum = s.ring().add(sum, t.coeff);
    if (s.ring().is_zero(sum)) continue;
    auto [it, fresh] = by_coeff.emplace(sum, block);
    if (!fresh) it->second = it->second.join(block);
  }

  std::vector<OrthPart> parts;
  parts.reserve(by_coeff.size());
  for (const auto& [coeff, idem] : by_coeff) parts.push_back({coeff, idem});
  std::sort(parts.begin(), parts.end(), [](const OrthPart& a, const OrthPart& b) {
    return a.idem.least_atom() < b.idem.least_atom();
  });
  OrthogonalForm form(s, std::move(parts));

  if (to_pointwise(form) != c.evaluate())
    fail(Errc::inconsistent_backend,
         "minterm normalization disagrees with pointwise evaluation");
  return form;
}

OrthogonalForm from_pointwise(const SpeckerElem& s) {
  const SpeckerAlgebra& parent = s.parent();
  std::map<RingElem, std::uint64_t, ReprLess> fibers;
  for (int x = 0; x < parent.algebra().atoms(); ++x) {
    const RingElem& v = s.value(x);
    if (parent.ring().is_zero(v)) continue;
    fibers[v] |= std::uint64_t{1} << x;
  }
  std::vector<OrthPart> parts;
  parts.reserve(fibers.size());
  for (const auto& [coeff, mask] : fibers)
    parts.push_back({coeff, parent.algebra().element(mask)});
  std::sort(parts.begin(), parts.end(), [](const OrthPart& a, const OrthPart& b) {
    return a.idem.least_atom() < b.idem.least_atom();
  });
  return OrthogonalForm(parent, std::move(parts));
}

SpeckerElem to_pointwise(const OrthogonalForm& f) {
  const SpeckerAlgebra& parent = f.parent();
  std::vector<RingElem> values(
      static_cast<std::size_t>(parent.algebra().atoms()), parent.ring().zero());
  for (const OrthPart& p : f.parts())
    for (int x : p.idem.atom_list()) values[static_cast<std::size_t>(x)] = p.coeff;
  return SpeckerElem(parent, std::move(values));
}

// ----------------------------------------------------------- FosterFunction

FosterFunction::FosterFunction(SpeckerAlgebra parent,
                               std::map<RingElem, BoolElem, ReprLess> fibers)
    : parent_(std::move(parent)), fibers_(std::move(fibers)) {
  for (auto it = fibers_.begin(); it != fibers_.end();) {
    check_value(parent_.ring(), it->first);
    if (it->second.algebra() != parent_.algebra())
      fail(Errc::mixed_algebras, "fiber lives in a different algebra");
    it = it->second.is_bottom() ? fibers_.erase(it) : std::next(it);
  }
  BoolElem covered = parent_.algebra().bottom();
  for (const auto& [value, fiber] : fibers_) {
    if (!covered.disjoint(fiber))
      fail(Errc::parse_error, "fibers overlap; not a function presentation");
    covered = covered.join(fiber);
  }
  if (!covered.is_top())
    fail(Errc::parse_error, "fibers do not cover the algebra");
}

FosterFunction FosterFunction::from_element(const SpeckerElem& s) {
  std::map<RingElem, std::uint64_t, ReprLess> masks;
  for (int x = 0; x < s.parent().algebra().atoms(); ++x)
    masks[s.value(x)] |= std::uint64_t{1} << x;
  std::map<RingElem, BoolElem, ReprLess> fibers;
  for (const auto& [value, mask] : masks)
    fibers.emplace(value, s.parent().algebra().element(mask));
  return FosterFunction(s.parent(), std::move(fibers));
}

SpeckerElem FosterFunction::to_element() const {
  std::vector<RingElem> values(
      static_cast<std::size_t>(parent_.algebra().atoms()),
      parent_.ring().zero());
  for (const auto& [value, fiber] : fibers_)
    for (int x : fiber.atom_list()) values[static_cast<std::size_t>(x)] = value;
  return SpeckerElem(parent_, std::move(values));
}

BoolElem FosterFunction::at(const RingElem& a) const {
  auto it = fibers_.find(a);
  return it == fibers_.end() ? parent_.algebra().bottom() : it->second;
}

namespace {

FosterFunction foster_combine(const FosterFunction& f, const FosterFunction& g,
                              bool multiply) {
  check_parent(f.parent(), g.parent());
  const Ring& r = f.parent().ring();
  std::map<RingElem, BoolElem, ReprLess> out;
  for (const auto& [a, e] : f.fibers())
    for (const auto& [b, h] : g.fibers()) {
      BoolElem cell = e.meet(h);
      if (cell.is_bottom()) continue;
      RingElem key = multiply ? r.mul(a, b) : r.add(a, b);
      auto [it, fresh] = out.emplace(key, cell);
      if (!fresh) it->second = it->second.join(cell);
    }
  return FosterFunction(f.parent(), std::move(out));
}

}  // namespace

FosterFunction foster_add(const FosterFunction& f, const FosterFunction& g) {
  return foster_combine(f, g, false);
}

FosterFunction foster_mul(const FosterFunction& f, const FosterFunction& g) {
  return foster_combine(f, g, true);
}

FosterFunction foster_scalar(const RingElem& r, const FosterFunction& f) {
  const Ring& ring = f.parent().ring();
  check_value(ring, r);
  std::map<RingElem, BoolElem, ReprLess> out;
  for (const auto& [c, e] : f.fibers()) {
    RingElem key = ring.mul(r, c);
    auto [it, fresh] = out.emplace(key, e);
    if (!fresh) it->second = it->second.join(e);
  }
  return FosterFunction(f.parent(), std::move(out));
}

// ------------------------------------------------------ idempotent elements

bool is_idempotent(const SpeckerElem& s) {
  bool valuewise = true;
  for (const RingElem& v : s.values())
    if (!s.parent().ring().is_idempotent(v)) valuewise = false;
  bool algebraic = s.mul(s) == s;
  if (valuewise != algebraic)
    fail(Errc::inconsistent_backend,
         "valuewise and algebraic idempotence tests disagree");
  return algebraic;
}

bool is_faithful(const SpeckerElem& s) {
  if (!is_idempotent(s))
    fail(Errc::not_idempotent,
         "faithfulness is defined for idempotent elements only");
  // the values generate R as an ideal iff they join to 1 inside Id(R)
  IdAlgebra id = idem_algebra(s.parent().ring());
  BoolElem covered = id.algebra.bottom();
  for (const RingElem& v : s.values()) covered = covered.join(id.mask_of(v));
  return covered.is_top();
}

std::vector<SpeckerElem> idempotent_closure(const std::vector<SpeckerElem>& gens) {
  if (gens.empty())
    fail(Errc::parse_error, "closure of an empty generating set is ambiguous;"
                            " pass at least the constant 0 or 1");
  const SpeckerAlgebra& s = gens.front().parent();
  for (const SpeckerElem& g : gens) {
    check_parent(s, g.parent());
    if (!is_idempotent(g))
      fail(Errc::not_idempotent, "generators must be idempotent");
  }

  // meet = st, join = s + t - st, complement = 1 - s; grow to a fixpoint
  std::set<SpeckerElem, ElemLess> members(gens.begin(), gens.end());
  members.insert(s.zero());
  members.insert(s.one());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SpeckerElem> snapshot(members.begin(), members.end());
    for (const SpeckerElem& a : snapshot) {
      if (members.insert(s.one().sub(a)).second) grew = true;
      for (const SpeckerElem& b : snapshot) {
        SpeckerElem meet = a.mul(b);
        SpeckerElem join = a.add(b).sub(meet);
        if (members.insert(meet).second) grew = true;
        if (members.insert(join).second) grew = true;
      }
    }
    if (members.size() > 4096)
      fail(Errc::too_large, "idempotent closure exceeded 4096 elements");
  }
  return std::vector<SpeckerElem>(members.begin(), members.end());
}

namespace {

// span of the closure as an R-submodule, by worklist saturation;
// only called on finite carriers small enough to enumerate
bool spans_whole_algebra(const SpeckerAlgebra& s,
                         const std::vector<SpeckerElem>& closure,
                         std::uint64_t limit) {
  auto total = s.carrier_size();
  if (!total || *total > limit)
    fail(Errc::too_large, "span check needs a small finite carrier");
  std::vector<RingElem> scalars = s.ring().elements();
  std::set<SpeckerElem, ElemLess> span;
  span.insert(s.zero());
  std::vector<SpeckerElem> work = {s.zero()};
  while (!work.empty()) {
    SpeckerElem m = work.back();
    work.pop_back();
    for (const SpeckerElem& c : closure)
      for (const RingElem& r : scalars) {
        SpeckerElem next = m.add(c.scale(r));
        if (span.insert(next).second) work.push_back(next);
      }
  }
  return Int(span.size()) == *total;
}

}  // namespace

bool is_faithful_generating(const SpeckerAlgebra& algebra,
                            const std::vector<SpeckerElem>& gens,
                            std::uint64_t exhaustive_limit) {
  for (const SpeckerElem& g : gens) check_parent(algebra, g.parent());
  std::vector<SpeckerElem> seeded = gens;
  seeded.push_back(algebra.zero());
  seeded.push_back(algebra.one());
  std::vector<SpeckerElem> closure = idempotent_closure(seeded);

  for (const SpeckerElem& m : closure)
    if (!m.is_zero() && !is_faithful(m)) return false;

  if (algebra.ring().is_finite())
    return spans_whole_algebra(algebra, closure, exhaustive_limit);

  if (!algebra.ring().is_indecomposable())
    fail(Errc::unsupported_capability,
         "span checks over infinite decomposable rings are not supported");

  // Over an indecomposable ring every idempotent element is 0/1 valued,
  // so each generator is the characteristic function of a unique
  // idempotent of B; they generate iff those idempotents shatter the
  // atoms into singletons.
  std::vector<BoolElem> masks;
  for (const SpeckerElem& g : gens) {
    std::uint64_t mask = 0;
    for (int x = 0; x < algebra.algebra().atoms(); ++x)
      if (algebra.ring().is_one(g.value(x))) mask |= std::uint64_t{1} << x;
    masks.push_back(algebra.algebra().element(mask));
  }
  for (const BoolElem& block : minterm_refinement(algebra.algebra(), masks))
    if (block.count() != 1) return false;
  return true;
}

// -------------------------------------------------------- IdempotentAlgebra

int IdempotentAlgebra::atom_index(int ring_atom, int alg_atom) const {
  if (ring_atom < 0 || ring_atom >= ring_id.algebra.atoms() || alg_atom < 0 ||
      alg_atom >= parent.algebra().atoms())
    fail(Errc::parse_error, "idempotent atom index out of range");
  return ring_atom * parent.algebra().atoms() + alg_atom;
}

SpeckerElem IdempotentAlgebra::element_of(const BoolElem& e) const {
  if (e.algebra() != algebra)
    fail(Errc::mixed_algebras, "element is not from this idempotent algebra");
  int m = parent.algebra().atoms();
  std::vector<RingElem> values(static_cast<std::size_t>(m),
                               parent.ring().zero());
  for (int i : e.atom_list()) {
    int a = i / m, x = i % m;
    values[static_cast<std::size_t>(x)] = parent.ring().add(
        values[static_cast<std::size_t>(x)],
        ring_id.atom_idems[static_cast<std::size_t>(a)]);
  }
  return SpeckerElem(parent, std::move(values));
}

BoolElem IdempotentAlgebra::mask_of(const SpeckerElem& s) const {
  check_parent(parent, s.parent());
  if (!is_idempotent(s))
    fail(Errc::not_idempotent, "element is not idempotent", "");
  int m = parent.algebra().atoms();
  std::uint64_t mask = 0;
  for (int x = 0; x < m; ++x) {
    BoolElem rm = ring_id.mask_of(s.value(x));
    for (int a : rm.atom_list())
      mask |= std::uint64_t{1} << (a * m + x);
  }
  BoolElem out = algebra.element(mask);
  if (element_of(out) != s)
    fail(Errc::inconsistent_backend,
         "idempotent does not decompose over the atom grid");
  return out;
}

IdempotentAlgebra idempotent_algebra(const SpeckerAlgebra& s) {
  IdAlgebra ring_id = idem_algebra(s.ring());
  long long n =
      static_cast<long long>(ring_id.algebra.atoms()) * s.algebra().atoms();
  if (n > 64)
    fail(Errc::too_large, "idempotent algebra would need " +
                              std::to_string(n) + " atoms, more than 64");
  return IdempotentAlgebra{s, std::move(ring_id),
                           BoolAlgebra(static_cast<int>(n))};
}

// ----------------------------------------------------------------- quotient

SpeckerQuotient quotient_mod_prime(const SpeckerAlgebra& s, const RingElem& p) {
  RingQuotient q = s.ring().quotient_by_prime(p);
  SpeckerAlgebra target(q.ring, s.algebra());
  auto project = q.project;
  return {target, [target, project](const SpeckerElem& x) {
            std::vector<RingElem> values;
            values.reserve(x.values().size());
            for (const RingElem& v : x.values()) values.push_back(project(v));
            return SpeckerElem(target, std::move(values));
          }};
}

}  // namespace specker
