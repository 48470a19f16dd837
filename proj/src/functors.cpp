#include "specker/functors.hpp"

namespace specker {

AlgebraHom::AlgebraHom(SpeckerAlgebra source, SpeckerAlgebra target,
                       BoolHom datum)
    : source_(std::move(source)),
      target_(std::move(target)),
      target_id_(idempotent_algebra(target_)),
      datum_(std::move(datum)) {
  if (source_.ring() != target_.ring())
    fail(Errc::ring_mismatch, "homs keep the scalars fixed: " +
                                  source_.ring().name() + " vs " +
                                  target_.ring().name());
  if (datum_.source() != source_.algebra())
    fail(Errc::target_mismatch,
         "datum must start at the source Boolean algebra");
  if (datum_.target() != target_id_.algebra)
    fail(Errc::target_mismatch,
         "datum must land in the idempotent algebra of the target");
}

AlgebraHom AlgebraHom::identity(const SpeckerAlgebra& s) {
  // e |-> y_e as a datum: coproduct atom (a, x) sits under e iff x does
  IdempotentAlgebra id = idempotent_algebra(s);
  int m = s.algebra().atoms();
  std::vector<int> dual(static_cast<std::size_t>(id.algebra.atoms()));
  for (int i = 0; i < id.algebra.atoms(); ++i)
    dual[static_cast<std::size_t>(i)] = i % m;
  return AlgebraHom(s, s, BoolHom(s.algebra(), id.algebra, std::move(dual)));
}

SpeckerElem AlgebraHom::apply(const SpeckerElem& s) const {
  if (s.parent() != source_)
    fail(Errc::mixed_algebras, "element is not from the source algebra");
  SpeckerElem acc = target_.zero();
  OrthogonalForm form = from_pointwise(s);
  for (const OrthPart& part : form.parts())
    acc = acc.add(
        target_id_.element_of(datum_.apply(part.idem)).scale(part.coeff));
  return acc;
}

BoolHom AlgebraHom::restrict_to_idempotents() const {
  IdempotentAlgebra source_id = idempotent_algebra(source_);
  // forward images of the source atoms partition the target atoms;
  // read the dual map off that partition
  std::vector<int> dual(static_cast<std::size_t>(target_id_.algebra.atoms()),
                        -1);
  for (int p = 0; p < source_id.algebra.atoms(); ++p) {
    BoolElem image = target_id_.mask_of(
        apply(source_id.element_of(source_id.algebra.atom(p))));
    for (int q : image.atom_list()) {
      if (dual[static_cast<std::size_t>(q)] != -1)
        fail(Errc::inconsistent_backend,
             "atom images overlap; not a ring homomorphism");
      dual[static_cast<std::size_t>(q)] = p;
    }
  }
  for (int v : dual)
    if (v == -1)
      fail(Errc::inconsistent_backend,
           "atom images miss part of the target; map is not unital");
  return BoolHom(source_id.algebra, target_id_.algebra, std::move(dual));
}

bool AlgebraHom::is_isomorphism() const {
  return restrict_to_idempotents().is_isomorphism();
}

AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f) {
  if (f.target() != g.source())
    fail(Errc::mixed_algebras, "homs do not compose: target/source mismatch");
  // datum of (g . f) sends e through f's datum, then g's restriction
  BoolHom datum = specker::compose(g.restrict_to_idempotents(), f.datum());
  return AlgebraHom(f.source(), g.target(), datum);
}

SpeckerAlgebra power_algebra(const Ring& r, const BoolAlgebra& b) {
  return SpeckerAlgebra(r, b);
}

AlgebraHom power_hom(const Ring& r, const BoolHom& h) {
  SpeckerAlgebra source = power_algebra(r, h.source());
  SpeckerAlgebra target = power_algebra(r, h.target());
  return AlgebraHom(source, target,
                    compose(insertion(h.target(), r), h));
}

AlgebraHom lift(const BoolHom& sigma, const SpeckerAlgebra& target) {
  SpeckerAlgebra source = power_algebra(target.ring(), sigma.source());
  return AlgebraHom(source, target, sigma);  // TargetMismatch if it misses
}

BoolHom insertion(const BoolAlgebra& b, const Ring& r) {
  IdempotentAlgebra id = idempotent_algebra(SpeckerAlgebra(r, b));
  std::vector<int> dual(static_cast<std::size_t>(id.algebra.atoms()));
  for (int i = 0; i < id.algebra.atoms(); ++i)
    dual[static_cast<std::size_t>(i)] = i % b.atoms();
  return BoolHom(b, id.algebra, std::move(dual));
}

AlgebraHom counit(const SpeckerAlgebra& s) {
  IdempotentAlgebra id = idempotent_algebra(s);
  SpeckerAlgebra source = power_algebra(s.ring(), id.algebra);
  return AlgebraHom(source, s, BoolHom::identity(id.algebra));
}

std::vector<AlgebraHom> enumerate_algebra_homs(const SpeckerAlgebra& s,
                                               const SpeckerAlgebra& t) {
  if (s.ring() != t.ring())
    fail(Errc::ring_mismatch, "homs keep the scalars fixed: " +
                                  s.ring().name() + " vs " + t.ring().name());
  IdempotentAlgebra target_id = idempotent_algebra(t);
  std::vector<AlgebraHom> out;
  for (const BoolHom& sigma : enumerate_homs(s.algebra(), target_id.algebra))
    out.emplace_back(s, t, sigma);
  return out;
}

EquivalenceReport equivalence_report(const Ring& r,
                                     const std::vector<int>& sizes) {
  EquivalenceReport report;
  report.sizes = sizes;
  report.ring_indecomposable = r.is_indecomposable();
  report.equivalence = true;
  for (int n : sizes) {
    BoolAlgebra b(n);
    SpeckerAlgebra power = power_algebra(r, b);
    bool ins = insertion(b, r).is_isomorphism();
    bool cnt = counit(power).is_isomorphism();
    report.insertion_iso.push_back(ins);
    report.counit_iso.push_back(cnt);
    report.equivalence = report.equivalence && ins && cnt;
  }
  // two constructions invert each other iff the ring has no idempotents
  // beyond 0 and 1; a disagreement here is a backend bug
  report.consistent = report.equivalence == report.ring_indecomposable;
  RingClassification c = r.classify();
  if (c.is_indecomposable != report.ring_indecomposable)
    fail(Errc::inconsistent_backend, "idempotent count changed between calls");
  return report;
}

}  // namespace specker
