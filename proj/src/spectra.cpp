#include "specker/spectra.hpp"

#include <algorithm>

namespace specker {

namespace {

// small deterministic pool of ring elements for sampled checks
std::vector<RingElem> probe_elements(const Ring& r, int samples,
                                     std::mt19937_64& rng) {
  std::vector<RingElem> out;
  auto card = r.cardinality();
  if (card && *card <= samples) {
    out = r.elements();
  } else {
    for (int i = -10; i <= 10; ++i) out.push_back(r.from_int(i));
    for (int i = 0; i < samples; ++i) out.push_back(r.sample(rng));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> HomSpace::zero_set(const SpeckerElem& s) const {
  if (s.parent() != algebra)
    fail(Errc::mixed_algebras, "element is not from this algebra");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].apply(s).is_zero()) out.push_back(i);

  if (algebra.ring().is_indecomposable()) {
    // the zero set of s is the intersection of the zero sets of the
    // idempotents in its decomposition; false over decomposable rings,
    // where a unit multiple of y_e can die without y_e dying
    std::vector<std::size_t> meet;
    bool first = true;
    OrthogonalForm form = from_pointwise(s);
    for (const OrthPart& part : form.parts()) {
      SpeckerElem gen = algebra.generator(part.idem);
      std::vector<std::size_t> cur;
      for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].apply(gen).is_zero()) cur.push_back(i);
      if (first) {
        meet = cur;
        first = false;
      } else {
        std::vector<std::size_t> tmp;
        std::set_intersection(meet.begin(), meet.end(), cur.begin(), cur.end(),
                              std::back_inserter(tmp));
        meet = tmp;
      }
    }
    if (first) {  // s == 0: every point kills it
      meet.resize(points.size());
      for (std::size_t i = 0; i < points.size(); ++i) meet[i] = i;
    }
    if (meet != out)
      fail(Errc::inconsistent_backend,
           "zero set disagrees with the generator subbasis");
  }
  return out;
}

HomSpace hom_space(const SpeckerAlgebra& s) {
  SpeckerAlgebra base(s.ring(), BoolAlgebra(1));
  std::vector<AlgebraHom> points = enumerate_algebra_homs(s, base);
  return HomSpace{s, base, std::move(points)};
}

MinimalPrime::MinimalPrime(AlgebraHom witness) : witness_(std::move(witness)) {
  if (!witness_.source().ring().is_domain())
    fail(Errc::not_a_domain,
         "kernels are prime only over a domain; " +
             witness_.source().ring().name() + " is not one");
  if (witness_.target().algebra().atoms() != 1)
    fail(Errc::target_mismatch, "witness must evaluate into the base ring");
}

int MinimalPrime::atom() const { return witness_.datum().dual_map()[0]; }

bool MinimalPrime::contains(const SpeckerElem& s) const {
  return witness_.apply(s).is_zero();
}

std::vector<MinimalPrime> min_spectrum(const SpeckerAlgebra& s) {
  if (!s.ring().is_domain())
    fail(Errc::not_a_domain,
         "minimal primes are only enumerated over domains; " +
             s.ring().name() + " is not one");
  HomSpace space = hom_space(s);
  std::vector<MinimalPrime> primes;
  primes.reserve(space.points.size());
  for (const AlgebraHom& point : space.points) primes.emplace_back(point);

  // Each kernel must miss the nonzero constants, consist of zero
  // divisors, and be incomparable with the other kernels.
  std::mt19937_64 rng(11);
  std::vector<RingElem> probe = probe_elements(s.ring(), 50, rng);
  for (const MinimalPrime& p : primes) {
    for (const RingElem& a : probe)
      if (!s.ring().is_zero(a) && p.contains(s.constant(a)))
        fail(Errc::inconsistent_backend,
             "kernel meets the constants at " + a.repr());
    SpeckerElem chi = s.atom_char(p.atom());
    for (int i = 0; i < 50; ++i) {
      SpeckerElem member = s.sample(rng);
      // zero out the evaluation atom to land in the kernel
      std::vector<RingElem> values = member.values();
      values[static_cast<std::size_t>(p.atom())] = s.ring().zero();
      member = s.element(std::move(values));
      if (!p.contains(member))
        fail(Errc::inconsistent_backend, "constructed element escapes kernel");
      if (!member.mul(chi).is_zero())
        fail(Errc::inconsistent_backend,
             "kernel member is not a zero divisor");
    }
  }
  for (const MinimalPrime& p : primes)
    for (const MinimalPrime& q : primes)
      if (p.atom() != q.atom()) {
        SpeckerElem sep = s.atom_char(q.atom());
        if (!p.contains(sep) || q.contains(sep))
          fail(Errc::inconsistent_backend, "kernels are not incomparable");
      }
  return primes;
}

namespace {

SpeckerElem annihilator_witness_of_set(const SpeckerAlgebra& s,
                                       const std::vector<SpeckerElem>& set,
                                       const VerifyOptions& opts) {
  const Ring& r = s.ring();
  std::vector<RingElem> values(static_cast<std::size_t>(s.algebra().atoms()),
                               r.one());
  for (const SpeckerElem& member : set) {
    if (member.parent() != s)
      fail(Errc::mixed_algebras, "set member is not from this algebra");
    for (int x = 0; x < s.algebra().atoms(); ++x)
      values[static_cast<std::size_t>(x)] =
          r.mul(values[static_cast<std::size_t>(x)],
                r.annihilator_witness(member.value(x)));
  }
  SpeckerElem e = s.element(std::move(values));

  auto kills_all = [&](const SpeckerElem& t) {
    for (const SpeckerElem& member : set)
      if (!t.mul(member).is_zero()) return false;
    return true;
  };
  if (!kills_all(e))
    fail(Errc::inconsistent_backend, "witness fails to annihilate the set");

  auto size = s.carrier_size();
  if (size && *size <= opts.exhaustive_limit) {
    // both inclusions, over the whole carrier
    for (const SpeckerElem& t : s.enumerate(opts.exhaustive_limit))
      if (kills_all(t) != (e.mul(t) == t))
        fail(Errc::inconsistent_backend,
             "annihilator is not the ideal generated by the witness");
  } else {
    // eS is inside the annihilator by direct sampling; the converse is
    // checked at ring level, one atom at a time
    std::mt19937_64 rng(opts.seed + 101);
    for (int i = 0; i < opts.samples; ++i)
      if (!kills_all(e.mul(s.sample(rng))))
        fail(Errc::inconsistent_backend,
             "multiple of the witness escapes the annihilator");
    std::vector<RingElem> probe = probe_elements(r, opts.samples, rng);
    for (int x = 0; x < s.algebra().atoms(); ++x) {
      const RingElem& w = e.value(x);
      for (const RingElem& t : probe) {
        bool kills = true;
        for (const SpeckerElem& member : set)
          if (!r.is_zero(r.mul(t, member.value(x)))) kills = false;
        if (kills && r.mul(w, t) != t)
          fail(Errc::inconsistent_backend,
               "ring annihilator escapes the witness at atom " +
                   std::to_string(x));
      }
    }
  }
  return e;
}

}  // namespace

SpeckerElem annihilator(const SpeckerElem& s, const VerifyOptions& opts) {
  return annihilator_witness_of_set(s.parent(), {s}, opts);
}

SpeckerElem annihilator_of_set(const SpeckerAlgebra& algebra,
                               const std::vector<SpeckerElem>& set,
                               const VerifyOptions& opts) {
  return annihilator_witness_of_set(algebra, set, opts);
}

namespace {

// A finite algebra of idempotents is complete; earn the flag by testing
// joins of families as least upper bounds anyway.
bool idempotents_complete(const SpeckerAlgebra& s, const VerifyOptions& opts) {
  IdempotentAlgebra id = idempotent_algebra(s);
  const BoolAlgebra& b = id.algebra;
  std::uint64_t top = b.top_mask();

  auto lub_holds = [&](const std::vector<std::uint64_t>& family) {
    std::uint64_t join = 0;
    for (std::uint64_t m : family) join |= m;
    for (std::uint64_t m : family)
      if ((m & ~join) != 0) return false;  // not an upper bound
    // least among upper bounds
    auto check_candidates = [&](std::uint64_t candidate) {
      bool upper = true;
      for (std::uint64_t m : family)
        if ((m & ~candidate) != 0) upper = false;
      return !upper || (join & ~candidate) == 0;
    };
    if (b.atoms() <= 12) {
      for (std::uint64_t u = 0; u <= top; ++u)
        if (!check_candidates(u)) return false;
    } else {
      std::mt19937_64 rng(opts.seed + 7);
      for (int i = 0; i < opts.samples; ++i)
        if (!check_candidates(rng() & top)) return false;
    }
    return true;
  };

  if (b.atoms() <= 4) {
    // every family over the whole carrier
    std::vector<std::uint64_t> elems;
    for (std::uint64_t m = 0; m <= top; ++m) elems.push_back(m);
    std::uint64_t families = std::uint64_t{1} << elems.size();
    for (std::uint64_t pick = 0; pick < families; ++pick) {
      std::vector<std::uint64_t> family;
      for (std::size_t i = 0; i < elems.size(); ++i)
        if ((pick >> i) & 1) family.push_back(elems[i]);
      if (!lub_holds(family)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(opts.seed + 13);
  // sampled families; candidate scans above dominate, so keep this modest
  int fam_samples = std::min(opts.samples, 300);
  for (int i = 0; i < fam_samples; ++i) {
    std::size_t len = rng() % 33;
    std::vector<std::uint64_t> family;
    family.reserve(len);
    for (std::size_t j = 0; j < len; ++j) family.push_back(rng() & top);
    if (!lub_holds(family)) return false;
  }
  return true;
}

}  // namespace

BaerReport baer_report(const SpeckerAlgebra& s, const VerifyOptions& opts) {
  BaerReport report;
  report.weak_baer = s.ring().is_weak_baer();
  if (!report.weak_baer && s.ring().is_finite())
    report.witness_failure = s.ring().weak_baer_failure();
  if (s.ring().is_domain() && !report.weak_baer)
    fail(Errc::inconsistent_backend,
         "domains always admit annihilator witnesses");
  report.id_complete = idempotents_complete(s, opts);
  report.baer = report.weak_baer && report.id_complete;
  return report;
}

HullReport injective_hull(const SpeckerAlgebra& s, const VerifyOptions& opts) {
  if (!s.ring().is_domain())
    fail(Errc::not_a_domain,
         "the hull construction is stated over domains; " + s.ring().name() +
             " is not one");
  IdempotentAlgebra id = idempotent_algebra(s);
  BoolAlgebra completed = dm_completion(id.algebra);
  SpeckerAlgebra hull(s.ring(), completed);
  // S -> hull: include the generators, then view them inside the
  // completed idempotent algebra
  BoolHom datum = compose(insertion(completed, s.ring()),
                          insertion(s.algebra(), s.ring()));
  AlgebraHom embedding(s, hull, datum);

  HullReport report{hull, embedding, embedding.is_isomorphism(),
                    baer_report(hull, opts).baer};

  // the embedding must be injective: nothing nonzero may die
  std::mt19937_64 rng(opts.seed + 29);
  auto size = s.carrier_size();
  if (size && *size <= opts.exhaustive_limit) {
    for (const SpeckerElem& t : s.enumerate(opts.exhaustive_limit))
      if (embedding.apply(t).is_zero() && !t.is_zero())
        fail(Errc::inconsistent_backend, "hull embedding has a kernel");
  } else {
    for (int i = 0; i < opts.samples; ++i) {
      SpeckerElem t = s.sample(rng);
      if (embedding.apply(t).is_zero() && !t.is_zero())
        fail(Errc::inconsistent_backend, "hull embedding has a kernel");
    }
  }
  return report;
}

}  // namespace specker
