#include "specker/ring.hpp"

#include <boost/multiprecision/integer.hpp>
#include <algorithm>
#include <utility>

namespace specker {

Int rand_between(std::mt19937_64& rng, long lo, long hi) {
  auto span = static_cast<unsigned long long>(hi - lo + 1);
  return Int(lo) + Int(rng() % span);
}

namespace {

// Enough for every modulus and quotient candidate we accept.
bool is_prime_int(const Int& n) {
  if (n < 2) return false;
  if (n > Int("1000000000000"))
    fail(Errc::too_large, "primality check beyond 10^12");
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- RingElem

RingElem::RingElem() : rep_(Int(0)) {}

RingElem RingElem::of_int(Int v) {
  RingElem e;
  e.rep_ = std::move(v);
  return e;
}

RingElem RingElem::of_rat(Rat v) {
  RingElem e;
  e.rep_ = std::move(v);
  return e;
}

RingElem RingElem::of_pair(RingElem left, RingElem right) {
  RingElem e;
  e.rep_ = std::make_shared<const Pair>(Pair{std::move(left), std::move(right)});
  return e;
}

bool RingElem::is_int() const { return rep_.index() == 0; }
bool RingElem::is_rat() const { return rep_.index() == 1; }
bool RingElem::is_pair() const { return rep_.index() == 2; }

const Int& RingElem::int_value() const { return std::get<0>(rep_); }
const Rat& RingElem::rat_value() const { return std::get<1>(rep_); }
const RingElem& RingElem::first() const { return std::get<2>(rep_)->first; }
const RingElem& RingElem::second() const { return std::get<2>(rep_)->second; }

std::string RingElem::repr() const {
  switch (rep_.index()) {
    case 0:
      return int_value().str();
    case 1: {
      const Rat& q = rat_value();
      Int num = boost::multiprecision::numerator(q);
      Int den = boost::multiprecision::denominator(q);
      return den == 1 ? num.str() : num.str() + "/" + den.str();
    }
    default:
      return "(" + first().repr() + "," + second().repr() + ")";
  }
}

int RingElem::compare_repr(const RingElem& a, const RingElem& b) {
  if (a.rep_.index() != b.rep_.index())
    return a.rep_.index() < b.rep_.index() ? -1 : 1;
  switch (a.rep_.index()) {
    case 0: {
      const Int& x = a.int_value();
      const Int& y = b.int_value();
      return x == y ? 0 : (x < y ? -1 : 1);
    }
    case 1: {
      const Rat& x = a.rat_value();
      const Rat& y = b.rat_value();
      return x == y ? 0 : (x < y ? -1 : 1);
    }
    default: {
      int c = compare_repr(a.first(), b.first());
      return c != 0 ? c : compare_repr(a.second(), b.second());
    }
  }
}

// ---------------------------------------------------------------- backends

struct RingImpl {
  virtual ~RingImpl() = default;

  virtual Ring::Kind kind() const = 0;
  virtual std::string name() const = 0;
  virtual bool same(const RingImpl& other) const = 0;

  virtual RingElem zero() const = 0;
  virtual RingElem one() const = 0;
  virtual RingElem from_int(const Int& v) const = 0;
  virtual RingElem add(const RingElem& a, const RingElem& b) const = 0;
  virtual RingElem neg(const RingElem& a) const = 0;
  virtual RingElem mul(const RingElem& a, const RingElem& b) const = 0;
  virtual bool accepts(const RingElem& a) const = 0;

  virtual const std::vector<RingElem>& idempotents() const = 0;
  virtual bool is_domain() const = 0;
  virtual std::optional<Int> cardinality() const = 0;
  virtual void enumerate(std::vector<RingElem>& out) const {
    (void)out;
    fail(Errc::unsupported_capability,
         "cannot enumerate an infinite carrier (" + name() + ")");
  }

  virtual bool totally_ordered() const { return false; }
  virtual int compare(const RingElem&, const RingElem&) const {
    fail(Errc::unordered_ring, name() + " carries no compatible total order");
  }

  virtual RingElem annihilator_witness(const RingElem& a) const = 0;
  virtual bool weak_baer() const = 0;

  virtual RingQuotient quotient_by_prime(const RingElem&) const {
    fail(Errc::unsupported_capability,
         "prime quotients are supported for the integer and modular backends");
  }

  virtual RingElem sample(std::mt19937_64& rng) const = 0;
};

Ring make_ring(std::shared_ptr<const RingImpl> impl) {
  return Ring(std::move(impl));
}

namespace {

const std::vector<RingElem>& zero_one_idems() {
  static const std::vector<RingElem> idems = {RingElem::of_int(0),
                                              RingElem::of_int(1)};
  return idems;
}

struct IntegerRing final : RingImpl {
  Ring::Kind kind() const override { return Ring::Kind::integers; }
  std::string name() const override { return "Z"; }
  bool same(const RingImpl& other) const override {
    return other.kind() == Ring::Kind::integers;
  }

  RingElem zero() const override { return RingElem::of_int(0); }
  RingElem one() const override { return RingElem::of_int(1); }
  RingElem from_int(const Int& v) const override { return RingElem::of_int(v); }
  RingElem add(const RingElem& a, const RingElem& b) const override {
    return RingElem::of_int(a.int_value() + b.int_value());
  }
  RingElem neg(const RingElem& a) const override {
    return RingElem::of_int(-a.int_value());
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    return RingElem::of_int(a.int_value() * b.int_value());
  }
  bool accepts(const RingElem& a) const override { return a.is_int(); }

  const std::vector<RingElem>& idempotents() const override {
    return zero_one_idems();
  }
  bool is_domain() const override { return true; }
  std::optional<Int> cardinality() const override { return std::nullopt; }

  bool totally_ordered() const override { return true; }
  int compare(const RingElem& a, const RingElem& b) const override {
    return RingElem::compare_repr(a, b);
  }

  RingElem annihilator_witness(const RingElem& a) const override {
    return a.int_value() == 0 ? one() : zero();
  }
  bool weak_baer() const override { return true; }

  RingQuotient quotient_by_prime(const RingElem& p) const override;

  RingElem sample(std::mt19937_64& rng) const override {
    return RingElem::of_int(rand_between(rng, -50, 50));
  }
};

struct RationalRing final : RingImpl {
  Ring::Kind kind() const override { return Ring::Kind::rationals; }
  std::string name() const override { return "Q"; }
  bool same(const RingImpl& other) const override {
    return other.kind() == Ring::Kind::rationals;
  }

  RingElem zero() const override { return RingElem::of_rat(Rat(0)); }
  RingElem one() const override { return RingElem::of_rat(Rat(1)); }
  RingElem from_int(const Int& v) const override {
    return RingElem::of_rat(Rat(v));
  }
  RingElem add(const RingElem& a, const RingElem& b) const override {
    return RingElem::of_rat(a.rat_value() + b.rat_value());
  }
  RingElem neg(const RingElem& a) const override {
    return RingElem::of_rat(-a.rat_value());
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    return RingElem::of_rat(a.rat_value() * b.rat_value());
  }
  bool accepts(const RingElem& a) const override { return a.is_rat(); }

  const std::vector<RingElem>& idempotents() const override {
    static const std::vector<RingElem> idems = {RingElem::of_rat(Rat(0)),
                                                RingElem::of_rat(Rat(1))};
    return idems;
  }
  bool is_domain() const override { return true; }
  std::optional<Int> cardinality() const override { return std::nullopt; }

  bool totally_ordered() const override { return true; }
  int compare(const RingElem& a, const RingElem& b) const override {
    const Rat& x = a.rat_value();
    const Rat& y = b.rat_value();
    return x == y ? 0 : (x < y ? -1 : 1);
  }

  RingElem annihilator_witness(const RingElem& a) const override {
    return a.rat_value() == 0 ? one() : zero();
  }
  bool weak_baer() const override { return true; }

  RingElem sample(std::mt19937_64& rng) const override {
    Int num = rand_between(rng, -30, 30);
    Int den = rand_between(rng, 1, 12);
    return RingElem::of_rat(Rat(num, den));
  }
};

struct ModularRing final : RingImpl {
  Int n;
  bool prime;
  std::vector<RingElem> idems;

  explicit ModularRing(const Int& modulus) : n(modulus) {
    if (n < 2) fail(Errc::parse_error, "modulus must be at least 2");
    if (n > 1000000)
      fail(Errc::too_large, "moduli beyond 10^6 are not supported");
    prime = is_prime_int(n);
    for (Int r = 0; r < n; ++r)
      if ((r * r) % n == r) idems.push_back(RingElem::of_int(r));
  }

  Ring::Kind kind() const override { return Ring::Kind::modular; }
  std::string name() const override { return "Z/" + n.str(); }
  bool same(const RingImpl& other) const override {
    return other.kind() == Ring::Kind::modular &&
           static_cast<const ModularRing&>(other).n == n;
  }

  Int reduce(const Int& v) const { return ((v % n) + n) % n; }

  RingElem zero() const override { return RingElem::of_int(0); }
  RingElem one() const override { return RingElem::of_int(reduce(1)); }
  RingElem from_int(const Int& v) const override {
    return RingElem::of_int(reduce(v));
  }
  RingElem add(const RingElem& a, const RingElem& b) const override {
    return RingElem::of_int((a.int_value() + b.int_value()) % n);
  }
  RingElem neg(const RingElem& a) const override {
    return RingElem::of_int(reduce(-a.int_value()));
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    return RingElem::of_int((a.int_value() * b.int_value()) % n);
  }
  bool accepts(const RingElem& a) const override {
    return a.is_int() && a.int_value() >= 0 && a.int_value() < n;
  }

  const std::vector<RingElem>& idempotents() const override { return idems; }
  bool is_domain() const override { return prime; }
  std::optional<Int> cardinality() const override { return n; }
  void enumerate(std::vector<RingElem>& out) const override {
    for (Int r = 0; r < n; ++r) out.push_back(RingElem::of_int(r));
  }

  // ann(a) = eZ/n for an idempotent e iff one of the finitely many
  // idempotents passes both inclusion checks; both are run exhaustively.
  std::optional<RingElem> find_witness(const Int& a) const {
    for (const RingElem& er : idems) {
      const Int& e = er.int_value();
      if ((e * a) % n != 0) continue;
      bool generates = true;
      for (Int x = 0; x < n && generates; ++x)
        if ((x * a) % n == 0 && (e * x) % n != x) generates = false;
      if (generates) return er;
    }
    return std::nullopt;
  }

  RingElem annihilator_witness(const RingElem& a) const override {
    if (auto w = find_witness(a.int_value())) return *w;
    fail(Errc::not_weak_baer_at,
         "no idempotent generates the annihilator of " + a.repr() + " in " +
             name(),
         a.repr());
  }

  bool weak_baer() const override {
    for (Int a = 0; a < n; ++a)
      if (!find_witness(a)) return false;
    return true;
  }

  RingQuotient quotient_by_prime(const RingElem& p) const override;

  RingElem sample(std::mt19937_64& rng) const override {
    return RingElem::of_int(Int(rng() % n.convert_to<unsigned long long>()));
  }
};

struct ProductRing final : RingImpl {
  Ring lhs;
  Ring rhs;
  std::vector<RingElem> idems;

  ProductRing(Ring l, Ring r) : lhs(std::move(l)), rhs(std::move(r)) {
    for (const RingElem& e : lhs.idempotents())
      for (const RingElem& f : rhs.idempotents())
        idems.push_back(RingElem::of_pair(e, f));
  }

  Ring::Kind kind() const override { return Ring::Kind::product; }
  std::string name() const override {
    return "(" + lhs.name() + " x " + rhs.name() + ")";
  }
  bool same(const RingImpl& other) const override {
    if (other.kind() != Ring::Kind::product) return false;
    const auto& o = static_cast<const ProductRing&>(other);
    return lhs == o.lhs && rhs == o.rhs;
  }

  RingElem zero() const override {
    return RingElem::of_pair(lhs.zero(), rhs.zero());
  }
  RingElem one() const override {
    return RingElem::of_pair(lhs.one(), rhs.one());
  }
  RingElem from_int(const Int& v) const override {
    return RingElem::of_pair(lhs.from_int(v), rhs.from_int(v));
  }
  RingElem add(const RingElem& a, const RingElem& b) const override {
    return RingElem::of_pair(lhs.add(a.first(), b.first()),
                             rhs.add(a.second(), b.second()));
  }
  RingElem neg(const RingElem& a) const override {
    return RingElem::of_pair(lhs.neg(a.first()), rhs.neg(a.second()));
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    return RingElem::of_pair(lhs.mul(a.first(), b.first()),
                             rhs.mul(a.second(), b.second()));
  }
  bool accepts(const RingElem& a) const override {
    return a.is_pair() && lhs.accepts(a.first()) && rhs.accepts(a.second());
  }

  const std::vector<RingElem>& idempotents() const override { return idems; }
  bool is_domain() const override { return false; }  // (1,0)(0,1) = 0
  std::optional<Int> cardinality() const override {
    auto cl = lhs.cardinality();
    auto cr = rhs.cardinality();
    if (cl && cr) return *cl * *cr;
    return std::nullopt;
  }
  void enumerate(std::vector<RingElem>& out) const override {
    for (const RingElem& x : lhs.elements())
      for (const RingElem& y : rhs.elements())
        out.push_back(RingElem::of_pair(x, y));
  }

  RingElem annihilator_witness(const RingElem& a) const override {
    try {
      return RingElem::of_pair(lhs.annihilator_witness(a.first()),
                               rhs.annihilator_witness(a.second()));
    } catch (const Error& err) {
      if (err.code() != Errc::not_weak_baer_at) throw;
      fail(Errc::not_weak_baer_at,
           "no idempotent generates the annihilator of " + a.repr() + " in " +
               name(),
           a.repr());
    }
  }

  bool weak_baer() const override {
    return lhs.is_weak_baer() && rhs.is_weak_baer();
  }

  RingElem sample(std::mt19937_64& rng) const override {
    RingElem x = lhs.sample(rng);
    return RingElem::of_pair(x, rhs.sample(rng));
  }
};

RingQuotient IntegerRing::quotient_by_prime(const RingElem& p) const {
  Int a = boost::multiprecision::abs(p.int_value());
  if (!is_prime_int(a))
    fail(Errc::not_prime, p.repr() + " does not generate a prime ideal of Z",
         p.repr());
  Ring q = Ring::modular(a);
  return {q, [q](const RingElem& x) { return q.from_int(x.int_value()); }};
}

RingQuotient ModularRing::quotient_by_prime(const RingElem& p) const {
  Int r = reduce(p.int_value());
  Int d = r == 0 ? n : boost::multiprecision::gcd(r, n);
  if (d == 1)
    fail(Errc::not_prime,
         p.repr() + " is a unit in " + name() + "; the ideal is not proper",
         p.repr());
  if (!is_prime_int(d))
    fail(Errc::not_prime,
         p.repr() + " generates the same ideal as " + d.str() + " in " +
             name() + ", which is not prime",
         p.repr());
  Ring q = Ring::modular(d);
  return {q, [q](const RingElem& x) { return q.from_int(x.int_value()); }};
}

}  // namespace

// -------------------------------------------------------------------- Ring

Ring::Ring(std::shared_ptr<const RingImpl> impl) : impl_(std::move(impl)) {}

Ring Ring::integers() {
  static const auto impl = std::make_shared<const IntegerRing>();
  return Ring(impl);
}

Ring Ring::rationals() {
  static const auto impl = std::make_shared<const RationalRing>();
  return Ring(impl);
}

Ring Ring::modular(const Int& modulus) {
  return Ring(std::make_shared<const ModularRing>(modulus));
}

Ring Ring::product(const Ring& left, const Ring& right) {
  return Ring(std::make_shared<const ProductRing>(left, right));
}

Ring::Kind Ring::kind() const { return impl_->kind(); }

const Int& Ring::modulus() const {
  if (kind() != Kind::modular)
    fail(Errc::unsupported_capability, name() + " has no modulus");
  return static_cast<const ModularRing&>(*impl_).n;
}

Ring Ring::left() const {
  if (kind() != Kind::product)
    fail(Errc::unsupported_capability, name() + " is not a product");
  return static_cast<const ProductRing&>(*impl_).lhs;
}

Ring Ring::right() const {
  if (kind() != Kind::product)
    fail(Errc::unsupported_capability, name() + " is not a product");
  return static_cast<const ProductRing&>(*impl_).rhs;
}

std::string Ring::name() const { return impl_->name(); }

bool operator==(const Ring& a, const Ring& b) {
  return a.impl_ == b.impl_ || a.impl_->same(*b.impl_);
}

RingElem Ring::zero() const { return impl_->zero(); }
RingElem Ring::one() const { return impl_->one(); }
RingElem Ring::from_int(const Int& v) const { return impl_->from_int(v); }

RingElem Ring::add(const RingElem& a, const RingElem& b) const {
  return impl_->add(a, b);
}
RingElem Ring::sub(const RingElem& a, const RingElem& b) const {
  return impl_->add(a, impl_->neg(b));
}
RingElem Ring::neg(const RingElem& a) const { return impl_->neg(a); }
RingElem Ring::mul(const RingElem& a, const RingElem& b) const {
  return impl_->mul(a, b);
}

bool Ring::is_zero(const RingElem& a) const { return a == impl_->zero(); }
bool Ring::is_one(const RingElem& a) const { return a == impl_->one(); }
bool Ring::accepts(const RingElem& a) const { return impl_->accepts(a); }

std::vector<RingElem> Ring::idempotents() const { return impl_->idempotents(); }

bool Ring::is_idempotent(const RingElem& a) const {
  return impl_->mul(a, a) == a;
}

bool Ring::is_indecomposable() const {
  return impl_->idempotents().size() == 2;
}

bool Ring::is_domain() const { return impl_->is_domain(); }
bool Ring::is_finite() const { return impl_->cardinality().has_value(); }
std::optional<Int> Ring::cardinality() const { return impl_->cardinality(); }

std::vector<RingElem> Ring::elements() const {
  auto card = impl_->cardinality();
  if (!card)
    fail(Errc::unsupported_capability,
         "cannot enumerate an infinite carrier (" + name() + ")");
  if (*card > 1048576)
    fail(Errc::too_large, "refusing to enumerate " + card->str() + " elements");
  std::vector<RingElem> out;
  out.reserve(card->convert_to<std::size_t>());
  impl_->enumerate(out);
  return out;
}

bool Ring::is_totally_ordered() const { return impl_->totally_ordered(); }

int Ring::compare(const RingElem& a, const RingElem& b) const {
  return impl_->compare(a, b);
}

RingElem Ring::abs(const RingElem& a) const {
  return impl_->compare(a, impl_->zero()) < 0 ? impl_->neg(a) : a;
}

RingElem Ring::annihilator_witness(const RingElem& a) const {
  return impl_->annihilator_witness(a);
}

bool Ring::is_weak_baer() const { return impl_->weak_baer(); }

std::optional<RingElem> Ring::weak_baer_failure() const {
  for (const RingElem& a : elements()) {
    try {
      impl_->annihilator_witness(a);
    } catch (const Error& err) {
      if (err.code() != Errc::not_weak_baer_at) throw;
      return a;
    }
  }
  return std::nullopt;
}

RingQuotient Ring::quotient_by_prime(const RingElem& p) const {
  if (!accepts(p))
    fail(Errc::parse_error, p.repr() + " is not an element of " + name());
  return impl_->quotient_by_prime(p);
}

RingElem Ring::sample(std::mt19937_64& rng) const { return impl_->sample(rng); }

RingClassification Ring::classify() const {
  RingClassification c;
  const std::vector<RingElem> idems = impl_->idempotents();

  // every listed idempotent must actually satisfy e^2 = e, with 0 and 1
  // present and no duplicates
  bool saw_zero = false, saw_one = false;
  for (std::size_t i = 0; i < idems.size(); ++i) {
    if (!is_idempotent(idems[i]))
      fail(Errc::inconsistent_backend,
           idems[i].repr() + " listed as idempotent but e*e != e");
    if (is_zero(idems[i])) saw_zero = true;
    if (is_one(idems[i])) saw_one = true;
    for (std::size_t j = i + 1; j < idems.size(); ++j)
      if (idems[i] == idems[j])
        fail(Errc::inconsistent_backend, "duplicate idempotent listed");
  }
  if (!saw_zero || !saw_one)
    fail(Errc::inconsistent_backend, "idempotent list misses 0 or 1");
  c.is_indecomposable = idems.size() == 2;

  c.is_domain = impl_->is_domain();
  if (c.is_domain) {
    // a claimed domain must survive a zero-divisor hunt
    std::vector<RingElem> probe;
    auto card = impl_->cardinality();
    if (card && *card <= 1000) {
      probe = elements();
    } else {
      std::mt19937_64 rng(17);
      for (int i = 0; i < 40; ++i) probe.push_back(impl_->sample(rng));
    }
    for (const RingElem& a : probe)
      for (const RingElem& b : probe)
        if (!is_zero(a) && !is_zero(b) && is_zero(impl_->mul(a, b)))
          fail(Errc::inconsistent_backend,
               "claimed domain has zero divisors " + a.repr() + ", " +
                   b.repr());
  } else {
    // a claimed non-domain must exhibit a zero-divisor pair
    RingElem a = zero(), b = zero();
    if (kind() == Kind::modular) {
      for (Int d = 2; d * d <= modulus(); ++d)
        if (modulus() % d == 0) {
          a = from_int(d);
          b = from_int(modulus() / d);
          break;
        }
    } else if (kind() == Kind::product) {
      a = RingElem::of_pair(left().one(), right().zero());
      b = RingElem::of_pair(left().zero(), right().one());
    }
    if (is_zero(a) || is_zero(b) || !is_zero(impl_->mul(a, b)))
      fail(Errc::inconsistent_backend,
           name() + " claims zero divisors but shows none");
  }

  c.is_weak_baer = impl_->weak_baer();
  if (c.is_domain && !c.is_weak_baer)
    fail(Errc::inconsistent_backend,
         "domains always admit annihilator witnesses");
  if (!c.is_weak_baer && is_finite()) {
    auto failure = weak_baer_failure();
    if (!failure)
      fail(Errc::inconsistent_backend,
           name() + " claims a missing witness but every element has one");
  }

  c.is_totally_ordered = impl_->totally_ordered();
  if (c.is_totally_ordered) {
    // order axioms on a deterministic sample, plus: no idempotents
    // beyond 0 and 1 can coexist with a compatible total order
    if (idems.size() != 2)
      fail(Errc::inconsistent_backend,
           "totally ordered rings are indecomposable");
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
      RingElem a = impl_->sample(rng);
      RingElem b = impl_->sample(rng);
      RingElem t = impl_->sample(rng);
      int ab = impl_->compare(a, b);
      int ba = impl_->compare(b, a);
      if (ab != -ba)
        fail(Errc::inconsistent_backend, "comparison is not antisymmetric");
      if (ab <= 0 &&
          impl_->compare(impl_->add(a, t), impl_->add(b, t)) > 0)
        fail(Errc::inconsistent_backend,
             "order is not translation invariant");
      RingElem aa = abs(a), bb = abs(b);
      if (impl_->compare(impl_->mul(aa, bb), zero()) < 0)
        fail(Errc::inconsistent_backend,
             "product of nonnegatives is negative");
    }
  }

  return c;
}

// --------------------------------------------------------------- IdAlgebra

RingElem IdAlgebra::idem_of(const BoolElem& e) const {
  if (e.algebra() != algebra)
    fail(Errc::mixed_algebras, "element is not from this idempotent algebra");
  RingElem acc = ring.zero();
  for (int i : e.atom_list())
    acc = ring.add(acc, atom_idems[static_cast<std::size_t>(i)]);
  return acc;
}

BoolElem IdAlgebra::mask_of(const RingElem& idem) const {
  if (!ring.is_idempotent(idem))
    fail(Errc::not_idempotent, idem.repr() + " is not idempotent in " +
                                   ring.name(),
         idem.repr());
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < atom_idems.size(); ++i)
    if (ring.mul(atom_idems[i], idem) == atom_idems[i])
      mask |= std::uint64_t{1} << i;
  BoolElem out = algebra.element(mask);
  if (idem_of(out) != idem)
    fail(Errc::inconsistent_backend,
         idem.repr() + " is not a sum of the idempotent atoms");
  return out;
}

IdAlgebra idem_algebra(const Ring& r) {
  std::vector<RingElem> idems = r.idempotents();
  std::vector<RingElem> atoms;
  for (const RingElem& e : idems) {
    if (r.is_zero(e)) continue;
    bool minimal = true;
    for (const RingElem& f : idems) {
      if (r.is_zero(f) || f == e) continue;
      if (r.mul(f, e) == f) {  // f <= e in the idempotent order
        minimal = false;
        break;
      }
    }
    if (minimal) atoms.push_back(e);
  }
  if (atoms.empty() || atoms.size() > 64)
    fail(Errc::too_large,
         "idempotent algebra needs between 1 and 64 atoms, got " +
             std::to_string(atoms.size()));

  IdAlgebra id{r, BoolAlgebra(static_cast<int>(atoms.size())), atoms, idems};

  // structural sanity: the atoms are orthogonal, sum to 1, and span
  // exactly the listed idempotents
  if (idems.size() != (std::size_t{1} << atoms.size()))
    fail(Errc::inconsistent_backend,
         "idempotents of " + r.name() + " do not form a power of two");
  RingElem total = r.zero();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    total = r.add(total, atoms[i]);
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (!r.is_zero(r.mul(atoms[i], atoms[j])))
        fail(Errc::inconsistent_backend, "idempotent atoms are not orthogonal");
  }
  if (!r.is_one(total))
    fail(Errc::inconsistent_backend, "idempotent atoms do not sum to 1");
  for (const RingElem& e : idems) id.mask_of(e);  // throws if unreachable

  return id;
}

}  // namespace specker
