#include "specker/engine.hpp"

#include "specker/order.hpp"
#include "specker/spectra.hpp"

namespace specker {

namespace {

struct Context {
  Ring ring;
  int atoms = 0;  // 0 when the command does not take an algebra
  Json args;
  VerifyOptions opts;

  SpeckerAlgebra algebra() const {
    if (atoms == 0)
      fail(Errc::parse_error, "this command needs an 'atoms' count");
    return SpeckerAlgebra(ring, BoolAlgebra(atoms));
  }
  SpeckerElem element(const char* key) const {
    if (!args.contains(key))
      fail(Errc::parse_error, std::string("missing argument '") + key + "'");
    return element_from_json(algebra(), args[key]);
  }
};

Json cmd_normalize(const Context& ctx) {
  SpeckerAlgebra s = ctx.algebra();
  if (!ctx.args.contains("terms"))
    fail(Errc::parse_error, "normalize needs 'terms'");
  FormalCombination c(s, parts_from_json(s, ctx.args["terms"]));
  OrthogonalForm form = normalize(c);
  Json pointwise = element_to_json(to_pointwise(form));
  return Json{{"orthogonal", parts_to_json(s, form.parts())},
              {"full", parts_to_json(s, form.full_parts())},
              {"pointwise", pointwise["pointwise"]}};
}

Json cmd_arith(const Context& ctx) {
  SpeckerAlgebra s = ctx.algebra();
  if (!ctx.args.contains("op") || !ctx.args["op"].is_string())
    fail(Errc::parse_error, "arith needs an 'op' string");
  std::string op = ctx.args["op"].get<std::string>();
  SpeckerElem lhs = ctx.element("lhs");

  SpeckerElem out = s.zero();
  if (op == "neg") {
    out = lhs.negate();
  } else if (op == "scale") {
    if (!ctx.args.contains("scalar"))
      fail(Errc::parse_error, "scale needs a 'scalar'");
    out = lhs.scale(value_from_json(s.ring(), ctx.args["scalar"]));
  } else {
    SpeckerElem rhs = ctx.element("rhs");
    if (op == "add")
      out = lhs.add(rhs);
    else if (op == "sub")
      out = lhs.sub(rhs);
    else if (op == "mul")
      out = lhs.mul(rhs);
    else
      fail(Errc::parse_error, "unknown arith op '" + op + "'");
  }

  // run the same operation through the function presentation and
  // insist the two routes agree
  FosterFunction fl = FosterFunction::from_element(lhs);
  SpeckerElem alt = out;
  if (op == "neg") {
    alt = foster_scalar(s.ring().neg(s.ring().one()), fl).to_element();
  } else if (op == "scale") {
    alt = foster_scalar(value_from_json(s.ring(), ctx.args["scalar"]), fl)
              .to_element();
  } else {
    FosterFunction fr = FosterFunction::from_element(ctx.element("rhs"));
    if (op == "add")
      alt = foster_add(fl, fr).to_element();
    else if (op == "sub")
      alt = foster_add(fl, foster_scalar(s.ring().neg(s.ring().one()), fr))
                .to_element();
    else
      alt = foster_mul(fl, fr).to_element();
  }
  if (alt != out)
    fail(Errc::inconsistent_backend,
         "pointwise and function presentations disagree on '" + op + "'");

  return Json{{"value", element_full_json(out)}};
}

Json cmd_idempotents(const Context& ctx) {
  SpeckerAlgebra s = ctx.algebra();
  IdempotentAlgebra id = idempotent_algebra(s);
  Json ring_idems = Json::array();
  for (const RingElem& e : s.ring().idempotents())
    ring_idems.push_back(value_to_json(s.ring(), e));
  Json atom_elements = Json::array();
  for (int i = 0; i < id.algebra.atoms(); ++i)
    atom_elements.push_back(element_to_json(id.element_of(id.algebra.atom(i))));
  // 2^atoms as a decimal string; it outgrows doubles quickly
  Int count = Int(1) << id.algebra.atoms();
  return Json{{"algebra_atoms", id.algebra.atoms()},
              {"count", count.str()},
              {"ring_idempotents", ring_idems},
              {"atom_elements", atom_elements}};
}

Json cmd_faithful(const Context& ctx) {
  SpeckerAlgebra s = ctx.algebra();
  if (ctx.args.contains("element")) {
    return Json{{"faithful", is_faithful(ctx.element("element"))}};
  }
  if (!ctx.args.contains("elements") || !ctx.args["elements"].is_array())
    fail(Errc::parse_error, "faithful needs 'element' or 'elements'");
  std::vector<SpeckerElem> gens;
  for (const Json& e : ctx.args["elements"])
    gens.push_back(element_from_json(s, e));
  std::vector<SpeckerElem> seeded = gens;
  seeded.push_back(s.zero());
  seeded.push_back(s.one());
  std::size_t closure_size = idempotent_closure(seeded).size();
  bool generating =
      is_faithful_generating(s, gens, ctx.opts.exhaustive_limit);
  return Json{{"closure_size", closure_size},
              {"faithful_generating", generating}};
}

Json cmd_homs(const Context& ctx) {
  SpeckerAlgebra s = ctx.algebra();
  if (!ctx.args.contains("target_atoms"))
    fail(Errc::parse_error, "homs needs 'target_atoms'");
  Int t = int_from_json(ctx.args["target_atoms"]);
  if (t < 1 || t > 64)
    fail(Errc::parse_error, "'target_atoms' must be between 1 and 64");
  SpeckerAlgebra target(s.ring(), BoolAlgebra(t.convert_to<int>()));
  std::vector<AlgebraHom> homs = enumerate_algebra_homs(s, target);
  Json listed = Json::array();
  for (const AlgebraHom& h : homs) listed.push_back(hom_to_json(h.datum()));
  return Json{{"count", homs.size()},
              {"target_id_atoms",
               idempotent_algebra(target).algebra.atoms()},
              {"homs", listed}};
}

Json cmd_minspec(const Context& ctx) {
  SpeckerAlgebra s = ctx.algebra();
  std::vector<MinimalPrime> primes = min_spectrum(s);
  Json listed = Json::array();
  for (const MinimalPrime& p : primes)
    listed.push_back(Json{{"atom", p.atom()}});
  Json queries = Json::array();
  if (ctx.args.contains("queries")) {
    if (!ctx.args["queries"].is_array())
      fail(Errc::parse_error, "'queries' must be an array of elements");
    for (const Json& q : ctx.args["queries"]) {
      SpeckerElem e = element_from_json(s, q);
      Json zero_set = Json::array();
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (primes[i].contains(e)) zero_set.push_back(i);
      queries.push_back(Json{{"zero_set", zero_set}});
    }
  }
  return Json{{"count", primes.size()}, {"primes", listed},
              {"queries", queries}};
}

Json cmd_ann(const Context& ctx) {
  SpeckerAlgebra s = ctx.algebra();
  SpeckerElem witness = s.one();
  if (ctx.args.contains("element")) {
    witness = annihilator(ctx.element("element"), ctx.opts);
  } else if (ctx.args.contains("elements") && ctx.args["elements"].is_array()) {
    std::vector<SpeckerElem> set;
    for (const Json& e : ctx.args["elements"])
      set.push_back(element_from_json(s, e));
    witness = annihilator_of_set(s, set, ctx.opts);
  } else {
    fail(Errc::parse_error, "ann needs 'element' or 'elements'");
  }
  return Json{{"witness", element_full_json(witness)}, {"verified", true}};
}

Json cmd_baer(const Context& ctx) {
  SpeckerAlgebra s = ctx.algebra();
  BaerReport report = baer_report(s, ctx.opts);
  Json out{{"weak_baer", report.weak_baer},
           {"id_complete", report.id_complete},
           {"baer", report.baer}};
  if (report.witness_failure)
    out["witness_failure"] = value_to_json(s.ring(), *report.witness_failure);
  return out;
}

Json cmd_hull(const Context& ctx) {
  SpeckerAlgebra s = ctx.algebra();
  HullReport report = injective_hull(s, ctx.opts);
  return Json{{"hull_atoms", report.hull.algebra().atoms()},
              {"embedding", hom_to_json(report.embedding.datum())},
              {"embedding_is_isomorphism", report.embedding_is_isomorphism},
              {"hull_is_baer", report.hull_is_baer}};
}

Json cmd_lattice(const Context& ctx) {
  SpeckerAlgebra s = ctx.algebra();
  OrderedContext order(s);
  if (!ctx.args.contains("op") || !ctx.args["op"].is_string())
    fail(Errc::parse_error, "lattice needs an 'op' string");
  std::string op = ctx.args["op"].get<std::string>();
  if (op == "leq")
    return Json{{"holds", order.leq(ctx.element("lhs"), ctx.element("rhs"))}};
  if (op == "join")
    return Json{
        {"value", element_full_json(
                      order.join(ctx.element("lhs"), ctx.element("rhs")))}};
  if (op == "meet")
    return Json{
        {"value", element_full_json(
                      order.meet(ctx.element("lhs"), ctx.element("rhs")))}};
  if (op == "abs")
    return Json{{"value", element_full_json(order.abs(ctx.element("lhs")))}};
  if (op == "positive")
    return Json{{"positive", order.is_positive(ctx.element("lhs"))}};
  if (op == "law") {
    auto check = order.multiplicative_law(ctx.element("a"), ctx.element("b"),
                                          ctx.element("c"));
    return Json{{"holds", check.holds},
                {"preconditions_met", check.preconditions_met}};
  }
  fail(Errc::parse_error, "unknown lattice op '" + op + "'");
}

Json cmd_equivalence(const Context& ctx) {
  std::vector<int> sizes = {1, 2, 3};
  if (ctx.args.contains("sizes")) {
    if (!ctx.args["sizes"].is_array() || ctx.args["sizes"].empty())
      fail(Errc::parse_error, "'sizes' must be a nonempty array");
    sizes.clear();
    for (const Json& n : ctx.args["sizes"]) {
      Int v = int_from_json(n);
      if (v < 1 || v > 16)
        fail(Errc::parse_error, "probe sizes must be between 1 and 16");
      sizes.push_back(v.convert_to<int>());
    }
  }
  EquivalenceReport report = equivalence_report(ctx.ring, sizes);
  return Json{{"sizes", report.sizes},
              {"insertion_iso", report.insertion_iso},
              {"counit_iso", report.counit_iso},
              {"ring_indecomposable", report.ring_indecomposable},
              {"equivalence", report.equivalence},
              {"consistent", report.consistent}};
}

Json cmd_quotient(const Context& ctx) {
  SpeckerAlgebra s = ctx.algebra();
  if (!ctx.args.contains("prime"))
    fail(Errc::parse_error, "quotient needs a 'prime'");
  RingElem p = value_from_json(s.ring(), ctx.args["prime"]);
  SpeckerQuotient q = quotient_mod_prime(s, p);
  Json out{{"quotient_ring", ring_to_json(q.algebra.ring())},
           {"id_atoms", idempotent_algebra(q.algebra).algebra.atoms()}};
  if (ctx.args.contains("element"))
    out["image"] = element_full_json(q.project(ctx.element("element")));
  return out;
}

}  // namespace

EngineResult run_request(const Json& request) {
  std::string command = "?";
  try {
    if (!request.is_object())
      fail(Errc::parse_error, "request must be a JSON object");
    if (!request.contains("command") || !request["command"].is_string())
      fail(Errc::parse_error, "request needs a 'command' string");
    command = request["command"].get<std::string>();

    Context ctx{Ring::integers(), 0, Json::object(), {}};
    if (!request.contains("ring"))
      fail(Errc::parse_error, "request needs a 'ring' descriptor");
    ctx.ring = ring_from_json(request["ring"]);
    if (request.contains("atoms")) {
      Int atoms = int_from_json(request["atoms"]);
      if (atoms < 1 || atoms > 64)
        fail(Errc::parse_error, "'atoms' must be between 1 and 64");
      ctx.atoms = atoms.convert_to<int>();
    }
    if (request.contains("args")) {
      if (!request["args"].is_object())
        fail(Errc::parse_error, "'args' must be an object");
      ctx.args = request["args"];
    }
    if (request.contains("seed"))
      ctx.opts.seed = int_from_json(request["seed"]).convert_to<std::uint64_t>();
    if (request.contains("exhaustive_limit")) {
      Int lim = int_from_json(request["exhaustive_limit"]);
      if (lim < 1) fail(Errc::parse_error, "'exhaustive_limit' must be positive");
      ctx.opts.exhaustive_limit = lim.convert_to<std::uint64_t>();
    }

    Json result;
    if (command == "normalize")
      result = cmd_normalize(ctx);
    else if (command == "arith")
      result = cmd_arith(ctx);
    else if (command == "idempotents")
      result = cmd_idempotents(ctx);
    else if (command == "faithful")
      result = cmd_faithful(ctx);
    else if (command == "homs")
      result = cmd_homs(ctx);
    else if (command == "minspec")
      result = cmd_minspec(ctx);
    else if (command == "ann")
      result = cmd_ann(ctx);
    else if (command == "baer")
      result = cmd_baer(ctx);
    else if (command == "hull")
      result = cmd_hull(ctx);
    else if (command == "lattice")
      result = cmd_lattice(ctx);
    else if (command == "equivalence-report")
      result = cmd_equivalence(ctx);
    else if (command == "quotient")
      result = cmd_quotient(ctx);
    else
      fail(Errc::parse_error, "unknown command '" + command + "'");

    return {Json{{"command", command}, {"ok", true}, {"result", result}}, 0};
  } catch (const Error& e) {
    Json error{{"code", errc_name(e.code())}, {"message", e.message()}};
    if (!e.data().empty()) error["data"] = e.data();
    int code = e.code() == Errc::parse_error ? 2 : 1;
    return {Json{{"command", command}, {"ok", false}, {"error", error}}, code};
  } catch (const Json::exception& e) {
    Json error{{"code", errc_name(Errc::parse_error)},
               {"message", std::string("malformed request: ") + e.what()}};
    return {Json{{"command", command}, {"ok", false}, {"error", error}}, 2};
  }
}

EngineResult run_request_text(const std::string& text) {
  Json request = Json::parse(text, nullptr, false);
  if (request.is_discarded()) {
    Json error{{"code", errc_name(Errc::parse_error)},
               {"message", "request is not valid JSON"}};
    return {Json{{"command", "?"}, {"ok", false}, {"error", error}}, 2};
  }
  return run_request(request);
}

std::string render_response(const Json& response) {
  return response.dump(2) + "\n";
}

}  // namespace specker
