#include "specker/json_io.hpp"

#include <cctype>

namespace specker {

namespace {

[[noreturn]] void bad(const std::string& what) {
  fail(Errc::parse_error, what);
}

bool is_decimal(const std::string& s) {
  std::size_t i = s.size() > 0 && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (!is_decimal(s)) bad("'" + s + "' is not a decimal integer");
    return Int(s);
  }
  bad("expected an integer (number or decimal string), got " + j.dump());
}

Json ring_to_json(const Ring& r) {
  switch (r.kind()) {
    case Ring::Kind::integers:
      return Json{{"kind", "Z"}};
    case Ring::Kind::rationals:
      return Json{{"kind", "Q"}};
    case Ring::Kind::modular:
      return Json{{"kind", "Zmod"},
                  {"modulus", r.modulus().convert_to<long long>()}};
    case Ring::Kind::product:
      return Json{{"kind", "product"},
                  {"left", ring_to_json(r.left())},
                  {"right", ring_to_json(r.right())}};
  }
  bad("unreachable ring kind");
}

Ring ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    bad("ring descriptor must be an object with a 'kind' string");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "Z") return Ring::integers();
  if (kind == "Q") return Ring::rationals();
  if (kind == "Zmod") {
    if (!j.contains("modulus")) bad("Zmod descriptor needs a 'modulus'");
    return Ring::modular(int_from_json(j["modulus"]));
  }
  if (kind == "product") {
    if (!j.contains("left") || !j.contains("right"))
      bad("product descriptor needs 'left' and 'right'");
    return Ring::product(ring_from_json(j["left"]), ring_from_json(j["right"]));
  }
  bad("unknown ring kind '" + kind + "'");
}

Json value_to_json(const Ring& r, const RingElem& v) {
  if (r.kind() == Ring::Kind::product)
    return Json::array({value_to_json(r.left(), v.first()),
                        value_to_json(r.right(), v.second())});
  return v.repr();
}

RingElem value_from_json(const Ring& r, const Json& j) {
  switch (r.kind()) {
    case Ring::Kind::integers:
      return RingElem::of_int(int_from_json(j));
    case Ring::Kind::modular:
      return r.from_int(int_from_json(j));  // residues are reduced
    case Ring::Kind::rationals: {
      if (j.is_number_integer()) return r.from_int(j.get<long long>());
      if (!j.is_string()) bad("rational values travel as strings");
      std::string s = j.get<std::string>();
      std::size_t slash = s.find('/');
      std::string num = s.substr(0, slash);
      std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
      if (!is_decimal(num) || !is_decimal(den))
        bad("'" + s + "' is not a rational p/q");
      Int q(den);
      if (q == 0) bad("'" + s + "' has a zero denominator");
      return RingElem::of_rat(Rat(Int(num), q));  // normalized on build
    }
    case Ring::Kind::product: {
      if (!j.is_array() || j.size() != 2)
        bad("product values travel as [left, right] pairs, got " + j.dump());
      return RingElem::of_pair(value_from_json(r.left(), j[0]),
                               value_from_json(r.right(), j[1]));
    }
  }
  bad("unreachable ring kind");
}

Json element_to_json(const SpeckerElem& s) {
  Json values = Json::array();
  for (const RingElem& v : s.values())
    values.push_back(value_to_json(s.parent().ring(), v));
  return Json{{"pointwise", values}};
}

Json element_full_json(const SpeckerElem& s) {
  Json doc = element_to_json(s);
  doc["orthogonal"] = parts_to_json(s.parent(), from_pointwise(s).parts());
  return doc;
}

SpeckerElem element_from_json(const SpeckerAlgebra& algebra, const Json& j) {
  if (!j.is_object())
    bad("element must be an object with 'pointwise' or 'orthogonal'");
  if (j.contains("pointwise")) {
    const Json& arr = j["pointwise"];
    if (!arr.is_array() ||
        static_cast<int>(arr.size()) != algebra.algebra().atoms())
      bad("'pointwise' needs exactly " +
          std::to_string(algebra.algebra().atoms()) + " values");
    std::vector<RingElem> values;
    values.reserve(arr.size());
    for (const Json& v : arr)
      values.push_back(value_from_json(algebra.ring(), v));
    return algebra.element(std::move(values));
  }
  if (j.contains("orthogonal")) {
    // any formal sum is accepted here; it gets normalized
    FormalCombination c(algebra, parts_from_json(algebra, j["orthogonal"]));
    return to_pointwise(normalize(c));
  }
  bad("element must carry 'pointwise' or 'orthogonal'");
}

Json parts_to_json(const SpeckerAlgebra& algebra,
                   const std::vector<OrthPart>& parts) {
  Json out = Json::array();
  for (const OrthPart& p : parts) {
    Json idem = Json::array();
    for (int a : p.idem.atom_list()) idem.push_back(a);
    out.push_back(Json{{"coeff", value_to_json(algebra.ring(), p.coeff)},
                       {"idem", idem}});
  }
  return out;
}

std::vector<OrthPart> parts_from_json(const SpeckerAlgebra& algebra,
                                      const Json& j) {
  if (!j.is_array()) bad("expected an array of {coeff, idem} terms");
  std::vector<OrthPart> parts;
  parts.reserve(j.size());
  for (const Json& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("idem"))
      bad("each term needs 'coeff' and 'idem'");
    const Json& atoms = t["idem"];
    if (!atoms.is_array()) bad("'idem' must list atom indices");
    std::uint64_t mask = 0;
    for (const Json& a : atoms) {
      Int idx = int_from_json(a);
      if (idx < 0 || idx >= algebra.algebra().atoms())
        bad("atom index " + idx.str() + " out of range");
      mask |= std::uint64_t{1} << idx.convert_to<int>();
    }
    parts.push_back(OrthPart{value_from_json(algebra.ring(), t["coeff"]),
                             algebra.algebra().element(mask)});
  }
  return parts;
}

Json hom_to_json(const BoolHom& h) {
  Json dual = Json::array();
  for (int v : h.dual_map()) dual.push_back(v);
  return Json{{"dual_map", dual}};
}

}  // namespace specker
