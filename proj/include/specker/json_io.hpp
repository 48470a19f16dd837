#pragma once

/*
 * Wire format.  Rings travel as descriptors ({"kind":"Z"}, {"kind":
 * "Zmod","modulus":6}, {"kind":"product","left":...,"right":...}),
 * ring values as decimal strings ("5", "-2/3") or [left,right] pairs,
 * elements as {"pointwise":[...]} or {"orthogonal":[{"coeff":...,
 * "idem":[atom indices]}...]}.  Parsing is forgiving (residues are
 * reduced, rationals normalized); emission is canonical, so equal
 * values always serialize to identical bytes.
 */

#include <json.hpp>

#include "specker/specker_algebra.hpp"

namespace specker {

using Json = nlohmann::json;

Json ring_to_json(const Ring& r);
Ring ring_from_json(const Json& j);

Json value_to_json(const Ring& r, const RingElem& v);
RingElem value_from_json(const Ring& r, const Json& j);

// {"pointwise": [...]}; the single canonical element document
Json element_to_json(const SpeckerElem& s);
// both presentations side by side, for command output
Json element_full_json(const SpeckerElem& s);
SpeckerElem element_from_json(const SpeckerAlgebra& algebra, const Json& j);

Json parts_to_json(const SpeckerAlgebra& algebra,
                   const std::vector<OrthPart>& parts);
std::vector<OrthPart> parts_from_json(const SpeckerAlgebra& algebra,
                                      const Json& j);

Json hom_to_json(const BoolHom& h);

Int int_from_json(const Json& j);

}  // namespace specker
