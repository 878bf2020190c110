#pragma once

#include "hv/reduction.hpp"
#include "hv/submodules.hpp"
#include "hv/verma.hpp"

#include <json.hpp>

#include <string>

namespace hv {

using nlohmann::json;

// OrderSpec <-> {"kind":"dense","theta":{"u":"0","v":"1","d":2}}
//             | {"kind":"discrete","matrix":[[1,0],[0,1]]}
json order_to_json(const OrderSpec& o);
OrderSpec order_from_json(const json& j);

// CentralCharge <-> ["c1","c2","c3","c4"], rationals as "p/q" strings.
json charge_to_json(const CentralCharge& c);
CentralCharge charge_from_json(const json& j);

json group_to_json(GroupElement a);
GroupElement group_from_json(const json& j);

// Generator <-> {"kind":"t"|"E","alpha":[a,b]} | {"kind":"K","i":1..4}
json generator_to_json(const Generator& g);
Generator generator_from_json(const json& j);

// LieElement <-> [{"coeff":"p/q","gen":{...}}, ...]
json lie_to_json(const LieElement& x);
LieElement lie_from_json(const json& j);

// ModuleVector <-> {"charge":[...],"order":{...},"terms":[{"coeff":"p/q",
// "t":[[a,b],...],"e":[[a,b],...]},...]}; t and e ascending under the
// order, terms in fixed structural order so output is canonical.
json vector_to_json(const ModuleVector& v);
ModuleVector vector_from_json(const json& j);

// Certificate <-> {"word":[generator...],"scalar":"p/q","input_digest":"..."}
json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

// WhittakerParams <-> {"variant":"prop38_ab","a":{"1":"0"},"b":{},
// "xi":{...},"window":3}; sequence keys are 1-based decimal indices.
json params_to_json(const WhittakerParams& p);
WhittakerParams params_from_json(const json& j);

/// Canonical serialization: compact dump of the sorted-key json.
std::string canonical_dump(const json& j);

/// FNV-1a 64-bit hash of the canonical vector serialization, as 16 hex
/// digits. This is the certificate digest algorithm.
std::string vector_digest(const ModuleVector& v);

} // namespace hv
