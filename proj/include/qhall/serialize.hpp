#pragma once

#include <json.hpp>
#include <string>

#include "qhall/derived_hall.hpp"
#include "qhall/hall_morph.hpp"
#include "qhall/torus.hpp"

namespace qhall {

/// Element literals: generators joined by '*' (the untwisted product).
///   1 | K[a1,...,an] | X(M=<label>; P=<label>)   (either field optional)
MHElement parse_mh_literal(const MorphismHall& H, const std::string& text);
///   1 | u(M=<label>; P=<label>)
DHElement parse_dh_literal(const DerivedHall& D, const std::string& text);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(int q, const nlohmann::json& j);

/// [{alpha, module_label, proj_label, scalar: {rat, sqrt_rat}}, ...]
nlohmann::json to_json(const MorphismHall& H, const MHElement& x);
MHElement mh_from_json(const MorphismHall& H, const nlohmann::json& j);
/// [{left: {...}, right: {...}, scalar}, ...]
nlohmann::json to_json(const MorphismHall& H, const MHTensor& x);
MHTensor mh_tensor_from_json(const MorphismHall& H, const nlohmann::json& j);
/// [{module_label, proj_label, scalar}, ...]
nlohmann::json to_json(const DerivedHall& D, const DHElement& x);
DHElement dh_from_json(const DerivedHall& D, const nlohmann::json& j);
/// [{exponent, scalar}, ...] sorted lexicographically by exponent.
nlohmann::json to_json(const TorusElt& x);
TorusElt torus_from_json(int q, const nlohmann::json& j, TorusMode mode = TorusMode::kLambda);

std::string to_text(const MorphismHall& H, const MHElement& x);
std::string to_text(const MorphismHall& H, const MHTensor& x);
std::string to_text(const DerivedHall& D, const DHElement& x);

}  // namespace qhall
