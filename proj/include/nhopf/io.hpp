#pragma once

// JSON and DOT serialization.  Every JSON document carries format_version
// so golden outputs can survive format changes.  Vertex keys in lattice
// exports are the canonical forest serializations.

#include <string>

#include "json.hpp"

#include "nhopf/alphabet.hpp"
#include "nhopf/order.hpp"

namespace nhopf {

inline constexpr int kFormatVersion = 1;

std::string instance_name(OperadKind k);

nlohmann::json element_json(OperadKind kind, const HopfElement& x);
nlohmann::json tensor_json(OperadKind kind, Basis basis, const TensorElement& t);
nlohmann::json interval_json(const Interval& iv);
std::string interval_dot(const Interval& iv);
nlohmann::json poly_json(const NCPolynomial& p);

// {letters, roots, decorations: {g: [...]}, edges: {"j": [[a,b],...]}}
nlohmann::json alphabet_json(const RelatedAlphabet& A);
RelatedAlphabet alphabet_from_json(const nlohmann::json& j);
RelatedAlphabet load_alphabet(const std::string& path);

}  // namespace nhopf
