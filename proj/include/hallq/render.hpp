#pragma once

// Deterministic text and JSON forms for representations, coefficients and
// Hall element tables. Orderings are fixed everywhere: grades ascending,
// canonical representatives in rep_less order, Laurent terms by
// decreasing exponent. JSON forms parse back losslessly.

#include <string>

#include "json.hpp"

#include "hallq/hall.hpp"

namespace hallq {

std::string matrix_str(const Ring& R, const RMatrix& m);
std::string rep_str(const Ring& R, const FreeRep& rep);

nlohmann::json matrix_json(const Ring& R, const RMatrix& m);
nlohmann::json rep_json(const Ring& R, const FreeRep& rep);
RMatrix matrix_from_json(const Ring& R, const nlohmann::json& j, int rows, int cols);
FreeRep rep_from_json(const Quiver& quiver, const Ring& R, const nlohmann::json& j);

nlohmann::json sqrtq_json(const SqrtQ& c);
SqrtQ sqrtq_from_json(const nlohmann::json& j, long long q);

// aligned two-column table: representative, coefficient
std::string hall_table_text(const Ring& R, const HallElement& elem);
nlohmann::json hall_element_json(const Ring& R, const HallElement& elem);
HallElement hall_element_from_json(const Quiver& quiver, const Ring& R,
                                   const nlohmann::json& j);

std::string tensor_table_text(const Ring& R, const TensorElement& elem);
nlohmann::json tensor_element_json(const Ring& R, const TensorElement& elem);

}  // namespace hallq
