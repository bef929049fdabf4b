#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "invol/quotient_ring.hpp"
#include "invol/tuples.hpp"

namespace invol {

// IoError with the path on any filesystem or JSON syntax problem.
nlohmann::json load_json_file(const std::string& path);

// A scalar entry is a JSON integer or a string in the polynomial syntax
// restricted to constants ("3", "-1/2", "2+t").
Scalar scalar_from_json(const Field& f, const nlohmann::json& entry);

// Matrices are rectangular 2-D JSON arrays of scalar entries; ring matrices
// additionally accept variables ("x0", "1-x0^2").
Matrix<Scalar> scalar_matrix_from_json(const Field& f,
                                       const nlohmann::json& j);
Matrix<RingElement> ring_matrix_from_json(const RingPtr& ring,
                                          const nlohmann::json& j);

// Tuple files: {"a": [matrix, ...], "b": [...], "m": matrix} with "b" and
// "m" optional.
TupleConfig tuple_from_json(const Field& f, const nlohmann::json& j);

// Comma-separated constant coordinates, e.g. "1,0,0" or "2+t,0,1".
std::vector<Scalar> parse_point_coords(const Field& f,
                                       const std::string& text);

}  // namespace invol
