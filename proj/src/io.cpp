#include "invol/io.hpp"

#include <fstream>
#include <sstream>

namespace invol {

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

Scalar scalar_from_json(const Field& f, const nlohmann::json& entry) {
  if (entry.is_number_integer())
    return Scalar::of_int(f, entry.get<std::int64_t>());
  if (entry.is_string()) {
    Polynomial p = Polynomial::parse(f, 0, entry.get<std::string>());
    return p.constant_term();
  }
  throw IoError("matrix entry must be an integer or a string, got " +
                entry.dump());
}

namespace {

template <typename T, typename EntryFn>
Matrix<T> matrix_from_json_impl(const nlohmann::json& j, const T& zero,
                                EntryFn entry) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw IoError("matrix must be a non-empty 2-D array, got " + j.dump());
  std::size_t rows = j.size(), cols = j[0].size();
  Matrix<T> m(rows, cols, zero);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw IoError("matrix row " + std::to_string(r) + " has " +
                    std::to_string(j[r].size()) + " entries, expected " +
                    std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      try {
        m(r, c) = entry(j[r][c]);
      } catch (const ParseError& e) {
        throw IoError("matrix entry (" + std::to_string(r) + "," +
                      std::to_string(c) + "): " + e.what());
      }
    }
  }
  return m;
}

}  // namespace

Matrix<Scalar> scalar_matrix_from_json(const Field& f,
                                       const nlohmann::json& j) {
  return matrix_from_json_impl(
      j, Scalar::zero(f),
      [&](const nlohmann::json& e) { return scalar_from_json(f, e); });
}

Matrix<RingElement> ring_matrix_from_json(const RingPtr& ring,
                                          const nlohmann::json& j) {
  return matrix_from_json_impl(
      j, ring->zero(), [&](const nlohmann::json& e) {
        if (e.is_number_integer())
          return ring->from_int(e.get<std::int64_t>());
        if (e.is_string()) return ring->parse(e.get<std::string>());
        throw IoError("matrix entry must be an integer or a string, got " +
                      e.dump());
      });
}

TupleConfig tuple_from_json(const Field& f, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a"))
    throw IoError("tuple file must be an object with an \"a\" field");
  TupleConfig t;
  auto read_list = [&](const nlohmann::json& arr, const char* name) {
    if (!arr.is_array() || arr.empty())
      throw IoError(std::string("tuple field \"") + name +
                    "\" must be a non-empty array of matrices");
    std::vector<Matrix<Scalar>> out;
    out.reserve(arr.size());
    for (const auto& m : arr) out.push_back(scalar_matrix_from_json(f, m));
    return out;
  };
  t.a = read_list(j["a"], "a");
  if (j.contains("b")) t.b = read_list(j["b"], "b");
  if (j.contains("m")) t.m = scalar_matrix_from_json(f, j["m"]);
  return t;
}

std::vector<Scalar> parse_point_coords(const Field& f,
                                       const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    Polynomial p = Polynomial::parse(f, 0, piece);
    out.push_back(p.constant_term());
  }
  if (out.empty()) throw IoError("empty point coordinate list");
  return out;
}

}  // namespace invol
