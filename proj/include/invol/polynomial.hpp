#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "invol/field.hpp"

namespace invol {

// Exponent vector over a fixed variable set x0..x{n-1}.
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

// Graded lexicographic order with x0 > x1 > ... : compare total degree first,
// then the exponent of the most significant variable that differs.
struct GrlexLess {
  bool operator()(const Monomial& x, const Monomial& y) const {
    std::uint64_t dx = total_degree(x), dy = total_degree(y);
    if (dx != dy) return dx < dy;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
      if (x[i] != y[i]) return x[i] < y[i];
    return x.size() < y.size();
  }
};

// Sparse multivariate polynomial with scalar coefficients. Terms are kept in
// ascending grlex order; rbegin() is the leading term. Zero coefficients are
// never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexLess>;

  Polynomial() : Polynomial(Field::rationals(), 0) {}
  Polynomial(const Field& f, std::size_t nvars) : f_(f), nvars_(nvars) {}

  static Polynomial zero(const Field& f, std::size_t nvars) {
    return Polynomial(f, nvars);
  }
  static Polynomial constant(const Field& f, std::size_t nvars, Scalar c);
  static Polynomial variable(const Field& f, std::size_t nvars, std::size_t i);

  // Parses the textual format: integer or a/b coefficients, optional t for
  // extension fields, variables x0..x{n-1}, ^ powers, * optional before a
  // variable, parenthesized subexpressions. Throws ParseError with a position.
  static Polynomial parse(const Field& f, std::size_t nvars,
                          std::string_view text);

  const Field& field() const { return f_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero scalar when absent).
  Scalar constant_term() const;
  std::uint64_t degree() const;  // 0 for the zero polynomial
  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;

  void add_term(const Monomial& m, const Scalar& c);

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;

  // Applies the field conjugation t -> -t to every coefficient.
  Polynomial conj_coefficients() const;
  // Substitutes images[i] for xi; images must share field and variable count.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;

  std::string str() const;

 private:
  Field f_;
  std::size_t nvars_;
  TermMap terms_;
};

}  // namespace invol
