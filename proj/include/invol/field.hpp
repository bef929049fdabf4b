#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "invol/errors.hpp"

namespace invol {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---- modular number theory helpers (p odd prime, p < 2^31) ----

bool is_prime(std::uint64_t n);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
bool is_quadratic_residue(std::uint64_t a, std::uint64_t p);
std::uint32_t smallest_nonresidue(std::uint32_t p);
// Tonelli-Shanks; nullopt when `a` is a nonresidue.
std::optional<std::uint64_t> mod_sqrt(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_of_bigint(const BigInt& v, std::uint64_t p);

enum class FieldKind : std::uint8_t {
  rationals,       // Q
  rationals_ext,   // Q[t]/(t^2 - d), d a non-square integer
  prime,           // GF(p)
  prime_ext,       // GF(p)[t]/(t^2 - d), d a nonresidue mod p
};

// Value-type descriptor of a coefficient field. The two extension kinds carry
// a defining scalar d with t^2 = d; conjugation t -> -t is the field
// involution exposed through Scalar::conj().
class Field {
 public:
  Field() = default;  // the rationals

  static Field rationals();
  static Field rationals_ext(std::int64_t d);  // d non-square, e.g. -1 for Q(i)
  static Field gf(std::uint32_t p);            // odd prime, p < 2^31
  static Field gf2(std::uint32_t p);           // d = smallest nonresidue mod p
  // Accepts "q", "gf:<p>", "gf:<p>^2".
  static Field parse(std::string_view spec);

  FieldKind kind() const { return kind_; }
  bool has_extension() const {
    return kind_ == FieldKind::rationals_ext || kind_ == FieldKind::prime_ext;
  }
  bool positive_characteristic() const {
    return kind_ == FieldKind::prime || kind_ == FieldKind::prime_ext;
  }
  std::uint32_t characteristic() const { return p_; }  // 0 for the Q kinds
  std::uint32_t modulus() const;                       // p, prime kinds only
  std::uint32_t ext_residue() const;                   // d, prime_ext only
  std::int64_t ext_integer() const;                    // d, rationals_ext only

  std::string name() const;
  bool operator==(const Field&) const = default;

 private:
  FieldKind kind_ = FieldKind::rationals;
  std::uint32_t p_ = 0;
  std::uint32_t d_ = 0;    // prime_ext
  std::int64_t dz_ = 0;    // rationals_ext
};

// One field element. Representation depends on the field kind: residues a_, b_
// in [0, p) for the prime kinds, exact rationals ra_, rb_ otherwise; the b
// component is the coefficient of t and stays zero for non-extension kinds.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  explicit Scalar(const Field& f) : f_(f) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, std::int64_t v);
  // Reduces n/d into the field; MathError when d is divisible by char p.
  static Scalar of_rational(const Field& f, const Rational& v);
  static Scalar ext_generator(const Field& f);  // t
  static Scalar from_parts(const Field& f, const Rational& a, const Rational& b);
  // Square root of -1 when the field contains one; nullopt otherwise.
  static std::optional<Scalar> sqrt_minus_one(const Field& f);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  // True when the t-coordinate vanishes (always true off the extension kinds).
  bool in_base_subfield() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;  // MathError on zero
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar conj() const;  // t -> -t; identity on non-extension kinds
  Scalar pow(std::uint64_t e) const;

  // Prime-kind accessors (used by the mod-p fast paths).
  std::uint64_t residue() const { return a_; }
  std::pair<std::uint64_t, std::uint64_t> residue_pair() const {
    return {a_, b_};
  }
  const Rational& rational_part() const { return ra_; }
  const Rational& rational_ext_part() const { return rb_; }

  std::string str() const;

 private:
  void require_same_field(const Scalar& o) const;

  Field f_;
  std::uint64_t a_ = 0, b_ = 0;
  Rational ra_, rb_;
};

}  // namespace invol
