#include "invol/field.hpp"

#include <charconv>
#include <cmath>

namespace invol {

namespace {
constexpr std::uint64_t kPrimeLimit = 1ull << 31;

std::uint32_t parse_u32(std::string_view s, std::size_t base_pos) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("expected a positive integer in field spec", base_pos);
  return v;
}
}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw MathError("division by zero in GF(" + std::to_string(p) + ")");
  return mod_pow(a, p - 2, p);
}

bool is_quadratic_residue(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return true;
  return mod_pow(a, (p - 1) / 2, p) == 1;
}

std::uint32_t smallest_nonresidue(std::uint32_t p) {
  for (std::uint32_t d = 2; d < p; ++d)
    if (!is_quadratic_residue(d, p)) return d;
  throw MathError("no quadratic nonresidue mod " + std::to_string(p));
}

std::optional<std::uint64_t> mod_sqrt(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (!is_quadratic_residue(a, p)) return std::nullopt;
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
  // Tonelli-Shanks. p - 1 = q * 2^s with q odd.
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = smallest_nonresidue(static_cast<std::uint32_t>(p));
  std::uint64_t m = s;
  std::uint64_t c = mod_pow(z, q, p);
  std::uint64_t t = mod_pow(a, q, p);
  std::uint64_t r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    std::uint64_t b = mod_pow(c, 1ull << (m - i - 1), p);
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

std::uint64_t mod_of_bigint(const BigInt& v, std::uint64_t p) {
  BigInt r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return r.convert_to<std::uint64_t>();
}

// ---- Field ----

Field Field::rationals() {
  Field f;
  f.kind_ = FieldKind::rationals;
  return f;
}

Field Field::rationals_ext(std::int64_t d) {
  if (d == 0) throw MathError("extension residue must be nonzero");
  if (d > 0) {
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(d)));
    for (std::int64_t c = r - 2; c <= r + 2; ++c)
      if (c >= 0 && c * c == d)
        throw MathError("extension residue " + std::to_string(d) +
                        " is a perfect square");
  }
  Field f;
  f.kind_ = FieldKind::rationals_ext;
  f.dz_ = d;
  return f;
}

Field Field::gf(std::uint32_t p) {
  if (p < 3 || p >= kPrimeLimit || !is_prime(p))
    throw MathError("modulus must be an odd prime below 2^31, got " +
                    std::to_string(p));
  Field f;
  f.kind_ = FieldKind::prime;
  f.p_ = p;
  return f;
}

Field Field::gf2(std::uint32_t p) {
  Field f = gf(p);
  f.kind_ = FieldKind::prime_ext;
  f.d_ = smallest_nonresidue(p);
  return f;
}

Field Field::parse(std::string_view spec) {
  if (spec == "q") return rationals();
  if (spec.rfind("gf:", 0) == 0) {
    std::string_view rest = spec.substr(3);
    bool squared = false;
    if (rest.size() >= 2 && rest.substr(rest.size() - 2) == "^2") {
      squared = true;
      rest = rest.substr(0, rest.size() - 2);
    }
    std::uint32_t p = parse_u32(rest, 3);
    return squared ? gf2(p) : gf(p);
  }
  throw ParseError("unknown field spec '" + std::string(spec) +
                       "' (expected q, gf:<p>, or gf:<p>^2)",
                   0);
}

std::uint32_t Field::modulus() const {
  if (!positive_characteristic())
    throw MathError("field " + name() + " has no modulus");
  return p_;
}

std::uint32_t Field::ext_residue() const {
  if (kind_ != FieldKind::prime_ext)
    throw MathError("field " + name() + " has no prime extension residue");
  return d_;
}

std::int64_t Field::ext_integer() const {
  if (kind_ != FieldKind::rationals_ext)
    throw MathError("field " + name() + " has no rational extension residue");
  return dz_;
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::rationals:
      return "q";
    case FieldKind::rationals_ext:
      return "q[t]/(t^2-(" + std::to_string(dz_) + "))";
    case FieldKind::prime:
      return "gf:" + std::to_string(p_);
    case FieldKind::prime_ext:
      return "gf:" + std::to_string(p_) + "^2";
  }
  return "?";
}

// ---- Scalar ----

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, std::int64_t v) {
  Scalar s(f);
  if (f.positive_characteristic()) {
    std::int64_t p = f.modulus();
    std::int64_t r = v % p;
    if (r < 0) r += p;
    s.a_ = static_cast<std::uint64_t>(r);
  } else {
    s.ra_ = v;
  }
  return s;
}

Scalar Scalar::of_rational(const Field& f, const Rational& v) {
  Scalar s(f);
  if (f.positive_characteristic()) {
    std::uint64_t p = f.modulus();
    std::uint64_t den = mod_of_bigint(denominator(v), p);
    if (den == 0)
      throw MathError("denominator of " + v.str() +
                      " vanishes in characteristic " + std::to_string(p));
    s.a_ = mod_of_bigint(numerator(v), p) * mod_inverse(den, p) % p;
  } else {
    s.ra_ = v;
  }
  return s;
}

Scalar Scalar::ext_generator(const Field& f) {
  if (!f.has_extension())
    throw MathError("field " + f.name() + " has no generator t");
  Scalar s(f);
  if (f.positive_characteristic())
    s.b_ = 1;
  else
    s.rb_ = 1;
  return s;
}

Scalar Scalar::from_parts(const Field& f, const Rational& a, const Rational& b) {
  Scalar s = of_rational(f, a);
  if (b != 0) {
    if (!f.has_extension())
      throw MathError("field " + f.name() + " has no generator t");
    s = s + of_rational(f, b) * ext_generator(f);
  }
  return s;
}

std::optional<Scalar> Scalar::sqrt_minus_one(const Field& f) {
  switch (f.kind()) {
    case FieldKind::rationals:
      return std::nullopt;
    case FieldKind::rationals_ext:
      // i = t exactly when t^2 = -1.
      if (f.ext_integer() == -1) return ext_generator(f);
      return std::nullopt;
    case FieldKind::prime: {
      auto r = mod_sqrt(f.modulus() - 1, f.modulus());
      if (!r) return std::nullopt;
      return of_int(f, static_cast<std::int64_t>(*r));
    }
    case FieldKind::prime_ext: {
      std::uint64_t p = f.modulus();
      auto r = mod_sqrt(p - 1, p);
      if (r) return of_int(f, static_cast<std::int64_t>(*r));
      // -1 is a nonresidue, and so is d, so -1/d is a residue: i = b*t with
      // b^2 d = -1.
      auto b = mod_sqrt((p - 1) * mod_inverse(f.ext_residue(), p) % p, p);
      Scalar s(f);
      s.b_ = *b;
      return s;
    }
  }
  return std::nullopt;
}

bool Scalar::is_zero() const {
  if (f_.positive_characteristic()) return a_ == 0 && b_ == 0;
  return ra_ == 0 && rb_ == 0;
}

bool Scalar::is_one() const {
  if (f_.positive_characteristic()) return a_ == 1 && b_ == 0;
  return ra_ == 1 && rb_ == 0;
}

bool Scalar::in_base_subfield() const {
  if (f_.positive_characteristic()) return b_ == 0;
  return rb_ == 0;
}

bool Scalar::operator==(const Scalar& o) const {
  if (f_ != o.f_) return false;
  if (f_.positive_characteristic()) return a_ == o.a_ && b_ == o.b_;
  return ra_ == o.ra_ && rb_ == o.rb_;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (f_ != o.f_)
    throw MathError("mixed-field scalar arithmetic: " + f_.name() + " vs " +
                    o.f_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar s(f_);
  if (f_.positive_characteristic()) {
    std::uint64_t p = f_.modulus();
    s.a_ = (a_ + o.a_) % p;
    s.b_ = (b_ + o.b_) % p;
  } else {
    s.ra_ = ra_ + o.ra_;
    s.rb_ = rb_ + o.rb_;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar s(f_);
  if (f_.positive_characteristic()) {
    std::uint64_t p = f_.modulus();
    s.a_ = (p - a_) % p;
    s.b_ = (p - b_) % p;
  } else {
    s.ra_ = -ra_;
    s.rb_ = -rb_;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar s(f_);
  switch (f_.kind()) {
    case FieldKind::prime: {
      s.a_ = a_ * o.a_ % f_.modulus();
      break;
    }
    case FieldKind::prime_ext: {
      std::uint64_t p = f_.modulus(), d = f_.ext_residue();
      s.a_ = (a_ * o.a_ % p + b_ * o.b_ % p * d) % p;
      s.b_ = (a_ * o.b_ % p + b_ * o.a_ % p) % p;
      break;
    }
    case FieldKind::rationals: {
      s.ra_ = ra_ * o.ra_;
      break;
    }
    case FieldKind::rationals_ext: {
      Rational d(f_.ext_integer());
      s.ra_ = ra_ * o.ra_ + rb_ * o.rb_ * d;
      s.rb_ = ra_ * o.rb_ + rb_ * o.ra_;
      break;
    }
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("inverse of zero in " + f_.name());
  Scalar s(f_);
  switch (f_.kind()) {
    case FieldKind::prime: {
      s.a_ = mod_inverse(a_, f_.modulus());
      break;
    }
    case FieldKind::prime_ext: {
      // (a + bt)^-1 = (a - bt) / (a^2 - d b^2); the norm is nonzero because d
      // is a nonresidue.
      std::uint64_t p = f_.modulus(), d = f_.ext_residue();
      std::uint64_t norm = (a_ * a_ % p + p * p - b_ * b_ % p * d % p) % p;
      std::uint64_t ninv = mod_inverse(norm, p);
      s.a_ = a_ * ninv % p;
      s.b_ = (p - b_) % p * ninv % p;
      break;
    }
    case FieldKind::rationals: {
      s.ra_ = 1 / ra_;
      break;
    }
    case FieldKind::rationals_ext: {
      Rational d(f_.ext_integer());
      Rational norm = ra_ * ra_ - d * rb_ * rb_;
      s.ra_ = ra_ / norm;
      s.rb_ = -rb_ / norm;
      break;
    }
  }
  return s;
}

Scalar Scalar::conj() const {
  Scalar s = *this;
  if (f_.kind() == FieldKind::prime_ext)
    s.b_ = (f_.modulus() - b_) % f_.modulus();
  else if (f_.kind() == FieldKind::rationals_ext)
    s.rb_ = -rb_;
  return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar r = one(f_), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

namespace {
std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Renders coefficient*t with coefficient already stringified.
std::string t_term(const std::string& c) {
  if (c == "1") return "t";
  if (c == "-1") return "-t";
  return c + "*t";
}
}  // namespace

std::string Scalar::str() const {
  std::string base, ext;
  bool has_ext;
  if (f_.positive_characteristic()) {
    base = std::to_string(a_);
    has_ext = b_ != 0;
    if (has_ext) ext = t_term(std::to_string(b_));
  } else {
    base = rational_str(ra_);
    has_ext = rb_ != 0;
    if (has_ext) ext = t_term(rational_str(rb_));
  }
  if (!has_ext) return base;
  if (base == "0") return ext;
  if (!ext.empty() && ext[0] == '-') return base + ext;
  return base + "+" + ext;
}

}  // namespace invol
