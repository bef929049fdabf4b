#include "invol/polynomial.hpp"

#include <cctype>

namespace invol {

Polynomial Polynomial::constant(const Field& f, std::size_t nvars, Scalar c) {
  Polynomial p(f, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(const Field& f, std::size_t nvars,
                                std::size_t i) {
  if (i >= nvars)
    throw MathError("variable index " + std::to_string(i) + " out of range");
  Polynomial p(f, nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Scalar::one(f));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Scalar Polynomial::constant_term() const {
  auto it = terms_.find(Monomial(nvars_, 0));
  return it == terms_.end() ? Scalar::zero(f_) : it->second;
}

std::uint64_t Polynomial::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw MathError("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw MathError("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (m.size() != nvars_)
    throw MathError("monomial arity mismatch: " + std::to_string(m.size()) +
                    " vs " + std::to_string(nvars_));
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Polynomial::operator==(const Polynomial& o) const {
  return f_ == o.f_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (f_ != o.f_ || nvars_ != o.nvars_)
    throw MathError("polynomial arithmetic across different rings");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(f_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(f_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) {
    Scalar v = k * c;
    if (!v.is_zero()) r.terms_.emplace(m, v);
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (f_ != o.f_ || nvars_ != o.nvars_)
    throw MathError("polynomial arithmetic across different rings");
  Polynomial r(f_, nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::conj_coefficients() const {
  Polynomial r(f_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
  return r;
}

namespace {
Polynomial poly_pow(const Polynomial& base, std::uint64_t e) {
  Polynomial r =
      Polynomial::constant(base.field(), base.nvars(), Scalar::one(base.field()));
  Polynomial b = base;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}
}  // namespace

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_)
    throw MathError("substitution needs one image per variable");
  for (const auto& im : images)
    if (im.field() != f_ || im.nvars() != nvars_)
      throw MathError("substitution images live in a different ring");
  Polynomial r(f_, nvars_);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(f_, nvars_, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i]) term = term * poly_pow(images[i], m[i]);
    r = r + term;
  }
  return r;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_)
    throw MathError("evaluation point has wrong arity");
  for (const auto& v : point)
    if (v.field() != f_)
      throw MathError("evaluation point lies in a different field");
  Scalar acc = Scalar::zero(f_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i]) t *= point[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

// ---- parsing ----

namespace {

enum class Tok { Int, Var, T, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) { advance(); }

  Tok tok = Tok::End;
  BigInt int_val;
  std::size_t var_idx = 0;
  std::size_t pos = 0;  // offset of the current token

  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    pos = i_;
    if (i_ >= s_.size()) {
      tok = Tok::End;
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
        ++j;
      int_val = BigInt(std::string(s_.substr(i_, j - i_)));
      i_ = j;
      tok = Tok::Int;
      return;
    }
    if (c == 'x' && i_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
      std::size_t j = i_ + 1;
      std::uint64_t idx = 0;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
        idx = idx * 10 + static_cast<std::uint64_t>(s_[j] - '0');
        if (idx > 1'000'000) throw ParseError("variable index too large", pos);
        ++j;
      }
      var_idx = static_cast<std::size_t>(idx);
      i_ = j;
      tok = Tok::Var;
      return;
    }
    ++i_;
    switch (c) {
      case 't': tok = Tok::T; return;
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '^': tok = Tok::Caret; return;
      case '/': tok = Tok::Slash; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(const Field& f, std::size_t nvars, std::string_view text)
      : f_(f), nvars_(nvars), lex_(text) {}

  Polynomial run() {
    Polynomial p = parse_sum();
    if (lex_.tok != Tok::End)
      throw ParseError("trailing input after polynomial", lex_.pos);
    return p;
  }

 private:
  Polynomial parse_sum() {
    bool neg = false;
    if (lex_.tok == Tok::Plus || lex_.tok == Tok::Minus) {
      neg = lex_.tok == Tok::Minus;
      lex_.advance();
    }
    Polynomial acc = parse_product();
    if (neg) acc = -acc;
    while (lex_.tok == Tok::Plus || lex_.tok == Tok::Minus) {
      bool sub = lex_.tok == Tok::Minus;
      lex_.advance();
      Polynomial t = parse_product();
      acc = sub ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial parse_product() {
    Polynomial acc = parse_factor();
    for (;;) {
      if (lex_.tok == Tok::Star) {
        lex_.advance();
        acc = acc * parse_factor();
      } else if (lex_.tok == Tok::Int || lex_.tok == Tok::Var ||
                 lex_.tok == Tok::T || lex_.tok == Tok::LParen) {
        acc = acc * parse_factor();  // implicit multiplication
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_factor() {
    switch (lex_.tok) {
      case Tok::Int: {
        BigInt num = lex_.int_val;
        lex_.advance();
        BigInt den = 1;
        if (lex_.tok == Tok::Slash) {
          lex_.advance();
          if (lex_.tok != Tok::Int)
            throw ParseError("expected an integer denominator", lex_.pos);
          den = lex_.int_val;
          if (den == 0) throw ParseError("zero denominator", lex_.pos);
          lex_.advance();
        }
        return Polynomial::constant(
            f_, nvars_, Scalar::of_rational(f_, Rational(num, den)));
      }
      case Tok::Var: {
        std::size_t idx = lex_.var_idx;
        std::size_t at = lex_.pos;
        if (idx >= nvars_)
          throw ParseError("variable x" + std::to_string(idx) +
                               " out of range (ring has " +
                               std::to_string(nvars_) + " variables)",
                           at);
        lex_.advance();
        return poly_pow(Polynomial::variable(f_, nvars_, idx), parse_power());
      }
      case Tok::T: {
        std::size_t at = lex_.pos;
        if (!f_.has_extension())
          throw ParseError("field " + f_.name() + " has no element t", at);
        lex_.advance();
        return poly_pow(
            Polynomial::constant(f_, nvars_, Scalar::ext_generator(f_)),
            parse_power());
      }
      case Tok::LParen: {
        lex_.advance();
        Polynomial inner = parse_sum();
        if (lex_.tok != Tok::RParen)
          throw ParseError("expected ')'", lex_.pos);
        lex_.advance();
        return poly_pow(inner, parse_power());
      }
      default:
        throw ParseError("expected a coefficient, variable, or '('", lex_.pos);
    }
  }

  std::uint64_t parse_power() {
    if (lex_.tok != Tok::Caret) return 1;
    lex_.advance();
    if (lex_.tok != Tok::Int)
      throw ParseError("expected an integer exponent", lex_.pos);
    if (lex_.int_val > 4096)
      throw ParseError("exponent too large", lex_.pos);
    auto e = lex_.int_val.convert_to<std::uint64_t>();
    lex_.advance();
    return e;
  }

  Field f_;
  std::size_t nvars_;
  Lexer lex_;
};

}  // namespace

Polynomial Polynomial::parse(const Field& f, std::size_t nvars,
                             std::string_view text) {
  return Parser(f, nvars, text).run();
}

// ---- printing ----

namespace {
std::string monomial_str(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}
}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string mono = monomial_str(it->first);
    std::string cs = it->second.str();
    char sign = '+';
    std::string mag;
    if (mono.empty()) {
      if (cs[0] == '-') {
        sign = '-';
        mag = cs.substr(1);
      } else {
        mag = cs;
      }
    } else if (it->second.is_one()) {
      mag = mono;
    } else if ((-it->second).is_one()) {
      sign = '-';
      mag = mono;
    } else if (cs.find_first_of("+-", 1) != std::string::npos) {
      // Mixed a+b*t coefficient: parenthesize so the product reparses.
      mag = "(" + cs + ")*" + mono;
    } else if (cs[0] == '-') {
      sign = '-';
      mag = cs.substr(1) + "*" + mono;
    } else {
      mag = cs + "*" + mono;
    }
    if (out.empty())
      out = (sign == '-' ? "-" : "") + mag;
    else
      out += std::string(" ") + sign + " " + mag;
  }
  return out;
}

}  // namespace invol
