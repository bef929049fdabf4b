#pragma once

#include <memory>
#include <string>
#include <vector>

#include "invol/polynomial.hpp"

namespace invol {

class RingElement;
class RationalPoint;

// k[x0..x{n-1}] / (relation), where the grlex-leading monomial of the relation
// is a pure power of a single variable. That shape makes reduction by the one
// rewrite rule confluent with unique normal forms.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  static std::shared_ptr<const QuotientRing> make(const Field& f,
                                                  std::size_t nvars,
                                                  Polynomial relation);

  const Field& field() const { return f_; }
  std::size_t nvars() const { return nvars_; }
  const Polynomial& relation() const { return relation_; }
  std::size_t head_variable() const { return head_var_; }
  std::uint32_t head_exponent() const { return head_exp_; }

  Polynomial normal_form(Polynomial p) const;
  bool equal_mod_relation(const Polynomial& a, const Polynomial& b) const;

  RingElement element(Polynomial p) const;
  RingElement parse(std::string_view text) const;
  RingElement zero() const;
  RingElement one() const;
  RingElement from_int(std::int64_t v) const;
  RingElement from_scalar(const Scalar& c) const;
  RingElement var(std::size_t i) const;

  bool same_structure(const QuotientRing& o) const {
    return f_ == o.f_ && nvars_ == o.nvars_ && relation_ == o.relation_;
  }

 private:
  QuotientRing() = default;

  Field f_;
  std::size_t nvars_ = 0;
  Polynomial relation_;
  std::size_t head_var_ = 0;
  std::uint32_t head_exp_ = 0;
  Polynomial rewrite_tail_;  // x_{head}^{exp} rewrites to this
};

using RingPtr = std::shared_ptr<const QuotientRing>;

// A residue class, stored in normal form.
class RingElement {
 public:
  RingElement() = default;

  const RingPtr& ring() const { return ring_; }
  const Polynomial& poly() const { return nf_; }
  bool is_zero() const { return nf_.is_zero(); }
  bool is_one() const { return nf_.is_constant() && nf_.constant_term().is_one(); }
  bool is_constant() const { return nf_.is_constant(); }
  Scalar constant_value() const;  // MathError when not constant

  bool operator==(const RingElement& o) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }
  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
  RingElement scaled(const Scalar& c) const;
  // Inverse of a nonzero constant; MathError otherwise (non-constant units are
  // not searched for).
  RingElement inverse() const;

  Scalar evaluate(const RationalPoint& z) const;
  std::string str() const { return nf_.str(); }

 private:
  friend class QuotientRing;
  RingElement(RingPtr ring, Polynomial nf)
      : ring_(std::move(ring)), nf_(std::move(nf)) {}

  void require_same_ring(const RingElement& o) const;

  RingPtr ring_;
  Polynomial nf_;
};

// A k-point of Spec of the ring: coordinates that satisfy the relation.
class RationalPoint {
 public:
  static RationalPoint make(RingPtr ring, std::vector<Scalar> coords,
                            std::string label = "");

  const RingPtr& ring() const { return ring_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const std::string& label() const { return label_; }
  std::string str() const;

 private:
  RationalPoint() = default;
  RingPtr ring_;
  std::vector<Scalar> coords_;
  std::string label_;
};

// Ring automorphism of order 2: substitution images for the generators plus an
// optional coefficient conjugation (t -> -t on a quadratic extension).
class RingInvolution {
 public:
  struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
  };

  // Validates without constructing.
  static std::vector<CheckResult> validate(const RingPtr& ring,
                                           const std::vector<RingElement>& images,
                                           bool conjugate_coefficients);
  // Throws MathError when validation fails.
  static RingInvolution make(RingPtr ring, std::vector<RingElement> images,
                             bool conjugate_coefficients = false);

  const RingPtr& ring() const { return ring_; }
  const RingElement& image(std::size_t i) const { return images_[i]; }
  const std::vector<RingElement>& images() const { return images_; }
  bool conjugates_coefficients() const { return conj_; }

  RingElement apply(const RingElement& r) const;
  Scalar apply_scalar(const Scalar& c) const { return conj_ ? c.conj() : c; }

  // z is fixed when evaluating after the involution equals conjugating the
  // coordinate: lambda(x_i)(z) = conj(z_i) for all i.
  bool fixes_point(const RationalPoint& z) const;

 private:
  RingInvolution() = default;
  RingPtr ring_;
  std::vector<RingElement> images_;
  std::vector<Polynomial> image_polys_;
  bool conj_ = false;
};

bool is_fixed_point(const RationalPoint& z, const RingInvolution& inv);

// Coordinate ring of the n-sphere: (n+1) variables, relation 1 - sum x_i^2.
RingPtr unit_sphere_ring(const Field& f, std::size_t n);
// x0 -> x0, x_i -> -x_i for i >= 1; identity on coefficients. Its fixed points
// on the sphere are (+-1, 0, ..., 0).
RingInvolution axis_reflection(const RingPtr& ring);

}  // namespace invol
