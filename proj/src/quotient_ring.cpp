#include "invol/quotient_ring.hpp"

namespace invol {

std::shared_ptr<const QuotientRing> QuotientRing::make(const Field& f,
                                                       std::size_t nvars,
                                                       Polynomial relation) {
  if (relation.field() != f || relation.nvars() != nvars)
    throw MathError("relation does not live in the stated polynomial ring");
  if (relation.is_zero() || relation.is_constant())
    throw MathError("relation must be a nonconstant polynomial");
  const Monomial& lead = relation.leading_monomial();
  std::size_t head = nvars;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (lead[i] == 0) continue;
    if (head != nvars)
      throw MathError(
          "leading monomial of the relation must be a power of a single "
          "variable (got " +
          relation.str() + ")");
    head = i;
  }

  auto ring = std::shared_ptr<QuotientRing>(new QuotientRing());
  ring->f_ = f;
  ring->nvars_ = nvars;
  ring->relation_ = relation;
  ring->head_var_ = head;
  ring->head_exp_ = lead[head];
  // relation = lc * x_h^e + rest  =>  x_h^e = -rest / lc
  Polynomial rest = relation;
  Scalar lc = relation.leading_coefficient();
  Polynomial lead_term(f, nvars);
  lead_term.add_term(lead, lc);
  rest = rest - lead_term;
  ring->rewrite_tail_ = (-rest).scaled(lc.inverse());
  return ring;
}

Polynomial QuotientRing::normal_form(Polynomial p) const {
  for (;;) {
    // Largest term divisible by the head power; anything the rewrite
    // introduces is grlex-smaller, so this terminates.
    const Monomial* found = nullptr;
    Scalar coeff = Scalar::zero(f_);
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      if (it->first[head_var_] >= head_exp_) {
        found = &it->first;
        coeff = it->second;
        break;
      }
    }
    if (!found) return p;
    Monomial quot = *found;
    quot[head_var_] -= head_exp_;
    Polynomial old_term(f_, nvars_);
    old_term.add_term(*found, coeff);
    Polynomial q(f_, nvars_);
    q.add_term(quot, coeff);
    p = p - old_term + q * rewrite_tail_;
  }
}

bool QuotientRing::equal_mod_relation(const Polynomial& a,
                                      const Polynomial& b) const {
  return normal_form(a - b).is_zero();
}

RingElement QuotientRing::element(Polynomial p) const {
  if (p.field() != f_ || p.nvars() != nvars_)
    throw MathError("polynomial does not live in this ring");
  return RingElement(shared_from_this(), normal_form(std::move(p)));
}

RingElement QuotientRing::parse(std::string_view text) const {
  return element(Polynomial::parse(f_, nvars_, text));
}

RingElement QuotientRing::zero() const {
  return RingElement(shared_from_this(), Polynomial::zero(f_, nvars_));
}

RingElement QuotientRing::one() const { return from_int(1); }

RingElement QuotientRing::from_int(std::int64_t v) const {
  return from_scalar(Scalar::of_int(f_, v));
}

RingElement QuotientRing::from_scalar(const Scalar& c) const {
  if (c.field() != f_)
    throw MathError("scalar lies in " + c.field().name() + ", ring is over " +
                    f_.name());
  return RingElement(shared_from_this(),
                     Polynomial::constant(f_, nvars_, c));
}

RingElement QuotientRing::var(std::size_t i) const {
  return element(Polynomial::variable(f_, nvars_, i));
}

// ---- RingElement ----

Scalar RingElement::constant_value() const {
  if (!nf_.is_constant())
    throw MathError("element " + str() + " is not constant");
  return nf_.constant_term();
}

void RingElement::require_same_ring(const RingElement& o) const {
  if (!ring_ || !o.ring_)
    throw MathError("arithmetic on a default-constructed ring element");
  if (ring_ != o.ring_ && !ring_->same_structure(*o.ring_))
    throw MathError("ring elements belong to different rings");
}

bool RingElement::operator==(const RingElement& o) const {
  require_same_ring(o);
  return nf_ == o.nf_;
}

RingElement RingElement::operator+(const RingElement& o) const {
  require_same_ring(o);
  return RingElement(ring_, nf_ + o.nf_);  // normal monomials are closed under +
}

RingElement RingElement::operator-(const RingElement& o) const {
  require_same_ring(o);
  return RingElement(ring_, nf_ - o.nf_);
}

RingElement RingElement::operator*(const RingElement& o) const {
  require_same_ring(o);
  return RingElement(ring_, ring_->normal_form(nf_ * o.nf_));
}

RingElement RingElement::operator-() const { return RingElement(ring_, -nf_); }

RingElement RingElement::scaled(const Scalar& c) const {
  return RingElement(ring_, nf_.scaled(c));
}

RingElement RingElement::inverse() const {
  if (!nf_.is_constant())
    throw MathError("element " + str() +
                    " is not a constant; only constant units are inverted");
  return ring_->from_scalar(nf_.constant_term().inverse());
}

Scalar RingElement::evaluate(const RationalPoint& z) const {
  if (!ring_ || !z.ring())
    throw MathError("evaluation requires a ring-bound element and point");
  if (ring_ != z.ring() && !ring_->same_structure(*z.ring()))
    throw MathError("point belongs to a different ring");
  return nf_.evaluate(z.coords());
}

// ---- RationalPoint ----

RationalPoint RationalPoint::make(RingPtr ring, std::vector<Scalar> coords,
                                  std::string label) {
  if (!ring) throw MathError("point needs a ring");
  if (coords.size() != ring->nvars())
    throw MathError("point has " + std::to_string(coords.size()) +
                    " coordinates, ring has " + std::to_string(ring->nvars()) +
                    " variables");
  for (const auto& c : coords)
    if (c.field() != ring->field())
      throw MathError("point coordinate lies outside the coefficient field");
  Scalar v = ring->relation().evaluate(coords);
  RationalPoint z;
  z.ring_ = std::move(ring);
  z.coords_ = std::move(coords);
  z.label_ = std::move(label);
  if (!v.is_zero())
    throw MathError("point " + z.str() + " does not satisfy the relation " +
                    z.ring_->relation().str() + " = 0");
  return z;
}

std::string RationalPoint::str() const {
  std::string out = label_.empty() ? "" : label_ + "=";
  out += "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].str();
  }
  return out + ")";
}

// ---- RingInvolution ----

std::vector<RingInvolution::CheckResult> RingInvolution::validate(
    const RingPtr& ring, const std::vector<RingElement>& images,
    bool conjugate_coefficients) {
  std::vector<CheckResult> out;
  auto add = [&out](std::string name, bool pass, std::string detail = "") {
    out.push_back({std::move(name), pass, std::move(detail)});
  };

  bool arity_ok = images.size() == ring->nvars();
  add("one image per generator", arity_ok,
      arity_ok ? "" : std::to_string(images.size()) + " images for " +
                          std::to_string(ring->nvars()) + " generators");
  bool rings_ok = true;
  for (const auto& im : images)
    if (!im.ring() || (im.ring() != ring && !im.ring()->same_structure(*ring)))
      rings_ok = false;
  add("images lie in the ring", rings_ok);
  if (!arity_ok || !rings_ok) return out;

  bool conj_ok = !conjugate_coefficients || ring->field().has_extension();
  add("coefficient conjugation is available", conj_ok,
      conj_ok ? "" : "field " + ring->field().name() + " has no conjugation");
  if (!conj_ok) return out;

  RingInvolution cand;
  cand.ring_ = ring;
  cand.images_ = images;
  for (const auto& im : images) cand.image_polys_.push_back(im.poly());
  cand.conj_ = conjugate_coefficients;

  bool squares = true;
  std::string witness;
  for (std::size_t i = 0; i < images.size(); ++i) {
    RingElement twice = cand.apply(images[i]);
    if (twice != ring->var(i)) {
      squares = false;
      witness = "x" + std::to_string(i) + " maps to " + twice.str() +
                " under the square";
      break;
    }
  }
  add("squares to the identity on generators", squares, witness);

  Polynomial rel_image =
      conjugate_coefficients
          ? ring->relation().conj_coefficients().substitute(cand.image_polys_)
          : ring->relation().substitute(cand.image_polys_);
  bool preserves = ring->normal_form(rel_image).is_zero();
  add("preserves the defining relation", preserves,
      preserves ? "" : "relation maps to " +
                           ring->normal_form(rel_image).str());
  return out;
}

RingInvolution RingInvolution::make(RingPtr ring,
                                    std::vector<RingElement> images,
                                    bool conjugate_coefficients) {
  auto checks = validate(ring, images, conjugate_coefficients);
  for (const auto& c : checks)
    if (!c.pass)
      throw MathError("invalid ring involution: " + c.name +
                      (c.detail.empty() ? "" : " (" + c.detail + ")"));
  RingInvolution inv;
  inv.ring_ = std::move(ring);
  inv.images_ = std::move(images);
  for (const auto& im : inv.images_) inv.image_polys_.push_back(im.poly());
  inv.conj_ = conjugate_coefficients;
  return inv;
}

RingElement RingInvolution::apply(const RingElement& r) const {
  if (r.ring() != ring_ && !r.ring()->same_structure(*ring_))
    throw MathError("element belongs to a different ring");
  Polynomial p = conj_ ? r.poly().conj_coefficients() : r.poly();
  return ring_->element(p.substitute(image_polys_));
}

bool RingInvolution::fixes_point(const RationalPoint& z) const {
  if (z.ring() != ring_ && !z.ring()->same_structure(*ring_)) return false;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    Scalar lhs = images_[i].poly().evaluate(z.coords());
    Scalar rhs = apply_scalar(z.coords()[i]);
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_fixed_point(const RationalPoint& z, const RingInvolution& inv) {
  return inv.fixes_point(z);
}

// ---- standard constructions ----

RingPtr unit_sphere_ring(const Field& f, std::size_t n) {
  if (f.positive_characteristic() && f.characteristic() == 2)
    throw MathError("sphere ring needs characteristic different from 2");
  std::size_t nvars = n + 1;
  Polynomial rel = Polynomial::constant(f, nvars, Scalar::one(f));
  for (std::size_t i = 0; i < nvars; ++i) {
    Polynomial xi = Polynomial::variable(f, nvars, i);
    rel = rel - xi * xi;
  }
  return QuotientRing::make(f, nvars, rel);
}

RingInvolution axis_reflection(const RingPtr& ring) {
  std::vector<RingElement> images;
  images.push_back(ring->var(0));
  for (std::size_t i = 1; i < ring->nvars(); ++i)
    images.push_back(-ring->var(i));
  return RingInvolution::make(ring, std::move(images), false);
}

}  // namespace invol
