#ifndef RANKDEC_SKEW_HPP
#define RANKDEC_SKEW_HPP

#include <span>
#include <utility>
#include <vector>

#include "rankdec/gf.hpp"

namespace rankdec::skew {

using gf::Automorphism;
using gf::Element;

/// The twisted polynomial ring F[z; sigma^t]: multiplication obeys
/// z * a = sigma^t(a) * z. The step t may be negative.
struct Twist {
  Automorphism aut;
  int t;
  int order_gcd;  // gcd(|sigma|, t); the decoders require 1

  Twist(const Automorphism& a, int step);
  /// sigma^(t*power)(x)
  Element apply(Element x, long long power = 1) const;
  bool operator==(const Twist& o) const;
};

/// Skew polynomial with coefficients ascending in degree, no trailing zeros;
/// the zero polynomial has an empty coefficient list.
class SkewPoly {
 public:
  SkewPoly(const Twist& tw, std::vector<Element> coeffs);
  static SkewPoly zero(const Twist& tw) { return SkewPoly(tw, {}); }
  static SkewPoly one(const Twist& tw);

  const Twist& twist() const { return tw_; }
  const std::vector<Element>& coeffs() const { return c_; }
  int degree() const { return (int)c_.size() - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Element coeff(int i) const;

  bool operator==(const SkewPoly& o) const;

 private:
  Twist tw_;
  std::vector<Element> c_;
};

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

/// f = q*g + rem with deg(rem) < deg(g); g right-divides f iff rem = 0.
std::pair<SkewPoly, SkewPoly> skew_right_divmod(const SkewPoly& f, const SkewPoly& g);

bool right_divides(const SkewPoly& g, const SkewPoly& f);

/// The monic skew polynomial of least degree annihilating every value under
/// the semilinear evaluation below; equals lclm{z - v^-1 sigma^t(v)} over
/// the nonzero inputs, built iteratively. Degree = dimension of the span of
/// the values over the fixed field (for gcd(|sigma|, t) = 1).
SkewPoly minimal_skew_poly(std::span<const Element> values, const Twist& tw);

/// sum_l f_l sigma^(t*l)(gamma)
Element operator_eval(const SkewPoly& f, Element gamma);

/// Canonical fixed-field basis of {gamma : operator_eval(f, gamma) = 0}.
/// For a negative twist step the operator is first left-composed with
/// sigma^(-t*deg f) and renormalized monic, which keeps the kernel while
/// making all powers nonnegative.
std::vector<Element> operator_kernel_basis(const SkewPoly& f);

/// Greedy canonical extraction of a GF(2^d)-basis from GF(2)-spanning
/// elements (d = fixed subfield degree); used by the kernel computation and
/// exposed for the code layer.
std::vector<Element> extract_subfield_span_basis(std::span<const Element> gens, int d);

}  // namespace rankdec::skew

#endif
