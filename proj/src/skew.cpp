#include "rankdec/skew.hpp"

#include <numeric>
#include <stdexcept>

#include "rankdec/linalg.hpp"

namespace rankdec::skew {

using linalg::Mat;

Twist::Twist(const Automorphism& a, int step) : aut(a), t(step) {
  int tr = std::abs(step) % a.order;
  order_gcd = tr == 0 ? a.order : std::gcd(a.order, tr);
}

Element Twist::apply(Element x, long long power) const {
  return aut.apply(x, (long long)t * power);
}

bool Twist::operator==(const Twist& o) const {
  return gf::same_field(*aut.field, *o.aut.field) && aut.s == o.aut.s && t == o.t;
}

namespace {
void require_same_twist(const SkewPoly& f, const SkewPoly& g) {
  if (!(f.twist() == g.twist()))
    throw std::invalid_argument("skew: twist mismatch");
}
}  // namespace

SkewPoly::SkewPoly(const Twist& tw, std::vector<Element> coeffs)
    : tw_(tw), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPoly SkewPoly::one(const Twist& tw) {
  return SkewPoly(tw, {tw.aut.field->one()});
}

Element SkewPoly::coeff(int i) const {
  if (i < 0 || i >= (int)c_.size()) return tw_.aut.field->zero();
  return c_[i];
}

bool SkewPoly::operator==(const SkewPoly& o) const {
  if (!(tw_ == o.tw_) || c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i].bits() != o.c_[i].bits()) return false;
  return true;
}

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g) {
  require_same_twist(f, g);
  std::vector<Element> c(std::max(f.coeffs().size(), g.coeffs().size()),
                         f.twist().aut.field->zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff((int)i) + g.coeff((int)i);
  return SkewPoly(f.twist(), std::move(c));
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
  require_same_twist(f, g);
  const Twist& tw = f.twist();
  if (f.is_zero() || g.is_zero()) return SkewPoly::zero(tw);
  std::vector<Element> c(std::size_t(f.degree() + g.degree() + 1),
                         tw.aut.field->zero());
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (int j = 0; j <= g.degree(); ++j) {
      // z^i * g_j = sigma^(t*i)(g_j) * z^i
      c[std::size_t(i) + j] = c[std::size_t(i) + j] + f.coeff(i) * tw.apply(g.coeff(j), i);
    }
  }
  return SkewPoly(tw, std::move(c));
}

std::pair<SkewPoly, SkewPoly> skew_right_divmod(const SkewPoly& f, const SkewPoly& g) {
  require_same_twist(f, g);
  if (g.is_zero()) throw std::domain_error("skew: division by zero polynomial");
  const Twist& tw = f.twist();
  std::vector<Element> rem = f.coeffs();
  int dg = g.degree();
  std::vector<Element> q(f.degree() >= dg ? std::size_t(f.degree() - dg + 1) : 0,
                         tw.aut.field->zero());
  int dr = (int)rem.size() - 1;
  while (dr >= dg) {
    if (rem[dr].is_zero()) {
      --dr;
      continue;
    }
    int k = dr - dg;
    // (q_k z^k) * g has leading term q_k sigma^(t*k)(g_dg) z^dr.
    Element qk = rem[dr] / tw.apply(g.coeff(dg), k);
    q[k] = q[k] + qk;
    for (int j = 0; j <= dg; ++j)
      rem[std::size_t(k) + j] = rem[std::size_t(k) + j] + qk * tw.apply(g.coeff(j), k);
    --dr;
  }
  return {SkewPoly(tw, std::move(q)), SkewPoly(tw, std::move(rem))};
}

bool right_divides(const SkewPoly& g, const SkewPoly& f) {
  return skew_right_divmod(f, g).second.is_zero();
}

Element operator_eval(const SkewPoly& f, Element gamma) {
  const Twist& tw = f.twist();
  Element acc = tw.aut.field->zero();
  for (int l = 0; l <= f.degree(); ++l) {
    if (f.coeff(l).is_zero()) continue;
    acc = acc + f.coeff(l) * tw.apply(gamma, l);
  }
  return acc;
}

SkewPoly minimal_skew_poly(std::span<const Element> values, const Twist& tw) {
  SkewPoly p = SkewPoly::one(tw);
  for (const Element& v : values) {
    if (v.is_zero()) throw std::domain_error("skew: zero value in minimal_skew_poly");
    Element u = operator_eval(p, v);
    if (u.is_zero()) continue;  // already annihilated
    // p <- (z - u^-1 sigma^t(u)) * p
    std::vector<Element> lin = {u.inverse() * tw.apply(u), tw.aut.field->one()};
    p = skew_mul(SkewPoly(tw, std::move(lin)), p);
  }
  return p;
}

std::vector<Element> extract_subfield_span_basis(std::span<const Element> gens, int d) {
  if (gens.empty()) return {};
  const gf::Field& f = gens[0].field();
  std::vector<Element> w = linalg::subfield_basis(f, d);
  std::vector<Element> selected;
  std::vector<Element> span_rows;  // GF(2)-span of {w_j * selected_i}
  for (const Element& g : gens) {
    std::vector<Element> probe = span_rows;
    probe.push_back(g);
    if (linalg::gf2_rank_of_elements(probe) == linalg::gf2_rank_of_elements(span_rows))
      continue;
    selected.push_back(g);
    for (const Element& wj : w) span_rows.push_back(wj * g);
  }
  return selected;
}

std::vector<Element> operator_kernel_basis(const SkewPoly& f) {
  if (f.is_zero()) throw std::domain_error("skew: kernel of the zero operator");
  const Twist& tw = f.twist();
  const gf::Field& field = *tw.aut.field;
  int m = field.degree();

  SkewPoly g = f;
  if (tw.t < 0) {
    // Left-compose with sigma^(-t*deg) so all powers become nonnegative,
    // then normalize monic; the kernel is unchanged.
    int nu = f.degree();
    std::vector<Element> c(std::size_t(nu) + 1, field.zero());
    for (int j = 0; j <= nu; ++j)
      c[j] = tw.aut.apply(f.coeff(nu - j), (long long)(-tw.t) * nu);
    SkewPoly composed(Twist(tw.aut, -tw.t), std::move(c));
    Element lead = composed.coeff(composed.degree());
    std::vector<Element> norm = composed.coeffs();
    Element inv = lead.inverse();
    for (Element& e : norm) e = e * inv;
    g = SkewPoly(composed.twist(), std::move(norm));
  }

  const gf::Field& g2 = linalg::gf2();
  Mat a(g2, m, m);
  for (int j = 0; j < m; ++j) {
    Element img = operator_eval(g, field.from_bits(std::uint64_t(1) << j));
    for (int r = 0; r < m; ++r)
      if ((img.bits() >> r) & 1) a.at(r, j) = g2.one();
  }
  Mat k = linalg::right_kernel_basis(a);
  std::vector<Element> gens;
  for (int i = 0; i < k.rows(); ++i) {
    std::uint64_t bits = 0;
    for (int j = 0; j < m; ++j)
      if (!k.at(i, j).is_zero()) bits |= std::uint64_t(1) << j;
    gens.push_back(field.from_bits(bits));
  }
  return extract_subfield_span_basis(gens, tw.aut.fixed_degree);
}

}  // namespace rankdec::skew
