#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "golden.hpp"
#include "rankdec/skew.hpp"

using namespace rankdec;
using gf::Automorphism;
using gf::Element;
using gf::Field;
using skew::SkewPoly;
using skew::Twist;

TEST_CASE("product rule") {
  Field f(14, 0x40A9);
  Automorphism sigma(f, 1);
  Twist tw(sigma, 1);

  SkewPoly lin(tw, {f.one(), f.one()});  // z + 1
  SkewPoly sq = skew_mul(lin, lin);
  CHECK(sq == SkewPoly(tw, {f.one(), f.zero(), f.one()}));  // z^2 + 1

  golden::Fixture fx;
  SkewPoly span(Twist(Automorphism(*fx.field, 1), 1), fx.span_vec);
  CHECK(skew_mul(span, SkewPoly::one(span.twist())) == span);
  CHECK(skew_mul(SkewPoly::one(span.twist()), span) == span);

  CHECK_THROWS_AS(skew_mul(lin, SkewPoly(Twist(sigma, 2), {f.one()})),
                  std::invalid_argument);

  std::mt19937_64 rng(9);
  auto rand_poly = [&](int maxdeg) {
    std::vector<Element> c(1 + rng() % (maxdeg + 1));
    for (Element& e : c) e = f.from_bits(rng() & f.group_order());
    return SkewPoly(tw, std::move(c));
  };
  for (int it = 0; it < 40; ++it) {
    SkewPoly p = rand_poly(4), q = rand_poly(4), r = rand_poly(4);
    CHECK(skew_mul(skew_mul(p, q), r) == skew_mul(p, skew_mul(q, r)));
    CHECK(skew_mul(p, skew_add(q, r)) == skew_add(skew_mul(p, q), skew_mul(p, r)));
    CHECK(skew_mul(skew_add(p, q), r) == skew_add(skew_mul(p, r), skew_mul(q, r)));
  }
}

TEST_CASE("right division") {
  golden::Fixture fx;
  const Field& f = *fx.field;
  Automorphism sigma(f, 1);
  Twist tw(sigma, 1);
  SkewPoly span(tw, fx.span_vec);

  auto [q1, r1] = skew_right_divmod(span, span);
  CHECK(q1 == SkewPoly::one(tw));
  CHECK(r1.is_zero());

  for (const Element& v : fx.epsilon) {
    SkewPoly lin(tw, {v.inverse() * sigma.apply(v), f.one()});
    CHECK(skew::right_divides(lin, span));
  }
  SkewPoly bad(tw, {f.from_power(2), f.one()});
  CHECK_FALSE(skew::right_divides(bad, span));

  SkewPoly small(tw, {f.from_power(9)});
  auto [q2, r2] = skew_right_divmod(small, span);
  CHECK(q2.is_zero());
  CHECK(r2 == small);

  CHECK_THROWS_AS(skew_right_divmod(span, SkewPoly::zero(tw)), std::domain_error);

  // divmod identity f = q*g + r on random inputs
  std::mt19937_64 rng(13);
  for (int it = 0; it < 40; ++it) {
    std::vector<Element> fc(1 + rng() % 6), gc(1 + rng() % 4);
    for (Element& e : fc) e = f.from_bits(rng() & f.group_order());
    for (Element& e : gc) e = f.from_bits(rng() & f.group_order());
    SkewPoly ff(tw, fc), gg(tw, gc);
    if (gg.is_zero()) continue;
    auto [q, r] = skew_right_divmod(ff, gg);
    CHECK(r.degree() < gg.degree());
    CHECK(skew_add(skew_mul(q, gg), r) == ff);
  }
}

TEST_CASE("minimal skew polynomials match the worked example") {
  golden::Fixture fx;
  const Field& f = *fx.field;
  Automorphism sigma(f, 1);

  SkewPoly span = skew::minimal_skew_poly(fx.epsilon, Twist(sigma, 1));
  CHECK(span.coeffs() == fx.span_vec);

  SkewPoly loc = skew::minimal_skew_poly(fx.eta, Twist(sigma, -1));
  CHECK(loc.coeffs() == fx.locator_vec);

  Element one = f.one();
  SkewPoly trivial = skew::minimal_skew_poly(std::vector<Element>{one}, Twist(sigma, 1));
  CHECK(trivial == SkewPoly(Twist(sigma, 1), {f.one(), f.one()}));  // z - 1

  std::vector<Element> with_zero = {f.one(), f.zero()};
  CHECK_THROWS_AS(skew::minimal_skew_poly(with_zero, Twist(sigma, 1)),
                  std::domain_error);
}

TEST_CASE("operator evaluation and kernels") {
  golden::Fixture fx;
  const Field& f = *fx.field;
  Automorphism sigma(f, 1);
  Twist tw(sigma, 1);

  SkewPoly z(tw, {f.zero(), f.one()});
  CHECK(skew::operator_eval(z, f.from_power(7)) == f.from_power(14));
  CHECK(skew::operator_eval(SkewPoly::one(tw), f.from_power(9)) == f.from_power(9));

  SkewPoly span(tw, fx.span_vec);
  CHECK(skew::operator_eval(span, f.from_power(11)).is_zero());

  SUBCASE("kernel of the span polynomial is the designed value space") {
    auto kernel = skew::operator_kernel_basis(span);
    CHECK(kernel == fx.epsilon);
  }
  SUBCASE("kernel of the locator polynomial, negative twist") {
    SkewPoly loc(Twist(sigma, -1), fx.locator_vec);
    auto kernel = skew::operator_kernel_basis(loc);
    CHECK(kernel == fx.eta_alt);  // canonical echelon basis of span{eta}
  }
  SUBCASE("deficient kernels of stray registers") {
    SkewPoly stray(tw, golden::powers(f, {2502, 15390, 313, 0}));
    auto kernel = skew::operator_kernel_basis(stray);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0] == f.from_power(8977));

    SkewPoly stray2(Twist(sigma, -1), golden::powers(f, {4802, 10732, 773, 0}));
    auto kernel2 = skew::operator_kernel_basis(stray2);
    REQUIRE(kernel2.size() == 1);
    CHECK(kernel2[0] == f.from_power(15003));
  }
  SUBCASE("fixed field is the kernel of z - 1") {
    SkewPoly zm1(tw, {f.one(), f.one()});
    auto kernel = skew::operator_kernel_basis(zm1);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0] == f.one());
  }
}

TEST_CASE("minimal polynomial degree equals span dimension") {
  Field f(8, 0x11D);
  std::mt19937_64 rng(31);
  for (int t : {1, 3, 5, 7, -1, -3}) {
    Automorphism sigma(f, 1);
    Twist tw(sigma, t);
    for (int it = 0; it < 30; ++it) {
      int count = 1 + (int)(rng() % 5);
      std::vector<Element> vals;
      for (int i = 0; i < count; ++i) {
        std::uint64_t b = rng() & f.group_order();
        if (b == 0) b = 1;
        vals.push_back(f.from_bits(b));
      }
      int dim = linalg::gf2_rank_of_elements(vals);
      SkewPoly p = skew::minimal_skew_poly(vals, tw);
      CHECK(p.degree() == dim);
      CHECK(p.coeffs().back() == f.one());
      CHECK_FALSE(p.coeffs().front().is_zero());
      for (const Element& v : vals) CHECK(skew::operator_eval(p, v).is_zero());

      auto kernel = skew::operator_kernel_basis(p);
      CHECK((int)kernel.size() == dim);
      std::vector<Element> joint = kernel;
      joint.insert(joint.end(), vals.begin(), vals.end());
      CHECK(linalg::gf2_rank_of_elements(joint) == dim);  // same span
    }
  }
}
