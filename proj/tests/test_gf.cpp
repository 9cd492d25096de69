#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "rankdec/gf.hpp"

using namespace rankdec;
using gf::Automorphism;
using gf::Element;
using gf::Field;

TEST_CASE("field construction validates the modulus") {
  CHECK_NOTHROW(Field(14, 0x40A9));  // x^14+x^7+x^5+x^3+1
  CHECK_NOTHROW(Field(8, 0x11D));
  CHECK_NOTHROW(Field(1, 0b11));
  CHECK_THROWS_AS(Field(14, 0x40A8), std::invalid_argument);  // bit 0 clear
  CHECK_THROWS_AS(Field(14, 0x5), std::invalid_argument);     // bit m clear
  CHECK_THROWS_AS(Field(4, 0b10101), std::invalid_argument);  // x^4+x^2+1 = (x^2+x+1)^2
  CHECK_THROWS_AS(Field(0, 0b1), std::invalid_argument);
  CHECK_THROWS_AS(Field(64, 0), std::invalid_argument);
}

TEST_CASE("basic arithmetic in GF(2^14)") {
  Field f(14, 0x40A9);
  Element a = f.gen();

  CHECK(f.from_power(3) * f.from_power(5) == f.from_power(8));
  CHECK(a.pow(3) * a.pow(5) == a.pow(8));

  // The multiplicative group has order 16383 = 3 * 43 * 127 and the residue
  // class of x generates it.
  CHECK(a.pow(16383 / 3) != f.one());
  CHECK(a.pow(16383 / 43) != f.one());
  CHECK(a.pow(16383 / 127) != f.one());
  CHECK(a.pow(16383) == f.one());
  CHECK(a * a.pow(16382) == f.one());
  CHECK(f.has_log_table());

  Element x = f.from_power(777);
  CHECK(x + x == f.zero());
  CHECK(x * x.inverse() == f.one());
  CHECK_THROWS_AS(f.zero().inverse(), std::domain_error);

  Field g(8, 0x11D);
  CHECK_THROWS_AS(a + g.gen(), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
  Field f(14, 0x40A9);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Element x = f.from_bits(rng() & f.group_order());
    Element y = f.from_bits(rng() & f.group_order());
    Element z = f.from_bits(rng() & f.group_order());
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == f.one());
  }
}

TEST_CASE("frobenius powers") {
  Field f(14, 0x40A9);
  Automorphism sigma(f, 1);
  CHECK(sigma.order == 14);
  CHECK(sigma.fixed_degree == 1);

  CHECK(sigma.apply(f.from_power(7)) == f.from_power(14));
  Element a2 = f.from_power(2);
  CHECK(sigma.apply(a2, -1) == f.gen());

  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    Element x = f.from_bits(rng() & f.group_order());
    Element y = f.from_bits(rng() & f.group_order());
    CHECK(sigma.apply(x, 14) == x);
    long long j = (long long)(rng() % 29) - 14, k = (long long)(rng() % 29) - 14;
    CHECK(sigma.apply(x, j + k) == sigma.apply(sigma.apply(x, k), j));
    CHECK(sigma.apply(x + y) == sigma.apply(x) + sigma.apply(y));
    CHECK(sigma.apply(x * y) == sigma.apply(x) * sigma.apply(y));
  }
}

TEST_CASE("fixed subfield size by full enumeration") {
  Field f(12, 0x1053);  // x^12+x^6+x^4+x+1
  Automorphism sigma(f, 2);
  CHECK(sigma.order == 6);
  CHECK(sigma.fixed_degree == 2);
  int fixed = 0;
  for (std::uint64_t b = 0; b < (1ull << 12); ++b) {
    Element x = f.from_bits(b);
    if (x.pow(1 << sigma.fixed_degree) == x) ++fixed;
  }
  CHECK(fixed == 4);
}

TEST_CASE("element text round trips") {
  Field f(14, 0x40A9);
  CHECK(gf::parse_element(f, "a^7") == f.from_bits(1u << 7));
  CHECK(gf::parse_element(f, "a^16383") == f.one());
  CHECK(gf::parse_element(f, "0") == f.zero());
  CHECK(gf::parse_element(f, "1") == f.one());
  CHECK(gf::parse_element(f, "0x2001") == f.from_bits(0x2001));
  CHECK(gf::format_element(f.from_power(123)) == "a^123");
  CHECK(gf::format_element(f.zero()) == "0");
  CHECK(gf::format_element(f.one()) == "1");
  CHECK(gf::format_modulus(f) == "0x40A9");
  CHECK_THROWS_AS(gf::parse_element(f, "a^x"), std::invalid_argument);
  CHECK_THROWS_AS(gf::parse_element(f, "0x40A9"), std::invalid_argument);  // 15 bits
  CHECK_THROWS_AS(gf::parse_element(f, "b^3"), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    Element x = f.from_bits(rng() & f.group_order());
    CHECK(gf::parse_element(f, gf::format_element(x)) == x);
  }
}

TEST_CASE("fields without a log table format as hexadecimal") {
  // x^4+x^3+x^2+x+1 is irreducible but its residue class has order 5.
  Field f(4, 0b11111);
  CHECK_FALSE(f.has_log_table());
  CHECK(f.gen().pow(5) == f.one());
  CHECK(gf::format_element(f.from_bits(0xA)) == "0xA");
  CHECK(gf::parse_element(f, "0xA") == f.from_bits(0xA));

  Field big(21, (1u << 21) | 0b101);  // x^21+x^2+1
  CHECK_FALSE(big.has_log_table());
  Element t = big.from_power(1234567);
  CHECK(gf::parse_element(big, gf::format_element(t)) == t);
}
