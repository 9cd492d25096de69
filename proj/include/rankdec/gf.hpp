#ifndef RANKDEC_GF_HPP
#define RANKDEC_GF_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rankdec::gf {

class Field;

/// An element of GF(2^m), stored as an m-bit coefficient vector over GF(2).
/// Bit i is the coefficient of a^i, where a is the residue class of x modulo
/// the field's modulus polynomial. Equality is bitwise.
class Element {
 public:
  Element() = default;
  Element(const Field* f, std::uint64_t bits) : f_(f), bits_(bits) {}

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  Element operator+(Element o) const;
  Element operator-(Element o) const { return *this + o; }  // characteristic 2
  Element operator*(Element o) const;
  Element operator/(Element o) const;
  Element inverse() const;
  Element pow(long long k) const;

  bool operator==(Element o) const;
  bool operator!=(Element o) const { return !(*this == o); }

 private:
  const Field* f_ = nullptr;
  std::uint64_t bits_ = 0;
};

/// GF(2^m) for 1 <= m <= 63, defined by an explicit irreducible modulus
/// polynomial over GF(2) (bit i of `modulus` = coefficient of x^i; bits m
/// and 0 must be set). Irreducibility is verified at construction.
///
/// When m <= 20 and the residue class of x generates the multiplicative
/// group, a discrete-log table is built so elements can be printed in the
/// power notation "a^k". Fields are immutable and intended to be shared;
/// they are neither copyable nor movable since elements point back at them.
class Field {
 public:
  Field(int m, std::uint64_t modulus);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int degree() const { return m_; }
  std::uint64_t modulus() const { return mod_; }
  /// Size of the multiplicative group, 2^m - 1.
  std::uint64_t group_order() const { return (std::uint64_t(1) << m_) - 1; }
  bool has_log_table() const { return !log_.empty(); }

  Element zero() const { return {this, 0}; }
  Element one() const { return {this, 1}; }
  /// The residue class of x (for m = 1 this is 1, since x = x+1 + 1).
  Element gen() const { return {this, m_ == 1 ? 1ull : 2ull}; }
  Element from_bits(std::uint64_t b) const;
  Element from_power(unsigned long long k) const;  // gen()^k

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, long long k) const;
  /// Discrete log base gen(); requires has_log_table() and a != 0.
  std::uint64_t log(std::uint64_t a) const;

 private:
  int m_;
  std::uint64_t mod_;
  std::vector<std::uint32_t> log_;
};

bool same_field(const Field& a, const Field& b);

/// Accepts "0", "1", "a^k", "a" and hexadecimal "0x..." literals.
Element parse_element(const Field& f, std::string_view text);

/// Inverse of parse_element: "0", "1", power notation when the field has a
/// log table, hexadecimal otherwise.
std::string format_element(const Element& e);

std::string format_modulus(const Field& f);  // hexadecimal, m+1 bits

/// A Frobenius power sigma : x -> x^(2^s) on GF(2^m), together with its
/// order m/gcd(m,s) as an automorphism and the degree gcd(m,s) of its fixed
/// subfield GF(2^gcd(m,s)).
struct Automorphism {
  const Field* field;
  int s;
  int order;
  int fixed_degree;

  Automorphism(const Field& f, int s_exp);
  /// sigma^k(x) for any integer k (negative powers via reduction mod order).
  Element apply(Element x, long long k = 1) const;
};

}  // namespace rankdec::gf

#endif
