#include "rankdec/gf.hpp"

#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace rankdec::gf {

namespace {

// Polynomial arithmetic over GF(2) on raw bit vectors, used only for the
// irreducibility check of a candidate modulus.

int pdeg(std::uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

std::uint64_t pmod(unsigned __int128 a, std::uint64_t f) {
  int df = pdeg(f);
  for (int i = 126; i >= df; --i) {
    if ((a >> i) & 1) a ^= (unsigned __int128)f << (i - df);
  }
  return (std::uint64_t)a;
}

std::uint64_t pmulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  unsigned __int128 r = 0;
  while (b) {
    int i = std::countr_zero(b);
    r ^= (unsigned __int128)a << i;
    b &= b - 1;
  }
  return pmod(r, f);
}

std::uint64_t pgcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = pmod(a, b);
    std::swap(a, b);
  }
  return a;
}

bool modulus_irreducible(std::uint64_t f, int m) {
  if (m == 1) return true;  // x+1 is the only admissible shape here
  // f is irreducible of degree m iff x^(2^m) = x (mod f) and
  // gcd(x^(2^(m/p)) - x, f) = 1 for every prime p dividing m.
  std::vector<int> primes;
  int q = m;
  for (int p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      primes.push_back(p);
      while (q % p == 0) q /= p;
    }
  }
  if (q > 1) primes.push_back(q);

  std::uint64_t t = 2;  // x mod f
  for (int i = 1; i <= m; ++i) {
    t = pmulmod(t, t, f);  // t = x^(2^i) mod f
    for (int p : primes) {
      if (i == m / p && pgcd(t ^ 2ull, f) != 1) return false;
    }
  }
  return t == 2;  // x^(2^m) = x mod f
}

[[noreturn]] void bad_element(const std::string& what) {
  throw std::invalid_argument("gf: " + what);
}

const Field& require_same(const Element& a, const Element& b) {
  if (a.field_ptr() == nullptr || b.field_ptr() == nullptr)
    bad_element("operation on a null element");
  if (!same_field(a.field(), b.field())) bad_element("field mismatch");
  return a.field();
}

}  // namespace

Field::Field(int m, std::uint64_t modulus) : m_(m), mod_(modulus) {
  if (m < 1 || m > 63) throw std::invalid_argument("gf: m must be in [1, 63]");
  if (modulus >> (m + 1)) throw std::invalid_argument("gf: modulus exceeds degree m");
  if (!((modulus >> m) & 1) || !(modulus & 1))
    throw std::invalid_argument("gf: modulus must have bits m and 0 set");
  if (!modulus_irreducible(modulus, m))
    throw std::invalid_argument("gf: modulus is reducible over GF(2)");

  if (m_ <= 20) {
    // Build the discrete-log table; the walk also decides whether the
    // residue class of x is primitive. If it is not, power notation is
    // unavailable and the table is dropped.
    std::uint64_t n = group_order();
    log_.assign(std::size_t(1) << m_, 0);
    std::uint64_t acc = 1, g = gen().bits();
    bool primitive = true;
    for (std::uint64_t k = 0; k < n; ++k) {
      if (acc == 1 && k > 0) {
        primitive = false;
        break;
      }
      log_[acc] = (std::uint32_t)k;
      acc = mul(acc, g);
    }
    if (!primitive || acc != 1) log_.clear();
  }
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    bool carry = (a >> (m_ - 1)) & 1;
    a <<= 1;
    if (carry) a ^= mod_;  // clears bit m, keeps a below 2^m
  }
  return r;
}

std::uint64_t Field::pow(std::uint64_t a, long long k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw std::domain_error("gf: negative power of zero");
    return 0;
  }
  long long n = (long long)group_order();
  long long e = k % n;
  if (e < 0) e += n;
  std::uint64_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("gf: inversion of zero");
  return pow(a, (long long)group_order() - 1);
}

std::uint64_t Field::log(std::uint64_t a) const {
  if (log_.empty()) throw std::logic_error("gf: no log table for this field");
  if (a == 0) throw std::domain_error("gf: log of zero");
  return log_[a];
}

Element Field::from_bits(std::uint64_t b) const {
  if (m_ < 64 && (b >> m_)) bad_element("bit vector exceeds m bits");
  return {this, b};
}

Element Field::from_power(unsigned long long k) const {
  return {this, pow(gen().bits(), (long long)(k % group_order()))};
}

bool same_field(const Field& a, const Field& b) {
  return a.degree() == b.degree() && a.modulus() == b.modulus();
}

Element Element::operator+(Element o) const {
  const Field& f = require_same(*this, o);
  return {&field(), f.add(bits_, o.bits_)};
}

Element Element::operator*(Element o) const {
  const Field& f = require_same(*this, o);
  return {&field(), f.mul(bits_, o.bits_)};
}

Element Element::operator/(Element o) const { return *this * o.inverse(); }

Element Element::inverse() const {
  if (!f_) bad_element("operation on a null element");
  return {f_, f_->inv(bits_)};
}

Element Element::pow(long long k) const {
  if (!f_) bad_element("operation on a null element");
  return {f_, f_->pow(bits_, k)};
}

bool Element::operator==(Element o) const {
  require_same(*this, o);
  return bits_ == o.bits_;
}

Element parse_element(const Field& f, std::string_view text) {
  if (text == "0") return f.zero();
  if (text == "1") return f.one();
  if (text == "a") return f.gen();
  if (text.size() > 2 && text.substr(0, 2) == "a^") {
    unsigned long long k = 0;
    auto body = text.substr(2);
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
    if (ec != std::errc() || p != body.data() + body.size())
      bad_element("malformed power literal '" + std::string(text) + "'");
    return f.from_power(k);
  }
  if (text.size() > 2 && (text.substr(0, 2) == "0x" || text.substr(0, 2) == "0X")) {
    unsigned long long b = 0;
    auto body = text.substr(2);
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), b, 16);
    if (ec != std::errc() || p != body.data() + body.size())
      bad_element("malformed hexadecimal literal '" + std::string(text) + "'");
    if (f.degree() < 64 && (b >> f.degree()))
      bad_element("hexadecimal literal exceeds m bits");
    return f.from_bits(b);
  }
  bad_element("unrecognized element literal '" + std::string(text) + "'");
}

namespace {
std::string hex_string(std::uint64_t v) {
  static const char* digits = "0123456789ABCDEF";
  std::string s;
  do {
    s.insert(s.begin(), digits[v & 0xF]);
    v >>= 4;
  } while (v);
  return "0x" + s;
}
}  // namespace

std::string format_element(const Element& e) {
  if (e.is_zero()) return "0";
  if (e.is_one()) return "1";
  const Field& f = e.field();
  if (f.has_log_table()) return "a^" + std::to_string(f.log(e.bits()));
  return hex_string(e.bits());
}

std::string format_modulus(const Field& f) { return hex_string(f.modulus()); }

Automorphism::Automorphism(const Field& f, int s_exp) : field(&f), s(s_exp) {
  if (s < 1) throw std::invalid_argument("gf: Frobenius exponent must be >= 1");
  int m = f.degree();
  int g = std::gcd(m, s);
  order = m / g;
  fixed_degree = g;
}

Element Automorphism::apply(Element x, long long k) const {
  if (x.field_ptr() == nullptr || !same_field(*field, x.field()))
    throw std::invalid_argument("gf: automorphism applied to foreign element");
  int m = field->degree();
  long long kr = k % order;
  if (kr < 0) kr += order;
  int e = (int)(((long long)s * kr) % m);
  std::uint64_t b = x.bits();
  for (int i = 0; i < e; ++i) b = field->mul(b, b);
  return {field, b};
}

}  // namespace rankdec::gf
