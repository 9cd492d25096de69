#include "rankdec/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rankdec::bounds {

namespace {

int mod_order(long long v, int order) {
  long long r = v % order;
  if (r < 0) r += order;
  return (int)r;
}

int gcd_order(int order, long long t) {
  int tr = mod_order(t, order);
  return tr == 0 ? order : std::gcd(order, tr);
}

std::uint64_t set_mask(const std::vector<int>& s, int order) {
  std::uint64_t m = 0;
  for (int i : s) m |= std::uint64_t(1) << mod_order(i, order);
  return m;
}

std::uint64_t rot_mask(std::uint64_t m, int k, int order) {
  k = mod_order(k, order);
  std::uint64_t full = order == 64 ? ~0ull : ((std::uint64_t(1) << order) - 1);
  if (k == 0) return m & full;
  return ((m << k) | (m >> (order - k))) & full;
}

std::vector<int> mask_to_set(std::uint64_t m, int order) {
  std::vector<int> s;
  for (int i = 0; i < order; ++i)
    if ((m >> i) & 1) s.push_back(i);
  return s;
}

bool better(const BoundCertificate& a, const BoundCertificate& b) {
  // true if a should replace b
  if (a.value != b.value) return a.value > b.value;
  if (a.pattern.delta != b.pattern.delta) return a.pattern.delta > b.pattern.delta;
  if (a.pattern.b != b.pattern.b) return a.pattern.b < b.pattern.b;
  if (a.pattern.t1 != b.pattern.t1) return a.pattern.t1 < b.pattern.t1;
  if (a.pattern.t2 != b.pattern.t2) return a.pattern.t2 < b.pattern.t2;
  return a.kind == BoundCertificate::Kind::kHartmannTzeng &&
         b.kind == BoundCertificate::Kind::kRoos;
}

// Core enumeration shared by best_bound_search and the truncated-set subset
// test: scans b, t1, delta, t2 with bitmask membership tests. When
// stop_at_value is set, returns the first certificate reaching it.
std::optional<BoundCertificate> search_core(std::uint64_t t_mask, int order,
                                            const SearchLimits& limits,
                                            int stop_at_value) {
  std::optional<BoundCertificate> best;
  int t_size = std::popcount(t_mask);
  if (t_size == 0) return std::nullopt;
  auto worth_building = [&](int value) { return !best || value >= best->value; };
  auto consider = [&](BoundCertificate cert) {
    if (!best || better(cert, *best)) best = std::move(cert);
  };
  for (int delta = 2; delta <= t_size + 1; ++delta) {
    for (int b = 0; b < order; ++b) {
      for (int t1 = 1; t1 < order; ++t1) {
        if (std::gcd(order, t1) != 1) continue;
        std::uint64_t base = 0;
        for (int i = 0; i <= delta - 2; ++i)
          base |= std::uint64_t(1) << mod_order(b + (long long)t1 * i, order);
        for (int t2 = 0; t2 < order; ++t2) {
          // K = all residues k whose shifted run fits inside T.
          std::vector<int> kset;
          for (int k = 0; k < order; ++k) {
            std::uint64_t shifted = rot_mask(base, mod_order((long long)t2 * k, order), order);
            if ((shifted & ~t_mask) == 0) kset.push_back(k);
          }
          if (kset.empty()) continue;
          int g2 = gcd_order(order, t2);
          if (g2 < delta && kset[0] == 0) {
            int r = 0;
            while (r + 1 < (int)kset.size() && kset[r + 1] == r + 1 && r + 1 <= limits.max_r)
              ++r;
            if (worth_building(delta + r)) {
              std::vector<int> ks(r + 1);
              for (int i = 0; i <= r; ++i) ks[i] = i;
              consider({BoundCertificate::Kind::kHartmannTzeng,
                        Pattern(b, t1, t2, delta, ks), delta + r});
            }
          }
          if (g2 == 1) {
            // Window search over K extended by one wrap copy.
            std::vector<int> ext = kset;
            for (int k : kset) ext.push_back(k + order);
            for (int i = 0; i < (int)kset.size(); ++i) {
              for (int j = i; j < (int)ext.size() && ext[j] - ext[i] < order; ++j) {
                int count = j - i + 1;
                int r = count - 1;
                if (r > limits.max_r) break;
                if (ext[j] - ext[i] > delta + r - 2) continue;
                if (!worth_building(delta + r)) continue;
                std::vector<int> ks(ext.begin() + i, ext.begin() + j + 1);
                consider({BoundCertificate::Kind::kRoos,
                          Pattern(b, t1, t2, delta, ks), delta + r});
              }
            }
          }
          if (best && best->value >= stop_at_value) return best;
        }
      }
    }
  }
  return best;
}

}  // namespace

Pattern::Pattern(long long b_, long long t1_, long long t2_, int delta_,
                 std::vector<int> ks_)
    : b(b_), t1(t1_), t2(t2_), delta(delta_), ks(std::move(ks_)) {
  if (delta < 2) throw std::invalid_argument("bounds: delta must be >= 2");
  if (ks.empty()) throw std::invalid_argument("bounds: ks must be nonempty");
  for (std::size_t i = 1; i < ks.size(); ++i)
    if (ks[i] <= ks[i - 1])
      throw std::invalid_argument("bounds: ks must be strictly increasing");
}

std::vector<int> Pattern::generated_set(int order) const {
  std::uint64_t m = 0;
  for (int i = 0; i <= delta - 2; ++i)
    for (int k : ks)
      m |= std::uint64_t(1) << mod_order(b + t1 * i + t2 * k, order);
  return mask_to_set(m, order);
}

bool Pattern::ks_consecutive() const {
  for (int i = 0; i <= r(); ++i)
    if (ks[i] != i) return false;
  return true;
}

std::optional<BoundCertificate> ht_check(const Pattern& p, int order,
                                         const std::vector<int>& t_set) {
  if (!p.ks_consecutive()) return std::nullopt;
  if (gcd_order(order, p.t1) != 1) return std::nullopt;
  if (gcd_order(order, p.t2) >= p.delta) return std::nullopt;
  std::uint64_t t_mask = set_mask(t_set, order);
  if ((set_mask(p.generated_set(order), order) & ~t_mask) != 0) return std::nullopt;
  return BoundCertificate{BoundCertificate::Kind::kHartmannTzeng, p, p.delta + p.r()};
}

std::optional<BoundCertificate> roos_check(const Pattern& p, int order,
                                           const std::vector<int>& t_set) {
  if (gcd_order(order, p.t1) != 1 || gcd_order(order, p.t2) != 1) return std::nullopt;
  if (p.ks.back() - p.ks.front() > p.delta + p.r() - 2) return std::nullopt;
  std::uint64_t t_mask = set_mask(t_set, order);
  if ((set_mask(p.generated_set(order), order) & ~t_mask) != 0) return std::nullopt;
  return BoundCertificate{BoundCertificate::Kind::kRoos, p, p.delta + p.r()};
}

std::optional<BoundCertificate> best_bound_search(const std::vector<int>& t_set,
                                                  int order, SearchLimits limits) {
  if (order < 1 || order > 64) throw std::invalid_argument("bounds: order must be <= 64");
  return search_core(set_mask(t_set, order), order, limits,
                     std::numeric_limits<int>::max());
}

std::vector<int> tnu_set(const Pattern& p, int nu, int order) {
  if (nu < 0 || nu > p.delta - 2)
    throw std::invalid_argument("bounds: nu out of range for the truncated set");
  std::uint64_t m = 0;
  for (int i = 0; i <= p.delta - 2 - nu; ++i)
    for (int k : p.ks)
      m |= std::uint64_t(1) << mod_order(p.b + p.t1 * (nu + i) + p.t2 * k, order);
  return mask_to_set(m, order);
}

bool check_tnusubset(const Pattern& p, int nu, int order) {
  if (nu > p.delta - 2 || nu < 0) return false;
  if (nu == 0) return true;  // any nonempty set certifies delta' + r' >= 2 > 0
  std::uint64_t mask = set_mask(tnu_set(p, nu, order), order);
  auto cert = search_core(mask, order, SearchLimits{}, nu + 1);
  return cert && cert->value > nu;
}

bool check_tnu(const Pattern& p, int nu, int order) {
  if (nu < 0) return false;
  if (nu == 0) return true;
  if (nu <= (p.delta - 1) / 2) return true;  // BCH-like
  int tau = p.tau();
  if (nu <= tau && gcd_order(order, p.t2) < p.delta - nu && p.ks_consecutive())
    return true;  // Hartmann-Tzeng-like
  if (nu <= tau && gcd_order(order, p.t2) == 1 &&
      p.ks.back() - p.ks.front() <= p.delta + p.r() - nu - 2)
    return true;  // Roos-like
  return false;
}

bool check_sigmat2dr(const Pattern& p, int order) {
  if (p.r() == 0) return true;
  if (p.delta % 2 == 1 && p.r() == 1) return true;
  int tau = p.tau();
  if (gcd_order(order, p.t2) < p.delta - tau && p.ks_consecutive()) return true;
  if (gcd_order(order, p.t2) == 1 && p.ks.back() - p.ks.front() <= p.delta + p.r() - tau - 2)
    return true;
  return false;
}

bool check_1rd(const Pattern& p, int order) {
  return gcd_order(order, p.t2) == 1 && p.ks_consecutive() && p.r() <= p.delta - 2;
}

int decoding_capacity(const Pattern& p, int order) {
  if (gcd_order(order, p.t1) != 1)
    throw std::invalid_argument("bounds: capacity requires gcd(order, t1) = 1");
  int tau = p.tau();
  if (check_sigmat2dr(p, order)) return tau;
  int start = std::min(tau, p.delta - 2);
  for (int nu = start; nu >= 1; --nu)
    if (check_tnu(p, nu, order) || check_tnusubset(p, nu, order)) return nu;
  return 0;
}

int interleaved_advisory_radius(const Pattern& p, int ell) {
  if (ell < 1) throw std::invalid_argument("bounds: ell must be >= 1");
  return (int)(((long long)ell * (p.delta - 1)) / (ell + 1));
}

}  // namespace rankdec::bounds
