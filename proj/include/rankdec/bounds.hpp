#ifndef RANKDEC_BOUNDS_HPP
#define RANKDEC_BOUNDS_HPP

#include <optional>
#include <vector>

namespace rankdec::bounds {

/// Defining-set pattern b + t1{0..delta-2} + t2{k_0..k_r}. The ks list is
/// strictly increasing; r = ks.size() - 1.
struct Pattern {
  long long b = 0;
  long long t1 = 1;
  long long t2 = 1;
  int delta = 2;
  std::vector<int> ks = {0};

  Pattern() = default;
  Pattern(long long b, long long t1, long long t2, int delta, std::vector<int> ks);

  int r() const { return (int)ks.size() - 1; }
  /// Nearest-neighbor radius floor((delta + r - 1)/2) implied by a
  /// delta + r designed distance.
  int tau() const { return (delta + r() - 1) / 2; }
  /// The generated exponent set reduced mod order, sorted.
  std::vector<int> generated_set(int order) const;
  bool ks_consecutive() const;  // ks == {0, 1, ..., r}
};

struct BoundCertificate {
  enum class Kind { kHartmannTzeng, kRoos };
  Kind kind;
  Pattern pattern;
  int value;  // delta + r
};

/// Hartmann-Tzeng certificate: requires ks = {0..r}, gcd(order, t1) = 1,
/// gcd(order, t2) < delta, generated set within T (mod order).
std::optional<BoundCertificate> ht_check(const Pattern& p, int order,
                                         const std::vector<int>& t_set);

/// Roos certificate: requires gcd(order, t1) = gcd(order, t2) = 1,
/// k_r - k_0 <= delta + r - 2, generated set within T (mod order).
std::optional<BoundCertificate> roos_check(const Pattern& p, int order,
                                           const std::vector<int>& t_set);

struct SearchLimits {
  int max_r = 1 << 20;  // restrict to r = 0 for the BCH-only search
};

/// Exhaustive search over b, t1, t2, delta for the best certificate of
/// either kind on T; deterministic tie-break (larger delta, then smaller
/// b, t1, t2, Hartmann-Tzeng before Roos). Requires order <= 64.
std::optional<BoundCertificate> best_bound_search(const std::vector<int>& t_set,
                                                  int order, SearchLimits limits = {});

/// b + t1*nu + t1{0..delta-2-nu} + t2{k_0..k_r}, reduced mod order.
std::vector<int> tnu_set(const Pattern& p, int nu, int order);

/// True iff nu <= delta - 2 and the nu-th truncated set contains a
/// Hartmann-Tzeng-like or Roos-like subset with delta' + r' > nu.
bool check_tnusubset(const Pattern& p, int nu, int order);

/// The three direct statements (BCH-like, Hartmann-Tzeng-like, Roos-like)
/// sufficient for decoding nu errors with these parameters.
bool check_tnu(const Pattern& p, int nu, int order);

/// The four statements characterizing whether nu = tau is reachable.
bool check_sigmat2dr(const Pattern& p, int order);

/// gcd(order, t2) = 1, ks = {0..r} and r <= delta - 2.
bool check_1rd(const Pattern& p, int order);

/// Largest nu for which decoding is guaranteed: tau when check_sigmat2dr
/// holds, otherwise the largest nu <= min(tau, delta-2) passing check_tnu or
/// check_tnusubset; 0 if none.
int decoding_capacity(const Pattern& p, int order);

/// Advisory (not guaranteed) radius floor(ell*(delta-1)/(ell+1)) for
/// ell-interleaved decoding.
int interleaved_advisory_radius(const Pattern& p, int ell);

}  // namespace rankdec::bounds

#endif
