#ifndef RANKDEC_CODE_HPP
#define RANKDEC_CODE_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "rankdec/gf.hpp"
#include "rankdec/linalg.hpp"

namespace rankdec::code {

using gf::Automorphism;
using gf::Element;
using gf::Field;

/// The code cut out by a Frobenius power sigma, an evaluation vector h with
/// independent entries over the fixed subfield, and a set T of exponents:
/// all v with v . sigma^i(h)^T = 0 for every i in T. T is stored reduced
/// modulo the automorphism order, sorted.
class CodeSpec {
 public:
  CodeSpec(std::shared_ptr<const Field> field, int sigma_power,
           std::vector<Element> h, const std::vector<int>& t_set);

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  const Automorphism& aut() const { return aut_; }
  const std::vector<Element>& h() const { return h_; }
  const std::vector<int>& t_set() const { return t_; }
  int length() const { return (int)h_.size(); }
  int dimension() const { return generator_.rows(); }
  const linalg::Mat& parity() const { return parity_; }
  const linalg::Mat& generator() const { return generator_; }

 private:
  std::shared_ptr<const Field> field_;
  Automorphism aut_;
  std::vector<Element> h_;
  std::vector<int> t_;
  linalg::Mat parity_;
  linalg::Mat generator_;
};

/// n x |T| matrix with column j = sigma^(i_j)(h)^T, i_j ascending over T.
linalg::Mat build_parity(const Automorphism& aut, std::span<const Element> h,
                         const std::vector<int>& t_set);

std::vector<Element> encode(const CodeSpec& c, std::span<const Element> msg);
bool is_codeword(const CodeSpec& c, std::span<const Element> v);

/// v . sigma^d(h)^T; d is any integer (reduced mod the automorphism order).
Element syndrome(const CodeSpec& c, std::span<const Element> v, long long d);

/// All i in [0, order) with x . sigma^i(h)^T = 0 for every codeword x;
/// always contains T.
std::vector<int> defining_set(const CodeSpec& c);

/// Dimension of the fixed-subfield span of the entries.
int rank_weight(const Automorphism& aut, std::span<const Element> v);
int hamming_weight(std::span<const Element> v);

enum class Metric { kRank, kHamming };

struct RandomError {
  std::vector<Element> e;        // epsilon * b
  std::vector<Element> epsilon;  // nu independent entries over the fixed field
  linalg::Mat b;                 // nu x n, full rank, entries in the fixed field
};

/// Seed-deterministic random error of exact rank weight nu.
RandomError random_error(const Automorphism& aut, int n, int nu, std::uint64_t seed);

/// Canonical basis (rows) of the subfield subcode C intersect K^n for
/// K = GF(2^sub_degree); row count = K-dimension.
linalg::Mat subfield_subcode(const CodeSpec& c, int sub_degree);

constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

struct WeightProfile {
  int min_w = kInfiniteDistance;
  int max_w = 0;
  std::uint64_t count = 0;  // nonzero words enumerated
};

/// Enumerates all nonzero GF(2^coeff_degree)-combinations of the basis rows
/// and records min/max weight. Throws if the enumeration would exceed 2^20
/// words.
WeightProfile weight_profile(const linalg::Mat& basis_rows, int coeff_degree,
                             const Automorphism& aut, Metric metric);

/// Exact minimum nonzero weight of the code by full enumeration
/// (kInfiniteDistance for the zero-dimensional code).
int min_distance_oracle(const CodeSpec& c, Metric metric);

}  // namespace rankdec::code

#endif
