#ifndef RANKDEC_DECODER_HPP
#define RANKDEC_DECODER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankdec/bounds.hpp"
#include "rankdec/code.hpp"
#include "rankdec/skew.hpp"

namespace rankdec::decoder {

using gf::Element;

/// A code together with the defining-set pattern used for decoding. The
/// pattern's generated set must sit inside the code's defining set and t1
/// must be coprime with the automorphism order; both are checked. The
/// n x (delta-1)(r+1) syndrome-column matrix is precomputed.
class DecodeParams {
 public:
  DecodeParams(code::CodeSpec spec, bounds::Pattern pattern);

  const code::CodeSpec& spec() const { return spec_; }
  const bounds::Pattern& pattern() const { return pattern_; }
  const linalg::Mat& syndrome_columns() const { return columns_; }

 private:
  code::CodeSpec spec_;
  bounds::Pattern pattern_;
  linalg::Mat columns_;
};

/// (r+1) x (delta-1) grid of syndromes; entry (j, i) is the syndrome at
/// exponent b + t1*i + t2*k_j of the decoded word.
struct SyndromeTable {
  int rows;  // r + 1
  int cols;  // delta - 1
  std::vector<Element> s;
  Element at(int j, int i) const { return s[std::size_t(j) * cols + i]; }
  bool all_zero() const;
  std::vector<Element> row(int j) const;
};

SyndromeTable syndrome_table(const DecodeParams& params, std::span<const Element> y);

/// Shift of the syndrome table with sigma^-(b + t1 i + t2 k_j) applied
/// entrywise.
SyndromeTable twisted_table(const DecodeParams& params, const SyndromeTable& st);

/// Smallest-length skew-feedback shift register, over the given twist, that
/// generates every sequence: a vector v with v_0 != 0 satisfying
/// sum_i v_i theta^i(s_{n-i}) = 0 for all len <= n < N. The representative
/// is canonical (rref of the solution space, normalized on the trailing
/// coefficient when nonzero, otherwise on v_0); when the solution space is
/// completely unconstrained the minimal skew polynomial of a canonical
/// independent flag is returned, so downstream failure detection stays
/// meaningful. Uniqueness beyond scaling is not promised.
struct SfsrResult {
  std::vector<Element> v;
  int length;
};
SfsrResult sfsr_synthesize(const std::vector<std::vector<Element>>& sequences,
                           const skew::Twist& twist);

/// Structured O(nu^2) solver for b_i = sum_k a_k theta^(bbar + t1*i)(X_k),
/// i = 0..nu-1, where theta^x means aut^(sign folded into t1/bbar). The
/// intermediate elimination tables are returned for inspection.
struct GabidulinSolution {
  std::vector<Element> x;
  linalg::Mat a_table;  // row j-1 holds A_k^(j), columns k-1 >= j-1
  linalg::Mat b_table;  // row j-1 holds B_i^(j), columns i <= nu-j
};
GabidulinSolution gabidulin_solve(std::span<const Element> a,
                                  std::span<const Element> b,
                                  const skew::Twist& theta_t1, long long bbar);

enum class FailureKind {
  kKernelDeficient,
  kLocatorSystemInconsistent,
  kLocatorOutsideSpan,
  kResultNotInCode,
};

std::string failure_kind_name(FailureKind k);

struct Failure {
  FailureKind kind;
  int observed_length = 0;  // synthesized register length
  int kernel_dim = -1;      // dimension found (KernelDeficient)
  int block = 0;            // offending block (interleaved)
};

struct DecodeOutcome {
  std::optional<Failure> failure;
  std::vector<Element> codeword;
  std::vector<Element> error;
  int nu = 0;
  std::vector<Element> epsilon;
  std::vector<std::vector<Element>> eta_blocks;
  std::optional<linalg::Mat> b_matrix;
  std::vector<Element> sfsr;  // synthesized register (diagnostic)

  bool success() const { return !failure.has_value(); }
};

/// Decoding through the error span polynomial: synthesize over the plain
/// syndrome grid with twist sigma^t1, read the error values off the
/// operator kernel, recover the locators with the structured solver and
/// verify the full grid.
DecodeOutcome decode_span(const DecodeParams& params, std::span<const Element> y);

/// Dual path through the error locator polynomial (twist sigma^-t1 over the
/// shifted grid).
DecodeOutcome decode_locator(const DecodeParams& params, std::span<const Element> y);

/// Joint decoding of ell interleaved blocks sharing one register.
/// Requires gcd(ell, t1) = 1 and y of length ell * n.
DecodeOutcome decode_interleaved(const DecodeParams& params,
                                 std::span<const Element> y, int ell);

/// Rank of the uniqueness matrix built from error locators (from_eta) or
/// error values at truncation nu; rank == nu certifies a unique shortest
/// register.
int key_equation_rank_check(std::span<const Element> vec, const DecodeParams& params,
                            int nu, bool from_eta);

}  // namespace rankdec::decoder

#endif
