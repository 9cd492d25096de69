#ifndef RANKDEC_LINALG_HPP
#define RANKDEC_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "rankdec/gf.hpp"

namespace rankdec::linalg {

using gf::Element;
using gf::Field;

/// Dense row-major matrix over a single GF(2^m). Zero rows or columns are
/// allowed (empty matrices arise as kernels and as parity matrices of the
/// full code).
class Mat {
 public:
  Mat(const Field& f, int rows, int cols);
  static Mat identity(const Field& f, int n);
  static Mat from_rows(const Field& f, const std::vector<std::vector<Element>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return *f_; }
  Element at(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }
  Element& at(int r, int c) { return e_[std::size_t(r) * cols_ + c]; }
  std::vector<Element> row(int r) const;
  std::vector<Element> col(int c) const;

  bool operator==(const Mat& o) const;

 private:
  const Field* f_;
  int rows_, cols_;
  std::vector<Element> e_;
};

Mat transpose(const Mat& m);
Mat mul(const Mat& a, const Mat& b);
/// v * M for a row vector v.
std::vector<Element> row_times_mat(std::span<const Element> v, const Mat& m);

struct Rref {
  Mat m;
  int rank;
  std::vector<int> pivots;
};

/// Reduced row-echelon form with deterministic pivoting (leftmost nonzero
/// column, topmost nonzero row; every pivot column cleared above and below).
Rref rref(const Mat& m);

int rank(const Mat& m);

enum class SolveKind { kUnique, kNone, kMany };

struct Solution {
  SolveKind kind;
  std::vector<Element> particular;  // valid unless kind == kNone; free vars zero
  Mat kernel;                       // rref-canonical basis rows of {x : Ax = 0}
};

/// All solutions of A x = b.
Solution solve_right(const Mat& a, std::span<const Element> b);

/// rref-canonical basis rows of the right kernel {x : Mx = 0}.
Mat right_kernel_basis(const Mat& m);
/// rref-canonical basis rows of the left kernel {v : vM = 0}.
Mat left_kernel_basis(const Mat& m);

/// The shared GF(2) field used for coordinate expansions.
const Field& gf2();

/// Canonical GF(2)-basis of the subfield GF(2^d) = {x : x^(2^d) = x} inside
/// F = GF(2^m); requires d | m. For d = m this is the standard basis
/// 1, a, ..., a^(m-1).
std::vector<Element> subfield_basis(const Field& f, int d);

bool in_subfield(Element x, int d);

/// Coordinates of x in the GF(2^d)-span of `basis`: returns c with
/// x = sum c_i basis_i and every c_i in GF(2^d), or nullopt if x is outside
/// the span. Solved as a GF(2)-linear system on m-bit coordinates; the
/// particular solution is deterministic.
std::optional<std::vector<Element>> coords_over_subfield(std::span<const Element> basis,
                                                         Element x, int sub_degree);

/// GF(2)-rank of the m-bit coordinate vectors of the given elements.
int gf2_rank_of_elements(std::span<const Element> elems);

}  // namespace rankdec::linalg

#endif
