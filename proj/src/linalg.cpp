#include "rankdec/linalg.hpp"

#include <stdexcept>

namespace rankdec::linalg {

Mat::Mat(const Field& f, int rows, int cols) : f_(&f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("linalg: negative dimension");
  e_.assign(std::size_t(rows) * cols, f.zero());
}

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<std::vector<Element>>& rows) {
  int r = (int)rows.size();
  int c = r ? (int)rows[0].size() : 0;
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if ((int)rows[i].size() != c) throw std::invalid_argument("linalg: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Element> Mat::row(int r) const {
  std::vector<Element> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

std::vector<Element> Mat::col(int c) const {
  std::vector<Element> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i].bits() != o.e_[i].bits()) return false;
  return true;
}

Mat transpose(const Mat& m) {
  Mat t(m.field(), m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Mat mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("linalg: dimension mismatch");
  Mat c(a.field(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      Element aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
    }
  return c;
}

std::vector<Element> row_times_mat(std::span<const Element> v, const Mat& m) {
  if ((int)v.size() != m.rows()) throw std::invalid_argument("linalg: dimension mismatch");
  std::vector<Element> r(m.cols(), m.field().zero());
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] = r[j] + v[i] * m.at(i, j);
  }
  return r;
}

Rref rref(const Mat& in) {
  Mat m = in;
  std::vector<int> pivots;
  int cur = 0;
  for (int col = 0; col < m.cols() && cur < m.rows(); ++col) {
    int sel = -1;
    for (int r = cur; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != cur)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(cur, j));
    Element piv_inv = m.at(cur, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(cur, j) = m.at(cur, j) * piv_inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == cur || m.at(r, col).is_zero()) continue;
      Element factor = m.at(r, col);
      for (int j = col; j < m.cols(); ++j)
        m.at(r, j) = m.at(r, j) + factor * m.at(cur, j);
    }
    pivots.push_back(col);
    ++cur;
  }
  return {std::move(m), (int)pivots.size(), std::move(pivots)};
}

int rank(const Mat& m) { return rref(m).rank; }

namespace {

// Kernel basis read off a reduced matrix: one vector per free column, then
// re-echelonized so the returned rows are themselves in reduced echelon form
// (canonical). `reduced` may carry extra columns past `ncols` (an augmented
// system); they are ignored.
Mat kernel_from_rref(const Mat& reduced, const std::vector<int>& pivots, int ncols) {
  const Field& f = reduced.field();
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Element>> basis;
  for (int j = 0; j < ncols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Element> v(ncols, f.zero());
    v[j] = f.one();
    for (int i = 0; i < (int)pivots.size(); ++i) v[pivots[i]] = reduced.at(i, j);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Mat(f, 0, ncols);
  return rref(Mat::from_rows(f, basis)).m;
}

}  // namespace

Mat right_kernel_basis(const Mat& m) {
  Rref r = rref(m);
  return kernel_from_rref(r.m, r.pivots, m.cols());
}

Mat left_kernel_basis(const Mat& m) { return right_kernel_basis(transpose(m)); }

Solution solve_right(const Mat& a, std::span<const Element> b) {
  if ((int)b.size() != a.rows()) throw std::invalid_argument("linalg: dimension mismatch");
  const Field& f = a.field();
  Mat aug(f, a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols())
    return {SolveKind::kNone, {}, Mat(f, 0, a.cols())};

  std::vector<Element> x(a.cols(), f.zero());
  for (int i = 0; i < (int)r.pivots.size(); ++i) x[r.pivots[i]] = r.m.at(i, a.cols());

  // The left block of the reduced augmented matrix is the rref of A, so the
  // kernel can be read off the same elimination.
  Mat kernel = kernel_from_rref(r.m, r.pivots, a.cols());
  SolveKind kind = kernel.rows() == 0 ? SolveKind::kUnique : SolveKind::kMany;
  return {kind, std::move(x), std::move(kernel)};
}

const Field& gf2() {
  static const Field f(1, 0b11);
  return f;
}

namespace {

// GF(2)-expansion of a linear condition sum_i y_i * coef_i = rhs over F:
// one column per unknown bit, one row per bit position of F.
Mat bit_columns(const Field& f, const std::vector<Element>& coefs) {
  const Field& g2 = gf2();
  int m = f.degree();
  Mat a(g2, m, (int)coefs.size());
  for (int j = 0; j < (int)coefs.size(); ++j) {
    std::uint64_t bits = coefs[j].bits();
    for (int r = 0; r < m; ++r)
      if ((bits >> r) & 1) a.at(r, j) = g2.one();
  }
  return a;
}

}  // namespace

std::vector<Element> subfield_basis(const Field& f, int d) {
  int m = f.degree();
  if (d < 1 || m % d != 0)
    throw std::invalid_argument("linalg: subfield degree must divide m");
  // Kernel of the GF(2)-linear map y -> y^(2^d) + y.
  const Field& g2 = gf2();
  Mat a(g2, m, m);
  for (int j = 0; j < m; ++j) {
    Element ej = f.from_bits(std::uint64_t(1) << j);
    std::uint64_t img = ej.pow((long long)1 << d).bits() ^ ej.bits();
    for (int r = 0; r < m; ++r)
      if ((img >> r) & 1) a.at(r, j) = g2.one();
  }
  Mat k = right_kernel_basis(a);
  std::vector<Element> basis;
  for (int i = 0; i < k.rows(); ++i) {
    std::uint64_t bits = 0;
    for (int j = 0; j < m; ++j)
      if (!k.at(i, j).is_zero()) bits |= std::uint64_t(1) << j;
    basis.push_back(f.from_bits(bits));
  }
  if ((int)basis.size() != d) throw std::logic_error("linalg: subfield basis size");
  return basis;
}

bool in_subfield(Element x, int d) {
  return x.pow((long long)1 << d) == x;
}

std::optional<std::vector<Element>> coords_over_subfield(std::span<const Element> basis,
                                                         Element x, int sub_degree) {
  if (basis.empty()) throw std::invalid_argument("linalg: empty basis");
  const Field& f = basis[0].field();
  int m = f.degree();
  std::vector<Element> w = subfield_basis(f, sub_degree);
  int d = sub_degree;
  std::vector<Element> cols;
  cols.reserve(basis.size() * d);
  for (const Element& b : basis)
    for (int j = 0; j < d; ++j) cols.push_back(b * w[j]);
  Mat a = bit_columns(f, cols);
  const Field& g2 = gf2();
  std::vector<Element> rhs(m, g2.zero());
  for (int r = 0; r < m; ++r)
    if ((x.bits() >> r) & 1) rhs[r] = g2.one();
  Solution s = solve_right(a, rhs);
  if (s.kind == SolveKind::kNone) return std::nullopt;
  std::vector<Element> c(basis.size(), f.zero());
  for (int i = 0; i < (int)basis.size(); ++i)
    for (int j = 0; j < d; ++j)
      if (!s.particular[std::size_t(i) * d + j].is_zero()) c[i] = c[i] + w[j];
  return c;
}

int gf2_rank_of_elements(std::span<const Element> elems) {
  if (elems.empty()) return 0;
  std::vector<std::uint64_t> rows;
  for (const Element& e : elems) rows.push_back(e.bits());
  int rk = 0;
  for (int bit = 63; bit >= 0; --bit) {
    int sel = -1;
    for (int i = rk; i < (int)rows.size(); ++i) {
      if ((rows[i] >> bit) & 1) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[rk], rows[sel]);
    for (int i = 0; i < (int)rows.size(); ++i)
      if (i != rk && ((rows[i] >> bit) & 1)) rows[i] ^= rows[rk];
    ++rk;
  }
  return rk;
}

}  // namespace rankdec::linalg
