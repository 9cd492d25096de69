#include "rankdec/code.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rankdec/skew.hpp"

namespace rankdec::code {

using linalg::Mat;

namespace {

std::vector<int> reduce_t_set(const std::vector<int>& t_set, int order) {
  std::vector<int> t;
  for (int i : t_set) {
    int r = i % order;
    if (r < 0) r += order;
    t.push_back(r);
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

std::shared_ptr<const Field> require_field(std::shared_ptr<const Field> f) {
  if (!f) throw std::invalid_argument("code: null field");
  return f;
}

bool subfield_independent(const Automorphism& aut, std::span<const Element> h) {
  int d = aut.fixed_degree;
  std::vector<Element> w = linalg::subfield_basis(*aut.field, d);
  std::vector<Element> rows;
  for (const Element& hi : h)
    for (const Element& wj : w) rows.push_back(hi * wj);
  return linalg::gf2_rank_of_elements(rows) == (int)h.size() * d;
}

}  // namespace

Mat build_parity(const Automorphism& aut, std::span<const Element> h,
                 const std::vector<int>& t_set) {
  Mat m(*aut.field, (int)h.size(), (int)t_set.size());
  for (int j = 0; j < (int)t_set.size(); ++j)
    for (int l = 0; l < (int)h.size(); ++l) m.at(l, j) = aut.apply(h[l], t_set[j]);
  return m;
}

CodeSpec::CodeSpec(std::shared_ptr<const Field> field, int sigma_power,
                   std::vector<Element> h, const std::vector<int>& t_set)
    : field_(require_field(std::move(field))),
      aut_(*field_, sigma_power),
      h_(std::move(h)),
      t_(reduce_t_set(t_set, aut_.order)),
      parity_(*field_, 0, 0),
      generator_(*field_, 0, 0) {
  int n = (int)h_.size();
  if (n < 1 || n > aut_.order)
    throw std::invalid_argument("code: length must be in [1, |sigma|]");
  for (const Element& e : h_)
    if (!gf::same_field(e.field(), *field_))
      throw std::invalid_argument("code: h entry from a foreign field");
  if (!subfield_independent(aut_, h_))
    throw std::invalid_argument("code: h entries are dependent over the fixed subfield");
  parity_ = build_parity(aut_, h_, t_);
  generator_ = linalg::left_kernel_basis(parity_);
}

std::vector<Element> encode(const CodeSpec& c, std::span<const Element> msg) {
  if ((int)msg.size() != c.dimension())
    throw std::invalid_argument("code: message length must equal the dimension");
  return linalg::row_times_mat(msg, c.generator());
}

bool is_codeword(const CodeSpec& c, std::span<const Element> v) {
  if ((int)v.size() != c.length()) return false;
  std::vector<Element> s = linalg::row_times_mat(v, c.parity());
  for (const Element& e : s)
    if (!e.is_zero()) return false;
  return true;
}

Element syndrome(const CodeSpec& c, std::span<const Element> v, long long d) {
  if ((int)v.size() != c.length())
    throw std::invalid_argument("code: vector length mismatch");
  Element acc = c.field().zero();
  for (int l = 0; l < c.length(); ++l) acc = acc + v[l] * c.aut().apply(c.h()[l], d);
  return acc;
}

std::vector<int> defining_set(const CodeSpec& c) {
  std::vector<int> ds;
  for (int i = 0; i < c.aut().order; ++i) {
    bool annihilated = true;
    for (int r = 0; r < c.dimension() && annihilated; ++r) {
      std::vector<Element> row = c.generator().row(r);
      annihilated = syndrome(c, row, i).is_zero();
    }
    if (annihilated) ds.push_back(i);
  }
  return ds;
}

int rank_weight(const Automorphism& aut, std::span<const Element> v) {
  if (v.empty()) return 0;
  int d = aut.fixed_degree;
  std::vector<Element> w = linalg::subfield_basis(*aut.field, d);
  std::vector<Element> rows;
  for (const Element& vi : v)
    for (const Element& wj : w) rows.push_back(vi * wj);
  return linalg::gf2_rank_of_elements(rows) / d;
}

int hamming_weight(std::span<const Element> v) {
  int w = 0;
  for (const Element& e : v)
    if (!e.is_zero()) ++w;
  return w;
}

RandomError random_error(const Automorphism& aut, int n, int nu, std::uint64_t seed) {
  const Field& f = *aut.field;
  int d = aut.fixed_degree;
  int m = f.degree();
  if (nu < 0 || nu * d > m || nu > n)
    throw std::invalid_argument("code: infeasible error rank");
  std::mt19937_64 rng(seed);
  std::vector<Element> w = linalg::subfield_basis(f, d);

  std::vector<Element> eps;
  std::vector<Element> span_rows;
  while ((int)eps.size() < nu) {
    std::uint64_t bits = rng() & f.group_order();
    if (bits == 0) continue;
    Element cand = f.from_bits(bits);
    std::vector<Element> probe = span_rows;
    probe.push_back(cand);
    if (linalg::gf2_rank_of_elements(probe) == linalg::gf2_rank_of_elements(span_rows))
      continue;
    eps.push_back(cand);
    for (const Element& wj : w) span_rows.push_back(wj * cand);
  }

  Mat b(f, nu, n);
  for (;;) {
    for (int i = 0; i < nu; ++i)
      for (int j = 0; j < n; ++j) {
        Element e = f.zero();
        std::uint64_t r = rng();
        for (int k = 0; k < d; ++k)
          if ((r >> k) & 1) e = e + w[k];
        b.at(i, j) = e;
      }
    if (nu == 0 || linalg::rank(b) == nu) break;
  }

  std::vector<Element> e(n, f.zero());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < nu; ++i) e[j] = e[j] + eps[i] * b.at(i, j);
  return {std::move(e), std::move(eps), std::move(b)};
}

Mat subfield_subcode(const CodeSpec& c, int sub_degree) {
  const Field& f = c.field();
  int m = f.degree();
  int d = sub_degree;
  if (d < 1 || m % d != 0)
    throw std::invalid_argument("code: subfield degree must divide m");
  int n = c.length();
  std::vector<Element> w = linalg::subfield_basis(f, d);
  const Mat& h = c.parity();

  // GF(2) system on the n*d unknown subfield coordinates of the codeword.
  const Field& g2 = linalg::gf2();
  Mat a(g2, m * h.cols(), n * d);
  for (int col = 0; col < h.cols(); ++col)
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < d; ++j) {
        std::uint64_t bits = (w[j] * h.at(l, col)).bits();
        for (int r = 0; r < m; ++r)
          if ((bits >> r) & 1) a.at(m * col + r, l * d + j) = g2.one();
      }
  Mat kern = linalg::right_kernel_basis(a);

  std::vector<std::vector<Element>> gens;
  for (int i = 0; i < kern.rows(); ++i) {
    std::vector<Element> v(n, f.zero());
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < d; ++j)
        if (!kern.at(i, l * d + j).is_zero()) v[l] = v[l] + w[j];
    gens.push_back(std::move(v));
  }

  // Greedy extraction of a K-basis from the GF(2)-basis, flattening each
  // candidate (and its K-multiples) into n*m bit coordinates.
  std::vector<std::vector<Element>> selected;
  std::vector<std::vector<std::uint64_t>> span_rows;
  auto row_bits = [&](const std::vector<Element>& v) {
    std::vector<std::uint64_t> r(n);
    for (int l = 0; l < n; ++l) r[l] = v[l].bits();
    return r;
  };
  auto rank_of = [&](const std::vector<std::vector<std::uint64_t>>& rows) {
    // Gaussian elimination over GF(2) on n-word rows.
    std::vector<std::vector<std::uint64_t>> a2 = rows;
    int rk = 0;
    for (int word = 0; word < n; ++word)
      for (int bit = m - 1; bit >= 0; --bit) {
        int sel = -1;
        for (int i = rk; i < (int)a2.size(); ++i)
          if ((a2[i][word] >> bit) & 1) {
            sel = i;
            break;
          }
        if (sel < 0) continue;
        std::swap(a2[rk], a2[sel]);
        for (int i = 0; i < (int)a2.size(); ++i)
          if (i != rk && ((a2[i][word] >> bit) & 1))
            for (int t = 0; t < n; ++t) a2[i][t] ^= a2[rk][t];
        ++rk;
      }
    return rk;
  };
  for (const auto& g : gens) {
    auto probe = span_rows;
    probe.push_back(row_bits(g));
    if (rank_of(probe) == rank_of(span_rows)) continue;
    selected.push_back(g);
    for (const Element& wj : w) {
      std::vector<Element> mult(n, f.zero());
      for (int l = 0; l < n; ++l) mult[l] = wj * g[l];
      span_rows.push_back(row_bits(mult));
    }
  }
  if (selected.empty()) return Mat(f, 0, n);
  return Mat::from_rows(f, selected);
}

WeightProfile weight_profile(const Mat& basis_rows, int coeff_degree,
                             const Automorphism& aut, Metric metric) {
  const Field& f = basis_rows.field();
  int k = basis_rows.rows();
  int n = basis_rows.cols();
  int d = coeff_degree;
  if (k == 0) return {};
  if ((std::uint64_t)d * k > 20)
    throw std::invalid_argument("code: enumeration budget exceeded (2^20 words)");
  std::vector<Element> w = linalg::subfield_basis(f, d);
  std::uint64_t total = std::uint64_t(1) << (d * k);
  WeightProfile p;
  std::vector<Element> word(n, f.zero());
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    for (int j = 0; j < n; ++j) word[j] = f.zero();
    for (int i = 0; i < k; ++i) {
      std::uint64_t chunk = (idx >> (i * d)) & ((std::uint64_t(1) << d) - 1);
      if (chunk == 0) continue;
      Element ci = f.zero();
      for (int b = 0; b < d; ++b)
        if ((chunk >> b) & 1) ci = ci + w[b];
      for (int j = 0; j < n; ++j) word[j] = word[j] + ci * basis_rows.at(i, j);
    }
    int weight = metric == Metric::kRank ? rank_weight(aut, word) : hamming_weight(word);
    p.min_w = std::min(p.min_w, weight);
    p.max_w = std::max(p.max_w, weight);
    ++p.count;
  }
  return p;
}

int min_distance_oracle(const CodeSpec& c, Metric metric) {
  if (c.dimension() == 0) return kInfiniteDistance;
  WeightProfile p = weight_profile(c.generator(), c.field().degree(), c.aut(), metric);
  return p.min_w;
}

}  // namespace rankdec::code
