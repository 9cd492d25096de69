#include "rankdec/decoder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rankdec::decoder {

using bounds::Pattern;
using linalg::Mat;
using skew::SkewPoly;
using skew::Twist;

namespace {

long long grid_exponent(const Pattern& p, int i, int j) {
  return p.b + p.t1 * i + p.t2 * p.ks[j];
}

bool subset_of(const std::vector<int>& small, const std::vector<int>& big) {
  for (int v : small)
    if (std::find(big.begin(), big.end(), v) == big.end()) return false;
  return true;
}

}  // namespace

DecodeParams::DecodeParams(code::CodeSpec spec, Pattern pattern)
    : spec_(std::move(spec)), pattern_(std::move(pattern)),
      columns_(spec_.field(), 0, 0) {
  int order = spec_.aut().order;
  long long t1r = pattern_.t1 % order;
  if (t1r < 0) t1r += order;
  if (t1r == 0 || std::gcd(order, (int)t1r) != 1)
    throw std::invalid_argument("decoder: gcd(|sigma|, t1) must be 1");
  if (!subset_of(pattern_.generated_set(order), code::defining_set(spec_)))
    throw std::invalid_argument(
        "decoder: pattern set is not inside the code's defining set");

  int delta = pattern_.delta, r = pattern_.r();
  Mat cols(spec_.field(), spec_.length(), (delta - 1) * (r + 1));
  for (int j = 0; j <= r; ++j)
    for (int i = 0; i <= delta - 2; ++i)
      for (int l = 0; l < spec_.length(); ++l)
        cols.at(l, j * (delta - 1) + i) =
            spec_.aut().apply(spec_.h()[l], grid_exponent(pattern_, i, j));
  columns_ = std::move(cols);
}

bool SyndromeTable::all_zero() const {
  for (const Element& e : s)
    if (!e.is_zero()) return false;
  return true;
}

std::vector<Element> SyndromeTable::row(int j) const {
  std::vector<Element> r(cols);
  for (int i = 0; i < cols; ++i) r[i] = at(j, i);
  return r;
}

SyndromeTable syndrome_table(const DecodeParams& params, std::span<const Element> y) {
  if ((int)y.size() != params.spec().length())
    throw std::invalid_argument("decoder: word length mismatch");
  const Pattern& p = params.pattern();
  // Column index j*(delta-1)+i matches the table layout directly.
  SyndromeTable st{p.r() + 1, p.delta - 1,
                   linalg::row_times_mat(y, params.syndrome_columns())};
  return st;
}

SyndromeTable twisted_table(const DecodeParams& params, const SyndromeTable& st) {
  const Pattern& p = params.pattern();
  SyndromeTable out = st;
  for (int j = 0; j <= p.r(); ++j)
    for (int i = 0; i <= p.delta - 2; ++i)
      out.s[std::size_t(j) * st.cols + i] =
          params.spec().aut().apply(st.at(j, i), -grid_exponent(p, i, j));
  return out;
}

namespace {

// Canonical flag of fixed-field independent elements 1, a, a^2, ... used
// when the register is completely unconstrained by the data.
std::vector<Element> independent_flag(const Twist& tw, int count) {
  const gf::Field& f = *tw.aut.field;
  int d = tw.aut.fixed_degree;
  std::vector<Element> w = linalg::subfield_basis(f, d);
  std::vector<Element> flag, span_rows;
  Element cand = f.one();
  while ((int)flag.size() < count) {
    std::vector<Element> probe = span_rows;
    probe.push_back(cand);
    if (linalg::gf2_rank_of_elements(probe) != linalg::gf2_rank_of_elements(span_rows)) {
      flag.push_back(cand);
      for (const Element& wj : w) span_rows.push_back(wj * cand);
    }
    cand = cand * f.gen();
  }
  return flag;
}

std::vector<Element> normalized(std::vector<Element> v) {
  if (!v.back().is_zero()) {
    Element inv = v.back().inverse();
    for (Element& e : v) e = e * inv;
  } else {
    Element inv = v.front().inverse();
    for (Element& e : v) e = e * inv;
  }
  return v;
}

}  // namespace

SfsrResult sfsr_synthesize(const std::vector<std::vector<Element>>& sequences,
                           const Twist& twist) {
  if (sequences.empty()) throw std::invalid_argument("decoder: no sequences");
  const gf::Field& f = *twist.aut.field;
  std::size_t n_len = sequences[0].size();
  for (const auto& s : sequences)
    if (s.size() != n_len)
      throw std::invalid_argument("decoder: sequences must share one length");

  for (int len = 0; len <= (int)n_len; ++len) {
    std::vector<std::vector<Element>> rows;
    for (const auto& seq : sequences)
      for (int n = len; n < (int)n_len; ++n) {
        std::vector<Element> row(len + 1);
        for (int i = 0; i <= len; ++i) row[i] = twist.apply(seq[n - i], i);
        rows.push_back(std::move(row));
      }
    Mat a = rows.empty() ? Mat(f, 0, len + 1) : Mat::from_rows(f, rows);
    Mat kern = linalg::right_kernel_basis(a);
    if (kern.rows() == len + 1) {
      // No constraint survives; return the minimal polynomial of the
      // canonical flag so the register still has a full operator kernel.
      SkewPoly p = skew::minimal_skew_poly(independent_flag(twist, len), twist);
      return {p.coeffs(), len};
    }
    if (kern.rows() > 0 && !kern.at(0, 0).is_zero())
      return {normalized(kern.row(0)), len};
  }
  throw std::logic_error("decoder: register synthesis did not terminate");
}

GabidulinSolution gabidulin_solve(std::span<const Element> a,
                                  std::span<const Element> b,
                                  const Twist& theta_t1, long long bbar) {
  int nu = (int)a.size();
  if (nu == 0 || (int)b.size() != nu)
    throw std::invalid_argument("decoder: structured solve needs nu = |a| = |b| >= 1");
  const gf::Field& f = *theta_t1.aut.field;
  const gf::Automorphism& aut = theta_t1.aut;
  int t = theta_t1.t;

  Mat at(f, nu, nu), bt(f, nu, nu);
  for (int k = 0; k < nu; ++k) at.at(0, k) = a[k];
  for (int i = 0; i < nu; ++i) bt.at(0, i) = b[i];
  for (int j = 1; j < nu; ++j) {
    Element pivot = at.at(j - 1, j - 1);
    if (pivot.is_zero())
      throw std::invalid_argument("decoder: dependent coefficients in structured solve");
    for (int k = j; k < nu; ++k)
      at.at(j, k) = at.at(j - 1, k) + pivot * aut.apply(at.at(j - 1, k) / pivot, -t);
    for (int i = 0; i <= nu - 1 - j; ++i)
      bt.at(j, i) = bt.at(j - 1, i) + pivot * aut.apply(bt.at(j - 1, i + 1) / pivot, -t);
  }

  std::vector<Element> x(nu, f.zero());
  for (int k = nu - 1; k >= 0; --k) {
    Element acc = bt.at(k, 0);
    for (int l = k + 1; l < nu; ++l)
      acc = acc + at.at(k, l) * aut.apply(x[l], bbar);
    Element pivot = at.at(k, k);
    if (pivot.is_zero())
      throw std::invalid_argument("decoder: dependent coefficients in structured solve");
    x[k] = aut.apply(acc / pivot, -bbar);
  }
  return {std::move(x), std::move(at), std::move(bt)};
}

namespace {

bool grid_consistent(const DecodeParams& params, const SyndromeTable& st,
                     std::span<const Element> eps, std::span<const Element> eta) {
  const Pattern& p = params.pattern();
  const gf::Automorphism& aut = params.spec().aut();
  for (int j = 0; j <= p.r(); ++j)
    for (int i = 0; i <= p.delta - 2; ++i) {
      Element acc = params.spec().field().zero();
      long long d = grid_exponent(p, i, j);
      for (std::size_t k = 0; k < eps.size(); ++k)
        acc = acc + eps[k] * aut.apply(eta[k], d);
      if (acc != st.at(j, i)) return false;
    }
  return true;
}

DecodeOutcome fail(Failure f, std::vector<Element> sfsr = {}) {
  DecodeOutcome out;
  out.failure = f;
  out.sfsr = std::move(sfsr);
  return out;
}

// Shared tail of every path: from epsilon and per-block eta to the error,
// the codeword and the membership check.
DecodeOutcome finish(const DecodeParams& params, std::span<const Element> y,
                     int nu, std::vector<Element> eps,
                     std::vector<std::vector<Element>> eta_blocks,
                     std::vector<Element> sfsr) {
  const code::CodeSpec& spec = params.spec();
  const gf::Field& f = spec.field();
  int n = spec.length();
  int ell = (int)eta_blocks.size();
  int d = spec.aut().fixed_degree;

  Mat b_full(f, nu, n * ell);
  std::vector<Element> error(std::size_t(n) * ell, f.zero());
  for (int l = 0; l < ell; ++l) {
    for (int k = 0; k < nu; ++k) {
      auto coords = linalg::coords_over_subfield(spec.h(), eta_blocks[l][k], d);
      if (!coords)
        return fail({FailureKind::kLocatorOutsideSpan, nu, -1, l}, std::move(sfsr));
      for (int c = 0; c < n; ++c) b_full.at(k, l * n + c) = (*coords)[c];
    }
    for (int c = 0; c < n; ++c) {
      Element acc = f.zero();
      for (int k = 0; k < nu; ++k) acc = acc + eps[k] * b_full.at(k, l * n + c);
      error[std::size_t(l) * n + c] = acc;
    }
  }

  DecodeOutcome out;
  out.nu = nu;
  out.epsilon = std::move(eps);
  out.eta_blocks = std::move(eta_blocks);
  out.b_matrix = std::move(b_full);
  out.sfsr = std::move(sfsr);
  out.error = std::move(error);
  out.codeword.resize(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out.codeword[i] = y[i] - out.error[i];
  for (int l = 0; l < ell; ++l) {
    std::span<const Element> block(out.codeword.data() + std::size_t(l) * n, n);
    if (!code::is_codeword(spec, block)) {
      Failure fl{FailureKind::kResultNotInCode, nu, -1, l};
      return fail(fl, std::move(out.sfsr));
    }
  }
  return out;
}

DecodeOutcome decode_blocks(const DecodeParams& params, std::span<const Element> y,
                            int ell, bool locator_path) {
  const code::CodeSpec& spec = params.spec();
  const Pattern& p = params.pattern();
  const gf::Automorphism& aut = spec.aut();
  int n = spec.length();
  if ((int)y.size() != n * ell)
    throw std::invalid_argument("decoder: word length must be blocks * n");

  std::vector<SyndromeTable> plain, twisted;
  bool zero = true;
  for (int l = 0; l < ell; ++l) {
    std::span<const Element> block(y.data() + std::size_t(l) * n, n);
    plain.push_back(syndrome_table(params, block));
    twisted.push_back(twisted_table(params, plain.back()));
    zero = zero && plain.back().all_zero();
  }
  if (zero) {
    DecodeOutcome out;
    out.codeword.assign(y.begin(), y.end());
    out.error.assign(y.size(), spec.field().zero());
    out.b_matrix = Mat(spec.field(), 0, (int)y.size());
    for (int l = 0; l < ell; ++l) {
      std::span<const Element> block(y.data() + std::size_t(l) * n, n);
      if (!code::is_codeword(spec, block))
        return fail({FailureKind::kResultNotInCode, 0, -1, l});
      out.eta_blocks.emplace_back();
    }
    return out;
  }

  // One register for all blocks: over the plain grid with twist sigma^t1
  // (span path) or the shifted grid with twist sigma^-t1 (locator path).
  int t1r = (int)(((p.t1 % aut.order) + aut.order) % aut.order);
  Twist synth_twist(aut, locator_path ? -t1r : t1r);
  std::vector<std::vector<Element>> seqs;
  for (int l = 0; l < ell; ++l)
    for (int j = 0; j <= p.r(); ++j)
      seqs.push_back((locator_path ? twisted[l] : plain[l]).row(j));
  SfsrResult reg = sfsr_synthesize(seqs, synth_twist);

  SkewPoly reg_poly(synth_twist, reg.v);
  std::vector<Element> kernel = skew::operator_kernel_basis(reg_poly);
  if ((int)kernel.size() != reg.length)
    return fail({FailureKind::kKernelDeficient, reg.length, (int)kernel.size(), 0},
                reg.v);
  int nu = reg.length;

  long long bbar = p.b + p.t2 * p.ks[0];
  std::vector<Element> eps;
  std::vector<std::vector<Element>> eta_blocks(ell);

  if (!locator_path) {
    eps = kernel;
    for (int l = 0; l < ell; ++l) {
      std::vector<Element> row0 = plain[l].row(0);
      std::vector<Element> rhs(row0.begin(), row0.begin() + nu);
      eta_blocks[l] = gabidulin_solve(eps, rhs, Twist(aut, t1r), bbar).x;
      if (!grid_consistent(params, plain[l], eps, eta_blocks[l]))
        return fail({FailureKind::kLocatorSystemInconsistent, nu, -1, l}, reg.v);
    }
  } else {
    // Locators from the kernel; values from the structured solve on the
    // shifted grid with theta = sigma^-1.
    if (ell != 1) throw std::logic_error("decoder: locator path is single-block");
    std::vector<Element> eta = kernel;
    std::vector<Element> row0 = twisted[0].row(0);
    std::vector<Element> rhs(row0.begin(), row0.begin() + nu);
    eps = gabidulin_solve(eta, rhs, Twist(aut, -t1r), -bbar).x;
    if (!grid_consistent(params, plain[0], eps, eta))
      return fail({FailureKind::kLocatorSystemInconsistent, nu, -1, 0}, reg.v);
    eta_blocks[0] = std::move(eta);
  }

  return finish(params, y, nu, std::move(eps), std::move(eta_blocks), reg.v);
}

}  // namespace

DecodeOutcome decode_span(const DecodeParams& params, std::span<const Element> y) {
  return decode_blocks(params, y, 1, false);
}

DecodeOutcome decode_locator(const DecodeParams& params, std::span<const Element> y) {
  return decode_blocks(params, y, 1, true);
}

DecodeOutcome decode_interleaved(const DecodeParams& params,
                                 std::span<const Element> y, int ell) {
  if (ell < 1) throw std::invalid_argument("decoder: blocks must be >= 1");
  if (std::gcd((long long)ell, params.pattern().t1) != 1)
    throw std::invalid_argument("decoder: gcd(blocks, t1) must be 1");
  return decode_blocks(params, y, ell, false);
}

int key_equation_rank_check(std::span<const Element> vec, const DecodeParams& params,
                            int nu, bool from_eta) {
  const Pattern& p = params.pattern();
  if (nu > p.delta - 2 || nu < 1)
    throw std::invalid_argument("decoder: nu must be in [1, delta-2]");
  if ((int)vec.size() != nu) throw std::invalid_argument("decoder: vector size != nu");
  const gf::Automorphism& aut = params.spec().aut();
  Mat m(params.spec().field(), (p.delta - 1 - nu) * (p.r() + 1), nu);
  int row = 0;
  for (int j = 0; j <= p.r(); ++j)
    for (int i = nu; i <= p.delta - 2; ++i, ++row)
      for (int k = 0; k < nu; ++k) {
        long long e = p.b + p.t1 * i + p.t2 * p.ks[j];
        m.at(row, k) = aut.apply(vec[k], from_eta ? e : -e);
      }
  return linalg::rank(m);
}

std::string failure_kind_name(FailureKind k) {
  switch (k) {
    case FailureKind::kKernelDeficient: return "KernelDeficient";
    case FailureKind::kLocatorSystemInconsistent: return "LocatorSystemInconsistent";
    case FailureKind::kLocatorOutsideSpan: return "LocatorOutsideSpan";
    case FailureKind::kResultNotInCode: return "ResultNotInCode";
  }
  return "?";
}

}  // namespace rankdec::decoder
