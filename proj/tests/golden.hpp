// Known-answer fixture: the [14, 4] code over GF(2^14) with
// T = {0..4, 8..12}, its certified bounds, a received word with a rank-3
// error, and the interleaved variant with a rank-4 error. All values were
// derived with exact arithmetic and are pinned bit-for-bit.
#ifndef RANKDEC_TESTS_GOLDEN_HPP
#define RANKDEC_TESTS_GOLDEN_HPP

#include <memory>
#include <vector>

#include "rankdec/bounds.hpp"
#include "rankdec/code.hpp"
#include "rankdec/decoder.hpp"

namespace golden {

using rankdec::bounds::Pattern;
using rankdec::code::CodeSpec;
using rankdec::gf::Element;
using rankdec::gf::Field;

// Vector literal from generator exponents; -1 encodes the zero element.
inline std::vector<Element> powers(const Field& f, const std::vector<long long>& ks) {
  std::vector<Element> v;
  for (long long k : ks) v.push_back(k < 0 ? f.zero() : f.from_power((unsigned long long)k));
  return v;
}

struct Fixture {
  std::shared_ptr<const Field> field = std::make_shared<Field>(14, 0x40A9);
  CodeSpec code = make_code(field);
  Pattern roos{8, 1, 3, 6, {0, 2}};
  Pattern ht{0, 1, 8, 6, {0, 1}};

  std::vector<Element> c = powers(*field, {0, 4851, 13201, 10, 11714, 5336, 15691,
                                           -1, 6387, 7195, 5026, -1, 14643, -1});
  std::vector<Element> y = powers(*field, {-1, 4170, 4896, 1514, 2234, 8214, 11585,
                                           12897, 1004, 7930, 15557, 12897, 13045,
                                           12897});
  std::vector<Element> epsilon = powers(*field, {0, 1, 11});
  std::vector<Element> eta = powers(*field, {0, 9414, 12430});
  std::vector<Element> eta_alt = powers(*field, {0, 16301, 9414});
  std::vector<Element> span_vec = powers(*field, {14247, 6165, 1871, 0});
  std::vector<Element> locator_vec = powers(*field, {11909, 13397, 4634, 0});

  // Syndrome grids, row j in {0, 1}, column i in {0..4}.
  std::vector<std::vector<Element>> s_grid = {
      powers(*field, {3109, 9463, 641, 14960, 4892}),
      powers(*field, {13234, 4437, 6745, 12053, 16376})};
  std::vector<std::vector<Element>> st_grid = {
      powers(*field, {2380, 7922, 10256, 4999, 3185}),
      powers(*field, {13234, 10410, 5782, 11746, 9215})};

  // 3 x 14 coefficient matrix of the designed error over GF(2).
  std::vector<std::vector<int>> b_rows = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}};

  // Codeword of the subfield subcode over GF(2^7).
  std::vector<Element> subfield_word = powers(*field, {-1, 0, 3612, 1290, 2709, 3612,
                                                       4773, 15222, 16125, 1419, 2193,
                                                       4644, 8256, 4902});

  // Interleaved example: two blocks, rank-4 error on (c | 0).
  std::vector<Element> epsilon4 = powers(*field, {0, 1, 11, 5});
  std::vector<Element> span_vec4 = powers(*field, {13080, 5972, 7019, 14980, 0});
  std::vector<Element> eta1_4 = powers(*field, {0, 9414, 12430, 7});
  std::vector<Element> eta2_4 = powers(*field, {0, 10545, 1889, 5408});
  std::vector<std::vector<int>> b1_rows = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}};
  std::vector<std::vector<int>> b2_rows = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0},
      {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0}};
  std::vector<std::vector<Element>> s_grid_l1 = {
      powers(*field, {5903, 12024, 954, 885, 15923}),
      powers(*field, {4230, 12338, 12893, 12777, 15865})};
  std::vector<std::vector<Element>> s_grid_l2 = {
      powers(*field, {3538, 14609, 14246, 13194, 8858}),
      powers(*field, {6680, 12714, 13177, 14706, 1497})};

  static CodeSpec make_code(std::shared_ptr<const Field> f) {
    rankdec::gf::Automorphism sigma(*f, 1);
    std::vector<Element> h;
    Element alpha = f->from_power(7);
    for (int i = 0; i < 14; ++i) h.push_back(sigma.apply(alpha, i));
    return CodeSpec(std::move(f), 1, std::move(h), {0, 1, 2, 3, 4, 8, 9, 10, 11, 12});
  }

  // The designed error vector epsilon * B.
  std::vector<Element> error() const {
    std::vector<Element> e(14, field->zero());
    for (int j = 0; j < 14; ++j)
      for (int i = 0; i < 3; ++i)
        if (b_rows[i][j]) e[j] = e[j] + epsilon[i];
    return e;
  }

  std::vector<Element> error4() const {
    std::vector<Element> e(28, field->zero());
    for (int j = 0; j < 14; ++j)
      for (int i = 0; i < 4; ++i) {
        if (b1_rows[i][j]) e[j] = e[j] + epsilon4[i];
        if (b2_rows[i][j]) e[14 + j] = e[14 + j] + epsilon4[i];
      }
    return e;
  }

  // (c | 0) + rank-4 error.
  std::vector<Element> y4() const {
    std::vector<Element> v = error4();
    for (int j = 0; j < 14; ++j) v[j] = v[j] + c[j];
    return v;
  }
};

}  // namespace golden

#endif
