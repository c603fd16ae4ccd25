#include "gcdens/gl2.hpp"

#include <gtest/gtest.h>

#include "gcdens/conjecture.hpp"
#include "gcdens/error.hpp"

using namespace gcdens;

namespace {

// Exhaustive conjugation search: is there G with G^-1 M G = [[1, x], [0, 1]]?
bool conjugate_to_unitriangular(const Mat2& m, const std::vector<Mat2>& group) {
  for (const Mat2& g : group) {
    Mat2 c = g.inverse() * m * g;
    if (c.a == 1 && c.c == 0 && c.d == 1 % m.ell) return true;
  }
  return false;
}

}  // namespace

TEST(EnumerateGl2, Orders) {
  EXPECT_EQ(enumerate_gl2(2).size(), 6u);
  EXPECT_EQ(enumerate_gl2(3).size(), 48u);
  EXPECT_EQ(enumerate_gl2(5).size(), 480u);
  for (u64 l : {2u, 3u, 5u, 7u, 11u, 13u}) EXPECT_EQ(enumerate_gl2(l).size(), gl2_order(l));
  EXPECT_THROW(enumerate_gl2(4), Error);
  EXPECT_THROW(enumerate_gl2(17), Error);
}

TEST(Sgn2, Examples) {
  EXPECT_EQ(sgn2(Mat2::identity(2)), 1);
  EXPECT_EQ(sgn2(Mat2{2, 0, 1, 1, 0}), -1);
  EXPECT_EQ(sgn2(Mat2{2, 0, 1, 1, 1}), 1);
}

TEST(Sgn2, Homomorphism) {
  auto g = enumerate_gl2(2);
  for (const auto& m : g)
    for (const auto& n : g) ASSERT_EQ(sgn2(m * n), sgn2(m) * sgn2(n));
  int odd = 0;
  for (const auto& m : g) odd += sgn2(m) == -1;
  EXPECT_EQ(odd, 3);
}

TEST(IsSpecial, Examples) {
  for (u64 l : {2u, 3u, 5u, 7u}) EXPECT_TRUE(is_special(Mat2::identity(l)));
  EXPECT_TRUE(is_special(Mat2{5, 1, 1, 0, 1}));
  EXPECT_FALSE(is_special(Mat2{5, 2, 0, 0, 3}));
}

TEST(IsSpecial, EquivalentToConjugationIntoUnitriangular) {
  for (u64 l : {2u, 3u, 5u}) {
    auto group = enumerate_gl2(l);
    for (const auto& m : group) {
      ASSERT_EQ(is_special(m), conjugate_to_unitriangular(m, group)) << "l=" << l;
    }
  }
}

TEST(IsSpecial, SpecialMatricesHaveUnitDeterminant) {
  for (u64 l : {3u, 5u, 7u, 11u, 13u}) {
    for (const auto& m : enumerate_gl2(l)) {
      if (is_special(m)) ASSERT_EQ(legendre(static_cast<i64>(m.det()), l), 1);
    }
  }
}

TEST(Counts, ClosedFormsAtSmallPrimes) {
  struct Row {
    u64 ell, special, centralizer, klass;
  };
  for (auto r : {Row{2, 4, 2, 3}, Row{3, 9, 6, 8}, Row{7, 49, 42, 48}}) {
    EXPECT_EQ(count_special(r.ell).brute_force, r.special);
    EXPECT_EQ(centralizer_order_T(r.ell).brute_force, r.centralizer);
    EXPECT_EQ(class_size_T(r.ell).brute_force, r.klass);
  }
  for (u64 l : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto g = count_group(l);
    EXPECT_EQ(g.brute_force, g.closed_form);
  }
}

TEST(Counts, SpecialShareMatchesLocalBadRate) {
  for (u64 l : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const Rational share(static_cast<i128>(count_special(l).brute_force), static_cast<i128>(gl2_order(l)));
    EXPECT_EQ(share, bad_event_rate(l));
    const Rational lf = local_factor(l) * Rational(static_cast<i128>(gl2_order(l)));
    EXPECT_EQ(lf, Rational(static_cast<i128>(gl2_order(l) - count_special(l).brute_force)));
  }
}

TEST(CharacterSums, ChiDetSum) {
  EXPECT_EQ(chi_det_sum(3), -9);
  EXPECT_EQ(chi_det_sum(5), -25);
  EXPECT_EQ(chi_det_sum(7), -49);
  EXPECT_EQ(chi_det_sum(11), -121);
  EXPECT_EQ(chi_det_sum(13), -169);
  EXPECT_THROW(chi_det_sum(2), Error);
}

TEST(CharacterSums, SgnSum) {
  EXPECT_EQ(sgn_sum_2(), 2);
  int terms = 0;
  for (const auto& m : enumerate_gl2(2)) {
    if (is_special(m)) continue;
    ++terms;
    EXPECT_EQ(sgn2(m), 1);
    EXPECT_FALSE(m * m * m != Mat2::identity(2));  // order 3
  }
  EXPECT_EQ(terms, 2);
}
