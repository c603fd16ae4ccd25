#include "gcdens/gl2.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include "gcdens/error.hpp"

namespace gcdens {

u64 Mat2::det() const {
  return sub_mod(a * d % ell, b * c % ell, ell);
}

Mat2 Mat2::inverse() const {
  u64 inv = inv_mod(det(), ell);
  return {ell, d * inv % ell, sub_mod(0, b, ell) * inv % ell, sub_mod(0, c, ell) * inv % ell,
          a * inv % ell};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  const u64 l = x.ell;
  return {l, (x.a * y.a + x.b * y.c) % l, (x.a * y.b + x.b * y.d) % l,
          (x.c * y.a + x.d * y.c) % l, (x.c * y.b + x.d * y.d) % l};
}

u64 gl2_order(u64 ell) { return (ell * ell - 1) * (ell * ell - ell); }

std::vector<Mat2> enumerate_gl2(u64 ell) {
  if (ell > kMaxBruteForceEll || !is_prime(ell)) {
    throw Error(ErrorCode::InvalidInput,
                "GL2 enumeration needs a prime <= 13, got " + std::to_string(ell));
  }
  std::vector<Mat2> out;
  out.reserve(gl2_order(ell));
  for (u64 a = 0; a < ell; ++a)
    for (u64 b = 0; b < ell; ++b)
      for (u64 c = 0; c < ell; ++c)
        for (u64 d = 0; d < ell; ++d) {
          Mat2 m{ell, a, b, c, d};
          if (m.invertible()) out.push_back(m);
        }
  return out;
}

int sgn2(const Mat2& m) {
  // Nonzero column vectors (1,0), (0,1), (1,1) indexed 0..2.
  static constexpr std::array<std::array<u64, 2>, 3> kVecs = {{{1, 0}, {0, 1}, {1, 1}}};
  std::array<int, 3> image{};
  for (int i = 0; i < 3; ++i) {
    u64 x = (m.a * kVecs[i][0] + m.b * kVecs[i][1]) % 2;
    u64 y = (m.c * kVecs[i][0] + m.d * kVecs[i][1]) % 2;
    for (int j = 0; j < 3; ++j) {
      if (kVecs[j][0] == x && kVecs[j][1] == y) image[i] = j;
    }
  }
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (image[i] > image[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool is_special(const Mat2& m) { return m.det() == 1 % m.ell && m.trace() == 2 % m.ell; }

namespace {

CountCheck checked(u64 brute, u64 closed, const char* what, u64 ell) {
  if (brute != closed) {
    throw Error(ErrorCode::MismatchedCount, std::string(what) + " at l=" + std::to_string(ell) +
                                                ": brute force " + std::to_string(brute) +
                                                " vs closed form " + std::to_string(closed));
  }
  return {brute, closed};
}

Mat2 unipotent(u64 ell) { return {ell, 1, 1, 0, 1}; }

}  // namespace

CountCheck count_group(u64 ell) {
  return checked(enumerate_gl2(ell).size(), gl2_order(ell), "group order", ell);
}

CountCheck count_special(u64 ell) {
  auto all = enumerate_gl2(ell);
  u64 n = static_cast<u64>(std::count_if(all.begin(), all.end(), is_special));
  return checked(n, ell * ell, "special count", ell);
}

CountCheck centralizer_order_T(u64 ell) {
  const Mat2 t = unipotent(ell);
  auto all = enumerate_gl2(ell);
  u64 n = static_cast<u64>(
      std::count_if(all.begin(), all.end(), [&](const Mat2& m) { return m * t == t * m; }));
  return checked(n, ell * ell - ell, "centralizer of T", ell);
}

CountCheck class_size_T(u64 ell) {
  const Mat2 t = unipotent(ell);
  std::set<std::tuple<u64, u64, u64, u64>> conjugates;
  for (const Mat2& g : enumerate_gl2(ell)) {
    Mat2 c = g.inverse() * t * g;
    conjugates.insert({c.a, c.b, c.c, c.d});
  }
  return checked(conjugates.size(), ell * ell - 1, "conjugacy class of T", ell);
}

i64 chi_det_sum(u64 ell) {
  if (ell == 2) throw Error(ErrorCode::InvalidInput, "chi_det_sum needs an odd prime");
  i64 sum = 0;
  for (const Mat2& m : enumerate_gl2(ell)) {
    if (!is_special(m)) sum += legendre(static_cast<i64>(m.det()), ell);
  }
  return sum;
}

i64 sgn_sum_2() {
  i64 sum = 0;
  for (const Mat2& m : enumerate_gl2(2)) {
    if (!is_special(m)) sum += sgn2(m);
  }
  return sum;
}

}  // namespace gcdens
