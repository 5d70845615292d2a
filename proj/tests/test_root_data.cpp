#include <doctest.h>

#include <algorithm>
#include <set>

#include "affweyl/error.hpp"
#include "affweyl/oracle.hpp"
#include "helpers.hpp"

using namespace affweyl;
using namespace affweyl::testing;

namespace {

std::set<RootVec> as_set(const std::vector<RootVec>& v) { return {v.begin(), v.end()}; }

// Positive roots of C_m written down directly: e_i +- e_j (i < j), 2e_i.
std::vector<RootVec> c_positive_by_hand(int m) {
  std::vector<RootVec> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      RootVec a(m, 0), b(m, 0);
      a[i] = 1, a[j] = -1, b[i] = 1, b[j] = 1;
      out.push_back(a);
      out.push_back(b);
    }
  for (int i = 0; i < m; ++i) {
    RootVec a(m, 0);
    a[i] = 2;
    out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("C2 root data") {
  auto d = CartanDatum::build('C', 2);
  CHECK(as_set(d.positive_roots()) == std::set<RootVec>{{1, -1}, {0, 2}, {1, 1}, {2, 0}});
  CHECK(d.two_rho() == IntVec{4, 2});
  CHECK(d.highest_root() == RootVec{2, 0});
  CHECK(d.highest_coroot() == Coweight{1, 0});
  CHECK(d.marks() == IntVec{1, 2, 1});
}

TEST_CASE("A1 root data") {
  auto d = CartanDatum::build('A', 1);
  REQUIRE(d.num_positive() == 1);
  const RootVec& a = d.positive_roots()[0];
  CHECK(pairing(d.coroot(0), a) == 2);
  CHECK(d.two_rho() == a);
}

TEST_CASE("C3 positive roots match the hand enumeration") {
  for (int m = 1; m <= 5; ++m) {
    auto d = CartanDatum::build('C', m);
    auto hand = c_positive_by_hand(m);
    CHECK(as_set(d.positive_roots()) == as_set(hand));
    IntVec sum(m, 0);
    for (const auto& r : hand) sum = add(sum, r);
    CHECK(d.two_rho() == sum);
  }
  auto c3 = CartanDatum::build('C', 3);
  CHECK(c3.num_positive() == 9);
  CHECK(c3.two_rho() == IntVec{6, 4, 2});
}

TEST_CASE("root counts per type") {
  CHECK(CartanDatum::build('A', 3).num_positive() == 6);
  CHECK(CartanDatum::build('B', 3).num_positive() == 9);
  CHECK(CartanDatum::build('D', 4).num_positive() == 12);
  CHECK(CartanDatum::build('B', 2).two_rho() == IntVec{3, 1});
  CHECK(CartanDatum::build('D', 4).two_rho() == IntVec{6, 4, 2, 0});
}

TEST_CASE("unsupported type or rank is rejected") {
  CHECK_THROWS_AS(CartanDatum::build('C', 0), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::build('G', 2), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::build('D', 3), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::build('B', 1), InvalidArgument);
  CHECK_THROWS_AS(CartanDatum::build('A', 9), InvalidArgument);
}

TEST_CASE("pairing") {
  CHECK(pairing(Coweight{-1, -1}, RootVec{2, 0}) == -2);
  CHECK(pairing(Coweight{-1, 0}, IntVec{4, 2}) == -4);
  auto d = CartanDatum::build('C', 3);
  for (const auto& r : d.roots()) CHECK(pairing(Coweight{0, 0, 0}, r) == 0);
}

TEST_CASE("coroots") {
  for (auto [t, r] : {std::pair{'A', 1}, {'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}}) {
    auto d = CartanDatum::build(t, r);
    for (int k = 0; k < static_cast<int>(d.roots().size()); ++k)
      CHECK(pairing(d.coroot(k), d.roots()[k]) == 2);
  }
  for (auto [t, r] : {std::pair{'A', 2}, {'D', 4}}) {
    auto d = CartanDatum::build(t, r);
    for (const auto& a : d.roots()) CHECK(d.coroot_of(d.coroot_of(a)) == a);
  }
}

TEST_CASE("affine Coxeter matrix") {
  auto c2 = CartanDatum::build('C', 2);
  CHECK(c2.coxeter_order(0, 1) == 4);
  CHECK(c2.coxeter_order(1, 2) == 4);
  CHECK(c2.coxeter_order(0, 2) == 2);
  auto a2 = CartanDatum::build('A', 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(a2.coxeter_order(i, j) == 3);
  CHECK(CartanDatum::build('A', 1).coxeter_order(0, 1) == 0);
}

TEST_CASE("coroot lattice membership") {
  auto a2 = CartanDatum::build('A', 2);
  CHECK(a2.in_coroot_lattice(Coweight{1, 0, -1}));
  CHECK_FALSE(a2.in_coroot_lattice(Coweight{1, 0, 0}));
  auto b2 = CartanDatum::build('B', 2);
  CHECK(b2.in_coroot_lattice(Coweight{1, 1}));
  CHECK_FALSE(b2.in_coroot_lattice(Coweight{1, 0}));
  auto c2 = CartanDatum::build('C', 2);
  CHECK(c2.in_coroot_lattice(Coweight{1, 0}));
  CHECK(c2.coroot_coordinates(Coweight{-1, 0}) == IntVec{-1, -1});
}

TEST_CASE("positivity on the base alcove") {
  auto d = CartanDatum::build('C', 2);
  const int pos = 0;
  const int neg = d.negative_of(pos);
  CHECK(affine_root_positive_on_C(d, {pos, 0}));
  CHECK(affine_root_positive_on_C(d, {neg, 1}));
  CHECK_FALSE(affine_root_positive_on_C(d, {pos, -1}));

  // Agreement with evaluation at a rational interior point, for every root.
  for (auto [t, r] : {std::pair{'A', 2}, {'B', 3}, {'C', 2}, {'C', 3}, {'D', 4}}) {
    auto dd = CartanDatum::build(t, r);
    auto x = alcove_point(dd);
    for (int k = 0; k < static_cast<int>(dd.roots().size()); ++k)
      for (Int off = -3; off <= 3; ++off) {
        const Int v = affine_value(dd, k, off, x);
        REQUIRE(v != 0);
        CHECK(affine_root_positive_on_C(dd, {k, off}) == (v > 0));
      }
  }
}

TEST_CASE("action on affine roots") {
  auto g = group('C', 2);
  const auto& d = g.datum();
  for (int k = 0; k < static_cast<int>(d.roots().size()); ++k)
    CHECK(g.act(g.identity(), {k, 3}) == AffineRoot{k, 3});

  const int m2e1 = *d.root_index(RootVec{-2, 0});
  CHECK(g.act(T(g, {-1, 0}), {m2e1, 1}) == AffineRoot{m2e1, -1});

  auto a2 = group('A', 2);
  const auto& da = a2.datum();
  const int theta = *da.root_index(da.highest_root());
  const Element s0 = a2.simple_reflection(0);
  const AffineRoot image = a2.act(s0, {theta, 0});
  CHECK(image == AffineRoot{da.negative_of(theta), 2});
  CHECK(affine_root_positive_on_C(da, image));
  // s0 inverts its own wall root -theta + 1 and nothing else.
  const AffineRoot wall = a2.act(s0, {da.negative_of(theta), 1});
  CHECK(wall == AffineRoot{theta, -1});
  CHECK_FALSE(affine_root_positive_on_C(da, wall));
  CHECK(oracle_inversion_count(a2, s0) == 1);
}

TEST_CASE("action agrees with evaluation at rational points") {
  std::mt19937 rng(7);
  for (auto [t, r] : {std::pair{'A', 2}, {'C', 2}, {'C', 3}}) {
    auto g = group(t, r);
    const auto& d = g.datum();
    std::vector<RationalPoint> points{alcove_point(d)};
    points.push_back({IntVec(d.dimension(), 0), 1});
    IntVec odd(d.dimension());
    for (int i = 0; i < d.dimension(); ++i) odd[i] = 3 * i - 4;
    points.push_back({odd, 7});
    for (int trial = 0; trial < 100; ++trial) {
      Element w = W(g, random_word(rng, r, 10));
      Element winv = g.inverse(w);
      for (int k = 0; k < static_cast<int>(d.roots().size()); ++k) {
        const Int off = static_cast<Int>(trial % 5) - 2;
        AffineRoot img = g.act(w, {k, off});
        for (const auto& x : points) {
          IntVec y = g.apply_to_point(winv, x.num, x.den);
          CHECK(affine_value(d, img.root, img.offset, x) == dot(d.roots()[k], y) + off * x.den);
        }
      }
    }
  }
}

TEST_CASE("inverted affine roots count the length") {
  // Counted here by evaluating at an interior point, independently of the
  // library's positivity rule.
  for (auto [t, r] : {std::pair{'A', 1}, {'A', 2}, {'B', 2}, {'C', 2}, {'A', 3}, {'C', 3}, {'B', 3}, {'D', 4}}) {
    auto g = group(t, r);
    const auto& d = g.datum();
    const auto x = alcove_point(d);
    const int radius = r <= 2 ? 8 : 6;
    Ball ball = bfs_ball(g, radius);
    for (const auto& [w, len] : ball.members()) {
      Int kmax = 1;
      for (Int c : w.translation) kmax += 2 * std::abs(c);
      int count = 0;
      for (int k = 0; k < static_cast<int>(d.roots().size()); ++k)
        for (Int off = 0; off <= kmax; ++off) {
          if (affine_value(d, k, off, x) <= 0) continue;
          AffineRoot img = g.act(w, {k, off});
          if (affine_value(d, img.root, img.offset, x) < 0) ++count;
        }
      REQUIRE(count == len);
    }
  }
}
