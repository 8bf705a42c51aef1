#include <gtest/gtest.h>

#include <random>

#include "km/coxeter.hpp"
#include "km/weyl.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace km;
using support::error_tag;

namespace {

using Word = std::vector<int>;

WeylElement word(const WeylGroup& g, const Word& w) { return g.from_word(w); }

oracle::Mat as_mat(const WeylElement& w) {
  oracle::Mat m(w.rank(), oracle::Vec(w.rank()));
  for (int r = 0; r < w.rank(); ++r)
    for (int c = 0; c < w.rank(); ++c) m[r][c] = w.matrix()(r, c);
  return m;
}

}  // namespace

TEST(Generators, AffineA1Action) {
  const WeylGroup g(support::affine_a1());
  // s_1(alpha_2) = alpha_2 + 2 alpha_1
  EXPECT_EQ(g.generator(0).matrix().column(1), (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(g.generator(0).matrix().column(0), (std::vector<std::int64_t>{-1, 0}));
}

TEST(Generators, MatchReferenceMatrices) {
  for (const auto& path : support::catalog_files()) {
    const CartanMatrix a = io::load(path.string()).matrix;
    const WeylGroup g(a);
    for (int i = 0; i < a.rank(); ++i) {
      EXPECT_EQ(as_mat(g.generator(i)), oracle::reflection(a, i));
      EXPECT_TRUE((g.generator(i) * g.generator(i)).is_identity());
    }
  }
}

TEST(Generators, CoxeterRelations) {
  for (const auto& path : support::catalog_files()) {
    const WeylGroup g(io::load(path.string()).matrix);
    for (int i = 0; i < g.rank(); ++i)
      for (int j = i + 1; j < g.rank(); ++j) {
        const int m = g.diagram().order(i, j);
        const WeylElement st = g.generator(i) * g.generator(j);
        if (m == kInfinity) {
          EXPECT_TRUE(g.element_order(st).infinite());
        } else {
          EXPECT_TRUE(g.power_of(st, m).is_identity());
          EXPECT_EQ(g.element_order(st).finite, std::optional<std::uint64_t>(m));
        }
      }
  }
}

TEST(Generators, IndexOutOfRange) {
  const WeylGroup g(support::a2());
  EXPECT_EQ(error_tag([&] { g.generator(2); }), "IndexOutOfRange(3)");
  EXPECT_EQ(error_tag([&] { g.right_multiply(g.identity(), -1); }), "IndexOutOfRange(0)");
}

TEST(Multiply, RightMultiplyMatchesMatrixProduct) {
  const WeylGroup g(support::mixed());
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    Word w;
    for (int k = 0; k < 8; ++k) w.push_back(static_cast<int>(rng() % 3));
    const WeylElement e = word(g, w);
    EXPECT_EQ(as_mat(e), oracle::word_matrix(g.cartan(), w));
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(g.right_multiply(e, i), e * g.generator(i));
      EXPECT_EQ(g.left_multiply(i, e), g.generator(i) * e);
    }
    EXPECT_TRUE((e * g.inverse(e)).is_identity());
    EXPECT_TRUE((g.inverse(e) * e).is_identity());
  }
}

TEST(CanonicalWord, Examples) {
  const WeylGroup a2(support::a2());
  EXPECT_TRUE(a2.canonical_word(a2.identity()).empty());
  const WeylElement w0 = word(a2, {1, 0, 1});
  EXPECT_EQ(a2.canonical_word(w0), (Word{0, 1, 0}));
  EXPECT_EQ(a2.length(w0), 3u);

  const WeylGroup aa1(support::affine_a1());
  const WeylElement w = word(aa1, {0, 1, 0, 1});
  EXPECT_EQ(aa1.canonical_word(w), (Word{0, 1, 0, 1}));
  EXPECT_EQ(aa1.support(w), Subset::of({0, 1}));
}

TEST(CanonicalWord, LengthMatchesCayleyDistance) {
  for (const CartanMatrix& a : {support::affine_a1(), support::affine_a2(), support::mixed(), support::b2()}) {
    const WeylGroup g(a);
    for (const auto& [m, dist] : oracle::cayley_ball(a, 5)) {
      SquareMatrix sm(a.rank());
      for (int r = 0; r < a.rank(); ++r)
        for (int c = 0; c < a.rank(); ++c) sm(r, c) = m[r][c];
      const WeylElement e(sm);
      const Word w = g.canonical_word(e);
      EXPECT_EQ(static_cast<int>(w.size()), dist);
      EXPECT_EQ(g.from_word(w), e);
      const Word v = g.canonical_word(e, TieBreak::LargestIndex);
      EXPECT_EQ(v.size(), w.size());
      EXPECT_EQ(g.from_word(v), e);
      EXPECT_EQ(Subset::of(v), Subset::of(w));
    }
  }
}

TEST(CanonicalWord, ExchangeCondition) {
  for (const CartanMatrix& a : {support::affine_a1(), support::affine_a2()}) {
    const WeylGroup g(a);
    for (const WeylElement& w : g.enumerate_ball(5)) {
      const std::size_t len = g.length(w);
      for (int i = 0; i < g.rank(); ++i) {
        const std::size_t next = g.length(g.right_multiply(w, i));
        if (g.is_right_descent(w, i)) {
          EXPECT_EQ(next + 1, len);
        } else {
          EXPECT_EQ(next, len + 1);
        }
      }
    }
  }
}

TEST(LongestElement, Examples) {
  const WeylGroup a2(support::a2());
  EXPECT_EQ(a2.longest_element(Subset::of({1})), a2.generator(1));
  EXPECT_EQ(a2.canonical_word(a2.longest_element(Subset::full(2))), (Word{0, 1, 0}));
  const WeylGroup b2(support::b2());
  EXPECT_EQ(b2.length(b2.longest_element(Subset::full(2))), 4u);
  EXPECT_TRUE(a2.longest_element(Subset{}).is_identity());
  const WeylGroup aa1(support::affine_a1());
  EXPECT_EQ(error_tag([&] { aa1.longest_element(Subset::full(2)); }), "NotSpherical({1,2})");
}

TEST(LongestElement, InvolutionPermutingGenerators) {
  for (const auto& path : support::catalog_files()) {
    const WeylGroup g(io::load(path.string()).matrix);
    for (Subset k : nerve(g.diagram()).simplices()) {
      const WeylElement w = g.longest_element(k);
      EXPECT_TRUE((w * w).is_identity());
      EXPECT_EQ(g.length(w), finite_group_order(g.diagram(), k).positive_roots);
      Subset image;
      for (int i : k.indices()) {
        const WeylElement c = w * g.generator(i) * w;
        for (int j : k.indices())
          if (c == g.generator(j)) image = image.with(j);
      }
      EXPECT_EQ(image, k);
    }
  }
}

TEST(ElementOrder, Examples) {
  const WeylGroup a2(support::a2());
  EXPECT_EQ(a2.element_order(word(a2, {0, 1})).finite, std::optional<std::uint64_t>(3));
  EXPECT_EQ(a2.element_order(a2.generator(0)).finite, std::optional<std::uint64_t>(2));
  EXPECT_EQ(a2.element_order(a2.identity()).finite, std::optional<std::uint64_t>(1));
  const WeylGroup aa1(support::affine_a1());
  EXPECT_EQ(aa1.max_spherical_order(), 2u);
  EXPECT_TRUE(aa1.element_order(word(aa1, {0, 1})).infinite());
  EXPECT_EQ(aa1.element_order(word(aa1, {0, 1, 0})).finite, std::optional<std::uint64_t>(2));
}

TEST(ElementOrder, FiniteOrdersAreExact) {
  const WeylGroup g(support::affine_a2());
  for (const WeylElement& w : g.enumerate_ball(4)) {
    const ElementOrder o = g.element_order(w);
    if (o.infinite()) continue;
    EXPECT_TRUE(g.power_of(w, *o.finite).is_identity());
    for (std::uint64_t k = 1; k < *o.finite; ++k) EXPECT_FALSE(g.power_of(w, k).is_identity());
  }
}

TEST(Straight, Examples) {
  const WeylGroup aa1(support::affine_a1());
  EXPECT_TRUE(aa1.is_straight(word(aa1, {0, 1}), 10));
  const WeylGroup a2(support::a2());
  EXPECT_FALSE(a2.is_straight(a2.generator(0), 2));
  EXPECT_TRUE(a2.is_straight(a2.identity(), 5));
  EXPECT_THROW(a2.is_straight(a2.identity(), 1), Error);
}

TEST(Straight, ImpliesInfiniteOrder) {
  for (const CartanMatrix& a : {support::affine_a1(), support::affine_a2(), support::mixed()}) {
    const WeylGroup g(a);
    for (const WeylElement& w : g.enumerate_ball(4))
      if (!w.is_identity() && g.is_straight(w, 6)) {
        EXPECT_TRUE(g.element_order(w).infinite());
      }
  }
}

TEST(Ball, Examples) {
  const WeylGroup a2(support::a2());
  EXPECT_EQ(a2.enumerate_ball(0).size(), 1u);
  EXPECT_EQ(a2.enumerate_ball(3).size(), 6u);
  EXPECT_EQ(a2.enumerate_ball(10).size(), 6u);
  const WeylGroup aa1(support::affine_a1());
  EXPECT_EQ(aa1.enumerate_ball(3).size(), 7u);
}

TEST(Ball, MatchesCayleyBall) {
  for (const CartanMatrix& a : {support::affine_a2(), support::mixed()}) {
    const WeylGroup g(a);
    for (int r = 0; r <= 5; ++r) EXPECT_EQ(g.enumerate_ball(r).size(), oracle::cayley_ball(a, r).size());
  }
}

TEST(Ball, SpheresGrowInInfiniteGroups) {
  const WeylGroup g(support::affine_a2());
  std::size_t prev_sphere = 0;
  std::size_t prev_ball = 0;
  for (int r = 0; r <= 8; ++r) {
    const std::size_t ball = g.enumerate_ball(r).size();
    const std::size_t sphere = ball - prev_ball;
    EXPECT_GE(sphere, prev_sphere);
    prev_sphere = sphere;
    prev_ball = ball;
  }
}

TEST(Ball, SphericalSubgroupsAreExhausted) {
  for (const auto& path : support::catalog_files()) {
    const WeylGroup g(io::load(path.string()).matrix);
    for (Subset k : nerve(g.diagram()).simplices()) {
      const GroupOrder o = finite_group_order(g.diagram(), k);
      EXPECT_EQ(g.enumerate_ball(o.positive_roots, {}, k).size(), o.order);
    }
  }
}

TEST(Ball, Budget) {
  const WeylGroup g(support::affine_a2());
  EXPECT_EQ(error_tag([&] { g.enumerate_ball(20, Budget{100}); }), "BudgetExceeded");
  EXPECT_NO_THROW(g.enumerate_ball(2, Budget{100}));
}

TEST(Ball, LengthLexOrder) {
  const WeylGroup g(support::affine_a2());
  std::vector<WeylElement> ball = g.enumerate_ball(3);
  g.sort_length_lex(ball);
  for (std::size_t i = 1; i < ball.size(); ++i) {
    const Word x = g.canonical_word(ball[i - 1]);
    const Word y = g.canonical_word(ball[i]);
    EXPECT_TRUE(x.size() < y.size() || (x.size() == y.size() && x < y));
  }
}

TEST(RootSign, Dichotomy) {
  EXPECT_EQ(root_sign(std::vector<std::int64_t>{1, 0, 2}), RootSign::Positive);
  EXPECT_EQ(root_sign(std::vector<std::int64_t>{0, -1, -2}), RootSign::Negative);
  EXPECT_EQ(error_tag([] { root_sign(std::vector<std::int64_t>{1, -1}); }), "VerificationFailed");
  EXPECT_THROW(root_sign(std::vector<std::int64_t>{0, 0}), Error);
}

TEST(Overflow, ReportedNotWrapped) {
  // entries of the hyperbolic rank-2 group grow geometrically
  const WeylGroup g(support::gcm({{2, -9}, {-9, 2}}));
  WeylElement w = g.identity();
  EXPECT_EQ(error_tag([&] {
              for (int k = 0; k < 200; ++k) w = g.right_multiply(w, k % 2);
            }),
            "Overflow");
}
