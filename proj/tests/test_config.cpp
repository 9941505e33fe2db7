#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cutgroeb/config.hpp"
#include "cutgroeb/graph.hpp"

using namespace cutgroeb;

namespace {

int cut_weight(const Configuration& a, std::size_t col) {
  int w = 0;
  for (std::size_t r = 0; r + 1 < a.rows(); ++r) w += a.at(r, col);
  return w;
}

std::vector<std::int64_t> image_of(const Configuration& a, std::initializer_list<std::size_t> vars) {
  return a.image(Monomial::from_vars(a.cols(), vars));
}

// Matches rows and columns of a generic cut configuration against a printed one.
bool same_up_to_rows_and_columns(const Configuration& a, const Configuration& b) {
  auto rows = matching_row_permutation(a, b);
  return rows && same_up_to_column_permutation(a.permute_rows(*rows), b).has_value();
}

}  // namespace

TEST(Config, CutVector) {
  Graph c4 = Graph::cycle(4);
  std::vector<int> s{2};
  EXPECT_EQ(cut_vector(c4, s), (std::vector<int>{1, 1, 0, 0}));
  std::vector<int> none;
  EXPECT_EQ(cut_vector(c4, none), (std::vector<int>{0, 0, 0, 0}));
}

TEST(Config, CutVectorComplementSymmetry) {
  for (Graph g : {Graph::fig1(), Graph::complete(5), Graph::cycle(6)}) {
    const int m = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> s, t;
      for (int v = 1; v <= m; ++v) (mask >> (v - 1) & 1 ? s : t).push_back(v);
      EXPECT_EQ(cut_vector(g, s), cut_vector(g, t));
    }
  }
}

TEST(Config, CutConfigurationShape) {
  for (Graph g : {Graph::cycle(3), Graph::cycle(7), Graph::complete(4), Graph::fig1(),
                  Graph::complete_bipartite(2, 3)}) {
    Configuration a = cut_configuration(g);
    EXPECT_EQ(a.cols(), std::size_t{1} << (g.vertex_count() - 1));
    EXPECT_EQ(a.rows(), static_cast<std::size_t>(g.edge_count()) + 1);
    EXPECT_EQ(a.row(a.rows() - 1), std::vector<int>(a.cols(), 1));
    std::set<std::vector<int>> cols;
    for (std::size_t c = 0; c < a.cols(); ++c) cols.insert(a.column(c));
    EXPECT_EQ(cols.size(), a.cols());
  }
  EXPECT_THROW(cut_configuration(Graph(3, {{1, 2}})), Error);
}

TEST(Config, TriangleHasFullRank) {
  Configuration a = cut_configuration(Graph::cycle(3));
  EXPECT_EQ(a.rows(), 4u);
  EXPECT_EQ(a.cols(), 4u);
  EXPECT_EQ(integer_rank(a), 4u);
}

TEST(Config, GenericMatchesPrintedK23) {
  Configuration a = cut_configuration(Graph::complete_bipartite(2, 3));
  EXPECT_EQ(a.rows(), 7u);
  EXPECT_EQ(a.cols(), 16u);
  EXPECT_TRUE(same_up_to_rows_and_columns(a, fixture("k23")));
}

TEST(Config, GenericMatchesPrintedFig1) {
  Configuration a = cut_configuration(Graph::fig1());
  EXPECT_EQ(a.rows(), 8u);
  EXPECT_EQ(a.cols(), 32u);
  EXPECT_TRUE(same_up_to_rows_and_columns(a, fixture("fig1")));
}

TEST(Config, GenericMatchesPrintedC7) {
  EXPECT_TRUE(same_up_to_rows_and_columns(cut_configuration(Graph::cycle(7)), fixture("c7")));
  // the listed matrix is not a cut configuration of C_7
  EXPECT_FALSE(same_up_to_rows_and_columns(cut_configuration(Graph::cycle(7)), fixture("c7_printed")));
}

TEST(Config, FixtureShapes) {
  Configuration k23 = fixture("k23");
  EXPECT_EQ(k23.column(0), (std::vector<int>{0, 0, 0, 0, 0, 0, 1}));
  Configuration fig1 = fixture("fig1");
  EXPECT_EQ(fig1.row(7), std::vector<int>(32, 1));
  Configuration c7 = fixture("c7");
  ASSERT_EQ(c7.cols(), 64u);
  ASSERT_EQ(c7.rows(), 8u);
  EXPECT_EQ(cut_weight(c7, 0), 0);
  for (std::size_t c = 1; c <= 21; ++c) EXPECT_EQ(cut_weight(c7, c), 2) << c;
  for (std::size_t c = 22; c <= 56; ++c) EXPECT_EQ(cut_weight(c7, c), 4) << c;
  for (std::size_t c = 57; c <= 63; ++c) EXPECT_EQ(cut_weight(c7, c), 6) << c;
  EXPECT_THROW(fixture("nope"), Error);
}

TEST(Config, FixtureCorrectionIsOneEntry) {
  auto fixes = fixture_corrections();
  ASSERT_EQ(fixes.size(), 1u);
  EXPECT_EQ(fixes[0].fixture, "c7_B");
  Configuration printed = fixture("c7_printed"), fixed = fixture("c7");
  ASSERT_EQ(printed.rows(), fixed.rows());
  ASSERT_EQ(printed.cols(), fixed.cols());
  int diffs = 0;
  std::size_t dr = 0, dc = 0;
  for (std::size_t r = 0; r < printed.rows(); ++r)
    for (std::size_t c = 0; c < printed.cols(); ++c)
      if (printed.at(r, c) != fixed.at(r, c)) ++diffs, dr = r, dc = c;
  EXPECT_EQ(diffs, 1);
  // block B starts after the zero column and the 21 columns of A
  EXPECT_EQ(dr, fixes[0].row);
  EXPECT_EQ(dc, 22 + fixes[0].col);
  EXPECT_EQ(printed.at(dr, dc), fixes[0].printed);
  EXPECT_EQ(fixed.at(dr, dc), fixes[0].corrected);
  // the printed column has odd weight, impossible for a cut of an odd cycle
  EXPECT_EQ(cut_weight(printed, dc) % 2, 1);
}

TEST(Config, SquarefreeVeronese) {
  Configuration v = squarefree_veronese(7, 4);
  EXPECT_EQ(v.cols(), 35u);
  EXPECT_EQ(v.matrix(), fixture("c7_B").matrix());
  Configuration a = squarefree_veronese(7, 2);
  EXPECT_EQ(a.cols(), 21u);
  EXPECT_TRUE(same_up_to_column_permutation(a, fixture("c7_A")).has_value());
  EXPECT_TRUE(same_up_to_column_permutation(squarefree_veronese(7, 6), fixture("c7_C")).has_value());
  Configuration one = squarefree_veronese(3, 3);
  EXPECT_EQ(one.cols(), 1u);
  EXPECT_EQ(one.column(0), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(v.grading()[0], Rational(1, 4));
  EXPECT_THROW(squarefree_veronese(3, 4), Error);
  EXPECT_THROW(squarefree_veronese(3, 0), Error);
}

TEST(Config, ColumnPermutation) {
  Configuration k23 = fixture("k23");
  auto id = same_up_to_column_permutation(k23, k23);
  ASSERT_TRUE(id);
  std::vector<std::size_t> ident(16);
  std::iota(ident.begin(), ident.end(), std::size_t{0});
  EXPECT_EQ(*id, ident);
  std::vector<std::size_t> swapped = ident;
  std::swap(swapped[3], swapped[9]);
  auto sigma = same_up_to_column_permutation(k23, k23.select_columns(swapped));
  ASSERT_TRUE(sigma);
  EXPECT_EQ(*sigma, swapped);
  // same shape, different cycle structure
  Graph chorded(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3}});
  EXPECT_FALSE(same_up_to_column_permutation(k23, cut_configuration(chorded)));
}

TEST(Config, ConstructionValidates) {
  EXPECT_THROW(Configuration({{1, 1}, {0, 0}}, {Rational(1), Rational(0)}), Error);   // repeated column
  EXPECT_THROW(Configuration({{1, -1}}, {Rational(1)}), Error);                      // negative
  EXPECT_THROW(Configuration({{1, 2}}, {Rational(1)}), Error);                       // not graded
  Configuration c = Configuration::with_inferred_grading({{1, 1, 1}, {0, 1, 2}});
  EXPECT_EQ(c.grading()[0], Rational(1));
  Configuration v = Configuration::with_inferred_grading({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(v.grading()[0], Rational(1, 2));
}

TEST(Config, CpsSelect) {
  Configuration a = fixture("fig1");
  auto all = cps_select(a, a.grading());
  EXPECT_EQ(all.columns.size(), a.cols());
  for (std::size_t r = 0; r + 1 < a.rows(); ++r) {
    std::vector<Rational> f = a.grading();
    f[r] -= Rational(1);
    auto face = cps_select(a, f);
    EXPECT_EQ(face.columns.size(), 16u);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      bool selected = std::find(face.columns.begin(), face.columns.end(), c) != face.columns.end();
      EXPECT_EQ(selected, a.at(r, c) == 0);
    }
  }
  std::vector<Rational> too_big(a.rows(), Rational(0));
  too_big.back() = 2;
  EXPECT_THROW(cps_select(a, too_big), Error);
}

TEST(Config, ContractionSubring) {
  Graph c7 = Graph::cycle(7);
  for (const Edge& e : c7.edges()) {
    auto s = contraction_subring(c7, e);
    EXPECT_TRUE(same_up_to_rows_and_columns(s.config, cut_configuration(Graph::cycle(6))));
  }
  Graph g = Graph::fig1();
  int k23_hits = 0;
  for (const Edge& e : g.edges()) {
    Graph h = g.contract_edge(e);
    if (!is_isomorphic(h, Graph::complete_bipartite(2, 3))) continue;
    ++k23_hits;
    auto s = contraction_subring(g, e);
    EXPECT_EQ(s.columns.size(), 16u);
    EXPECT_TRUE(same_up_to_rows_and_columns(s.config, fixture("k23")));
  }
  EXPECT_GE(k23_hits, 1);
  EXPECT_THROW(contraction_subring(Graph::cycle(3), {1, 2}), Error);
  EXPECT_THROW(contraction_subring(Graph::cycle(5), {1, 3}), Error);
}

TEST(Config, K23DistinguishedFiber) {
  Configuration a = fixture("k23");
  // t_1..t_6 t_7^2: edge rows all 1, homogenizing row 2
  std::vector<std::int64_t> b{1, 1, 1, 1, 1, 1, 2};
  auto fiber = fiber_monomials(a, b, 2);
  std::set<Monomial> got(fiber.begin(), fiber.end());
  std::set<Monomial> want;
  for (std::size_t i = 1; i <= 8; ++i) want.insert(Monomial::from_vars(16, {i, 17 - i}));
  EXPECT_EQ(got, want);
}

TEST(Config, SmallFibers) {
  Configuration a = fixture("k23");
  auto sq = fiber_monomials(a, image_of(a, {1, 1}), 2);
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0], Monomial::from_vars(16, {1, 1}));
  for (std::size_t i = 1; i <= 16; ++i) {
    auto one = fiber_monomials(a, image_of(a, {i}), 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], Monomial::from_vars(16, {i}));
  }
  std::vector<std::int64_t> wrong{1, 1, 1, 1, 1, 1, 3};
  EXPECT_THROW(fiber_monomials(a, wrong, 2), Error);
}

TEST(Config, FiberRoundTrip) {
  Configuration a = fixture("fig1");
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::size_t i = rng() % 32 + 1, j = rng() % 32 + 1, k = rng() % 32 + 1;
    Monomial u = Monomial::from_vars(32, {i, j, k});
    auto f = fiber_monomials(a, a.image(u), 3);
    EXPECT_NE(std::find(f.begin(), f.end(), u), f.end());
    for (const auto& v : f) EXPECT_EQ(a.image(v), a.image(u));
  }
}

TEST(Config, RowOperations) {
  Configuration a = fixture("k23");
  EXPECT_THROW(a.delete_row(6), Error);
  Configuration b = a.delete_row(0);
  EXPECT_EQ(b.rows(), 6u);
  std::vector<std::size_t> rev{6, 5, 4, 3, 2, 1, 0};
  Configuration p = a.permute_rows(rev);
  EXPECT_EQ(p.row(0), a.row(6));
  auto back = matching_row_permutation(p, a);
  ASSERT_TRUE(back);
  EXPECT_TRUE(same_up_to_column_permutation(p.permute_rows(*back), a).has_value());
}
