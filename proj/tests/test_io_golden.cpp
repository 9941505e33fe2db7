#include <gtest/gtest.h>

#include <sstream>

#include "cutgroeb/config.hpp"
#include "cutgroeb/golden.hpp"
#include "cutgroeb/graph.hpp"
#include "cutgroeb/groebner.hpp"
#include "cutgroeb/io.hpp"
#include "cutgroeb/order.hpp"
#include "cutgroeb/toric.hpp"

using namespace cutgroeb;

TEST(Io, GraphRoundTrip) {
  for (Graph g : {Graph::fig1(), Graph::cycle(7), Graph::complete_bipartite(2, 3)}) {
    std::stringstream ss;
    write_graph(ss, g);
    EXPECT_EQ(read_graph(ss), g);
  }
  std::istringstream bad("3\n1 4\n");
  EXPECT_THROW(read_graph(bad), Error);
}

TEST(Io, ConfigurationRoundTrip) {
  for (const char* name : {"k23", "fig1", "c7", "c7_B"}) {
    Configuration a = fixture(name);
    std::stringstream ss;
    write_configuration(ss, a);
    Configuration b = read_configuration(ss);
    EXPECT_EQ(b.matrix(), a.matrix()) << name;
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Rational dot(0);
      for (std::size_t r = 0; r < b.rows(); ++r) dot += b.grading()[r] * b.at(r, c);
      EXPECT_EQ(dot, Rational(1));
    }
  }
}

TEST(Io, LoadConfigurationSpecs) {
  EXPECT_EQ(load_configuration("cut:k23").matrix(), cut_configuration(Graph::complete_bipartite(2, 3)).matrix());
  EXPECT_EQ(load_configuration("veronese:7,4").matrix(), fixture("c7_B").matrix());
  EXPECT_EQ(load_configuration("fig1").matrix(), fixture("fig1").matrix());
  EXPECT_EQ(load_configuration("phi:3").cols(), 8u);
  EXPECT_THROW(load_configuration("/nonexistent/file"), Error);
}

TEST(Io, BinomialText) {
  Binomial b(Monomial::from_vars(5, {1, 3, 3}), Monomial::from_vars(5, {2, 4, 5}));
  std::string s = canonical_element(b);
  EXPECT_EQ(s, "x_1*x_3^2 - x_2*x_4*x_5");
  EXPECT_EQ(parse_binomial(s, 5), b);
  EXPECT_EQ(parse_monomial("1", 3), Monomial(3));
  EXPECT_THROW(parse_monomial("x_4", 3), Error);
  EXPECT_THROW(parse_binomial("x_1 + x_2", 3), Error);
}

TEST(Io, BasisDumpRoundTrip) {
  auto gb = buchberger(toric_ideal(fixture("k23")), MonomialOrder::lex(16));
  std::string text = dump_basis(gb);
  BasisDump d = parse_basis_dump(text);
  EXPECT_EQ(d.num_vars, 16u);
  EXPECT_EQ(d.order, gb.order.descriptor());
  EXPECT_TRUE(d.reduced);
  ASSERT_EQ(d.elements.size(), gb.elements.size());
  std::set<std::string> a, b;
  for (const auto& e : gb.elements) a.insert(canonical_element(e));
  for (const auto& e : d.elements) b.insert(canonical_element(e));
  EXPECT_EQ(a, b);
}

TEST(Golden, ParserBasics) {
  auto p = parse_golden_list("$\\{x_{1}x_{2}-x_{3}x_{4}, -x_{2}x_{1}+x_{4}x_{3},\\\\ x_{5}x_{6}+x_{7}x_{8}\\}$", 8);
  EXPECT_EQ(p.printed_count, 3u);
  EXPECT_EQ(p.pairs.size(), 2u);
  EXPECT_EQ(p.duplicates, 1u);
  ASSERT_EQ(p.sign_typos.size(), 1u);
  EXPECT_NE(p.sign_typos[0].find("x_{5}x_{6}"), std::string::npos);
  EXPECT_THROW(parse_golden_list("$\\{x_{1}x_{2}\\}$", 8), Error);
}

TEST(Golden, Fig1PrintedList) {
  GoldenParse p = parse_golden_fig1();
  EXPECT_EQ(p.printed_count, 146u);
  EXPECT_EQ(p.pairs.size(), 146u);
  ASSERT_EQ(p.sign_typos.size(), 1u);
  EXPECT_EQ(p.sign_typos[0], "x_{27}x_{31}+x_{28}x_{32}");
  EXPECT_TRUE(p.unbalanced.empty());
  Configuration a = fixture("fig1");
  for (const auto& [u, v] : p.pairs) EXPECT_EQ(a.image(u), a.image(v));
}

TEST(Golden, Fig1WeightBasisMatches) {
  Configuration a = fixture("fig1");
  auto w = named_order("w_fig1");
  BuchbergerStats st;
  auto gb = buchberger(toric_ideal(a), w, {}, &st);
  EXPECT_TRUE(is_quadratic(gb));
  EXPECT_EQ(gb.elements.size(), 146u);
  EXPECT_TRUE(initial_strict_under_weight(w.weights(), gb.elements));
  EXPECT_FALSE(st.tie_used_in_marking);
  EXPECT_EQ(pair_set(gb), parse_golden_fig1().as_set());
}

TEST(Golden, PrintedListGeneratesTheIdeal) {
  // independent of the engine's own generators: the printed pairs alone give the same reduced basis
  Configuration a = fixture("fig1");
  std::vector<Binomial> printed;
  for (const auto& [u, v] : parse_golden_fig1().pairs) printed.emplace_back(u, v);
  auto o = MonomialOrder::degrevlex(32);
  EXPECT_EQ(dump_basis(buchberger(printed, o)), dump_basis(buchberger(toric_ideal(a), o)));
}
