#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cutgroeb/config.hpp"
#include "cutgroeb/graph.hpp"
#include "cutgroeb/groebner.hpp"
#include "cutgroeb/order.hpp"
#include "cutgroeb/scenarios.hpp"
#include "cutgroeb/toric.hpp"

using namespace cutgroeb;

namespace {

Binomial bin(std::size_t n, std::initializer_list<std::size_t> a, std::initializer_list<std::size_t> b) {
  return Binomial(Monomial::from_vars(n, a), Monomial::from_vars(n, b));
}

std::set<std::string> elements(const GroebnerBasis& g) {
  std::set<std::string> s;
  for (const auto& b : g.elements) s.insert(canonical_element(b));
  return s;
}

// Twisted cubic (s^3, s^2 t, s t^2, t^3): the three 2x2 minors, worked out by hand.
std::vector<Binomial> twisted_cubic() {
  return {bin(4, {1, 3}, {2, 2}), bin(4, {2, 4}, {3, 3}), bin(4, {1, 4}, {2, 3})};
}

// Brute force: is u - v in the ideal? For toric ideals this is A.u == A.v.
bool balanced(const Configuration& a, const Monomial& u, const Monomial& v) { return a.image(u) == a.image(v); }

}  // namespace

TEST(Groebner, SPair) {
  auto o = MonomialOrder::degrevlex(4);
  auto s = s_pair(o.mark(twisted_cubic()[0]), o.mark(twisted_cubic()[2]), o);
  ASSERT_TRUE(s);
  // leads x_2^2 and x_2x_3, lcm x_2^2x_3: x_3 * x_1x_3 - x_2 * x_1x_4
  EXPECT_TRUE(same_up_to_sign(*s, bin(4, {1, 3, 3}, {1, 2, 4})));
  Binomial g = o.mark(twisted_cubic()[0]);
  EXPECT_FALSE(s_pair(g, g, o));
}

TEST(Groebner, TwistedCubicGrevlex) {
  auto gb = buchberger(twisted_cubic(), MonomialOrder::degrevlex(4));
  EXPECT_TRUE(gb.reduced);
  EXPECT_EQ(elements(gb), (std::set<std::string>{"x_2^2 - x_1*x_3", "x_2*x_3 - x_1*x_4", "x_3^2 - x_2*x_4"}));
}

TEST(Groebner, TwistedCubicLex) {
  auto gb = buchberger(twisted_cubic(), MonomialOrder::lex(4));
  EXPECT_EQ(elements(gb), (std::set<std::string>{"x_1*x_3 - x_2^2", "x_1*x_4 - x_2*x_3", "x_2*x_4 - x_3^2"}));
}

TEST(Groebner, NormalForm) {
  auto gb = buchberger(twisted_cubic(), MonomialOrder::degrevlex(4));
  // x_2^3 -> x_1 x_2 x_3 -> ... stays in the fiber and is standard at the end
  Monomial m = Monomial::from_vars(4, {2, 2, 2});
  Monomial nf = normal_form(m, gb.elements);
  Reducer r(gb.elements);
  EXPECT_EQ(r.normal_form(m), nf);
  for (const auto& g : gb.elements) EXPECT_FALSE(g.lead.divides(nf));
  EXPECT_EQ(Configuration::with_inferred_grading({{1, 1, 1, 1}, {0, 1, 2, 3}}).image(nf),
            Configuration::with_inferred_grading({{1, 1, 1, 1}, {0, 1, 2, 3}}).image(m));
}

TEST(Groebner, MembershipAgreesWithBalance) {
  Configuration a = fixture("k23");
  auto gens = toric_ideal(a);
  auto gb = buchberger(gens, MonomialOrder::degrevlex(16));
  std::mt19937_64 rng(3);
  int members = 0;
  for (int t = 0; t < 3000; ++t) {
    Monomial u = Monomial::from_vars(16, {rng() % 16 + 1, rng() % 16 + 1});
    Monomial v = Monomial::from_vars(16, {rng() % 16 + 1, rng() % 16 + 1});
    if (u == v) continue;
    bool in = ideal_membership(Binomial(u, v), gb);
    EXPECT_EQ(in, balanced(a, u, v)) << u.to_string() << " " << v.to_string();
    members += in;
  }
  EXPECT_GT(members, 0);
}

TEST(Groebner, ReducedIsIdempotent) {
  for (auto a : {fixture("k23"), cut_configuration(Graph::cycle(5)), squarefree_veronese(5, 2)}) {
    auto gens = toric_ideal(a);
    for (auto o : {MonomialOrder::degrevlex(a.cols()), MonomialOrder::lex(a.cols())}) {
      auto gb = buchberger(gens, o);
      EXPECT_EQ(dump_basis(buchberger(gb.elements, o)), dump_basis(gb));
      EXPECT_EQ(dump_basis(reduce_basis(gb)), dump_basis(gb));
    }
  }
}

TEST(Groebner, ReducedBasisShape) {
  auto gb = buchberger(toric_ideal(fixture("k23")), MonomialOrder::lex(16));
  std::set<Monomial> leads;
  for (const auto& g : gb.elements) {
    EXPECT_TRUE(gb.order.compare(g.lead, g.tail) > 0);
    leads.insert(g.lead);
    for (const auto& h : gb.elements) {
      if (&g == &h) continue;
      EXPECT_FALSE(h.lead.divides(g.lead));
      EXPECT_FALSE(h.lead.divides(g.tail));
    }
  }
  EXPECT_EQ(leads.size(), gb.elements.size());
}

TEST(Groebner, PlainAndChainAgree) {
  std::vector<Configuration> cases{fixture("k23"), cut_configuration(Graph::cycle(5)), squarefree_veronese(6, 3),
                                   fixture("fig1")};
  std::mt19937_64 rng(17);
  for (const auto& a : cases) {
    auto gens = toric_ideal(a);
    for (int t = 0; t < 3; ++t) {
      auto o = MonomialOrder::degrevlex(seeded_permutation(a.cols(), rng));
      BuchbergerStats plain_st, gm_st;
      auto plain = buchberger(gens, o, {.chain_criterion = false}, &plain_st);
      auto gm = buchberger(gens, o, {.chain_criterion = true}, &gm_st);
      EXPECT_EQ(dump_basis(plain), dump_basis(gm));
      EXPECT_LE(gm_st.pairs_reduced, plain_st.pairs_reduced);
    }
  }
}

TEST(Groebner, UniqueUnderShuffle) {
  Configuration a = cut_configuration(Graph::complete_bipartite(2, 3));
  auto gens = toric_ideal(a);
  std::mt19937_64 rng(23);
  std::vector<std::int64_t> w(16);
  for (auto& x : w) x = static_cast<std::int64_t>(rng() % 3);
  for (const auto& o : {MonomialOrder::lex(seeded_permutation(16, rng)), MonomialOrder::degrevlex(16),
                        MonomialOrder::weight(w, MonomialOrder::degrevlex(seeded_permutation(16, rng)))}) {
    std::string ref = dump_basis(buchberger(gens, o));
    for (int s = 0; s < 5; ++s) {
      auto perm = seeded_permutation(gens.size(), rng);
      std::vector<Binomial> g;
      for (std::size_t i : perm) g.push_back(rng() % 2 ? gens[i] : Binomial(gens[i].tail, gens[i].lead));
      // a redundant copy does not change the answer
      g.push_back(gens.front());
      EXPECT_EQ(dump_basis(buchberger(g, o)), ref);
    }
  }
}

TEST(Groebner, Histograms) {
  auto gb = buchberger(twisted_cubic(), MonomialOrder::lex(4));
  EXPECT_EQ(degree_histogram(gb), (std::map<int, std::size_t>{{2, 3}}));
  EXPECT_TRUE(is_quadratic(gb));
  EXPECT_FALSE(is_squarefree_initial(buchberger(twisted_cubic(), MonomialOrder::degrevlex(4))));
}

TEST(Groebner, SquarefreeInitialDetection) {
  // x1x4 - x2x3 alone: lead x1x4 is squarefree
  std::vector<Binomial> g{bin(4, {1, 4}, {2, 3})};
  EXPECT_TRUE(is_squarefree_initial(buchberger(g, MonomialOrder::lex(4))));
}

TEST(Groebner, TieUsedFlag) {
  std::vector<std::int64_t> ones(4, 1);
  BuchbergerStats st;
  buchberger(twisted_cubic(), MonomialOrder::weight(ones, MonomialOrder::degrevlex(4)), {}, &st);
  EXPECT_TRUE(st.tie_used_in_marking);
  BuchbergerStats st2;
  auto w = named_order("w_fig1");
  buchberger(toric_ideal(fixture("fig1")), w, {}, &st2);
  EXPECT_FALSE(st2.tie_used_in_marking);
}

TEST(Groebner, MinimalGenerationDegrees) {
  Configuration k23 = fixture("k23");
  EXPECT_EQ(minimal_generation_degrees(toric_ideal(k23), k23), (std::map<int, std::size_t>{{2, 19}}));
  // K_4: no quadrics in the cut ideal, so all minimal generators have degree > 2
  Configuration k4 = cut_configuration(Graph::complete(4));
  auto gens = toric_ideal(k4);
  ASSERT_FALSE(gens.empty());
  auto h = minimal_generation_degrees(gens, k4);
  ASSERT_FALSE(h.empty());
  EXPECT_GT(h.begin()->first, 2);
  EXPECT_TRUE(balanced_quadrics(k4).empty());
}

TEST(Groebner, NoBinomialWithMonomial) {
  Configuration k23 = fixture("k23");
  for (std::size_t i = 5; i <= 12; ++i) {
    EXPECT_TRUE(no_binomial_with_monomial(k23, Monomial::from_vars(16, {1, i})));
    EXPECT_TRUE(no_binomial_with_monomial(k23, Monomial::from_vars(16, {i, 16})));
  }
  EXPECT_FALSE(no_binomial_with_monomial(k23, Monomial::from_vars(16, {1, 16})));
}

TEST(Groebner, DumpFormat) {
  auto gb = buchberger(twisted_cubic(), MonomialOrder::lex(4));
  std::string d = dump_basis(gb);
  EXPECT_EQ(d,
            "n=4 order=lex(1,2,3,4) reduced=true\n"
            "x_1*x_3 - x_2^2\n"
            "x_1*x_4 - x_2*x_3\n"
            "x_2*x_4 - x_3^2\n");
}

TEST(Groebner, RejectsMismatchedInput) {
  std::vector<Binomial> g{bin(3, {1}, {2})};
  EXPECT_THROW(buchberger(g, MonomialOrder::lex(4)), Error);
}
