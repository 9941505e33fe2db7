#include "cutgroeb/scenarios.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "cutgroeb/config.hpp"
#include "cutgroeb/cyclecut.hpp"
#include "cutgroeb/golden.hpp"
#include "cutgroeb/graph.hpp"
#include "cutgroeb/groebner.hpp"
#include "cutgroeb/order.hpp"
#include "cutgroeb/toric.hpp"

namespace cutgroeb {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string histogram_text(const std::map<int, std::size_t>& h) {
  std::string s = "{";
  for (const auto& [d, c] : h) s += (s.size() > 1 ? ", " : "") + std::to_string(d) + ":" + std::to_string(c);
  return s + "}";
}

class Runner {
 public:
  explicit Runner(ScenarioReport& r) : r_(r) {}

  // fn returns pass/fail and fills detail; an exception is a failure.
  void check(const std::string& name, const std::function<bool(std::string&)>& fn) {
    Check c;
    c.name = name;
    auto t0 = Clock::now();
    try {
      c.passed = fn(c.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("error: ") + e.what();
    }
    c.seconds = since(t0);
    r_.checks.push_back(std::move(c));
  }
  void note(std::string line) { r_.notes.push_back(std::move(line)); }

 private:
  ScenarioReport& r_;
};

void fig1_weight(Runner& run) {
  const Configuration a = fixture("fig1");
  const MonomialOrder w = named_order("w_fig1");
  GroebnerBasis gb{{}, w, false};
  BuchbergerStats stats;
  run.check("reduced basis is quadratic", [&](std::string& d) {
    gb = buchberger(toric_ideal(a), w, {}, &stats);
    d = std::to_string(gb.elements.size()) + " elements, degrees " + histogram_text(degree_histogram(gb));
    return !gb.elements.empty() && is_quadratic(gb);
  });
  run.check("w alone determines every initial term", [&](std::string& d) {
    bool strict = initial_strict_under_weight(w.weights(), gb.elements);
    d = std::string("strict on all elements: ") + (strict ? "yes" : "no") +
        "; tie order consulted during marking: " + (stats.tie_used_in_marking ? "yes" : "no");
    return strict && !gb.elements.empty();
  });
  GoldenParse golden;
  run.check("printed basis parses with exactly one sign typo", [&](std::string& d) {
    golden = parse_golden_fig1();
    d = std::to_string(golden.printed_count) + " printed, " + std::to_string(golden.pairs.size()) + " distinct, " +
        std::to_string(golden.duplicates) + " duplicates; typo: " +
        (golden.sign_typos.empty() ? std::string("none") : golden.sign_typos.front());
    return golden.sign_typos.size() == 1;
  });
  run.check("every printed pair is balanced", [&](std::string& d) {
    d = std::to_string(golden.unbalanced.size()) + " unbalanced";
    for (const auto& u : golden.unbalanced) d += "; " + u;
    return golden.printed_count > 0 && golden.unbalanced.empty();
  });
  run.check("computed basis equals the printed set", [&](std::string& d) {
    auto mine = pair_set(gb);
    auto theirs = golden.as_set();
    std::size_t only_mine = 0, only_theirs = 0;
    for (const auto& p : mine) only_mine += theirs.count(p) == 0;
    for (const auto& p : theirs) only_theirs += mine.count(p) == 0;
    d = std::to_string(mine.size()) + " computed vs " + std::to_string(theirs.size()) + " printed; " +
        std::to_string(only_mine) + " only computed, " + std::to_string(only_theirs) + " only printed";
    return !mine.empty() && mine == theirs;
  });
}

void c7_lex(Runner& run) {
  const Configuration a = fixture("c7");
  std::vector<Binomial> gens;
  run.check("toric generators of the 7-cycle", [&](std::string& d) {
    gens = toric_ideal(a);
    d = std::to_string(gens.size()) + " generators";
    return !gens.empty();
  });
  GroebnerBasis gb{{}, named_order("lex_c7"), false};
  run.check("reduced lex basis has 1050 elements", [&](std::string& d) {
    gb = buchberger(gens, gb.order);
    d = std::to_string(gb.elements.size()) + " elements";
    return gb.elements.size() == 1050;
  });
  run.check("every element has degree 2", [&](std::string& d) {
    d = "degrees " + histogram_text(degree_histogram(gb));
    return !gb.elements.empty() && is_quadratic(gb);
  });
}

void b_lex(Runner& run) {
  const Configuration b = fixture("c7_B");
  run.check("block B is the (7,4) squarefree Veronese configuration", [&](std::string& d) {
    bool same = b.matrix() == squarefree_veronese(7, 4).matrix();
    d = same ? "35 columns in printed order" : "column mismatch";
    return same;
  });
  run.check("reduced basis under >_1 is quadratic", [&](std::string& d) {
    GroebnerBasis gb = buchberger(toric_ideal(b), named_order("lex1_B"));
    d = std::to_string(gb.elements.size()) + " elements, degrees " + histogram_text(degree_histogram(gb));
    return !gb.elements.empty() && is_quadratic(gb);
  });
}

void k23_lex_facts(Runner& run) {
  const Configuration a = fixture("k23");
  const std::size_t n = a.cols();
  run.check("fiber of t1..t6 t7^2 is the 8 printed monomials", [&](std::string& d) {
    std::vector<std::int64_t> target{1, 1, 1, 1, 1, 1, 2};
    auto fiber = fiber_monomials(a, target, 2);
    std::set<Monomial> got(fiber.begin(), fiber.end());
    std::set<Monomial> want;
    for (std::size_t i = 1; i <= 8; ++i) want.insert(Monomial::from_vars(n, {i, 17 - i}));
    d = std::to_string(fiber.size()) + " monomials";
    return got == want && fiber.size() == 8;
  });
  const std::vector<std::array<std::size_t, 6>> f = {
      {6, 7, 9, 1, 5, 16},   {5, 8, 10, 1, 6, 16}, {5, 8, 11, 1, 7, 16},  {6, 7, 12, 1, 8, 16},
      {5, 10, 11, 1, 9, 16}, {6, 9, 12, 1, 10, 16}, {7, 9, 12, 1, 11, 16}, {8, 10, 11, 1, 12, 16}};
  std::vector<Binomial> gens;
  run.check("f_1..f_8 lie in the cut ideal", [&](std::string& d) {
    gens = toric_ideal(a);
    Reducer r(buchberger(gens, MonomialOrder::degrevlex(n)).elements);
    std::size_t members = 0, balanced = 0;
    for (const auto& t : f) {
      Binomial b(Monomial::from_vars(n, {t[0], t[1], t[2]}), Monomial::from_vars(n, {t[3], t[4], t[5]}));
      members += r.equivalent(b);
      balanced += a.balanced(b);
    }
    d = std::to_string(members) + "/8 members, " + std::to_string(balanced) + "/8 balanced";
    return members == 8 && balanced == 8;
  });
  run.check("no binomial has x_1x_i or x_ix_16 as a term, i = 5..12", [&](std::string& d) {
    std::size_t ok = 0;
    for (std::size_t i = 5; i <= 12; ++i) {
      ok += no_binomial_with_monomial(a, Monomial::from_vars(n, {1, i}));
      ok += no_binomial_with_monomial(a, Monomial::from_vars(n, {i, 16}));
    }
    d = std::to_string(ok) + "/16 hold";
    return ok == 16;
  });
  run.check("minimal generators all have degree 2", [&](std::string& d) {
    auto degs = minimal_generation_degrees(gens, a);
    d = "minimal generators by degree " + histogram_text(degs);
    return degs.size() == 1 && degs.begin()->first == 2;
  });
}

void revlex_squarefree(Runner& run, const ScenarioOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  run.note("seed " + std::to_string(opt.seed) + ", " + std::to_string(opt.samples) + " samples per graph");
  {
    const Configuration a = fixture("k23");
    const auto gens = toric_ideal(a);
    for (int s = 0; s < opt.samples; ++s) {
      auto perm = seeded_permutation(a.cols(), rng);
      run.check("K_{2,3} sample " + std::to_string(s + 1) + " squarefree initial ideal", [&](std::string& d) {
        MonomialOrder o = MonomialOrder::degrevlex(perm);
        GroebnerBasis gb = buchberger(gens, o);
        d = o.descriptor() + " degrees " + histogram_text(degree_histogram(gb));
        return is_squarefree_initial(gb);
      });
    }
  }
  {
    const Configuration a = fixture("fig1");
    const auto gens = toric_ideal(a);
    for (int s = 0; s < opt.samples; ++s) {
      auto perm = seeded_permutation(a.cols(), rng);
      run.check("theta graph sample " + std::to_string(s + 1) + " not quadratic, not squarefree", [&](std::string& d) {
        MonomialOrder o = MonomialOrder::degrevlex(perm);
        GroebnerBasis gb = buchberger(gens, o);
        bool quad = is_quadratic(gb), sqf = is_squarefree_initial(gb);
        d = o.descriptor() + " degrees " + histogram_text(degree_histogram(gb)) +
            (quad ? " quadratic" : " non-quadratic") + (sqf ? ", squarefree" : ", non-squarefree");
        return !quad && !sqf;
      });
    }
  }
}

void cycle_contract(Runner& run) {
  const MonomialOrder lex = named_order("lex_c7");
  Configuration cur = fixture("c7");
  std::vector<std::size_t> cols(cur.cols());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  for (int k = 7; k > 4; --k) {
    const std::string step = "C_" + std::to_string(k) + " -> C_" + std::to_string(k - 1);
    run.check(step + ": face of a contracted edge matches the cycle", [&](std::string& d) {
      std::vector<Rational> f = cur.grading();
      f[0] -= Rational(1);
      Subconfiguration face = cps_select(cur, f);
      Configuration next = face.config.delete_row(0);
      std::vector<std::size_t> next_cols;
      for (std::size_t c : face.columns) next_cols.push_back(cols[c]);
      Configuration target = cut_configuration(Graph::cycle(k - 1));
      auto rows = matching_row_permutation(next, target);
      bool match = rows && same_up_to_column_permutation(next.permute_rows(*rows), target).has_value();
      d = std::to_string(next.cols()) + " columns selected";
      cur = std::move(next);
      cols = std::move(next_cols);
      return match && cur.cols() == (std::size_t{1} << (k - 2));
    });
    run.check(step + ": generic contraction matches", [&](std::string& d) {
      Graph g = Graph::cycle(k);
      Subconfiguration s = contraction_subring(g, g.edges().front());
      bool same = same_up_to_column_permutation(s.config, cut_configuration(Graph::cycle(k - 1))).has_value();
      d = std::to_string(s.columns.size()) + " columns, " + (same ? "equal to" : "differs from") +
          " the cut configuration of C_" + std::to_string(k - 1) + " up to columns";
      return same && s.columns.size() == (std::size_t{1} << (k - 2));
    });
    run.check(step + ": induced lex order gives a quadratic basis", [&](std::string& d) {
      GroebnerBasis gb = buchberger(toric_ideal(cur), lex.restricted(cols));
      d = std::to_string(gb.elements.size()) + " elements, degrees " + histogram_text(degree_histogram(gb));
      return !gb.elements.empty() && is_quadratic(gb);
    });
  }
}

void q_refute(Runner& run) {
  RefutationReport rep;
  run.check("refutation computed", [&](std::string& d) {
    rep = refute_generation(5);
    d = "|G_5| = " + std::to_string(rep.gm_size);
    return true;
  });
  run.check("q in I_5", [&](std::string& d) {
    d = rep.q_in_im ? "member" : "not a member";
    return rep.q_in_im;
  });
  run.check("q' not in I_4", [&](std::string& d) {
    d = rep.q_prime_in_smaller ? "member" : "not a member";
    return !rep.q_prime_in_smaller;
  });
  run.check("q not in G_5", [&](std::string& d) {
    d = std::string("rule 1 ") + (rep.q_positions.rule1_holds ? "holds" : "fails") + ", rule 2 " +
        (rep.q_positions.rule2_holds ? "holds" : "fails");
    return !rep.q_in_gm_set && !rep.q_positions.in_gm();
  });
  run.check("q not in <G_5>", [&](std::string& d) {
    d = rep.q_in_gm_ideal ? "member" : "not a member";
    return !rep.q_in_gm_ideal;
  });
  run.check("no binomial between elements of P lies in <G_5>", [&](std::string& d) {
    d = "|P| = " + std::to_string(rep.p_size) + ", " + std::to_string(rep.p_pairs_in_im) + "/" +
        std::to_string(rep.p_pairs) + " pairs in I_5, " + std::to_string(rep.p_pairs_in_gm_ideal) + " in <G_5>";
    return rep.p_size == 16 && rep.p_pairs_in_im > 0 && rep.p_pairs_in_gm_ideal == 0 && rep.p_pairs_in_gm_set == 0;
  });
  std::istringstream lines(rep.to_string());
  for (std::string line; std::getline(lines, line);) run.note(line);
}

void table1(Runner& run, const ScenarioOptions& opt) {
  MonomialOrder o = opt.table1_order.empty() ? table1_default_order() : parse_order(opt.table1_order, 32);
  run.note("order " + o.descriptor());
  run.check("histogram of the reduced basis of I_5", [&](std::string& d) {
    auto h = table1_exploration(o);
    auto target = table1_target();
    d = histogram_text(h) + " vs printed " + histogram_text(target) + (h == target ? ": match" : ": mismatch");
    return true;
  });
}

void oracle_crosscheck(Runner& run) {
  struct Case {
    std::string name;
    Configuration a;
  };
  std::vector<Case> cases;
  for (int k = 3; k <= 5; ++k) cases.push_back({"C_" + std::to_string(k), cut_configuration(Graph::cycle(k))});
  cases.push_back({"K_{2,3}", cut_configuration(Graph::complete_bipartite(2, 3))});
  cases.push_back({"twisted conic", Configuration::with_inferred_grading({{1, 1, 1}, {0, 1, 2}})});
  ToricOptions bare;
  bare.seed_quadrics = false;
  for (const Case& c : cases) {
    run.check(c.name + ": saturation agrees with fiber oracle to degree 3", [&](std::string& d) {
      auto sat = toric_ideal(c.a, bare);
      auto oracle = fiber_markov_oracle(c.a, 3);
      d = std::to_string(sat.size()) + " saturation generators, " + std::to_string(oracle.size()) + " oracle moves";
      return same_ideal_up_to_degree(sat, oracle, 3);
    });
  }
  run.check("cut ideal of C_3 is zero", [&](std::string& d) {
    Configuration a = cut_configuration(Graph::cycle(3));
    auto sat = toric_ideal(a, bare);
    d = "rank " + std::to_string(integer_rank(a)) + ", " + std::to_string(sat.size()) + " generators";
    return sat.empty() && integer_rank(a) == a.cols();
  });
}

struct Entry {
  std::string id;
  std::string description;
  bool binding;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {"fig1-weight", "theta graph: reduced basis under w, against the printed list", true},
      {"c7-lex", "7-cycle: reduced lex basis has 1050 quadrics", true},
      {"b-lex", "(7,4) squarefree Veronese: quadratic lex basis", true},
      {"k23-lex-facts", "K_{2,3}: fiber, cubics and nonexistence facts", true},
      {"revlex-squarefree", "sampled degrevlex orders on K_{2,3} and the theta graph", true},
      {"cycle-contract", "contraction chain C_7 -> C_4 with induced lex orders", true},
      {"q-refute", "I_5 is not generated by G_5", true},
      {"table1", "I_5 degree histogram against the printed table (reported only)", false},
      {"oracle-crosscheck", "saturation against brute-force fibers", true},
  };
  return e;
}

}  // namespace

bool ScenarioReport::passed() const {
  if (!binding) return true;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string ScenarioReport::to_text() const {
  std::ostringstream os;
  os << "== " << id << ": " << description << (binding ? "" : " [non-binding]") << "\n";
  for (const Check& c : checks) {
    const char* tag = c.passed ? "PASS" : (binding ? "FAIL" : "INFO");
    os << "  [" << tag << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  for (const auto& n : notes) os << "  | " << n << "\n";
  os << "  => " << (passed() ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::string ScenarioReport::summary_lines() const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  for (const Check& c : checks) {
    std::string name = c.name;
    std::replace(name.begin(), name.end(), ' ', '_');
    os << id << " " << name << " " << (c.passed || !binding ? "pass" : "fail") << " " << c.seconds << "\n";
  }
  return os.str();
}

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : entries()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return p;
}

ScenarioReport run_scenario(const std::string& id, const ScenarioOptions& options) {
  auto it = std::find_if(entries().begin(), entries().end(), [&](const Entry& e) { return e.id == id; });
  if (it == entries().end()) throw Error("unknown scenario '" + id + "'");
  ScenarioReport r;
  r.id = it->id;
  r.description = it->description;
  r.binding = it->binding;
  Runner run(r);
  auto t0 = Clock::now();
  if (id == "fig1-weight") fig1_weight(run);
  else if (id == "c7-lex") c7_lex(run);
  else if (id == "b-lex") b_lex(run);
  else if (id == "k23-lex-facts") k23_lex_facts(run);
  else if (id == "revlex-squarefree") revlex_squarefree(run, options);
  else if (id == "cycle-contract") cycle_contract(run);
  else if (id == "q-refute") q_refute(run);
  else if (id == "table1") table1(run, options);
  else if (id == "oracle-crosscheck") oracle_crosscheck(run);
  r.seconds = since(t0);
  return r;
}

}  // namespace cutgroeb
