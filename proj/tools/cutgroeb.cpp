// cutgroeb: cut ideals, toric ideals and binomial Groebner bases from the command line.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutgroeb/config.hpp"
#include "cutgroeb/cyclecut.hpp"
#include "cutgroeb/golden.hpp"
#include "cutgroeb/groebner.hpp"
#include "cutgroeb/io.hpp"
#include "cutgroeb/order.hpp"
#include "cutgroeb/scenarios.hpp"
#include "cutgroeb/toric.hpp"

namespace cg = cutgroeb;

namespace {

struct OrderFlags {
  std::string kind = "grevlex";
  std::string perm, w, tie = "grevlex";

  void attach(CLI::App* app) {
    app->add_option("--order", kind, "lex | grevlex | weight | named:<name> | full descriptor")->capture_default_str();
    app->add_option("--perm", perm, "variable ranking, highest first, 1-based, comma-separated");
    app->add_option("--w", w, "weight vector, comma-separated");
    app->add_option("--tie", tie, "tie-break for weight orders: grevlex | lex | descriptor")->capture_default_str();
  }

  cg::MonomialOrder build(std::size_t n) const {
    if (kind == "weight") {
      if (w.empty()) throw cg::Error("--order weight needs --w");
      return cg::parse_order("weight(" + w + ";" + tie + ")", n);
    }
    if (!perm.empty() && (kind == "lex" || kind == "grevlex" || kind == "degrevlex"))
      return cg::parse_order(kind + "(" + perm + ")", n);
    return cg::parse_order(kind, n);
  }
};

void print_generators(std::vector<cg::Binomial> gens) {
  std::vector<std::string> lines;
  for (const auto& g : gens) lines.push_back(cg::canonical_element(g));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) std::cout << l << "\n";
}

std::string histogram(const std::map<int, std::size_t>& h) {
  std::string s;
  for (const auto& [d, c] : h) s += (s.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(c);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut ideals of graphs and Groebner bases of toric ideals"};
  app.require_subcommand(1);

  // config
  auto* config = app.add_subcommand("config", "print the cut configuration of a graph");
  std::string graph_spec;
  config->add_option("--graph", graph_spec, "graph file or named graph (c7, k23, k4, fig1, c<n>, k<n>, k<p><q>)")->required();

  // dump-config
  auto* dump = app.add_subcommand("dump-config", "print a fixture matrix");
  std::string fixture_name;
  dump->add_option("fixture", fixture_name, "k23 | fig1 | c7 | c7_A | c7_B | c7_C | c7_printed")->required();

  // gb
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the toric ideal of a configuration");
  std::string gb_config, gb_golden;
  bool gb_stats = false, gb_chain = false;
  OrderFlags gb_order;
  gb->add_option("--config", gb_config, "configuration file, fixture, cut:<graph>, phi:<m>, veronese:<d>,<k>")->required();
  gb_order.attach(gb);
  gb->add_flag("--stats", gb_stats, "print pair and reduction counts to stderr");
  gb->add_flag("--chain", gb_chain, "Gebauer-Moeller pair elimination");
  gb->add_option("--golden", gb_golden, "basis dump or TeX list to compare against as unordered pairs");

  // toric
  auto* toric = app.add_subcommand("toric", "generators of the toric ideal");
  std::string toric_config;
  int oracle_degree = 0;
  bool no_seed = false;
  toric->add_option("--config", toric_config, "configuration spec as for gb")->required();
  toric->add_option("--oracle-check", oracle_degree, "compare with brute-force fibers up to this degree");
  toric->add_flag("--no-seed", no_seed, "saturate the bare lattice ideal");

  // cycleq
  auto* cycleq = app.add_subcommand("cycleq", "q-variable presentation of cycle cut ideals");
  int qm = 5;
  bool refute = false, table1 = false;
  std::string q_order;
  cycleq->add_option("--m", qm, "number of index bits")->capture_default_str();
  cycleq->add_flag("--refute", refute, "check that I_m is not generated by G_m");
  cycleq->add_flag("--table1", table1, "degree histogram of the reduced basis of I_m");
  cycleq->add_option("--order", q_order, "order for --table1 (default: lex, descending binary index)");

  // verify
  auto* verify = app.add_subcommand("verify", "run verification scenarios");
  std::string scenario;
  bool all = false, summary = false;
  cg::ScenarioOptions sopt;
  verify->add_option("scenario", scenario, "scenario id");
  verify->add_flag("--all", all, "run every scenario");
  verify->add_flag("--summary", summary, "append one line per check: id, check, pass|fail, seconds");
  verify->add_option("--seed", sopt.seed, "seed for sampled orders")->capture_default_str();
  verify->add_option("--samples", sopt.samples, "orders sampled per graph")->capture_default_str();
  verify->add_option("--table1-order", sopt.table1_order, "order for the table1 scenario");
  auto* list = verify->add_flag("--list", "list scenario ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*config) {
      cg::write_configuration(std::cout, cg::cut_configuration(cg::load_graph(graph_spec)));
      return 0;
    }
    if (*dump) {
      cg::write_configuration(std::cout, cg::fixture(fixture_name));
      return 0;
    }
    if (*gb) {
      cg::Configuration a = cg::load_configuration(gb_config);
      cg::MonomialOrder order = gb_order.build(a.cols());
      cg::BuchbergerStats st;
      cg::GroebnerBasis basis = cg::buchberger(cg::toric_ideal(a), order, {.chain_criterion = gb_chain}, &st);
      std::cout << cg::dump_basis(basis);
      if (gb_stats) {
        std::cerr << "elements " << basis.elements.size() << " degrees " << histogram(cg::degree_histogram(basis))
                  << "\npairs created " << st.pairs_created << " coprime " << st.pairs_coprime << " chain "
                  << st.pairs_chain << " reduced " << st.pairs_reduced << " zero " << st.zero_reductions
                  << " steps " << st.reduction_steps << " max basis " << st.max_basis_size << "\n";
      }
      if (!gb_golden.empty()) {
        std::string text = cg::read_file(gb_golden);
        std::set<cg::MonomialPair> theirs;
        if (text.starts_with("n=")) {
          for (const auto& b : cg::parse_basis_dump(text).elements) theirs.insert(cg::unordered_pair(b));
        } else {
          auto parsed = cg::parse_golden_list(text, a.cols(), &a);
          theirs = parsed.as_set();
          std::cerr << "golden: " << parsed.printed_count << " printed, " << parsed.pairs.size() << " distinct, "
                    << parsed.sign_typos.size() << " sign typos, " << parsed.unbalanced.size() << " unbalanced\n";
        }
        bool same = cg::pair_set(basis) == theirs;
        std::cerr << "golden comparison: " << (same ? "match" : "MISMATCH") << "\n";
        return same ? 0 : 1;
      }
      return 0;
    }
    if (*toric) {
      cg::Configuration a = cg::load_configuration(toric_config);
      cg::ToricOptions opt;
      opt.seed_quadrics = !no_seed;
      auto gens = cg::toric_ideal(a, opt);
      print_generators(gens);
      if (oracle_degree > 0) {
        bool same = cg::same_ideal_up_to_degree(gens, cg::fiber_markov_oracle(a, oracle_degree), oracle_degree);
        std::cerr << "oracle check to degree " << oracle_degree << ": " << (same ? "agree" : "DISAGREE") << "\n";
        return same ? 0 : 1;
      }
      return 0;
    }
    if (*cycleq) {
      if (!refute && !table1) {
        cg::write_configuration(std::cout, cg::phi_config(qm));
        return 0;
      }
      int status = 0;
      if (refute) {
        auto rep = cg::refute_generation(qm);
        std::cout << rep.to_string() << "refutation: " << (rep.passed() ? "pass" : "FAIL") << "\n";
        if (!rep.passed()) status = 1;
      }
      if (table1) {
        if (qm != 5) throw cg::Error("--table1 is defined for m = 5");
        cg::MonomialOrder o = q_order.empty() ? cg::table1_default_order() : cg::parse_order(q_order, 32);
        auto h = cg::table1_exploration(o);
        std::cout << "order " << o.descriptor() << "\nhistogram " << histogram(h) << "\nprinted   "
                  << histogram(cg::table1_target()) << "\n" << (h == cg::table1_target() ? "match" : "mismatch")
                  << "\n";
      }
      return status;
    }
    if (*verify) {
      if (*list) {
        for (const auto& id : cg::scenario_ids()) std::cout << id << "\n";
        return 0;
      }
      std::vector<std::string> ids;
      if (all) ids = cg::scenario_ids();
      else if (!scenario.empty()) ids.push_back(scenario);
      else throw cg::Error("verify needs a scenario id or --all");
      bool ok = true;
      std::string lines;
      for (const auto& id : ids) {
        auto rep = cg::run_scenario(id, sopt);
        std::cout << rep.to_text() << std::flush;
        lines += rep.summary_lines();
        ok = ok && rep.passed();
      }
      if (summary) std::cout << "-- summary\n" << lines;
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
