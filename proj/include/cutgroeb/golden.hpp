#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cutgroeb/config.hpp"
#include "cutgroeb/groebner.hpp"

namespace cutgroeb {

/// Unordered binomial {u, v}, stored with u <= v structurally.
using MonomialPair = std::pair<Monomial, Monomial>;
MonomialPair unordered_pair(const Binomial& b);

struct GoldenParse {
  std::vector<MonomialPair> pairs;  // deduplicated, first occurrence order
  std::size_t printed_count = 0;    // elements in the printed list
  std::size_t duplicates = 0;
  /// Printed text of elements whose two terms carry the same sign.
  std::vector<std::string> sign_typos;
  /// Printed text of elements that fail A.u = A.v.
  std::vector<std::string> unbalanced;

  std::set<MonomialPair> as_set() const { return {pairs.begin(), pairs.end()}; }
};

/// Parses a TeX list "$\{t_1, t_2, ...\}$" of two-term elements written as
/// signed products x_{a}x_{b}...; "\\" line breaks and whitespace are
/// ignored. Signs and term order are discarded. An element whose terms have
/// equal signs is read as their difference and recorded in sign_typos.
/// Balance is checked against `a` when given. Throws on a malformed element.
GoldenParse parse_golden_list(std::string_view text, std::size_t num_vars, const Configuration* a = nullptr);

/// The printed reduced basis of the theta-graph cut ideal, balance-checked against fixture("fig1").
GoldenParse parse_golden_fig1();
std::string_view golden_fig1_text();

std::set<MonomialPair> pair_set(const GroebnerBasis& g);

}  // namespace cutgroeb
