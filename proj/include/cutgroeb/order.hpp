#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutgroeb/monomial.hpp"

namespace cutgroeb {

/// Monomial order descriptor: lexicographic or degree-reverse-lexicographic
/// under a variable ranking, or an integer weight refined by a nested order.
///
/// Rankings are stored 0-based, highest variable first; the textual
/// descriptor and the CLI use 1-based variable numbers.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Weight };

  static MonomialOrder lex(std::vector<std::size_t> ranking);
  static MonomialOrder degrevlex(std::vector<std::size_t> ranking);
  static MonomialOrder weight(std::vector<std::int64_t> w, MonomialOrder tie);
  static MonomialOrder lex(std::size_t num_vars);
  static MonomialOrder degrevlex(std::size_t num_vars);

  Kind kind() const { return kind_; }
  std::size_t num_vars() const { return num_vars_; }
  /// Ranking for Lex/DegRevLex (highest first); empty for Weight.
  std::span<const std::size_t> ranking() const { return ranking_; }
  std::span<const std::int64_t> weights() const { return weights_; }
  const MonomialOrder* tie() const { return tie_.get(); }

  std::strong_ordering compare(std::span<const Exponent> u, std::span<const Exponent> v) const;
  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;

  /// Same as compare, and sets *tie_used when a weight order had to fall
  /// through to its tie order.
  std::strong_ordering compare(const Monomial& u, const Monomial& v, bool* tie_used) const;

  /// Orders the two terms so the larger one leads; throws if they are equal.
  Binomial mark(Monomial a, Monomial b) const;
  Binomial mark(const Binomial& b) const { return mark(b.lead, b.tail); }

  /// Induced order on the listed variables (0-based, in the order they
  /// become the new x_1, x_2, ...).
  MonomialOrder restricted(std::span<const std::size_t> kept) const;

  /// Round-trippable text form, e.g. "lex(1,17,18,...)" or "weight(25,24,...;grevlex(1,2,...))".
  std::string descriptor() const;

  std::int64_t weight_of(std::span<const Exponent> u) const;

 private:
  MonomialOrder() = default;

  Kind kind_ = Kind::Lex;
  std::size_t num_vars_ = 0;
  std::vector<std::size_t> ranking_;
  std::vector<std::int64_t> weights_;
  std::shared_ptr<const MonomialOrder> tie_;
};

/// Named orders that come with the fixtures:
///   w_fig1          weight vector on the 32 theta-graph variables, tie DegRevLex(identity)
///   lex_c7          the 64-variable lexicographic order for the 7-cycle
///   lex1_B          the 35-variable order on the (7,4) squarefree Veronese block
///   lex1_A_segment  the same order written on x_23..x_57 of the 7-cycle
MonomialOrder named_order(std::string_view name);

/// Parses a descriptor produced by MonomialOrder::descriptor or the short
/// forms "lex", "grevlex" (identity ranking on num_vars) and "named:<name>".
MonomialOrder parse_order(std::string_view text, std::size_t num_vars);

/// True iff w strictly separates lead from tail on every element, i.e. the
/// weight alone determines each initial term.
bool initial_strict_under_weight(std::span<const std::int64_t> w, std::span<const Binomial> basis);

}  // namespace cutgroeb
