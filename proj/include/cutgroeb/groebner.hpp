#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cutgroeb/config.hpp"
#include "cutgroeb/monomial.hpp"
#include "cutgroeb/order.hpp"

namespace cutgroeb {

struct GroebnerBasis {
  std::vector<Binomial> elements;
  MonomialOrder order;
  bool reduced = false;
};

struct BuchbergerOptions {
  /// Gebauer-Moeller pair elimination (criteria M, F and B_k at insertion).
  /// Off by default: only coprime pairs are skipped. The reduced output is
  /// the same either way.
  bool chain_criterion = false;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_coprime = 0;
  std::size_t pairs_chain = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
  std::size_t max_basis_size = 0;
  /// Some lead/tail marking under a weight order needed the tie order.
  bool tie_used_in_marking = false;
};

/// Monomial rewriting against a fixed set of marked binomials. Rewrites with
/// the first element (in list order) whose lead divides the current monomial.
class Reducer {
 public:
  explicit Reducer(std::span<const Binomial> rules);
  ~Reducer();
  Reducer(Reducer&&) noexcept;
  Reducer& operator=(Reducer&&) noexcept;

  Monomial normal_form(const Monomial& m) const;
  /// normal_form(lead) == normal_form(tail).
  bool equivalent(const Binomial& b) const;
  std::size_t size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Monomial normal_form(const Monomial& m, std::span<const Binomial> rules);

/// S-pair of two marked binomials: (L/lead1)*tail1 - (L/lead2)*tail2 with
/// L = lcm of the leads, re-marked under `order`; nullopt if the terms coincide.
std::optional<Binomial> s_pair(const Binomial& g1, const Binomial& g2, const MonomialOrder& order);

/// Completes `gens` (re-marked under `order`) to a Groebner basis and
/// returns the reduced basis.
GroebnerBasis buchberger(std::span<const Binomial> gens, const MonomialOrder& order,
                         const BuchbergerOptions& options = {}, BuchbergerStats* stats = nullptr);

/// Drops redundant leads, fully reduces tails, sorts by lead then tail under the order.
GroebnerBasis reduce_basis(const GroebnerBasis& g);

std::map<int, std::size_t> degree_histogram(const GroebnerBasis& g);
bool is_quadratic(const GroebnerBasis& g);
bool is_squarefree_initial(const GroebnerBasis& g);

bool ideal_membership(const Binomial& b, const GroebnerBasis& g);

/// Counts of minimal generators by degree, selected greedily from `gens`
/// degree by degree: an element is kept iff it is not in the ideal of all
/// lower-degree elements together with the same-degree elements kept so far.
std::map<int, std::size_t> minimal_generation_degrees(std::span<const Binomial> gens, const Configuration& a);

/// True iff m is the only monomial in its fiber, i.e. no nonzero binomial
/// of the toric ideal has m as a term.
bool no_binomial_with_monomial(const Configuration& a, const Monomial& m);

/// "x_a*x_b - x_c*x_d": lead first, factors by ascending variable index.
std::string canonical_element(const Binomial& b);
/// Header "n=<n> order=<descriptor> reduced=<bool>", then the canonical
/// elements sorted as strings, one per line.
std::string dump_basis(const GroebnerBasis& g);

}  // namespace cutgroeb
