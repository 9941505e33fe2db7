#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cutgroeb/config.hpp"
#include "cutgroeb/groebner.hpp"

namespace cutgroeb {

/// Z-basis of ker(A) as integer vectors; count is n - rank(A).
struct LatticeBasis {
  std::vector<std::vector<std::int64_t>> vectors;
};

/// Unimodular elimination of [A^T | I] in arbitrary precision; the rows whose
/// A^T part vanishes span the integer kernel. Pairwise size reduction follows.
LatticeBasis integer_kernel_basis(const Configuration& a);

/// One binomial x^{u+} - x^{u-} per basis vector (positive part written first).
std::vector<Binomial> lattice_ideal_generators(const LatticeBasis& basis);

struct ToricOptions {
  /// Gebauer-Moeller pair elimination is on here: saturation rounds on the
  /// larger fixtures are infeasible without it.
  BuchbergerOptions buchberger{.chain_criterion = true};
  /// Adds every balanced degree-2 binomial (a star per degree-2 fiber) to the
  /// lattice generators. These lie in I_A, so the saturation is unchanged.
  bool seed_quadrics = true;
  /// Called after each per-variable saturation round with (variable, generator count).
  std::function<void(std::size_t, std::size_t)> on_round;
};

/// Star-connected degree-2 fibers: x_a x_b - x_c x_d for every pair of
/// degree-2 monomials with equal image, joined to the first one found.
std::vector<Binomial> balanced_quadrics(const Configuration& a);

/// Generators of the toric ideal I_A: the lattice ideal saturated one
/// variable at a time (ascending index) via a degrevlex basis with that
/// variable cheapest, dividing out its largest common power.
std::vector<Binomial> toric_ideal(const Configuration& a, const ToricOptions& options = {});

/// (gens) : (x_1...x_n)^infinity, one variable at a time in ascending order.
std::vector<Binomial> saturate(std::vector<Binomial> gens, const ToricOptions& options = {});

/// Divides both terms of every element by the largest common power of x_var.
std::vector<Binomial> divide_out_variable(std::span<const Binomial> gens, std::size_t var);

/// Brute-force generators of I_A up to degree maxdeg: every fiber of each
/// degree is connected by a star from its degrevlex-smallest monomial.
/// Throws if more than `monomial_budget` monomials would be enumerated.
std::vector<Binomial> fiber_markov_oracle(const Configuration& a, int maxdeg,
                                          std::size_t monomial_budget = 2'000'000);

/// Both generating sets define the same ideal up to degree `maxdeg`:
/// every element of either side of degree <= maxdeg is a member of the other.
bool same_ideal_up_to_degree(std::span<const Binomial> lhs, std::span<const Binomial> rhs, int maxdeg);

}  // namespace cutgroeb
