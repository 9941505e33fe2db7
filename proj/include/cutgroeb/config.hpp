#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "cutgroeb/graph.hpp"
#include "cutgroeb/monomial.hpp"

namespace cutgroeb {

using Rational = boost::rational<std::int64_t>;

/// Nonnegative integer d x n matrix whose columns all pair to 1 with a
/// grading covector c. Column i is the exponent of the image of x_{i+1}.
class Configuration {
 public:
  /// Validates nonnegativity, distinct columns, and c . a_i = 1 for every column.
  Configuration(std::vector<std::vector<int>> rows, std::vector<Rational> grading);

  /// Grading found automatically: an all-ones row if present, else a
  /// constant column sum, else an exact rational solve of A^T c = 1.
  static Configuration with_inferred_grading(std::vector<std::vector<int>> rows);

  std::size_t rows() const { return d_; }
  std::size_t cols() const { return n_; }
  int at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  std::vector<int> column(std::size_t c) const;
  std::vector<int> row(std::size_t r) const;
  std::vector<std::vector<int>> matrix() const;
  const std::vector<Rational>& grading() const { return grading_; }

  /// A . u for an exponent vector over the columns.
  std::vector<std::int64_t> image(std::span<const Exponent> u) const;
  std::vector<std::int64_t> image(const Monomial& u) const { return image(u.exponents()); }
  Rational grade(std::span<const std::int64_t> b) const;

  /// A . lead == A . tail.
  bool balanced(const Binomial& b) const;

  Configuration select_columns(std::span<const std::size_t> cols) const;
  /// Drops row r; the grading must vanish on that row unless the row is zero.
  Configuration delete_row(std::size_t r) const;
  Configuration permute_rows(std::span<const std::size_t> new_to_old) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::size_t d_ = 0, n_ = 0;
  std::vector<int> entries_;
  std::vector<Rational> grading_;
};

/// Target image and degree of a fiber.
struct FiberKey {
  std::vector<std::int64_t> target;
  int degree = 0;
};

/// Component i is 1 iff edge e_i has exactly one endpoint in `subset`.
std::vector<int> cut_vector(const Graph& g, std::span<const int> subset);

/// Homogenized matrix of the 2^{m-1} distinct cut vectors. Column order:
/// subsets of {2..m} by binary counting, vertex 2 the least significant bit.
Configuration cut_configuration(const Graph& g);

/// Printed matrices in printed column order: "k23", "fig1", "c7" (8 x 64,
/// zero column | A | B | C plus the ones row), "c7_A", "c7_B", "c7_C".
/// The entries listed by fixture_corrections() are applied; "c7_printed"
/// keeps the 8 x 64 matrix exactly as listed.
Configuration fixture(std::string_view name);

/// An entry of a listed matrix that contradicts its own description.
struct FixtureCorrection {
  std::string fixture;  // block name, e.g. "c7_B"
  std::size_t row = 0;  // 0-based
  std::size_t col = 0;  // 0-based
  int printed = 0;
  int corrected = 0;
};

/// Block B of the C_7 matrix, column 20, row 6 (1-based) is listed as 0;
/// that column then has weight 3, which no cut vector of an odd cycle can
/// have, and B stops being the (7,4) squarefree Veronese configuration.
std::vector<FixtureCorrection> fixture_corrections();

/// sigma with column sigma[j] of A equal to column j of B, lexicographically
/// smallest; nullopt when no column permutation maps A onto B.
std::optional<std::vector<std::size_t>> same_up_to_column_permutation(const Configuration& a,
                                                                      const Configuration& b);

/// Row permutation (new_to_old) for which A's rows, after the permutation,
/// match B up to columns. Exhaustive; intended for d <= 9.
std::optional<std::vector<std::size_t>> matching_row_permutation(const Configuration& a,
                                                                 const Configuration& b);

/// All 0/1 columns of length d with k ones, lexicographic in the positions of the ones.
Configuration squarefree_veronese(int d, int k);

struct Subconfiguration {
  Configuration config;
  std::vector<std::size_t> columns;  // indices into the parent configuration
};

/// Columns on the face {f . a = 1}; throws if f . a > 1 for any column.
Subconfiguration cps_select(const Configuration& a, std::span<const Rational> f);

/// Face of cut_configuration(g) with zero on edge e, with row e removed.
/// Verified against cut_configuration(g / e) up to column permutation.
Subconfiguration contraction_subring(const Graph& g, Edge e);

/// Every u >= 0 with A . u = b and grading degree deg, by depth-first search
/// over columns with nonnegative-remainder pruning.
std::vector<Monomial> fiber_monomials(const Configuration& a, std::span<const std::int64_t> b, int deg);

/// Integer rank by exact elimination.
std::size_t integer_rank(const Configuration& a);

}  // namespace cutgroeb
