#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cutgroeb/config.hpp"
#include "cutgroeb/groebner.hpp"
#include "cutgroeb/order.hpp"

namespace cutgroeb {

/// Index string i_1...i_m of a variable q_{i_1...i_m}.
struct QIndex {
  std::vector<int> bits;

  static QIndex parse(std::string_view text);
  std::size_t length() const { return bits.size(); }
  int parity() const;
  /// Binary value with i_1 most significant; also the 0-based column of q in phi_config(m).
  std::size_t value() const;
  /// Copy with position `pos` (0-based) removed.
  QIndex without(std::size_t pos) const;
  std::string to_string() const;

  friend bool operator==(const QIndex&, const QIndex&) = default;
  friend auto operator<=>(const QIndex&, const QIndex&) = default;
};

/// Rows 2(j-1)+b (0-based) hold the exponent of a_b^{(j)}, j = 1..m+1.
/// Column of q_I: one 1 in block j for i_j (j <= m) and one in block m+1
/// for the parity of I. Grading 1 on the two rows of block m+1.
Configuration phi_config(int m);

/// q_{I_1} q_{I_2} ... as a monomial over the 2^m q-variables.
Monomial q_monomial(int m, std::initializer_list<std::string_view> indices);

struct CycleCorrespondence {
  /// q column -> column of cut_configuration(cycle(m+1)).
  std::vector<std::size_t> to_cut_column;
  bool bijective = false;
  /// Both kernel bases lie in the other side's kernel after reindexing and have equal size.
  bool kernels_match = false;
  /// Support sizes of the cut parts of the image columns.
  std::map<int, std::size_t> weight_distribution;
};

/// q_I -> cut vector (I, parity(I)) of C_{m+1}, edges taken around the cycle.
CycleCorrespondence cycle_correspondence(int m);

/// A quadratic binomial q_I q_J - q_K q_L with its four indices.
struct QQuad {
  QIndex i, j, k, l;

  static QQuad from_binomial(const Binomial& b, int m);
  /// Removes position `pos` (0-based) from all four indices.
  Binomial deleted(std::size_t pos) const;
  std::string to_string() const;
};

/// Per-position outcome of the two defining rules of G_m.
struct PositionCheck {
  std::size_t position = 0;  // 1-based
  bool pattern = false;      // rule 1: i=j=k=l there; rule 2: i+j = 1 = k+l there
  bool deleted_in_smaller = false;
};

struct GmClassification {
  std::vector<PositionCheck> rule1;
  std::vector<PositionCheck> rule2;
  bool rule1_holds = false;  // some position passes both parts
  bool rule2_holds = false;  // every position passes both parts
  bool in_gm() const { return rule1_holds || rule2_holds; }
};

/// Membership of deleted binomials in I_{m-1}, decided by normal forms
/// against a degrevlex basis of toric_ideal(phi_config(m-1)).
class GmContext {
 public:
  explicit GmContext(int m);
  int m() const { return m_; }
  const Configuration& config() const { return config_; }
  const GroebnerBasis& smaller_basis() const { return smaller_; }
  bool in_smaller(const Binomial& b) const;
  GmClassification classify(const QQuad& q) const;

 private:
  int m_;
  Configuration config_;
  Configuration smaller_config_;
  GroebnerBasis smaller_;
  Reducer smaller_reducer_;
};

/// All balanced quadratic binomials of I_m (one per unordered pair of
/// distinct degree-2 monomials in a fiber) that satisfy rule 1 or rule 2.
std::vector<Binomial> gm_set(const GmContext& ctx);
std::vector<Binomial> gm_set(int m);

struct RefutationReport {
  std::size_t gm_size = 0;
  std::size_t gm_basis_size = 0;
  std::size_t balanced_quadrics = 0;
  bool q_in_im = false;
  bool q_in_gm_set = false;
  bool q_in_gm_ideal = false;
  bool q_prime_in_smaller = false;
  GmClassification q_positions;
  std::size_t p_size = 0;
  std::size_t p_pairs = 0;
  std::size_t p_pairs_in_im = 0;
  std::size_t p_pairs_in_gm_set = 0;
  std::size_t p_pairs_in_gm_ideal = 0;

  bool passed() const;
  std::string to_string() const;
};

/// q = q_{10101}q_{01010} - q_{11111}q_{00000} and the products P of
/// complementary index pairs against <G_5>. Only m = 5 is supported.
RefutationReport refute_generation(int m = 5);

/// Degree histogram of the reduced basis of I_5 under `order` (32 variables).
std::map<int, std::size_t> table1_exploration(const MonomialOrder& order);
std::map<int, std::size_t> table1_target();
/// Lex with q-variables ranked by descending binary value of the index.
MonomialOrder table1_default_order();

}  // namespace cutgroeb
