#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutgroeb {

/// Thrown for violated preconditions anywhere in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Exponent = std::int32_t;

/// Exponent vector over a fixed number of variables, with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  /// Product of the given 1-based variables (repeats allowed), e.g. {1, 16} is x_1*x_16.
  static Monomial from_vars(std::size_t num_vars, std::initializer_list<std::size_t> vars);
  static Monomial from_vars(std::size_t num_vars, std::span<const std::size_t> vars);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool is_squarefree() const;
  bool is_one() const { return degree_ == 0; }

  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws if `divisor` does not divide *this.
  Monomial operator/(const Monomial& divisor) const;

  /// Structural comparison of exponent vectors (not a monomial order).
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

  /// 1-based rendering, factors by ascending variable index: "x_1*x_3^2"; "1" for the unit.
  std::string to_string() const;

 private:
  std::vector<Exponent> exps_;
  Exponent degree_ = 0;
};

/// Pure-difference binomial lead - tail. The marking (which term leads) is
/// meaningful relative to a monomial order; see MonomialOrder::mark.
struct Binomial {
  Monomial lead;
  Monomial tail;

  Binomial() = default;
  Binomial(Monomial l, Monomial t);

  /// Binomial x^{u+} - x^{u-} of an integer vector; lead is the positive part.
  static Binomial from_vector(std::span<const std::int64_t> u);

  std::size_t num_vars() const { return lead.num_vars(); }
  Exponent degree() const { return lead.degree(); }
  /// u = lead - tail as an exponent difference.
  std::vector<std::int64_t> to_vector() const;

  friend bool operator==(const Binomial&, const Binomial&) = default;

  /// "lead - tail" in monomial rendering.
  std::string to_string() const;
};

/// Same binomial up to sign: {lead, tail} as an unordered pair.
bool same_up_to_sign(const Binomial& a, const Binomial& b);

}  // namespace cutgroeb
