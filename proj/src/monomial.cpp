#include "cutgroeb/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace cutgroeb {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e < 0) throw Error("monomial exponents must be nonnegative");
    degree_ += e;
  }
}

Monomial Monomial::from_vars(std::size_t num_vars, std::initializer_list<std::size_t> vars) {
  return from_vars(num_vars, std::span<const std::size_t>(vars.begin(), vars.size()));
}

Monomial Monomial::from_vars(std::size_t num_vars, std::span<const std::size_t> vars) {
  std::vector<Exponent> exps(num_vars, 0);
  for (std::size_t v : vars) {
    if (v < 1 || v > num_vars) throw Error("variable index out of range: " + std::to_string(v));
    ++exps[v - 1];
  }
  return Monomial(std::move(exps));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> r(exps_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<Exponent> r(exps_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(r));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.num_vars() != num_vars()) throw Error("monomial dimension mismatch");
  std::vector<Exponent> r(exps_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw Error("inexact monomial division");
  std::vector<Exponent> r(exps_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = exps_[i] - divisor.exps_[i];
  return Monomial(std::move(r));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x_" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

Binomial::Binomial(Monomial l, Monomial t) : lead(std::move(l)), tail(std::move(t)) {
  if (lead.num_vars() != tail.num_vars()) throw Error("binomial terms over different rings");
}

Binomial Binomial::from_vector(std::span<const std::int64_t> u) {
  std::vector<Exponent> pos(u.size(), 0), neg(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0) pos[i] = static_cast<Exponent>(u[i]);
    else neg[i] = static_cast<Exponent>(-u[i]);
  }
  return Binomial(Monomial(std::move(pos)), Monomial(std::move(neg)));
}

std::vector<std::int64_t> Binomial::to_vector() const {
  std::vector<std::int64_t> u(num_vars());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::int64_t{lead[i]} - tail[i];
  return u;
}

std::string Binomial::to_string() const { return lead.to_string() + " - " + tail.to_string(); }

bool same_up_to_sign(const Binomial& a, const Binomial& b) {
  return (a.lead == b.lead && a.tail == b.tail) || (a.lead == b.tail && a.tail == b.lead);
}

}  // namespace cutgroeb
