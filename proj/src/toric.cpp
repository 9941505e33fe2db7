#include "cutgroeb/toric.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace cutgroeb {
namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigVec = std::vector<BigInt>;

BigInt dot(const BigVec& a, const BigVec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to p / q for q > 0.
BigInt round_div(const BigInt& p, const BigInt& q) {
  BigInt twice = 2 * p + q;
  BigInt two_q = 2 * q;
  BigInt r = twice / two_q;
  if (twice < 0 && r * two_q != twice) r -= 1;
  return r;
}

// Replaces v_i by v_i - round(<v_i,v_j>/<v_j,v_j>) v_j while that shortens
// some vector. Norms strictly decrease, so this terminates.
void size_reduce(std::vector<BigVec>& vs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if (i == j) continue;
        BigInt nj = dot(vs[j], vs[j]);
        BigInt q = round_div(dot(vs[i], vs[j]), nj);
        if (q == 0) continue;
        BigVec cand = vs[i];
        for (std::size_t k = 0; k < cand.size(); ++k) cand[k] -= q * vs[j][k];
        if (dot(cand, cand) < dot(vs[i], vs[i])) {
          vs[i] = std::move(cand);
          changed = true;
        }
      }
    }
  }
}

void enumerate_degree(std::size_t n, int deg, std::size_t budget, std::vector<Monomial>& out) {
  std::vector<Exponent> u(n, 0);
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == n) {
      u[var] = left;
      if (out.size() >= budget) throw Error("fiber enumeration budget exceeded");
      out.emplace_back(u);
      u[var] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      u[var] = k;
      self(self, var + 1, left - k);
    }
    u[var] = 0;
  };
  rec(rec, 0, deg);
}

}  // namespace

LatticeBasis integer_kernel_basis(const Configuration& a) {
  const std::size_t d = a.rows(), n = a.cols();
  std::vector<BigVec> m(n, BigVec(d + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < d; ++r) m[i][r] = a.at(r, i);
    m[i][d + i] = 1;
  }
  std::size_t pivot = 0;
  for (std::size_t c = 0; c < d && pivot < n; ++c) {
    while (true) {
      std::size_t best = n;
      for (std::size_t r = pivot; r < n; ++r)
        if (m[r][c] != 0 && (best == n || abs(m[r][c]) < abs(m[best][c]))) best = r;
      if (best == n) break;
      std::swap(m[pivot], m[best]);
      bool clean = true;
      for (std::size_t r = pivot + 1; r < n; ++r) {
        if (m[r][c] == 0) continue;
        BigInt q = m[r][c] / m[pivot][c];
        for (std::size_t k = c; k < d + n; ++k) m[r][k] -= q * m[pivot][k];
        if (m[r][c] != 0) clean = false;
      }
      if (clean) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<BigVec> kernel;
  for (std::size_t r = pivot; r < n; ++r) kernel.emplace_back(m[r].begin() + d, m[r].end());
  size_reduce(kernel);

  LatticeBasis basis;
  for (const BigVec& v : kernel) {
    std::vector<std::int64_t> out;
    for (const BigInt& x : v) {
      if (abs(x) > std::numeric_limits<Exponent>::max()) throw Error("kernel entry exceeds exponent range");
      out.push_back(static_cast<std::int64_t>(x));
    }
    // Sign convention: first nonzero entry positive.
    auto first = std::find_if(out.begin(), out.end(), [](std::int64_t x) { return x != 0; });
    if (first != out.end() && *first < 0)
      for (auto& x : out) x = -x;
    basis.vectors.push_back(std::move(out));
  }
  return basis;
}

std::vector<Binomial> lattice_ideal_generators(const LatticeBasis& basis) {
  std::vector<Binomial> out;
  for (const auto& u : basis.vectors) out.push_back(Binomial::from_vector(u));
  return out;
}

std::vector<Binomial> divide_out_variable(std::span<const Binomial> gens, std::size_t var) {
  std::vector<Binomial> out;
  std::set<std::pair<Monomial, Monomial>> seen;
  for (const Binomial& g : gens) {
    Exponent k = std::min(g.lead[var], g.tail[var]);
    std::vector<Exponent> l(g.lead.exponents().begin(), g.lead.exponents().end());
    std::vector<Exponent> t(g.tail.exponents().begin(), g.tail.exponents().end());
    l[var] -= k;
    t[var] -= k;
    Binomial b(Monomial(std::move(l)), Monomial(std::move(t)));
    if (seen.emplace(b.lead, b.tail).second) out.push_back(std::move(b));
  }
  return out;
}

std::vector<Binomial> balanced_quadrics(const Configuration& a) {
  const std::size_t n = a.cols();
  std::map<std::vector<std::int64_t>, std::vector<Monomial>> buckets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Monomial m = Monomial::from_vars(n, {i + 1, j + 1});
      buckets[a.image(m)].push_back(std::move(m));
    }
  std::vector<Binomial> out;
  for (const auto& [image, ms] : buckets)
    for (std::size_t k = 1; k < ms.size(); ++k) out.emplace_back(ms[k], ms[0]);
  return out;
}

std::vector<Binomial> saturate(std::vector<Binomial> gens, const ToricOptions& options) {
  if (gens.empty()) return gens;
  const std::size_t n = gens.front().num_vars();
  for (std::size_t var = 0; var < n; ++var) {
    std::vector<std::size_t> ranking;
    for (std::size_t k = 0; k < n; ++k)
      if (k != var) ranking.push_back(k);
    ranking.push_back(var);
    GroebnerBasis g = buchberger(gens, MonomialOrder::degrevlex(std::move(ranking)), options.buchberger);
    gens = divide_out_variable(g.elements, var);
    if (options.on_round) options.on_round(var, gens.size());
  }
  return gens;
}

std::vector<Binomial> toric_ideal(const Configuration& a, const ToricOptions& options) {
  std::vector<Binomial> gens = lattice_ideal_generators(integer_kernel_basis(a));
  if (gens.empty()) return gens;
  if (options.seed_quadrics) {
    auto seeds = balanced_quadrics(a);
    gens.insert(gens.end(), seeds.begin(), seeds.end());
  }
  gens = saturate(std::move(gens), options);
  for (const Binomial& g : gens)
    if (!a.balanced(g)) throw Error("toric_ideal: produced an unbalanced binomial " + g.to_string());
  return gens;
}

std::vector<Binomial> fiber_markov_oracle(const Configuration& a, int maxdeg, std::size_t monomial_budget) {
  if (maxdeg < 1) throw Error("fiber_markov_oracle: maxdeg must be positive");
  const std::size_t n = a.cols();
  const MonomialOrder order = MonomialOrder::degrevlex(n);
  std::vector<Binomial> out;
  std::size_t used = 0;
  for (int deg = 2; deg <= maxdeg; ++deg) {
    std::vector<Monomial> all;
    enumerate_degree(n, deg, monomial_budget - used, all);
    used += all.size();
    std::map<std::vector<std::int64_t>, std::size_t> fiber_size;
    for (const Monomial& u : all) ++fiber_size[a.image(u)];
    for (const auto& [image, count] : fiber_size) {
      if (count < 2) continue;
      auto fiber = fiber_monomials(a, image, deg);
      if (fiber.size() != count) throw Error("fiber_markov_oracle: fiber enumeration disagrees");
      auto least = std::min_element(fiber.begin(), fiber.end(),
                                    [&](const Monomial& x, const Monomial& y) { return order.compare(x, y) < 0; });
      for (const Monomial& u : fiber)
        if (u != *least) out.emplace_back(u, *least);
    }
  }
  return out;
}

bool same_ideal_up_to_degree(std::span<const Binomial> lhs, std::span<const Binomial> rhs, int maxdeg) {
  auto contained = [&](std::span<const Binomial> from, std::span<const Binomial> into) {
    std::size_t n = 0;
    if (!from.empty()) n = from.front().num_vars();
    else if (!into.empty()) n = into.front().num_vars();
    else return true;
    Reducer reducer(buchberger(into, MonomialOrder::degrevlex(n)).elements);
    for (const Binomial& b : from)
      if (b.degree() <= maxdeg && !reducer.equivalent(b)) return false;
    return true;
  };
  return contained(lhs, rhs) && contained(rhs, lhs);
}

}  // namespace cutgroeb
