#include "cutgroeb/config.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "fixture_data.hpp"

namespace cutgroeb {
namespace {

using BigRational = boost::multiprecision::cpp_rational;

std::optional<std::vector<Rational>> solve_grading(const std::vector<std::vector<int>>& rows) {
  const std::size_t d = rows.size(), n = rows.empty() ? 0 : rows[0].size();
  // Augmented system A^T c = 1: n equations in d unknowns.
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(d + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < d; ++r) m[i][r] = rows[r][i];
    m[i][d] = 1;
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < d && pr < n; ++c) {
    std::size_t sel = pr;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[pr]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pr || m[i][c] == 0) continue;
      BigRational f = m[i][c] / m[pr][c];
      for (std::size_t k = c; k <= d; ++k) m[i][k] -= f * m[pr][k];
    }
    pivot_cols.push_back(c);
    ++pr;
  }
  for (std::size_t i = pr; i < n; ++i)
    if (m[i][d] != 0) return std::nullopt;
  std::vector<Rational> c(d, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    BigRational v = m[i][d] / m[i][pivot_cols[i]];
    c[pivot_cols[i]] = Rational(static_cast<std::int64_t>(numerator(v)), static_cast<std::int64_t>(denominator(v)));
  }
  return c;
}

}  // namespace

Configuration::Configuration(std::vector<std::vector<int>> rows, std::vector<Rational> grading)
    : d_(rows.size()), n_(rows.empty() ? 0 : rows[0].size()), grading_(std::move(grading)) {
  if (d_ == 0 || n_ == 0) throw Error("configuration must be non-empty");
  if (grading_.size() != d_) throw Error("grading length differs from row count");
  entries_.reserve(d_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error("ragged configuration matrix");
    for (int x : r) {
      if (x < 0) throw Error("configuration entries must be nonnegative");
      entries_.push_back(x);
    }
  }
  std::set<std::vector<int>> distinct;
  for (std::size_t c = 0; c < n_; ++c) {
    auto col = column(c);
    Rational dot(0);
    for (std::size_t r = 0; r < d_; ++r) dot += grading_[r] * col[r];
    if (dot != Rational(1)) throw Error("column " + std::to_string(c + 1) + " does not pair to 1 with the grading");
    if (!distinct.insert(col).second) throw Error("configuration columns must be distinct");
  }
}

Configuration Configuration::with_inferred_grading(std::vector<std::vector<int>> rows) {
  if (rows.empty()) throw Error("configuration must be non-empty");
  const std::size_t d = rows.size();
  for (std::size_t r = 0; r < d; ++r) {
    if (std::all_of(rows[r].begin(), rows[r].end(), [](int x) { return x == 1; })) {
      std::vector<Rational> c(d, Rational(0));
      c[r] = 1;
      return Configuration(std::move(rows), std::move(c));
    }
  }
  const std::size_t n = rows[0].size();
  std::optional<int> sum;
  bool constant = true;
  for (std::size_t i = 0; i < n && constant; ++i) {
    int s = 0;
    for (std::size_t r = 0; r < d; ++r) s += rows[r][i];
    if (sum && *sum != s) constant = false;
    sum = s;
  }
  if (constant && sum && *sum > 0) {
    std::vector<Rational> c(d, Rational(1, *sum));
    return Configuration(std::move(rows), std::move(c));
  }
  auto c = solve_grading(rows);
  if (!c) throw Error("matrix is not a configuration: no covector pairs to 1 with every column");
  return Configuration(std::move(rows), std::move(*c));
}

std::vector<int> Configuration::column(std::size_t c) const {
  std::vector<int> col(d_);
  for (std::size_t r = 0; r < d_; ++r) col[r] = at(r, c);
  return col;
}

std::vector<int> Configuration::row(std::size_t r) const {
  return {entries_.begin() + r * n_, entries_.begin() + (r + 1) * n_};
}

std::vector<std::vector<int>> Configuration::matrix() const {
  std::vector<std::vector<int>> m;
  for (std::size_t r = 0; r < d_; ++r) m.push_back(row(r));
  return m;
}

std::vector<std::int64_t> Configuration::image(std::span<const Exponent> u) const {
  if (u.size() != n_) throw Error("exponent vector length differs from column count");
  std::vector<std::int64_t> b(d_, 0);
  for (std::size_t c = 0; c < n_; ++c) {
    if (u[c] == 0) continue;
    for (std::size_t r = 0; r < d_; ++r) b[r] += std::int64_t{at(r, c)} * u[c];
  }
  return b;
}

Rational Configuration::grade(std::span<const std::int64_t> b) const {
  Rational s(0);
  for (std::size_t r = 0; r < d_; ++r) s += grading_[r] * b[r];
  return s;
}

bool Configuration::balanced(const Binomial& b) const { return image(b.lead) == image(b.tail); }

Configuration Configuration::select_columns(std::span<const std::size_t> cols) const {
  std::vector<std::vector<int>> rows(d_);
  for (std::size_t r = 0; r < d_; ++r)
    for (std::size_t c : cols) rows[r].push_back(at(r, c));
  return Configuration(std::move(rows), grading_);
}

Configuration Configuration::delete_row(std::size_t r) const {
  if (r >= d_) throw Error("delete_row: row out of range");
  // a zero row carries no grading information, whatever its coefficient
  bool zero_row = true;
  for (std::size_t c = 0; c < n_; ++c) zero_row = zero_row && at(r, c) == 0;
  if (!zero_row && grading_[r] != Rational(0)) throw Error("delete_row: grading is supported on the deleted row");
  auto rows = matrix();
  rows.erase(rows.begin() + r);
  auto c = grading_;
  c.erase(c.begin() + r);
  return Configuration(std::move(rows), std::move(c));
}

Configuration Configuration::permute_rows(std::span<const std::size_t> new_to_old) const {
  if (new_to_old.size() != d_) throw Error("permute_rows: wrong length");
  std::vector<std::vector<int>> rows;
  std::vector<Rational> c;
  for (std::size_t old : new_to_old) {
    rows.push_back(row(old));
    c.push_back(grading_[old]);
  }
  return Configuration(std::move(rows), std::move(c));
}

std::vector<int> cut_vector(const Graph& g, std::span<const int> subset) {
  std::vector<bool> in(g.vertex_count() + 1, false);
  for (int v : subset) {
    if (v < 1 || v > g.vertex_count()) throw Error("cut_vector: vertex out of range");
    in[v] = true;
  }
  std::vector<int> out;
  for (const Edge& e : g.edges()) out.push_back(in[e.u] != in[e.v] ? 1 : 0);
  return out;
}

Configuration cut_configuration(const Graph& g) {
  if (!g.is_connected()) throw Error("cut_configuration: graph must be connected");
  const int m = g.vertex_count();
  if (m > 24) throw Error("cut_configuration: too many vertices");
  const std::size_t r = g.edges().size();
  std::vector<std::vector<int>> rows(r + 1);
  for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
    std::vector<int> subset;
    for (int b = 0; b < m - 1; ++b)
      if (mask >> b & 1) subset.push_back(b + 2);
    auto cut = cut_vector(g, subset);
    for (std::size_t i = 0; i < r; ++i) rows[i].push_back(cut[i]);
    rows[r].push_back(1);
  }
  std::vector<Rational> c(r + 1, Rational(0));
  c[r] = 1;
  return Configuration(std::move(rows), std::move(c));
}

Configuration fixture(std::string_view name) {
  auto homogenized = [](std::vector<std::vector<int>> rows) {
    std::vector<Rational> c(rows.size(), Rational(0));
    c.back() = 1;
    return Configuration(std::move(rows), std::move(c));
  };
  auto block = [](const std::vector<std::vector<int>>& rows, int k) {
    return Configuration(rows, std::vector<Rational>(rows.size(), Rational(1, k)));
  };
  auto corrected_b = [] {
    auto rows = data::kC7BlockB;
    for (const auto& fix : fixture_corrections()) {
      if (rows[fix.row][fix.col] != fix.printed) throw Error("fixture correction does not match the printed entry");
      rows[fix.row][fix.col] = fix.corrected;
    }
    return rows;
  };
  auto c7 = [](const std::vector<std::vector<int>>& b) {
    std::vector<std::vector<int>> rows(8);
    for (std::size_t r = 0; r < 7; ++r) {
      rows[r].push_back(0);
      for (const auto* blk : {&data::kC7BlockA, &b, &data::kC7BlockC})
        rows[r].insert(rows[r].end(), (*blk)[r].begin(), (*blk)[r].end());
    }
    rows[7].assign(rows[0].size(), 1);
    return rows;
  };
  if (name == "k23") return homogenized(data::kK23);
  if (name == "fig1") return homogenized(data::kFig1);
  if (name == "c7_A") return block(data::kC7BlockA, 2);
  if (name == "c7_B") return block(corrected_b(), 4);
  if (name == "c7_C") return block(data::kC7BlockC, 6);
  if (name == "c7") return homogenized(c7(corrected_b()));
  if (name == "c7_printed") return homogenized(c7(data::kC7BlockB));
  throw Error("unknown fixture '" + std::string(name) + "'");
}

std::vector<FixtureCorrection> fixture_corrections() { return {{"c7_B", 5, 19, 0, 1}}; }

std::optional<std::vector<std::size_t>> same_up_to_column_permutation(const Configuration& a,
                                                                      const Configuration& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  std::map<std::vector<int>, std::vector<std::size_t>> where;
  for (std::size_t c = 0; c < a.cols(); ++c) where[a.column(c)].push_back(c);
  std::map<std::vector<int>, std::size_t> used;
  std::vector<std::size_t> sigma(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = b.column(j);
    auto it = where.find(col);
    std::size_t& k = used[col];
    if (it == where.end() || k >= it->second.size()) return std::nullopt;
    sigma[j] = it->second[k++];
  }
  return sigma;
}

std::optional<std::vector<std::size_t>> matching_row_permutation(const Configuration& a,
                                                                 const Configuration& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  if (a.rows() > 9) throw Error("matching_row_permutation: too many rows for exhaustive search");
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  std::multiset<std::vector<int>> target;
  for (std::size_t c = 0; c < b.cols(); ++c) target.insert(b.column(c));
  do {
    std::multiset<std::vector<int>> cols;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      std::vector<int> col;
      for (std::size_t old : perm) col.push_back(a.at(old, c));
      cols.insert(std::move(col));
    }
    if (cols == target) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Configuration squarefree_veronese(int d, int k) {
  if (d < 1 || k < 1 || k > d) throw Error("squarefree_veronese: need 1 <= k <= d");
  std::vector<std::vector<int>> rows(d);
  std::vector<int> pos(k);
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    for (int r = 0; r < d; ++r) rows[r].push_back(0);
    for (int p : pos) rows[p].back() = 1;
    int i = k - 1;
    while (i >= 0 && pos[i] == d - k + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
  return Configuration(std::move(rows), std::vector<Rational>(d, Rational(1, k)));
}

Subconfiguration cps_select(const Configuration& a, std::span<const Rational> f) {
  if (f.size() != a.rows()) throw Error("cps_select: covector length mismatch");
  std::vector<std::size_t> sel;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Rational dot(0);
    for (std::size_t r = 0; r < a.rows(); ++r) dot += f[r] * a.at(r, c);
    if (dot > Rational(1)) throw Error("cps_select: covector exceeds 1 on column " + std::to_string(c + 1));
    if (dot == Rational(1)) sel.push_back(c);
  }
  if (sel.empty()) throw Error("cps_select: empty face");
  std::vector<std::vector<int>> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c : sel) rows[r].push_back(a.at(r, c));
  return {Configuration(std::move(rows), std::vector<Rational>(f.begin(), f.end())), std::move(sel)};
}

Subconfiguration contraction_subring(const Graph& g, Edge e) {
  const int idx = g.edge_index(e);
  if (idx < 0) throw Error("contraction_subring: edge not in graph");
  Graph h = g.contract_edge(e);
  if (h.edge_count() != g.edge_count() - 1 || h.vertex_count() < 2)
    throw Error("contraction_subring: contraction does not stay simple");
  Configuration full = cut_configuration(g);
  std::vector<Rational> f(full.rows(), Rational(0));
  f.back() = 1;
  f[idx] = -1;
  auto face = cps_select(full, f);
  // On the selected face row idx is zero, so the standard grading still works after deletion.
  std::vector<Rational> c(full.rows(), Rational(0));
  c.back() = 1;
  Configuration sub = Configuration(face.config.matrix(), c).delete_row(idx);
  if (!same_up_to_column_permutation(sub, cut_configuration(h)))
    throw Error("contraction_subring: face does not match the contracted graph");
  return {std::move(sub), std::move(face.columns)};
}

std::vector<Monomial> fiber_monomials(const Configuration& a, std::span<const std::int64_t> b, int deg) {
  if (b.size() != a.rows()) throw Error("fiber_monomials: target length mismatch");
  if (a.grade(b) != Rational(deg)) throw Error("fiber_monomials: target is not of the stated degree");
  const std::size_t n = a.cols(), d = a.rows();
  std::vector<std::int64_t> rem(b.begin(), b.end());
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t x) { return x < 0; })) return {};
  std::vector<Exponent> u(n, 0);
  std::vector<Monomial> out;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t c, int left) {
    if (left == 0) {
      if (std::all_of(rem.begin(), rem.end(), [](std::int64_t x) { return x == 0; })) out.emplace_back(u);
      return;
    }
    if (c == n) return;
    std::int64_t cap = left;
    for (std::size_t r = 0; r < d; ++r)
      if (a.at(r, c) > 0) cap = std::min(cap, rem[r] / a.at(r, c));
    for (std::int64_t k = cap; k >= 0; --k) {
      u[c] = static_cast<Exponent>(k);
      for (std::size_t r = 0; r < d; ++r) rem[r] -= k * a.at(r, c);
      dfs(c + 1, left - static_cast<int>(k));
      for (std::size_t r = 0; r < d; ++r) rem[r] += k * a.at(r, c);
    }
    u[c] = 0;
  };
  dfs(0, deg);
  return out;
}

std::size_t integer_rank(const Configuration& a) {
  std::vector<std::vector<BigRational>> m(a.rows(), std::vector<BigRational>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a.at(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t sel = rank;
    while (sel < a.rows() && m[sel][c] == 0) ++sel;
    if (sel == a.rows()) continue;
    std::swap(m[sel], m[rank]);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (m[r][c] == 0) continue;
      BigRational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < a.cols(); ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cutgroeb
