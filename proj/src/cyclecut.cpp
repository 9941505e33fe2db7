#include "cutgroeb/cyclecut.hpp"

#include <algorithm>
#include <sstream>

#include "cutgroeb/graph.hpp"
#include "cutgroeb/toric.hpp"

namespace cutgroeb {

QIndex QIndex::parse(std::string_view text) {
  QIndex q;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw Error("q index must be a 0/1 string: '" + std::string(text) + "'");
    q.bits.push_back(ch - '0');
  }
  if (q.bits.empty()) throw Error("empty q index");
  return q;
}

int QIndex::parity() const {
  int s = 0;
  for (int b : bits) s += b;
  return s % 2;
}

std::size_t QIndex::value() const {
  std::size_t v = 0;
  for (int b : bits) v = 2 * v + static_cast<std::size_t>(b);
  return v;
}

QIndex QIndex::without(std::size_t pos) const {
  if (pos >= bits.size()) throw Error("QIndex::without: position out of range");
  QIndex q = *this;
  q.bits.erase(q.bits.begin() + static_cast<std::ptrdiff_t>(pos));
  return q;
}

std::string QIndex::to_string() const {
  std::string s;
  for (int b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

namespace {

QIndex index_of(std::size_t value, int m) {
  QIndex q;
  q.bits.resize(static_cast<std::size_t>(m));
  for (int k = m - 1; k >= 0; --k) {
    q.bits[static_cast<std::size_t>(k)] = static_cast<int>(value & 1);
    value >>= 1;
  }
  return q;
}

Monomial product(const QIndex& a, const QIndex& b) {
  const std::size_t n = std::size_t{1} << a.length();
  std::vector<Exponent> e(n, 0);
  ++e[a.value()];
  ++e[b.value()];
  return Monomial(std::move(e));
}

}  // namespace

Configuration phi_config(int m) {
  if (m < 2) throw Error("phi_config: m must be at least 2");
  const std::size_t n = std::size_t{1} << m;
  const std::size_t d = 2 * static_cast<std::size_t>(m + 1);
  std::vector<std::vector<int>> rows(d, std::vector<int>(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    QIndex q = index_of(c, m);
    for (std::size_t j = 0; j < q.length(); ++j) rows[2 * j + static_cast<std::size_t>(q.bits[j])][c] = 1;
    rows[2 * static_cast<std::size_t>(m) + static_cast<std::size_t>(q.parity())][c] = 1;
  }
  std::vector<Rational> grading(d, Rational(0));
  grading[d - 2] = grading[d - 1] = Rational(1);
  return Configuration(std::move(rows), std::move(grading));
}

Monomial q_monomial(int m, std::initializer_list<std::string_view> indices) {
  std::vector<Exponent> e(std::size_t{1} << m, 0);
  for (std::string_view s : indices) {
    QIndex q = QIndex::parse(s);
    if (q.length() != static_cast<std::size_t>(m)) throw Error("q index of the wrong length: " + std::string(s));
    ++e[q.value()];
  }
  return Monomial(std::move(e));
}

CycleCorrespondence cycle_correspondence(int m) {
  if (m < 2) throw Error("cycle_correspondence: m must be at least 2");
  const std::size_t n = std::size_t{1} << m;
  Configuration phi = phi_config(m);
  Configuration cut = cut_configuration(Graph::cycle(m + 1));

  std::map<std::vector<int>, std::size_t> where;
  for (std::size_t c = 0; c < cut.cols(); ++c) where[cut.column(c)] = c;

  CycleCorrespondence out;
  std::vector<char> hit(cut.cols(), 0);
  bool ok = cut.cols() == n;
  for (std::size_t c = 0; c < n; ++c) {
    QIndex q = index_of(c, m);
    std::vector<int> v(q.bits.begin(), q.bits.end());
    v.push_back(q.parity());
    int weight = 0;
    for (int x : v) weight += x;
    ++out.weight_distribution[weight];
    v.push_back(1);
    auto it = where.find(v);
    if (it == where.end() || hit[it->second]) {
      ok = false;
      out.to_cut_column.push_back(cut.cols());
      continue;
    }
    hit[it->second] = 1;
    out.to_cut_column.push_back(it->second);
  }
  out.bijective = ok;
  if (!ok) return out;

  auto in_kernel = [](const Configuration& a, const std::vector<std::int64_t>& u) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      std::int64_t s = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) s += a.at(r, c) * u[c];
      if (s != 0) return false;
    }
    return true;
  };
  LatticeBasis kp = integer_kernel_basis(phi);
  LatticeBasis kc = integer_kernel_basis(cut);
  bool match = kp.vectors.size() == kc.vectors.size();
  for (const auto& u : kp.vectors) {
    std::vector<std::int64_t> w(n, 0);
    for (std::size_t c = 0; c < n; ++c) w[out.to_cut_column[c]] = u[c];
    match = match && in_kernel(cut, w);
  }
  for (const auto& w : kc.vectors) {
    std::vector<std::int64_t> u(n, 0);
    for (std::size_t c = 0; c < n; ++c) u[c] = w[out.to_cut_column[c]];
    match = match && in_kernel(phi, u);
  }
  out.kernels_match = match;
  return out;
}

QQuad QQuad::from_binomial(const Binomial& b, int m) {
  const std::size_t n = std::size_t{1} << m;
  if (b.num_vars() != n || b.lead.degree() != 2 || b.tail.degree() != 2)
    throw Error("QQuad: expected a quadratic binomial in 2^m q-variables");
  auto split = [&](const Monomial& u) {
    std::vector<QIndex> out;
    for (std::size_t c = 0; c < n; ++c)
      for (Exponent k = 0; k < u[c]; ++k) out.push_back(index_of(c, m));
    return out;
  };
  auto a = split(b.lead), t = split(b.tail);
  return QQuad{a[0], a[1], t[0], t[1]};
}

Binomial QQuad::deleted(std::size_t pos) const {
  return Binomial(product(i.without(pos), j.without(pos)), product(k.without(pos), l.without(pos)));
}

std::string QQuad::to_string() const {
  return "q" + i.to_string() + "*q" + j.to_string() + " - q" + k.to_string() + "*q" + l.to_string();
}

GmContext::GmContext(int m)
    : m_(m),
      config_(phi_config(std::max(m, 2))),
      smaller_config_(phi_config(std::max(m - 1, 2))),
      smaller_(buchberger(toric_ideal(smaller_config_), MonomialOrder::degrevlex(smaller_config_.cols()))),
      smaller_reducer_(smaller_.elements) {
  if (m < 4) throw Error("G_m is defined for m >= 4");
}

bool GmContext::in_smaller(const Binomial& b) const {
  bool member = smaller_reducer_.equivalent(b);
  if (member != smaller_config_.balanced(b))
    throw Error("I_{m-1} membership disagrees with the balance test for " + b.to_string());
  return member;
}

GmClassification GmContext::classify(const QQuad& q) const {
  GmClassification out;
  bool all2 = true;
  for (std::size_t p = 0; p < static_cast<std::size_t>(m_); ++p) {
    int a = q.i.bits[p], b = q.j.bits[p], c = q.k.bits[p], d = q.l.bits[p];
    bool deleted_member = in_smaller(q.deleted(p));
    PositionCheck r1{p + 1, a == b && b == c && c == d, deleted_member};
    PositionCheck r2{p + 1, a + b == 1 && c + d == 1, deleted_member};
    out.rule1_holds = out.rule1_holds || (r1.pattern && r1.deleted_in_smaller);
    all2 = all2 && r2.pattern && r2.deleted_in_smaller;
    out.rule1.push_back(r1);
    out.rule2.push_back(r2);
  }
  out.rule2_holds = all2;
  return out;
}

std::vector<Binomial> gm_set(const GmContext& ctx) {
  const Configuration& a = ctx.config();
  const std::size_t n = a.cols();
  std::map<std::vector<std::int64_t>, std::vector<Monomial>> fibers;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      Monomial u = Monomial::from_vars(n, {x + 1, y + 1});
      fibers[a.image(u)].push_back(std::move(u));
    }
  std::vector<Binomial> out;
  for (const auto& [image, ms] : fibers)
    for (std::size_t s = 0; s < ms.size(); ++s)
      for (std::size_t t = s + 1; t < ms.size(); ++t) {
        Binomial b(ms[s], ms[t]);
        if (ctx.classify(QQuad::from_binomial(b, ctx.m())).in_gm()) out.push_back(std::move(b));
      }
  return out;
}

std::vector<Binomial> gm_set(int m) { return gm_set(GmContext(m)); }

bool RefutationReport::passed() const {
  return q_in_im && !q_in_gm_set && !q_in_gm_ideal && !q_prime_in_smaller && !q_positions.in_gm() &&
         p_size == 16 && p_pairs_in_im > 0 && p_pairs_in_gm_set == 0 && p_pairs_in_gm_ideal == 0;
}

std::string RefutationReport::to_string() const {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "dim of the degree-2 part of I_5: " << balanced_quadrics << "\n";
  os << "|G_5| = " << gm_size << ", reduced basis of <G_5>: " << gm_basis_size << " elements\n";
  os << "q in I_5: " << yn(q_in_im) << "\n";
  os << "q in G_5: " << yn(q_in_gm_set) << "\n";
  os << "q in <G_5>: " << yn(q_in_gm_ideal) << "\n";
  os << "q' = q1101*q0010 - q1111*q0000 in I_4: " << yn(q_prime_in_smaller) << "\n";
  os << "q by position (rule 1: i=j=k=l / deleted in I_4; rule 2: i+j=1=k+l / deleted in I_4):\n";
  for (std::size_t p = 0; p < q_positions.rule1.size(); ++p) {
    const auto& r1 = q_positions.rule1[p];
    const auto& r2 = q_positions.rule2[p];
    os << "  position " << r1.position << ": rule1 " << yn(r1.pattern) << "/" << yn(r1.deleted_in_smaller)
       << ", rule2 " << yn(r2.pattern) << "/" << yn(r2.deleted_in_smaller) << "\n";
  }
  os << "|P| = " << p_size << ", pairs " << p_pairs << ", in I_5 " << p_pairs_in_im << ", in G_5 "
     << p_pairs_in_gm_set << ", in <G_5> " << p_pairs_in_gm_ideal << "\n";
  return os.str();
}

RefutationReport refute_generation(int m) {
  if (m != 5) throw Error("refute_generation: only m = 5 is supported");
  GmContext ctx(m);
  const Configuration& a = ctx.config();
  const std::size_t n = a.cols();
  RefutationReport rep;

  std::vector<Binomial> gm = gm_set(ctx);
  rep.gm_size = gm.size();
  GroebnerBasis gm_basis = buchberger(gm, MonomialOrder::degrevlex(n));
  rep.gm_basis_size = gm_basis.elements.size();
  Reducer in_gm(gm_basis.elements);

  GroebnerBasis im_basis = buchberger(toric_ideal(a), MonomialOrder::degrevlex(n));
  Reducer in_im(im_basis.elements);
  rep.balanced_quadrics = balanced_quadrics(a).size();

  Binomial q(q_monomial(5, {"10101", "01010"}), q_monomial(5, {"11111", "00000"}));
  rep.q_in_im = in_im.equivalent(q);
  rep.q_in_gm_set = std::any_of(gm.begin(), gm.end(), [&](const Binomial& g) { return same_up_to_sign(g, q); });
  rep.q_in_gm_ideal = in_gm.equivalent(q);
  rep.q_positions = ctx.classify(QQuad::from_binomial(q, 5));
  Binomial q_prime(q_monomial(4, {"1101", "0010"}), q_monomial(4, {"1111", "0000"}));
  rep.q_prime_in_smaller = ctx.in_smaller(q_prime);

  std::vector<Monomial> p;
  for (std::size_t v = 0; v < n / 2; ++v) p.push_back(product(index_of(v, m), index_of(n - 1 - v, m)));
  rep.p_size = p.size();
  for (std::size_t s = 0; s < p.size(); ++s)
    for (std::size_t t = s + 1; t < p.size(); ++t) {
      Binomial b(p[s], p[t]);
      ++rep.p_pairs;
      if (!in_im.equivalent(b)) continue;
      ++rep.p_pairs_in_im;
      if (ctx.classify(QQuad::from_binomial(b, m)).in_gm()) ++rep.p_pairs_in_gm_set;
      if (in_gm.equivalent(b)) ++rep.p_pairs_in_gm_ideal;
    }
  return rep;
}

std::map<int, std::size_t> table1_exploration(const MonomialOrder& order) {
  Configuration a = phi_config(5);
  if (order.num_vars() != a.cols()) throw Error("table1_exploration: order must be on 32 variables");
  return degree_histogram(buchberger(toric_ideal(a), order));
}

std::map<int, std::size_t> table1_target() { return {{2, 195}, {3, 10}, {4, 2}}; }

MonomialOrder table1_default_order() {
  std::vector<std::size_t> ranking;
  for (std::size_t v = 32; v-- > 0;) ranking.push_back(v);
  return MonomialOrder::lex(std::move(ranking));
}

}  // namespace cutgroeb
