#include "cutgroeb/groebner.hpp"

#include <algorithm>

namespace cutgroeb {
namespace {

// Struct-of-arrays store of marked binomials with support masks over the
// leads, so divisor search touches one word per candidate for n <= 64.
class LeadTable {
 public:
  explicit LeadTable(std::size_t n) : n_(n), words_(std::max<std::size_t>(1, (n + 63) / 64)) {}

  std::size_t size() const { return degs_.size(); }
  std::size_t num_vars() const { return n_; }
  std::size_t words() const { return words_; }
  const Exponent* lead(std::size_t i) const { return leads_.data() + i * n_; }
  const Exponent* tail(std::size_t i) const { return tails_.data() + i * n_; }
  Exponent lead_degree(std::size_t i) const { return degs_[i]; }
  bool active(std::size_t i) const { return active_[i] != 0; }
  const std::uint64_t* mask(std::size_t i) const { return masks_.data() + i * words_; }
  void deactivate(std::size_t i) { active_[i] = 0; }

  void add(const Binomial& b) {
    auto l = b.lead.exponents(), t = b.tail.exponents();
    leads_.insert(leads_.end(), l.begin(), l.end());
    tails_.insert(tails_.end(), t.begin(), t.end());
    std::size_t base = masks_.size();
    masks_.resize(base + words_, 0);
    fill_mask(l.data(), masks_.data() + base);
    degs_.push_back(b.lead.degree());
    active_.push_back(1);
  }

  void fill_mask(const Exponent* m, std::uint64_t* out) const {
    std::fill(out, out + words_, 0);
    for (std::size_t k = 0; k < n_; ++k)
      if (m[k] != 0) out[k >> 6] |= std::uint64_t{1} << (k & 63);
  }

  // First active element whose lead divides m, or -1.
  long find_divisor(const Exponent* m, const std::uint64_t* mmask, Exponent mdeg) const {
    const std::size_t count = size();
    for (std::size_t i = 0; i < count; ++i) {
      if (!active_[i] || degs_[i] > mdeg) continue;
      const std::uint64_t* lm = masks_.data() + i * words_;
      bool ok = true;
      for (std::size_t w = 0; w < words_ && ok; ++w) ok = (lm[w] & ~mmask[w]) == 0;
      if (!ok) continue;
      const Exponent* l = lead(i);
      std::size_t k = 0;
      while (k < n_ && l[k] <= m[k]) ++k;
      if (k == n_) return static_cast<long>(i);
    }
    return -1;
  }

  // Rewrites m in place to its normal form; returns the number of steps.
  std::size_t reduce(std::vector<Exponent>& m) const {
    std::vector<std::uint64_t> mask(words_);
    std::size_t steps = 0;
    Exponent deg = 0;
    for (Exponent e : m) deg += e;
    while (true) {
      fill_mask(m.data(), mask.data());
      long i = find_divisor(m.data(), mask.data(), deg);
      if (i < 0) return steps;
      const Exponent* l = lead(i);
      const Exponent* t = tail(i);
      for (std::size_t k = 0; k < n_; ++k) m[k] += t[k] - l[k];
      deg = 0;
      for (Exponent e : m) deg += e;
      ++steps;
    }
  }

 private:
  std::size_t n_, words_;
  std::vector<Exponent> leads_, tails_;
  std::vector<std::uint64_t> masks_;
  std::vector<Exponent> degs_;
  std::vector<char> active_;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const BuchbergerOptions& options)
      : order_(order), options_(options), n_(order.num_vars()), table_(n_), la_(n_), lb_(n_) {}

  void add_generator(const Binomial& g) {
    if (g.num_vars() != n_) throw Error("generator has the wrong number of variables");
    std::vector<Exponent> a(g.lead.exponents().begin(), g.lead.exponents().end());
    std::vector<Exponent> b(g.tail.exponents().begin(), g.tail.exponents().end());
    stats_.reduction_steps += table_.reduce(a) + table_.reduce(b);
    if (a != b) insert(mark(Monomial(std::move(a)), Monomial(std::move(b))));
  }

  void run() {
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), later_);
      Pair p = heap_.back();
      heap_.pop_back();
      if (!pairs_alive_[p.id]) continue;
      pairs_alive_[p.id] = 0;
      ++stats_.pairs_reduced;
      const Exponent* li = table_.lead(p.i);
      const Exponent* lj = table_.lead(p.j);
      const Exponent* ti = table_.tail(p.i);
      const Exponent* tj = table_.tail(p.j);
      std::vector<Exponent> a(n_), b(n_);
      for (std::size_t k = 0; k < n_; ++k) {
        Exponent l = std::max(li[k], lj[k]);
        a[k] = l - li[k] + ti[k];
        b[k] = l - lj[k] + tj[k];
      }
      stats_.reduction_steps += table_.reduce(a);
      stats_.reduction_steps += table_.reduce(b);
      if (a == b) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(mark(Monomial(std::move(a)), Monomial(std::move(b))));
    }
  }

  std::vector<Binomial> take_elements() { return std::move(elements_); }
  const BuchbergerStats& stats() const { return stats_; }

 private:
  struct Pair {
    std::uint32_t i, j;
    Exponent deg;
    std::uint32_t id;
  };

  // Heap comparator: x is scheduled after y. Key is (lcm degree, lcm under
  // the order, creation index), smallest first.
  struct Later {
    Engine* e;
    bool operator()(const Pair& x, const Pair& y) const {
      if (x.deg != y.deg) return x.deg > y.deg;
      e->lcm_into(x.i, x.j, e->la_.data());
      e->lcm_into(y.i, y.j, e->lb_.data());
      auto c = e->order_.compare(e->la_, e->lb_);
      if (c != 0) return c > 0;
      return x.id > y.id;
    }
  };

  void lcm_into(std::uint32_t i, std::uint32_t j, Exponent* out) const {
    const Exponent* a = table_.lead(i);
    const Exponent* b = table_.lead(j);
    for (std::size_t k = 0; k < n_; ++k) out[k] = std::max(a[k], b[k]);
  }

  Binomial mark(Monomial a, Monomial b) {
    bool tie = false;
    auto c = order_.compare(a, b, &tie);
    if (tie) stats_.tie_used_in_marking = true;
    if (c > 0) return Binomial(std::move(a), std::move(b));
    return Binomial(std::move(b), std::move(a));
  }

  void push_pair(std::uint32_t i, std::uint32_t k, Exponent deg) {
    auto id = static_cast<std::uint32_t>(pairs_alive_.size());
    pairs_alive_.push_back(1);
    heap_.push_back(Pair{i, k, deg, id});
    std::push_heap(heap_.begin(), heap_.end(), later_);
  }

  void insert(Binomial g) {
    const auto k = static_cast<std::uint32_t>(elements_.size());
    table_.add(g);
    elements_.push_back(std::move(g));
    stats_.max_basis_size = std::max(stats_.max_basis_size, elements_.size());
    if (options_.chain_criterion) update_gm(k);
    else update_plain(k);
  }

  // Pairs with every older element; only coprime pairs are dropped.
  void update_plain(std::uint32_t k) {
    const Exponent* lk = table_.lead(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      const Exponent* li = table_.lead(i);
      Exponent deg = 0;
      bool coprime = true;
      bool divides_old = table_.active(i) && table_.lead_degree(k) <= table_.lead_degree(i);
      for (std::size_t v = 0; v < n_; ++v) {
        if (li[v] != 0 && lk[v] != 0) coprime = false;
        if (lk[v] > li[v]) divides_old = false;
        deg += std::max(li[v], lk[v]);
      }
      // Older elements whose lead the new lead divides stay in the pair
      // schedule but are no longer needed for reduction.
      if (divides_old) table_.deactivate(i);
      ++stats_.pairs_created;
      if (coprime) {
        ++stats_.pairs_coprime;
        continue;
      }
      push_pair(i, k, deg);
    }
  }

  // Gebauer-Moeller update: new pairs are filtered against each other,
  // pending pairs whose lcm the new lead divides strictly are dropped, and
  // elements with a lead divisible by the new one leave the basis.
  void update_gm(std::uint32_t k) {
    const std::size_t w = table_.words();
    const Exponent* lk = table_.lead(k);
    const std::uint64_t* mk = table_.mask(k);

    struct Cand {
      std::uint32_t i;
      Exponent deg;
      bool coprime;
      bool kept;
    };
    std::vector<Cand> cands;
    std::vector<Exponent> lcms;
    std::vector<std::uint64_t> masks;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (!table_.active(i)) continue;
      const Exponent* li = table_.lead(i);
      Cand c{i, 0, true, false};
      std::size_t base = lcms.size();
      lcms.resize(base + n_);
      for (std::size_t v = 0; v < n_; ++v) {
        if (li[v] != 0 && lk[v] != 0) c.coprime = false;
        lcms[base + v] = std::max(li[v], lk[v]);
        c.deg += lcms[base + v];
      }
      const std::uint64_t* mi = table_.mask(i);
      for (std::size_t x = 0; x < w; ++x) masks.push_back(mi[x] | mk[x]);
      cands.push_back(c);
      ++stats_.pairs_created;
    }

    auto lcm_divides = [&](std::size_t x, std::size_t y) {
      if (cands[x].deg > cands[y].deg) return false;
      for (std::size_t q = 0; q < w; ++q)
        if ((masks[x * w + q] & ~masks[y * w + q]) != 0) return false;
      const Exponent* a = lcms.data() + x * n_;
      const Exponent* b = lcms.data() + y * n_;
      for (std::size_t v = 0; v < n_; ++v)
        if (a[v] > b[v]) return false;
      return true;
    };

    for (std::size_t c = 0; c < cands.size(); ++c) {
      bool keep = cands[c].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t x = c + 1; x < cands.size() && keep; ++x)
          if (lcm_divides(x, c)) keep = false;
        for (std::size_t x = 0; x < c && keep; ++x)
          if (cands[x].kept && lcm_divides(x, c)) keep = false;
      }
      cands[c].kept = keep;
    }

    // Criterion B_k on the pending pairs.
    for (const Pair& p : heap_) {
      if (!pairs_alive_[p.id]) continue;
      const std::uint64_t* mi = table_.mask(p.i);
      const std::uint64_t* mj = table_.mask(p.j);
      bool sub = true;
      for (std::size_t q = 0; q < w && sub; ++q) sub = (mk[q] & ~(mi[q] | mj[q])) == 0;
      if (!sub) continue;
      const Exponent* li = table_.lead(p.i);
      const Exponent* lj = table_.lead(p.j);
      bool divides = true, eq_ik = true, eq_jk = true;
      for (std::size_t v = 0; v < n_ && divides; ++v) {
        Exponent l = std::max(li[v], lj[v]);
        if (lk[v] > l) divides = false;
        if (std::max(li[v], lk[v]) != l) eq_ik = false;
        if (std::max(lj[v], lk[v]) != l) eq_jk = false;
      }
      if (divides && !eq_ik && !eq_jk) {
        pairs_alive_[p.id] = 0;
        ++stats_.pairs_chain;
      }
    }

    for (const Cand& c : cands) {
      if (c.coprime) {
        ++stats_.pairs_coprime;
        continue;
      }
      if (!c.kept) {
        ++stats_.pairs_chain;
        continue;
      }
      push_pair(c.i, k, c.deg);
    }

    for (std::uint32_t i = 0; i < k; ++i) {
      if (!table_.active(i) || table_.lead_degree(k) > table_.lead_degree(i)) continue;
      const Exponent* li = table_.lead(i);
      std::size_t v = 0;
      while (v < n_ && lk[v] <= li[v]) ++v;
      if (v == n_) table_.deactivate(i);
    }
  }

  const MonomialOrder& order_;
  BuchbergerOptions options_;
  std::size_t n_;
  LeadTable table_;
  std::vector<Binomial> elements_;
  std::vector<Pair> heap_;
  std::vector<char> pairs_alive_;
  std::vector<Exponent> la_, lb_;
  Later later_{this};
  BuchbergerStats stats_;
};

}  // namespace

struct Reducer::Impl {
  LeadTable table;
  explicit Impl(std::size_t n) : table(n) {}
};

Reducer::Reducer(std::span<const Binomial> rules)
    : impl_(std::make_unique<Impl>(rules.empty() ? 0 : rules.front().num_vars())) {
  for (const Binomial& r : rules) {
    if (r.num_vars() != impl_->table.num_vars()) throw Error("reducer rules over different rings");
    impl_->table.add(r);
  }
}

Reducer::~Reducer() = default;
Reducer::Reducer(Reducer&&) noexcept = default;
Reducer& Reducer::operator=(Reducer&&) noexcept = default;

std::size_t Reducer::size() const { return impl_->table.size(); }

Monomial Reducer::normal_form(const Monomial& m) const {
  if (impl_->table.size() == 0) return m;
  if (m.num_vars() != impl_->table.num_vars()) throw Error("normal_form: dimension mismatch");
  std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
  impl_->table.reduce(e);
  return Monomial(std::move(e));
}

bool Reducer::equivalent(const Binomial& b) const { return normal_form(b.lead) == normal_form(b.tail); }

Monomial normal_form(const Monomial& m, std::span<const Binomial> rules) { return Reducer(rules).normal_form(m); }

std::optional<Binomial> s_pair(const Binomial& g1, const Binomial& g2, const MonomialOrder& order) {
  Monomial l = g1.lead.lcm(g2.lead);
  Monomial a = (l / g1.lead) * g1.tail;
  Monomial b = (l / g2.lead) * g2.tail;
  if (a == b) return std::nullopt;
  return order.mark(std::move(a), std::move(b));
}

GroebnerBasis buchberger(std::span<const Binomial> gens, const MonomialOrder& order,
                         const BuchbergerOptions& options, BuchbergerStats* stats) {
  Engine engine(order, options);
  for (const Binomial& g : gens) engine.add_generator(g);
  engine.run();
  if (stats) *stats = engine.stats();
  return reduce_basis(GroebnerBasis{engine.take_elements(), order, false});
}

GroebnerBasis reduce_basis(const GroebnerBasis& g) {
  const MonomialOrder& order = g.order;
  std::vector<const Binomial*> sorted;
  for (const Binomial& b : g.elements)
    if (b.lead != b.tail) sorted.push_back(&b);
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Binomial* x, const Binomial* y) {
    if (x->lead.degree() != y->lead.degree()) return x->lead.degree() < y->lead.degree();
    return order.compare(x->lead, y->lead) < 0;
  });

  std::vector<Binomial> kept;
  LeadTable table(order.num_vars());
  std::vector<std::uint64_t> mask(table.words());
  for (const Binomial* b : sorted) {
    table.fill_mask(b->lead.exponents().data(), mask.data());
    if (table.find_divisor(b->lead.exponents().data(), mask.data(), b->lead.degree()) >= 0) continue;
    table.add(*b);
    kept.push_back(*b);
  }
  for (Binomial& b : kept) {
    std::vector<Exponent> t(b.tail.exponents().begin(), b.tail.exponents().end());
    table.reduce(t);
    b.tail = Monomial(std::move(t));
  }
  std::sort(kept.begin(), kept.end(), [&](const Binomial& x, const Binomial& y) {
    auto c = order.compare(x.lead, y.lead);
    if (c != 0) return c < 0;
    return order.compare(x.tail, y.tail) < 0;
  });
  return GroebnerBasis{std::move(kept), order, true};
}

std::map<int, std::size_t> degree_histogram(const GroebnerBasis& g) {
  std::map<int, std::size_t> h;
  for (const Binomial& b : g.elements) ++h[b.lead.degree()];
  return h;
}

bool is_quadratic(const GroebnerBasis& g) {
  return std::all_of(g.elements.begin(), g.elements.end(), [](const Binomial& b) { return b.lead.degree() == 2; });
}

bool is_squarefree_initial(const GroebnerBasis& g) {
  return std::all_of(g.elements.begin(), g.elements.end(), [](const Binomial& b) { return b.lead.is_squarefree(); });
}

bool ideal_membership(const Binomial& b, const GroebnerBasis& g) { return Reducer(g.elements).equivalent(b); }

std::map<int, std::size_t> minimal_generation_degrees(std::span<const Binomial> gens, const Configuration& a) {
  std::vector<const Binomial*> sorted;
  for (const Binomial& b : gens) {
    if (!a.balanced(b)) throw Error("minimal_generation_degrees: unbalanced generator " + b.to_string());
    if (b.lead.degree() != b.tail.degree()) throw Error("minimal_generation_degrees: inhomogeneous generator");
    if (b.lead != b.tail) sorted.push_back(&b);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Binomial* x, const Binomial* y) { return x->degree() < y->degree(); });
  std::map<int, std::size_t> counts;
  if (sorted.empty()) return counts;
  const MonomialOrder order = MonomialOrder::degrevlex(a.cols());
  std::vector<Binomial> basis;
  std::optional<Reducer> reducer;
  for (const Binomial* b : sorted) {
    if (reducer && reducer->equivalent(*b)) continue;
    ++counts[b->degree()];
    basis.push_back(*b);
    basis = buchberger(basis, order).elements;
    reducer.emplace(basis);
  }
  return counts;
}

bool no_binomial_with_monomial(const Configuration& a, const Monomial& m) {
  auto b = a.image(m);
  Rational deg = a.grade(b);
  if (deg.denominator() != 1) throw Error("no_binomial_with_monomial: non-integral degree");
  auto fiber = fiber_monomials(a, b, static_cast<int>(deg.numerator()));
  return fiber.size() == 1 && fiber.front() == m;
}

std::string canonical_element(const Binomial& b) { return b.lead.to_string() + " - " + b.tail.to_string(); }

std::string dump_basis(const GroebnerBasis& g) {
  std::vector<std::string> lines;
  for (const Binomial& b : g.elements) lines.push_back(canonical_element(b));
  std::sort(lines.begin(), lines.end());
  std::string out = "n=" + std::to_string(g.order.num_vars()) + " order=" + g.order.descriptor() +
                    " reduced=" + (g.reduced ? "true" : "false") + "\n";
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace cutgroeb
