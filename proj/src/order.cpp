#include "cutgroeb/order.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "fixture_data.hpp"

namespace cutgroeb {
namespace {

void check_ranking(const std::vector<std::size_t>& ranking) {
  std::vector<bool> seen(ranking.size(), false);
  for (std::size_t v : ranking) {
    if (v >= ranking.size() || seen[v]) throw Error("variable ranking is not a permutation");
    seen[v] = true;
  }
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

std::vector<std::size_t> one_based_to_ranking(const std::vector<std::size_t>& vars) {
  std::vector<std::size_t> r;
  r.reserve(vars.size());
  for (std::size_t v : vars) {
    if (v == 0) throw Error("variable numbers are 1-based");
    r.push_back(v - 1);
  }
  return r;
}

template <class Int>
std::string join_list(std::span<const Int> xs, Int offset) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i] + offset);
  }
  return out;
}

template <class Int>
std::vector<Int> parse_int_list(std::string_view s) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view tok = s.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw Error("empty entry in integer list '" + std::string(s) + "'");
    Int value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error("bad integer '" + std::string(tok) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> ranking) {
  check_ranking(ranking);
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.num_vars_ = ranking.size();
  o.ranking_ = std::move(ranking);
  return o;
}

MonomialOrder MonomialOrder::degrevlex(std::vector<std::size_t> ranking) {
  check_ranking(ranking);
  MonomialOrder o;
  o.kind_ = Kind::DegRevLex;
  o.num_vars_ = ranking.size();
  o.ranking_ = std::move(ranking);
  return o;
}

MonomialOrder MonomialOrder::weight(std::vector<std::int64_t> w, MonomialOrder tie) {
  if (w.size() != tie.num_vars()) throw Error("weight vector and tie order differ in length");
  MonomialOrder o;
  o.kind_ = Kind::Weight;
  o.num_vars_ = w.size();
  o.weights_ = std::move(w);
  o.tie_ = std::make_shared<const MonomialOrder>(std::move(tie));
  return o;
}

MonomialOrder MonomialOrder::lex(std::size_t num_vars) { return lex(identity(num_vars)); }
MonomialOrder MonomialOrder::degrevlex(std::size_t num_vars) { return degrevlex(identity(num_vars)); }

std::int64_t MonomialOrder::weight_of(std::span<const Exponent> u) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += weights_[i] * u[i];
  return s;
}

std::strong_ordering MonomialOrder::compare(std::span<const Exponent> u,
                                            std::span<const Exponent> v) const {
  if (u.size() != num_vars_ || v.size() != num_vars_) throw Error("monomial/order dimension mismatch");
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t var : ranking_)
        if (u[var] != v[var]) return u[var] <=> v[var];
      return std::strong_ordering::equal;
    case Kind::DegRevLex: {
      std::int64_t du = 0, dv = 0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        du += u[i];
        dv += v[i];
      }
      if (du != dv) return du <=> dv;
      // More of the cheapest variable means smaller.
      for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it)
        if (u[*it] != v[*it]) return v[*it] <=> u[*it];
      return std::strong_ordering::equal;
    }
    case Kind::Weight: {
      auto wu = weight_of(u), wv = weight_of(v);
      if (wu != wv) return wu <=> wv;
      return tie_->compare(u, v);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  return compare(u.exponents(), v.exponents());
}

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v,
                                            bool* tie_used) const {
  if (kind_ == Kind::Weight && tie_used != nullptr &&
      weight_of(u.exponents()) == weight_of(v.exponents()) && u != v)
    *tie_used = true;
  return compare(u, v);
}

Binomial MonomialOrder::mark(Monomial a, Monomial b) const {
  auto c = compare(a, b);
  if (c == 0) throw Error("cannot mark a binomial with equal terms");
  if (c > 0) return Binomial(std::move(a), std::move(b));
  return Binomial(std::move(b), std::move(a));
}

MonomialOrder MonomialOrder::restricted(std::span<const std::size_t> kept) const {
  std::vector<std::size_t> new_index(num_vars_, num_vars_);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] >= num_vars_) throw Error("restricted: variable out of range");
    new_index[kept[i]] = i;
  }
  if (kind_ == Kind::Weight) {
    std::vector<std::int64_t> w;
    for (std::size_t k : kept) w.push_back(weights_[k]);
    return weight(std::move(w), tie_->restricted(kept));
  }
  std::vector<std::size_t> r;
  for (std::size_t var : ranking_)
    if (new_index[var] != num_vars_) r.push_back(new_index[var]);
  return kind_ == Kind::Lex ? lex(std::move(r)) : degrevlex(std::move(r));
}

std::string MonomialOrder::descriptor() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex(" + join_list<std::size_t>(ranking_, 1) + ")";
    case Kind::DegRevLex:
      return "grevlex(" + join_list<std::size_t>(ranking_, 1) + ")";
    case Kind::Weight:
      return "weight(" + join_list<std::int64_t>(weights_, 0) + ";" + tie_->descriptor() + ")";
  }
  return {};
}

MonomialOrder named_order(std::string_view name) {
  if (name == "w_fig1")
    return MonomialOrder::weight(data::kWeightFig1, MonomialOrder::degrevlex(data::kWeightFig1.size()));
  if (name == "lex_c7") return MonomialOrder::lex(one_based_to_ranking(data::kLexC7));
  if (name == "lex1_B") return MonomialOrder::lex(one_based_to_ranking(data::kLex1B));
  if (name == "lex1_A_segment") {
    // Printed on x_23..x_57; renumbered onto the 35 block variables.
    std::vector<std::size_t> r;
    for (std::size_t v : data::kLex1ASegment) r.push_back(v - 23);
    return MonomialOrder::lex(std::move(r));
  }
  throw Error("unknown named order '" + std::string(name) + "'");
}

MonomialOrder parse_order(std::string_view text, std::size_t num_vars) {
  if (text.starts_with("named:")) {
    auto o = named_order(text.substr(6));
    if (o.num_vars() != num_vars)
      throw Error("order " + std::string(text) + " has " + std::to_string(o.num_vars()) +
                  " variables, ring has " + std::to_string(num_vars));
    return o;
  }
  if (text == "lex") return MonomialOrder::lex(num_vars);
  if (text == "grevlex" || text == "degrevlex") return MonomialOrder::degrevlex(num_vars);

  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw Error("bad order descriptor '" + std::string(text) + "'");
  std::string_view head = text.substr(0, open);
  std::string_view body = text.substr(open + 1, text.size() - open - 2);

  auto checked = [&](MonomialOrder o) {
    if (o.num_vars() != num_vars) throw Error("order length does not match the number of variables");
    return o;
  };
  if (head == "lex") return checked(MonomialOrder::lex(one_based_to_ranking(parse_int_list<std::size_t>(body))));
  if (head == "grevlex" || head == "degrevlex")
    return checked(MonomialOrder::degrevlex(one_based_to_ranking(parse_int_list<std::size_t>(body))));
  if (head == "weight") {
    auto semi = body.find(';');
    auto w = parse_int_list<std::int64_t>(body.substr(0, semi));
    MonomialOrder tie = semi == std::string_view::npos ? MonomialOrder::degrevlex(w.size())
                                                       : parse_order(body.substr(semi + 1), w.size());
    return checked(MonomialOrder::weight(std::move(w), std::move(tie)));
  }
  throw Error("unknown order kind '" + std::string(head) + "'");
}

bool initial_strict_under_weight(std::span<const std::int64_t> w, std::span<const Binomial> basis) {
  for (const Binomial& b : basis) {
    if (b.num_vars() != w.size()) throw Error("weight length mismatch");
    std::int64_t wl = 0, wt = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      wl += w[i] * b.lead[i];
      wt += w[i] * b.tail[i];
    }
    if (wl <= wt) return false;
  }
  return true;
}

}  // namespace cutgroeb
