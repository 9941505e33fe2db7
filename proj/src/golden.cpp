#include "cutgroeb/golden.hpp"

#include <regex>

#include "fixture_data.hpp"

namespace cutgroeb {

MonomialPair unordered_pair(const Binomial& b) {
  if (b.tail < b.lead) return {b.tail, b.lead};
  return {b.lead, b.tail};
}

GoldenParse parse_golden_list(std::string_view text, std::size_t num_vars, const Configuration* a) {
  std::string body;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char ch = text[k];
    if (ch == '\\' && k + 1 < text.size() && (text[k + 1] == '\\' || text[k + 1] == '{' || text[k + 1] == '}')) {
      ++k;  // "\\", "\{", "\}"
      continue;
    }
    if (ch == '$' || ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t') continue;
    body.push_back(ch);
  }

  static const std::regex term_re(R"(([+-]?)((?:x_\{\d+\})+))");
  static const std::regex var_re(R"(x_\{(\d+)\})");

  GoldenParse out;
  std::set<MonomialPair> seen;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(',', start);
    if (end == std::string::npos) end = body.size();
    std::string elem = body.substr(start, end - start);
    start = end + 1;
    if (elem.empty()) {
      if (end == body.size()) break;
      throw Error("golden list: empty element");
    }
    ++out.printed_count;

    std::vector<std::pair<char, Monomial>> terms;
    std::size_t consumed = 0;
    for (auto it = std::sregex_iterator(elem.begin(), elem.end(), term_re); it != std::sregex_iterator(); ++it) {
      if (static_cast<std::size_t>(it->position()) != consumed) throw Error("golden list: malformed element '" + elem + "'");
      consumed += static_cast<std::size_t>(it->length());
      std::vector<Exponent> e(num_vars, 0);
      std::string factors = (*it)[2].str();
      for (auto v = std::sregex_iterator(factors.begin(), factors.end(), var_re); v != std::sregex_iterator(); ++v) {
        std::size_t idx = std::stoul((*v)[1].str());
        if (idx == 0 || idx > num_vars) throw Error("golden list: variable index out of range in '" + elem + "'");
        ++e[idx - 1];
      }
      char sign = (*it)[1].str().empty() ? '+' : (*it)[1].str()[0];
      terms.emplace_back(sign, Monomial(std::move(e)));
    }
    if (consumed != elem.size() || terms.size() != 2) throw Error("golden list: malformed element '" + elem + "'");
    if (terms[0].first == terms[1].first) out.sign_typos.push_back(elem);

    Binomial b(terms[0].second, terms[1].second);
    if (a && !a->balanced(b)) out.unbalanced.push_back(elem);
    MonomialPair p = unordered_pair(b);
    if (seen.insert(p).second) out.pairs.push_back(std::move(p));
    else ++out.duplicates;
  }
  return out;
}

std::string_view golden_fig1_text() { return data::kGoldenFig1; }

GoldenParse parse_golden_fig1() {
  Configuration a = fixture("fig1");
  return parse_golden_list(data::kGoldenFig1, a.cols(), &a);
}

std::set<MonomialPair> pair_set(const GroebnerBasis& g) {
  std::set<MonomialPair> out;
  for (const Binomial& b : g.elements) out.insert(unordered_pair(b));
  return out;
}

}  // namespace cutgroeb
