#include "cutgroeb/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cutgroeb/cyclecut.hpp"

namespace cutgroeb {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

long parse_long(std::string_view s, const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw Error(std::string("bad ") + what + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace

Graph read_graph(std::istream& in) {
  int m = 0;
  if (!(in >> m)) throw Error("graph file: missing vertex count");
  std::vector<Edge> edges;
  int u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw Error("graph file: dangling endpoint");
    edges.push_back(Edge{u, v});
  }
  if (!in.eof()) throw Error("graph file: non-integer token");
  return Graph(m, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& spec) {
  std::ifstream in(spec);
  if (in) return read_graph(in);
  return Graph::named(spec);
}

Configuration read_configuration(std::istream& in) {
  std::size_t d = 0, n = 0;
  if (!(in >> d >> n)) throw Error("configuration file: missing \"d n\" header");
  std::vector<std::vector<int>> rows(d, std::vector<int>(n));
  for (auto& row : rows)
    for (int& x : row)
      if (!(in >> x)) throw Error("configuration file: expected " + std::to_string(d * n) + " entries");
  std::string extra;
  if (in >> extra) throw Error("configuration file: trailing data '" + extra + "'");
  return Configuration::with_inferred_grading(std::move(rows));
}

void write_configuration(std::ostream& out, const Configuration& a) {
  out << a.rows() << " " << a.cols() << "\n";
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out << (c ? " " : "") << a.at(r, c);
    out << "\n";
  }
}

Configuration load_configuration(const std::string& spec) {
  if (spec.starts_with("cut:")) return cut_configuration(load_graph(spec.substr(4)));
  if (spec.starts_with("phi:")) return phi_config(static_cast<int>(parse_long(spec.substr(4), "m")));
  if (spec.starts_with("veronese:")) {
    std::string rest = spec.substr(9);
    std::size_t comma = rest.find(',');
    if (comma == std::string::npos) throw Error("expected veronese:<d>,<k>");
    return squarefree_veronese(static_cast<int>(parse_long(rest.substr(0, comma), "d")),
                               static_cast<int>(parse_long(rest.substr(comma + 1), "k")));
  }
  std::ifstream in(spec);
  if (in) return read_configuration(in);
  return fixture(spec);
}

Monomial parse_monomial(std::string_view text, std::size_t num_vars) {
  std::string s = trim(text);
  std::vector<Exponent> e(num_vars, 0);
  if (s == "1") return Monomial(std::move(e));
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t star = s.find('*', pos);
    if (star == std::string::npos) star = s.size();
    std::string_view factor(s.data() + pos, star - pos);
    if (!factor.starts_with("x_")) throw Error("bad monomial factor '" + std::string(factor) + "'");
    factor.remove_prefix(2);
    long power = 1;
    if (std::size_t caret = factor.find('^'); caret != std::string_view::npos) {
      power = parse_long(factor.substr(caret + 1), "exponent");
      factor = factor.substr(0, caret);
    }
    long var = parse_long(factor, "variable");
    if (var < 1 || static_cast<std::size_t>(var) > num_vars || power < 1)
      throw Error("monomial factor out of range in '" + s + "'");
    e[static_cast<std::size_t>(var - 1)] += static_cast<Exponent>(power);
    pos = star + 1;
  }
  return Monomial(std::move(e));
}

Binomial parse_binomial(std::string_view text, std::size_t num_vars) {
  std::size_t sep = text.find(" - ");
  if (sep == std::string_view::npos) throw Error("bad binomial '" + std::string(text) + "'");
  return Binomial(parse_monomial(text.substr(0, sep), num_vars), parse_monomial(text.substr(sep + 3), num_vars));
}

BasisDump parse_basis_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw Error("basis dump: empty");
  BasisDump out;
  std::istringstream hs(header);
  std::string field;
  bool have_n = false;
  while (hs >> field) {
    if (field.starts_with("n=")) {
      out.num_vars = static_cast<std::size_t>(parse_long(field.substr(2), "n"));
      have_n = true;
    } else if (field.starts_with("order=")) {
      out.order = field.substr(6);
    } else if (field.starts_with("reduced=")) {
      out.reduced = field.substr(8) == "true";
    } else {
      throw Error("basis dump: unknown header field '" + field + "'");
    }
  }
  if (!have_n) throw Error("basis dump: header lacks n=");
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (!t.empty()) out.elements.push_back(parse_binomial(t, out.num_vars));
  }
  return out;
}

}  // namespace cutgroeb
