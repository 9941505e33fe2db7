#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cutgroeb/config.hpp"
#include "cutgroeb/graph.hpp"
#include "cutgroeb/groebner.hpp"

namespace cutgroeb {

/// "m" on the first line, then one "u v" pair per edge (1-based).
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
/// A named id (see Graph::named) or a path to a graph file.
Graph load_graph(const std::string& spec);

/// "d n", then d rows of n integers. The grading is inferred on reading.
Configuration read_configuration(std::istream& in);
void write_configuration(std::ostream& out, const Configuration& a);
/// A fixture name, "cut:<graph spec>", "phi:<m>", "veronese:<d>,<k>", or a file path.
Configuration load_configuration(const std::string& spec);

/// Inverse of Monomial::to_string for n variables ("1", "x_3", "x_1*x_2^2").
Monomial parse_monomial(std::string_view text, std::size_t num_vars);
/// "lead - tail" as written by canonical_element.
Binomial parse_binomial(std::string_view text, std::size_t num_vars);

struct BasisDump {
  std::size_t num_vars = 0;
  std::string order;
  bool reduced = false;
  std::vector<Binomial> elements;
};
/// Reads the format written by dump_basis.
BasisDump parse_basis_dump(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace cutgroeb
