#pragma once

// Text formats.
//
// Graph file:
//   v <count>
//   e <i> <j>            one line per edge, 0-based
//   l <i> <label>        optional vertex label
//
// Voltage file, abelian group Z_{n1} x ... x Z_{nk}:
//   group <n1> <n2> ...
//   w <i> <j> <g1> <g2> ...   value on the canonical arc i -> j, i < j
//
// Voltage file, permutations of the fiber's vertices:
//   perm <degree>
//   w <i> <j> <p0> <p1> ... <p_{degree-1}>   one-line notation
//
// `#` starts a comment. Edges without a `w` line carry the identity.

#include "gcp/graph.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <variant>

namespace gcp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

using AnyVoltage = std::variant<AbelianVoltage, PermutationVoltage>;

Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

AnyVoltage parse_voltage(std::istream& in, const Graph& base);
AnyVoltage read_voltage_file(const std::string& path, const Graph& base);

std::string format_graph(const Graph& g);
std::string format_voltage(const AbelianVoltage& phi);

}  // namespace gcp
