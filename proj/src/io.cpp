#include "gcp/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace gcp {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream words(text);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

int to_int(const Line& line, std::size_t k) {
  const std::string& s = line.tokens.at(k);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line.number, "expected an integer, got '" + s + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count) throw ParseError(line.number, std::string("expected '") + shape + "'");
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty graph file");
  const Line& header = lines.front();
  if (header.tokens[0] != "v") throw ParseError(header.number, "expected 'v <count>' first");
  expect_arity(header, 2, "v <count>");
  const int count = to_int(header, 1);
  if (count < 1) throw ParseError(header.number, "vertex count must be positive");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::string> labels;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& tag = line.tokens[0];
    if (tag == "e") {
      expect_arity(line, 3, "e <i> <j>");
      const int i = to_int(line, 1);
      const int j = to_int(line, 2);
      if (i < 0 || j < 0 || i >= count || j >= count) throw ParseError(line.number, "vertex out of range");
      if (i == j) throw ParseError(line.number, "loops are not allowed");
      const Edge e = make_edge(i, j);
      if (!seen.insert(e).second) throw ParseError(line.number, "repeated edge");
      edges.push_back(e);
    } else if (tag == "l") {
      if (line.tokens.size() < 3) throw ParseError(line.number, "expected 'l <i> <label>'");
      const int i = to_int(line, 1);
      if (i < 0 || i >= count) throw ParseError(line.number, "vertex out of range");
      if (labels.empty()) labels.resize(count);
      std::string label = line.tokens[2];
      for (std::size_t t = 3; t < line.tokens.size(); ++t) label += " " + line.tokens[t];
      labels[i] = label;
    } else {
      throw ParseError(line.number, "unknown record '" + tag + "'");
    }
  }
  return Graph(count, std::move(edges), std::move(labels));
}

Graph read_graph_file(const std::string& path) {
  auto in = open(path);
  return parse_graph(in);
}

AnyVoltage parse_voltage(std::istream& in, const Graph& base) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty voltage file");
  const Line& header = lines.front();
  const bool abelian = header.tokens[0] == "group";
  if (!abelian && header.tokens[0] != "perm") {
    throw ParseError(header.number, "expected 'group <n1> ...' or 'perm <degree>' first");
  }
  if (header.tokens.size() < 2) throw ParseError(header.number, "missing group description");
  std::vector<int> orders;
  for (std::size_t k = 1; k < header.tokens.size(); ++k) {
    orders.push_back(to_int(header, k));
    if (orders.back() < 1) throw ParseError(header.number, "orders must be positive");
  }
  if (!abelian && orders.size() != 1) throw ParseError(header.number, "expected 'perm <degree>'");
  const std::size_t width = abelian ? orders.size() : static_cast<std::size_t>(orders[0]);

  std::map<Edge, std::vector<int>> values;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "w") throw ParseError(line.number, "unknown record '" + line.tokens[0] + "'");
    if (line.tokens.size() != 3 + width) {
      throw ParseError(line.number, "expected 'w <i> <j>' followed by " + std::to_string(width) + " values");
    }
    const int i = to_int(line, 1);
    const int j = to_int(line, 2);
    if (i >= j) throw ParseError(line.number, "voltage must be given on the canonical arc i -> j with i < j");
    if (!base.has_edge(i, j)) throw ParseError(line.number, "{" + std::to_string(i) + "," + std::to_string(j) + "} is not an edge");
    std::vector<int> value;
    for (std::size_t t = 3; t < line.tokens.size(); ++t) value.push_back(to_int(line, t));
    if (abelian) {
      for (std::size_t t = 0; t < value.size(); ++t) {
        if (value[t] < 0 || value[t] >= orders[t]) throw ParseError(line.number, "group component out of range");
      }
    } else if (!is_permutation(value)) {
      throw ParseError(line.number, "not a permutation in one-line notation");
    }
    if (!values.emplace(Edge{i, j}, std::move(value)).second) throw ParseError(line.number, "repeated edge");
  }
  if (abelian) return AbelianVoltage(base, AbelianGroup(orders), values);
  return PermutationVoltage(base, orders[0], values);
}

AnyVoltage read_voltage_file(const std::string& path, const Graph& base) {
  auto in = open(path);
  return parse_voltage(in, base);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (std::size_t i = 0; i < g.labels().size(); ++i) {
    if (!g.labels()[i].empty()) out << "l " << i << ' ' << g.labels()[i] << '\n';
  }
  return out.str();
}

std::string format_voltage(const AbelianVoltage& phi) {
  std::ostringstream out;
  out << "group";
  for (int n : phi.group().cyclic_orders()) out << ' ' << n;
  out << '\n';
  for (const auto& [e, g] : phi.canonical_values()) {
    out << "w " << e.u << ' ' << e.v;
    for (int c : g) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace gcp
