// gcpoly: command-line front end for the gcp library.
//
// Exit codes: 0 ok, 2 bad input, 3 unsupported method, 4 identity violation.
// Timings are only reported by bundle, cover and bench, and --no-timings
// drops them, so every other output is byte-identical across runs.

#include "gcp/characters.hpp"
#include "gcp/gcp.hpp"
#include "gcp/io.hpp"
#include "gcp/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gcp;
using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kBadInput = 2, kUnsupported = 3, kIdentityViolation = 4 };

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IdentityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool unicode = false;
  bool no_timings = false;
  std::string method;
  std::string graph_file;
  std::string fiber = "complete";
  std::string voltage_file;
  std::string group;
  std::string base_file;
  int from = 2;
  int to = 12;
  int repeat = 1;
  std::string csv_file;
};

// FNV-1a, 64 bit
class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    hash_ ^= 0xff;  // field separator
    hash_ *= 0x100000001b3ULL;
  }
  void add_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    add(buf.str());
  }
  std::string hex() const {
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(hash_));
    return out;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

template <class F>
auto timed(F&& f, long& micros) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<int> parse_int_list(const std::string& text, char sep, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("bad ") + what + ": '" + text + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
  return out;
}

template <class C>
Json poly_json(const BivarPoly<C>& p, bool unicode) {
  Json terms = Json::array();
  for (const auto& r : term_records(p, unicode)) terms.push_back({{"i", r.i}, {"j", r.j}, {"c", r.coefficient}});
  return {{"text", to_string(p, unicode)}, {"terms", terms}};
}

struct Document {
  Json json;
  std::vector<std::string> lines;
  std::vector<std::pair<std::string, long>> timings;
  bool report_timings = false;

  void print(const Options& opt, const Digest& digest) const {
    if (opt.json) {
      Json out = {{"inputs_digest", digest.hex()}};
      out.update(json);
      if (report_timings && !opt.no_timings) {
        Json t = Json::object();
        for (const auto& [k, v] : timings) t[k] = v;
        out["timings_us"] = t;
      }
      std::cout << out.dump(2) << "\n";
      return;
    }
    for (const auto& l : lines) std::cout << l << "\n";
    if (report_timings && !opt.no_timings) {
      std::cout << "timings_us:";
      for (const auto& [k, v] : timings) std::cout << " " << k << "=" << v;
      std::cout << "\n";
    }
  }
};

AbelianGroup resolve_group(const Options& opt, const std::optional<AnyVoltage>& voltage) {
  std::optional<AbelianGroup> from_flag;
  if (!opt.group.empty()) from_flag = AbelianGroup(parse_int_list(opt.group, ',', "group"));
  if (voltage && std::holds_alternative<AbelianVoltage>(*voltage)) {
    const auto& g = std::get<AbelianVoltage>(*voltage).group();
    if (from_flag && !(*from_flag == g)) throw std::invalid_argument("--group disagrees with the voltage file");
    return g;
  }
  if (!from_flag) throw std::invalid_argument("a group is needed: pass --group or an abelian --voltage file");
  return *from_flag;
}

FiberSpec parse_fiber(const std::string& text, const std::optional<AbelianGroup>& group) {
  if (text.rfind("graph:", 0) == 0) return ExplicitFiber{read_graph_file(text.substr(6))};
  if (!group) throw std::invalid_argument("fiber '" + text + "' needs a group");
  if (text == "empty") return CayleyFiber::edgeless(*group);
  if (text == "complete") return CayleyFiber::complete(*group);
  if (text.rfind("cayley:", 0) == 0) {
    std::vector<GroupElement> set;
    std::stringstream ss(text.substr(7));
    std::string item;
    while (std::getline(ss, item, '/')) set.push_back(parse_int_list(item, ',', "connecting-set element"));
    return CayleyFiber(*group, std::move(set));
  }
  throw std::invalid_argument("unknown fiber '" + text + "' (empty, complete, cayley:a/b/..., graph:FILE)");
}

bool want(const std::string& method, const char* name) { return method == name || method == "both"; }

Document run_gcp(const Options& opt) {
  const Graph g = read_graph_file(opt.graph_file);
  Document doc;
  long t = 0;
  const auto f = timed([&] { return gcp_direct(g); }, t);
  doc.json = {{"command", "gcp"}, {"method", "direct"}, {"product", poly_json(f, opt.unicode)}};
  doc.lines.push_back(to_string(f, opt.unicode));
  doc.timings.emplace_back("direct", t);
  return doc;
}

Document bundle_document(const std::string& command, const Options& opt, const Graph& base, const FiberSpec& fiber,
                         const std::optional<AnyVoltage>& voltage, const std::optional<AbelianGroup>& group) {
  Document doc;
  doc.report_timings = true;
  doc.json = {{"command", command}, {"method", opt.method}};
  std::optional<BivarPoly<BigInt>> direct;
  std::optional<FactoredGcp> factored;

  if (const auto* cayley = std::get_if<CayleyFiber>(&fiber)) {
    const AbelianVoltage phi = voltage ? std::get<AbelianVoltage>(*voltage) : AbelianVoltage::trivial(base, *group);
    if (want(opt.method, "direct")) {
      long t = 0;
      direct = timed([&] { return gcp_direct(build_bundle(base, *cayley, phi)); }, t);
      doc.timings.emplace_back("direct", t);
    }
    if (want(opt.method, "factored")) {
      long t = 0;
      factored = timed([&] { return gcp_bundle_factored(base, *cayley, phi); }, t);
      doc.timings.emplace_back("factored", t);
    }
  } else {
    const auto& explicit_fiber = std::get<ExplicitFiber>(fiber);
    if (want(opt.method, "factored")) {
      throw Unsupported("the factored method needs an abelian Cayley fiber; use --method direct");
    }
    PermutationVoltage phi = PermutationVoltage::trivial(base, explicit_fiber.graph.vertex_count());
    if (voltage) {
      phi = std::holds_alternative<PermutationVoltage>(*voltage)
                ? std::get<PermutationVoltage>(*voltage)
                : PermutationVoltage::from_abelian(std::get<AbelianVoltage>(*voltage));
    }
    long t = 0;
    direct = timed([&] { return gcp_direct(build_bundle(base, explicit_fiber, phi)); }, t);
    doc.timings.emplace_back("direct", t);
  }

  if (factored) {
    Json factors = Json::array();
    for (std::size_t k = 0; k < factored->factors.size(); ++k) {
      const auto& chi = factored->characters[k];
      Json entry = {{"character", chi}};
      entry.update(poly_json(factored->factors[k], opt.unicode));
      factors.push_back(entry);
      doc.lines.push_back("factor " + gcp::to_string(chi) + ": " + to_string(factored->factors[k], opt.unicode));
    }
    doc.json["factors"] = factors;
  }
  const auto& product = factored ? factored->product : *direct;
  doc.json["product"] = poly_json(product, opt.unicode);
  doc.lines.push_back("product: " + to_string(product, opt.unicode));
  if (direct && factored) {
    const bool ok = *direct == factored->product;
    doc.json["check"] = ok ? "OK" : "MISMATCH";
    doc.lines.push_back(ok ? "OK" : "MISMATCH");
    if (!ok) {
      doc.lines.push_back("direct: " + to_string(*direct, opt.unicode));
      doc.print(opt, Digest());
      throw IdentityViolation("direct and factored polynomials differ");
    }
  }
  return doc;
}

Document run_bundle(const Options& opt, Digest& digest) {
  const Graph base = read_graph_file(opt.graph_file);
  std::optional<AnyVoltage> voltage;
  if (!opt.voltage_file.empty()) {
    voltage = read_voltage_file(opt.voltage_file, base);
    digest.add_file(opt.voltage_file);
  }
  std::optional<AbelianGroup> group;
  const bool explicit_fiber = opt.fiber.rfind("graph:", 0) == 0;
  if (!explicit_fiber) {
    if (voltage && std::holds_alternative<PermutationVoltage>(*voltage)) {
      if (want(opt.method, "factored")) {
        throw Unsupported("permutation voltages have no character factorization; use --method direct");
      }
      throw std::invalid_argument("a permutation voltage needs an explicit fiber (--fiber graph:FILE)");
    }
    group = resolve_group(opt, voltage);
  } else {
    digest.add_file(opt.fiber.substr(6));
  }
  return bundle_document("bundle", opt, base, parse_fiber(opt.fiber, group), voltage, group);
}

Document run_cover(const Options& opt, Digest& digest) {
  const Graph base = read_graph_file(opt.graph_file);
  std::optional<AnyVoltage> voltage;
  if (!opt.voltage_file.empty()) {
    voltage = read_voltage_file(opt.voltage_file, base);
    digest.add_file(opt.voltage_file);
  }
  if (voltage && std::holds_alternative<PermutationVoltage>(*voltage)) {
    const int degree = std::get<PermutationVoltage>(*voltage).degree();
    return bundle_document("cover", opt, base, ExplicitFiber{empty_graph(degree)}, voltage, std::nullopt);
  }
  const AbelianGroup group = resolve_group(opt, voltage);
  return bundle_document("cover", opt, base, CayleyFiber::edgeless(group), voltage, group);
}

Document run_trees(const Options& opt) {
  const Graph g = read_graph_file(opt.graph_file);
  Document doc;
  doc.json = {{"command", "trees"}, {"method", opt.method}};
  std::vector<std::string> parts;
  std::optional<BigInt> by_gcp, by_kirchhoff;
  if (want(opt.method, "gcp")) {
    long t = 0;
    by_gcp = timed([&] { return complexity_gcp(g); }, t);
    doc.timings.emplace_back("gcp", t);
    doc.json["gcp"] = by_gcp->get_str();
    parts.push_back(by_gcp->get_str());
  }
  if (want(opt.method, "kirchhoff")) {
    long t = 0;
    by_kirchhoff = timed([&] { return complexity_kirchhoff(g); }, t);
    doc.timings.emplace_back("kirchhoff", t);
    doc.json["kirchhoff"] = by_kirchhoff->get_str();
    parts.push_back(by_kirchhoff->get_str());
  }
  bool ok = true;
  if (by_gcp && by_kirchhoff) {
    ok = *by_gcp == *by_kirchhoff;
    doc.json["check"] = ok ? "OK" : "MISMATCH";
    parts.push_back(ok ? "OK" : "MISMATCH");
  }
  std::string line;
  for (const auto& p : parts) line += (line.empty() ? "" : " ") + p;
  doc.lines.push_back(line);
  if (!ok) {
    doc.print(opt, Digest());
    throw IdentityViolation("tree counts differ");
  }
  return doc;
}

Document run_zeta(const Options& opt) {
  const Graph g = read_graph_file(opt.graph_file);
  Document doc;
  doc.json = {{"command", "zeta"}, {"method", opt.method}};
  std::optional<ZetaReciprocal> direct, substituted;
  if (want(opt.method, "direct")) {
    long t = 0;
    direct = timed([&] { return bartholdi_direct(g); }, t);
    doc.timings.emplace_back("direct", t);
  }
  if (want(opt.method, "substitution")) {
    long t = 0;
    substituted = timed([&] { return bartholdi_from_gcp(g, gcp_direct(g)); }, t);
    doc.timings.emplace_back("substitution", t);
  }
  const auto& z = direct ? *direct : *substituted;
  doc.json["prefactor"] = {{"base", poly_json(z.prefactor_base, opt.unicode)}, {"exponent", z.prefactor_exponent}};
  doc.json["core"] = poly_json(z.core, opt.unicode);
  doc.lines.push_back("prefactor: (" + to_string(z.prefactor_base, opt.unicode) + ")^" +
                      std::to_string(z.prefactor_exponent));
  doc.lines.push_back("core: " + to_string(z.core, opt.unicode));
  if (const auto reduced = reduced_reciprocal(z)) {
    doc.json["reduced"] = poly_json(*reduced, opt.unicode);
    doc.lines.push_back("reduced: " + to_string(*reduced, opt.unicode));
  }
  if (direct && substituted) {
    const bool ok = direct->core == substituted->core && direct->prefactor_exponent == substituted->prefactor_exponent;
    doc.json["check"] = ok ? "OK" : "MISMATCH";
    doc.lines.push_back(ok ? "OK" : "MISMATCH");
    if (!ok) {
      doc.lines.push_back("substitution core: " + to_string(substituted->core, opt.unicode));
      doc.print(opt, Digest());
      throw IdentityViolation("zeta cores differ");
    }
  }
  return doc;
}

Document run_characters(const Options& opt) {
  const AbelianGroup group(parse_int_list(opt.group, ',', "group"));
  Document doc;
  const auto elements = group.elements();
  Json table = Json::array();
  std::string header = "group " + group.to_string() + "; columns:";
  for (const auto& g : elements) header += " " + gcp::to_string(g);
  doc.lines.push_back(header);
  for (const auto& chi : all_characters(group)) {
    Json values = Json::array();
    std::string line = "chi" + gcp::to_string(chi.index) + ":";
    for (const auto& g : elements) {
      const auto v = char_value(chi, g).to_string(opt.unicode);
      values.push_back(v);
      line += (&g == &elements.front() ? " " : "; ") + v;
    }
    table.push_back({{"index", chi.index}, {"values", values}});
    doc.lines.push_back(line);
  }
  doc.json = {{"command", "dump-characters"}, {"group", group.cyclic_orders()}, {"characters", table}};
  return doc;
}

Document run_bench(const Options& opt, Digest& digest) {
  Graph base = star_graph(3);
  if (!opt.base_file.empty()) {
    base = read_graph_file(opt.base_file);
    digest.add_file(opt.base_file);
  }
  if (opt.from < 2 || opt.to < opt.from) throw std::invalid_argument("bench needs 2 <= --from <= --to");
  Document doc;
  std::ostringstream csv;
  csv << "n,t_direct,t_factored\n";
  Json rows = Json::array();
  for (int n = opt.from; n <= opt.to; ++n) {
    const auto group = AbelianGroup::cyclic(n);
    const auto fiber = CayleyFiber::complete(group);
    const auto phi = AbelianVoltage::trivial(base, group);
    long best_direct = -1, best_factored = -1;
    BivarPoly<BigInt> direct, factored;
    for (int r = 0; r < std::max(opt.repeat, 1); ++r) {
      long td = 0, tf = 0;
      direct = timed([&] { return gcp_direct(build_bundle(base, fiber, phi)); }, td);
      factored = timed([&] { return gcp_bundle_factored(base, fiber, phi).product; }, tf);
      if (best_direct < 0 || td < best_direct) best_direct = td;
      if (best_factored < 0 || tf < best_factored) best_factored = tf;
    }
    if (!(direct == factored)) throw IdentityViolation("bench: direct and factored differ at n = " + std::to_string(n));
    csv << n << "," << best_direct << "," << best_factored << "\n";
    rows.push_back({{"n", n}, {"t_direct", best_direct}, {"t_factored", best_factored}});
  }
  if (!opt.csv_file.empty()) {
    std::ofstream out(opt.csv_file);
    if (!out) throw std::runtime_error("cannot write " + opt.csv_file);
    out << csv.str();
  }
  doc.json = {{"command", "bench"}, {"base", format_graph(base)}, {"rows", rows}};
  std::string text = csv.str();
  text.pop_back();
  doc.lines.push_back(text);
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized characteristic polynomials of graphs and graph bundles"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "structured output");
  app.add_flag("--unicode", opt.unicode, "render variables as λ, μ");
  app.add_flag("--no-timings", opt.no_timings, "omit timings");

  auto* gcp_cmd = app.add_subcommand("gcp", "F_G(l, m) of a graph file");
  gcp_cmd->add_option("graph", opt.graph_file)->required()->check(CLI::ExistingFile);

  auto* bundle = app.add_subcommand("bundle", "F of a graph bundle");
  bundle->add_option("graph", opt.graph_file)->required()->check(CLI::ExistingFile);
  bundle->add_option("--fiber", opt.fiber, "empty | complete | cayley:a/b/... | graph:FILE")->capture_default_str();
  bundle->add_option("--voltage", opt.voltage_file)->check(CLI::ExistingFile);
  bundle->add_option("--group", opt.group, "cyclic orders, e.g. 2,2");
  bundle->add_option("--method", opt.method)->check(CLI::IsMember({"direct", "factored", "both"}))->default_val("factored");

  auto* cover = app.add_subcommand("cover", "F of the covering graph of a voltage assignment");
  cover->add_option("graph", opt.graph_file)->required()->check(CLI::ExistingFile);
  cover->add_option("--voltage", opt.voltage_file)->check(CLI::ExistingFile);
  cover->add_option("--group", opt.group, "cyclic orders, e.g. 3");
  cover->add_option("--method", opt.method)->check(CLI::IsMember({"direct", "factored", "both"}))->default_val("factored");

  auto* trees = app.add_subcommand("trees", "spanning-tree count");
  trees->add_option("graph", opt.graph_file)->required()->check(CLI::ExistingFile);
  trees->add_option("--method", opt.method)->check(CLI::IsMember({"gcp", "kirchhoff", "both"}))->default_val("both");

  auto* zeta = app.add_subcommand("zeta", "reciprocal of the Bartholdi zeta function");
  zeta->add_option("graph", opt.graph_file)->required()->check(CLI::ExistingFile);
  zeta->add_option("--method", opt.method)->check(CLI::IsMember({"direct", "substitution", "both"}))->default_val("both");

  auto* bench = app.add_subcommand("bench", "direct vs factored timing of base x K_n");
  bench->add_option("--base", opt.base_file, "base graph file (default K_{1,3})")->check(CLI::ExistingFile);
  bench->add_option("--from", opt.from)->capture_default_str();
  bench->add_option("--to", opt.to)->capture_default_str();
  bench->add_option("--repeat", opt.repeat, "best of N runs")->capture_default_str();
  bench->add_option("--csv", opt.csv_file, "also write the CSV here");

  auto* chars = app.add_subcommand("dump-characters", "character table of Z_n1 x ... x Z_nk");
  chars->add_option("--group", opt.group, "cyclic orders, e.g. 2,3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  Digest digest;
  const std::string command = app.get_subcommands().front()->get_name();
  digest.add(command);
  digest.add(opt.method);
  digest.add(opt.fiber);
  digest.add(opt.group);
  if (!opt.graph_file.empty()) digest.add_file(opt.graph_file);

  try {
    Document doc;
    if (command == "gcp") doc = run_gcp(opt);
    else if (command == "bundle") doc = run_bundle(opt, digest);
    else if (command == "cover") doc = run_cover(opt, digest);
    else if (command == "trees") doc = run_trees(opt);
    else if (command == "zeta") doc = run_zeta(opt);
    else if (command == "bench") doc = run_bench(opt, digest);
    else doc = run_characters(opt);
    doc.print(opt, digest);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const IdentityViolation& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return kIdentityViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
