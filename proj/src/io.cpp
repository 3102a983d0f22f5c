#include "fbg/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace fbg {

namespace {

bool significant(const std::string& line) {
  for (char c : line) {
    if (c == '#') return false;
    if (c != ' ' && c != '\t' && c != '\r') return true;
  }
  return false;
}

struct LineReader {
  std::istream& in;
  int line_no = 0;

  /// Next non-blank, non-comment line; false at end of input.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (significant(line)) {
        out = std::move(line);
        return true;
      }
    }
    return false;
  }
};

std::int64_t parse_int(std::istringstream& tokens, int line_no, const char* what) {
  std::int64_t value = 0;
  if (!(tokens >> value)) throw ParseError(line_no, std::string("malformed ") + what);
  return value;
}

void require_line_end(std::istringstream& tokens, int line_no) {
  std::string extra;
  if (tokens >> extra) throw ParseError(line_no, "trailing content: '" + extra + "'");
}

}  // namespace

Instance parse_instance(std::istream& in) {
  LineReader reader{in};
  std::string line;

  if (!reader.next(line)) throw ParseError(reader.line_no + 1, "missing 'p fbg <n> <m>' header");
  std::istringstream header(line);
  std::string tag, magic;
  header >> tag >> magic;
  if (tag != "p" || magic != "fbg")
    throw ParseError(reader.line_no, "expected 'p fbg <n> <m>' header");
  const std::int64_t n = parse_int(header, reader.line_no, "vertex count");
  const std::int64_t m = parse_int(header, reader.line_no, "edge count");
  require_line_end(header, reader.line_no);
  if (n < 0) throw ParseError(reader.line_no, "vertex count must be nonnegative");
  if (m < 0) throw ParseError(reader.line_no, "edge count must be nonnegative");

  std::vector<std::int64_t> weights(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    if (!reader.next(line))
      throw ParseError(reader.line_no + 1, "unexpected end of input: expected " +
                                               std::to_string(n - i) + " more weight line(s)");
    std::istringstream tokens(line);
    std::string kind;
    tokens >> kind;
    if (kind != "w")
      throw ParseError(reader.line_no, "expected a 'w <vertex-id> <f-value>' line, got '" +
                                           kind + "'");
    const std::int64_t id = parse_int(tokens, reader.line_no, "vertex id");
    const std::int64_t f = parse_int(tokens, reader.line_no, "f-value");
    require_line_end(tokens, reader.line_no);
    if (id < 0 || id >= n)
      throw ParseError(reader.line_no, "vertex id " + std::to_string(id) + " out of range");
    if (seen[static_cast<std::size_t>(id)])
      throw ParseError(reader.line_no, "duplicate weight line for vertex " + std::to_string(id));
    if (id != i)
      throw ParseError(reader.line_no, "weight lines must list vertices in ascending order");
    if (f < 0) throw ParseError(reader.line_no, "f-value must be nonnegative");
    seen[static_cast<std::size_t>(id)] = 1;
    weights[static_cast<std::size_t>(id)] = f;
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    if (!reader.next(line))
      throw ParseError(reader.line_no + 1, "unexpected end of input: expected " +
                                               std::to_string(m - i) + " more edge line(s)");
    std::istringstream tokens(line);
    std::string kind;
    tokens >> kind;
    if (kind != "e")
      throw ParseError(reader.line_no, "expected an 'e <u> <v>' line, got '" + kind + "'");
    const std::int64_t u = parse_int(tokens, reader.line_no, "edge endpoint");
    const std::int64_t v = parse_int(tokens, reader.line_no, "edge endpoint");
    require_line_end(tokens, reader.line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(reader.line_no, "edge endpoint out of range");
    if (u == v)
      throw ParseError(reader.line_no, "loop edge at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }

  if (reader.next(line))
    throw ParseError(reader.line_no, "unexpected content after the edge list");

  // Size guards (n > 63, oversized weights) surface from the constructors.
  return Instance{Multigraph(static_cast<int>(n), edges), VertexWeights(std::move(weights))};
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  const Multigraph& g = inst.graph;
  out << "p fbg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "w " << v << ' ' << inst.weights.at(v) << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string format_vertex_set(VertexSet s) {
  if (s.empty()) return "-";
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string format_vertex_sets(const std::vector<VertexSet>& sets) {
  if (sets.empty()) return "-";
  std::string out;
  for (VertexSet s : sets) {
    if (!out.empty()) out += ';';
    out += format_vertex_set(s);
  }
  return out;
}

namespace {

std::string braced(VertexSet s) {
  std::string inner = format_vertex_set(s);
  return "{" + (inner == "-" ? std::string() : inner) + "}";
}

std::string braced_list(const std::vector<VertexSet>& sets) {
  if (sets.empty()) return "none";
  std::string out;
  for (VertexSet s : sets) {
    if (!out.empty()) out += ' ';
    out += braced(s);
  }
  return out;
}

template <typename T>
std::string joined(const std::vector<T>& values) {
  if (values.empty()) return "-";
  std::string out;
  for (const T& v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

template <typename T>
std::string spaced(const std::vector<T>& values, const char* if_empty) {
  if (values.empty()) return if_empty;
  std::string out;
  for (const T& v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

void write_solve_report(std::ostream& out, const Instance& inst, const Subgraph& h,
                        OutputFormat format) {
  const Multigraph& g = inst.graph;
  if (format == OutputFormat::kKv) {
    out << "n = " << g.vertex_count() << '\n';
    out << "m = " << g.edge_count() << '\n';
    out << "f_total = " << inst.weights.total() << '\n';
    out << "edges = " << h.edge_count() << '\n';
    out << "h = " << h.degree_sum() << '\n';
    out << "edge_indices = " << joined(h.edge_indices) << '\n';
    out << "degrees = " << joined(h.degree) << '\n';
    return;
  }
  out << "instance: n=" << g.vertex_count() << " m=" << g.edge_count()
      << " f_total=" << inst.weights.total() << '\n';
  out << "max f-bounded subgraph: " << h.edge_count() << " edge(s), degree sum h = "
      << h.degree_sum() << '\n';
  out << "edge indices: " << spaced(h.edge_indices, "none") << '\n';
  out << "degrees: " << spaced(h.degree, "-") << '\n';
}

void write_certificate_report(std::ostream& out, const DeficiencyCertificate& cert,
                              OutputFormat format) {
  // gamma and f_total share a parity, so the bound is exact.
  const std::int64_t bound = (cert.f_total - cert.gamma) / 2;
  if (format == OutputFormat::kKv) {
    out << "gamma = " << cert.gamma << '\n';
    out << "S = " << format_vertex_set(cert.pair.s) << '\n';
    out << "T = " << format_vertex_set(cert.pair.t) << '\n';
    out << "bad_components = " << format_vertex_sets(cert.bad_components) << '\n';
    out << "f_total = " << cert.f_total << '\n';
    out << "bound = " << bound << '\n';
    return;
  }
  out << "gamma = " << cert.gamma << '\n';
  out << "S = " << braced(cert.pair.s) << '\n';
  out << "T = " << braced(cert.pair.t) << '\n';
  out << "bad components: " << braced_list(cert.bad_components) << '\n';
  out << "f_total = " << cert.f_total << '\n';
  out << "subgraph bound: (f_total - gamma) / 2 = " << bound << '\n';
}

void write_verification_report(std::ostream& out, const VerificationReport& rep,
                               OutputFormat format) {
  if (format == OutputFormat::kKv) {
    out << "n = " << rep.n << '\n';
    out << "m = " << rep.m << '\n';
    out << "f_total = " << rep.f_total << '\n';
    out << "h = " << rep.h << '\n';
    out << "gamma = " << rep.gamma << '\n';
    out << "solver_edges = " << rep.solver_edges << '\n';
    if (rep.brute_edges) out << "brute_edges = " << *rep.brute_edges << '\n';
    out << "min_schrijver = " << rep.min_schrijver << '\n';
    out << "S = " << format_vertex_set(rep.certificate.pair.s) << '\n';
    out << "T = " << format_vertex_set(rep.certificate.pair.t) << '\n';
    out << "bad_components = " << format_vertex_sets(rep.certificate.bad_components) << '\n';
    for (const VerificationCheck& c : rep.checks) {
      out << "check_" << c.name << " = " << (c.passed ? "pass" : "fail") << '\n';
      if (!c.passed) out << "check_" << c.name << "_detail = " << c.detail << '\n';
    }
    out << "result = " << (rep.all_passed() ? "pass" : "fail") << '\n';
    return;
  }

  out << "instance: n=" << rep.n << " m=" << rep.m << " f_total=" << rep.f_total << '\n';
  out << "solver: |H| = " << rep.solver_edges << ", h = " << rep.h;
  if (rep.brute_edges) out << ", oracle |H| = " << *rep.brute_edges;
  out << '\n';
  out << "certificate: gamma = " << rep.gamma << ", S = " << braced(rep.certificate.pair.s)
      << ", T = " << braced(rep.certificate.pair.t) << '\n';
  out << "min schrijver bound = " << rep.min_schrijver << '\n';
  int failed = 0;
  for (const VerificationCheck& c : rep.checks) {
    if (c.passed) {
      out << "PASS " << c.name << '\n';
    } else {
      ++failed;
      out << "FAIL " << c.name << " (" << c.detail << ")\n";
    }
  }
  if (failed == 0)
    out << "result: PASS (" << rep.checks.size() << " checks)\n";
  else
    out << "result: FAIL (" << failed << " of " << rep.checks.size() << " checks)\n";
}

}  // namespace fbg
