#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dckron/errors.hpp"
#include "dckron/network.hpp"

namespace dckron {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_number(std::string_view s, int line) {
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError(line, "bad number '" + std::string(s) + "'");
  }
  return v;
}

std::string shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

ParsedNetwork parse_network(std::string_view text) {
  std::string name = "unnamed";
  bool have_name = false;
  std::vector<Vertex> vertices;
  std::vector<int> vertex_lines;
  struct PendingEdge {
    EdgeSpec spec;
    int line;
  };
  std::vector<PendingEdge> edges;
  std::vector<ParseWarning> warnings;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;

    if (tok[0] == "net") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'net <name>'");
      if (have_name) throw ParseError(lineno, "duplicate 'net' declaration");
      name = std::string(tok[1]);
      have_name = true;
    } else if (tok[0] == "vertex") {
      if (tok.size() < 3) throw ParseError(lineno, "expected 'vertex <label> <source|sink|interior> [gen] [load] [pin]'");
      Vertex v;
      v.label = std::string(tok[1]);
      if (tok[2] == "source") {
        v.role.kind = RoleKind::Source;
      } else if (tok[2] == "sink") {
        v.role.kind = RoleKind::Sink;
      } else if (tok[2] == "interior") {
        v.role.kind = RoleKind::Interior;
      } else {
        throw ParseError(lineno, "unknown role '" + std::string(tok[2]) + "'");
      }
      for (std::size_t i = 3; i < tok.size(); ++i) {
        if (tok[i] == "gen") {
          v.role.attachment.generator = true;
        } else if (tok[i] == "load") {
          v.role.attachment.loading = true;
        } else if (tok[i] == "pin") {
          v.role.attachment.pinned = true;
        } else {
          throw ParseError(lineno, "unknown vertex flag '" + std::string(tok[i]) + "'");
        }
      }
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].label == v.label) {
          throw ParseError(lineno, "duplicate vertex '" + v.label + "' (first declared on line " +
                                       std::to_string(vertex_lines[i]) + ")");
        }
      }
      vertices.push_back(std::move(v));
      vertex_lines.push_back(lineno);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <head> <tail> (b=<float> | x=<float>)'");
      EdgeSpec e{std::string(tok[1]), std::string(tok[2]), 0.0};
      if (e.head == e.tail) throw ParseError(lineno, "self-loop at '" + e.head + "'");
      const auto param = tok[3];
      if (param.size() < 3 || param[1] != '=' || (param[0] != 'b' && param[0] != 'x')) {
        throw ParseError(lineno, "expected b=<float> or x=<float>");
      }
      const double value = parse_number(param.substr(2), lineno);
      if (param[0] == 'x') {
        if (value >= 0.0) {
          warnings.push_back({lineno, "edge " + e.head + "->" + e.tail + " has reactance x=" +
                                          std::string(param.substr(2)) + " >= 0; edge removed"});
          continue;
        }
        e.susceptance = -1.0 / value;
      } else {
        if (!(value > 0.0)) throw ParseError(lineno, "susceptance must be positive");
        e.susceptance = value;
      }
      for (const auto& prev : edges) {
        if (prev.spec.head == e.head && prev.spec.tail == e.tail) {
          throw ParseError(lineno, "duplicate edge " + e.head + "->" + e.tail);
        }
      }
      edges.push_back({std::move(e), lineno});
    } else {
      throw ParseError(lineno, "unknown declaration '" + std::string(tok[0]) + "'");
    }
  }

  for (const auto& e : edges) {
    for (const auto* end : {&e.spec.head, &e.spec.tail}) {
      const bool known = std::any_of(vertices.begin(), vertices.end(), [&](const Vertex& v) { return v.label == *end; });
      if (!known) throw ParseError(e.line, "unknown endpoint '" + *end + "'");
    }
  }
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (auto& e : edges) specs.push_back(std::move(e.spec));
  try {
    return {Network(std::move(name), std::move(vertices), specs), std::move(warnings)};
  } catch (const ValidationError& e) {
    throw ParseError(0, e.what());
  }
}

ParsedNetwork read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_network(ss.str());
}

std::string serialize_network(const Network& net) {
  std::ostringstream os;
  os << "net " << net.name() << "\n";
  for (const auto& v : net.vertices()) {
    os << "vertex " << v.label << ' ' << to_string(v.role.kind);
    if (v.role.attachment.generator) os << " gen";
    if (v.role.attachment.loading) os << " load";
    if (v.role.attachment.pinned) os << " pin";
    os << "\n";
  }
  for (const auto& e : net.edges()) {
    os << "edge " << net.label(e.head) << ' ' << net.label(e.tail) << " b=" << shortest(e.susceptance) << "\n";
  }
  return os.str();
}

}  // namespace dckron
