#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "dckron/dckron.hpp"

namespace dckron::cli {
namespace {

namespace fs = std::filesystem;

struct EliminationSpec {
  std::vector<std::string> eliminate;
  std::vector<std::string> retain;
  bool all_interior = false;
  bool stage1 = false;

  int count() const {
    return static_cast<int>(!eliminate.empty()) + static_cast<int>(!retain.empty()) +
           static_cast<int>(all_interior) + static_cast<int>(stage1);
  }
  bool given() const { return count() > 0; }

  void attach(CLI::App* cmd) {
    cmd->add_option("--eliminate", eliminate, "Vertices to eliminate (comma separated)")->delimiter(',');
    cmd->add_option("--retain", retain, "Vertices to retain (comma separated)")->delimiter(',');
    cmd->add_flag("--all-interior", all_interior, "Eliminate every interior vertex");
    cmd->add_flag("--stage1", stage1, "Retain boundary vertices and their neighbours");
  }

  VertexPartition apply(const Network& net) const {
    if (count() > 1) throw PartitionError("give only one of --eliminate/--retain/--all-interior/--stage1");
    auto part = classify_vertices(net);
    if (!eliminate.empty()) return choose_retained(part, request::EliminateSet{net.indices_of(eliminate)});
    if (!retain.empty()) return choose_retained(part, request::RetainSet{net.indices_of(retain)});
    if (all_interior) return choose_retained(part, request::AllInterior{});
    if (stage1) return choose_retained(part, request::BoundaryPlusNeighbors{&net});
    return choose_retained(part, request::EliminateSet{});
  }
};

std::string join(const std::vector<std::string>& items, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> labels_of(const Network& net, const std::vector<VertexIndex>& idx) {
  std::vector<std::string> out;
  for (auto v : idx) out.push_back(net.label(v));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

/// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

Network load_network(const std::string& path, std::ostream& err) {
  auto parsed = read_network_file(path);
  for (const auto& w : parsed.warnings) err << path << ":" << w.line << ": warning: " << w.message << "\n";
  const auto report = validate_network(parsed.network);
  for (const auto& v : report.violations) {
    err << path << ": " << (v.severity == Severity::Failure ? "error" : "warning") << ": " << v.code
        << (v.vertex.empty() ? "" : " (vertex " + v.vertex + ")") << "\n";
  }
  if (!report.ok()) throw ValidationError("network '" + parsed.network.name() + "' failed validation");
  return std::move(parsed.network);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string true_false(bool b) { return b ? "true" : "false"; }

std::string format_complex(const std::complex<double>& z) {
  if (z.imag() == 0.0) return format_value(z.real());
  return format_value(z.real()) + (z.imag() < 0 ? "-" : "+") + format_value(std::abs(z.imag())) + "i";
}

std::string analyze_report(const Network& net, const EliminationSpec& spec, double tol) {
  std::ostringstream os;
  const auto part = classify_vertices(net);
  const auto cls = connectivity_class(net);
  const auto l = weighted_laplacian(net);
  const auto rep = laplacian_report(l, tol);
  const auto boundary = labels_of(net, part.boundary);
  const auto interior = labels_of(net, part.interior);

  std::string conn(to_string(cls.kind));
  if (cls.root) conn += ", root=" + net.label(*cls.root);

  os << "network: " << net.name() << " (" << net.vertex_count() << " vertices, " << net.edge_count() << " edges)\n";
  os << "boundary: " << join(boundary, " ") << "\n";
  os << "interior: " << join(interior, " ") << "\n";
  os << "connectivity: " << conn << "\n";
  os << "laplacian:\n" << matrix_to_string(l);
  os << "zero row sums: " << yes_no(rep.zero_row_sums) << "\n";
  os << "sign pattern: " << yes_no(rep.sign_pattern_ok) << "\n";
  std::vector<std::string> eig;
  for (const auto& z : rep.eigenvalues) eig.push_back(format_complex(z));
  os << "eigenvalues: " << join(eig, " ") << "\n";
  os << "eigenvalue real parts >= 0: " << yes_no(rep.nonneg_real_parts) << "\n";
  os << "zero-diagonal vertices: " << join(rep.zero_diag_vertices, " ") << "\n";

  std::optional<bool> reachable;
  VertexPartition chosen;
  if (spec.given()) {
    chosen = spec.apply(net);
    reachable = chosen.eliminated.empty() || is_reachable_subset(net, chosen.retained);
    os << "eliminated: " << join(labels_of(net, chosen.eliminated), " ") << "\n";
    os << "kron reduction exists: " << yes_no(*reachable) << "\n";
  }

  os << "\n";
  os << "vertices=" << net.vertex_count() << "\n";
  os << "edges=" << net.edge_count() << "\n";
  os << "boundary=" << join(boundary) << "\n";
  os << "interior=" << join(interior) << "\n";
  os << "connectivity=" << to_string(cls.kind) << "\n";
  if (cls.root) os << "root=" << net.label(*cls.root) << "\n";
  os << "zero_row_sums=" << true_false(rep.zero_row_sums) << "\n";
  os << "sign_pattern_ok=" << true_false(rep.sign_pattern_ok) << "\n";
  os << "nonneg_real_parts=" << true_false(rep.nonneg_real_parts) << "\n";
  os << "zero_diag=" << join(rep.zero_diag_vertices) << "\n";
  if (reachable) {
    os << "eliminated=" << join(labels_of(net, chosen.eliminated)) << "\n";
    os << "reachable=" << true_false(*reachable) << "\n";
  }
  return os.str();
}

std::string dot_graph(const Network& net) {
  const auto part = classify_vertices(net);
  std::vector<bool> boundary(net.vertex_count(), false);
  for (auto v : part.boundary) boundary[v] = true;
  std::ostringstream os;
  os << "digraph \"" << net.name() << "\" {\n";
  for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
    os << "  \"" << net.label(v) << "\"";
    if (boundary[v]) {
      os << " [shape=square, color=red, fontcolor=red]";
    } else {
      os << " [shape=circle]";
    }
    os << ";\n";
  }
  for (const auto& e : net.edges()) {
    os << "  \"" << net.label(e.head) << "\" -> \"" << net.label(e.tail) << "\" [label=\""
       << format_value(e.susceptance) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string summary_block(const Network& net, const ReductionResult& r, bool precheck) {
  std::ostringstream os;
  os << "network=" << net.name() << "\n";
  os << "retained=" << join(r.retained) << "\n";
  os << "eliminated=" << join(r.eliminated) << "\n";
  os << "existence_check=" << (precheck ? (r.reachable ? "reachable" : "not-reachable") : "skipped") << "\n";
  os << "reduced_edges=" << r.reduced_net.edge_count() << "\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kron reduction of directed DC power-flow networks", "dckron"};
  app.require_subcommand(1);
  app.fallthrough();
  double tol = kDefaultTolerance;
  app.add_option("--tol", tol, "Tolerance for Laplacian checks and restoration")->check(CLI::PositiveNumber);

  std::vector<std::string> inputs;
  std::string out_path;
  std::string format = "graph";
  std::string theta_path;
  std::string name = "restored";
  double alpha = 0.0;
  bool reduced = false;
  bool no_precheck = false;
  EliminationSpec spec;

  auto* analyze = app.add_subcommand("analyze", "Classify vertices, connectivity and Laplacian properties");
  analyze->add_option("inputs", inputs, ".dgnet files")->required();
  spec.attach(analyze);

  auto* reduce = app.add_subcommand("reduce", "Kron-reduce a network");
  reduce->add_option("input", inputs, ".dgnet file")->required()->expected(1);
  std::string out_dir = ".";
  reduce->add_option("--out", out_dir, "Output directory (default: current directory)");
  reduce->add_flag("--no-precheck", no_precheck, "Skip the reachability precheck and rely on LU");
  spec.attach(reduce);

  auto* flow = app.add_subcommand("flow", "Evaluate vertex power extractions");
  flow->add_option("input", inputs, ".dgnet file")->required()->expected(1);
  flow->add_option("--theta", theta_path, "Angle shift file (<label> <value>)")->required();
  flow->add_option("--alpha", alpha, "Reference angle");
  flow->add_flag("--reduced", reduced, "Evaluate the reduced network");
  flow->add_option("--out", out_path, "Output file (default stdout)");
  spec.attach(flow);

  auto* restore = app.add_subcommand("restore", "Rebuild a network from a Laplacian matrix file");
  restore->add_option("input", inputs, "Matrix file")->required()->expected(1);
  restore->add_option("--out", out_path, "Output .dgnet file (default stdout)");
  restore->add_option("--name", name, "Network name");

  auto* export_cmd = app.add_subcommand("export", "Write a network as a graph description, matrix or .dgnet");
  export_cmd->add_option("inputs", inputs, ".dgnet files")->required();
  export_cmd->add_option("--format", format, "graph | matrix | dgnet")->check(CLI::IsMember({"graph", "matrix", "dgnet"}));
  export_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* builtin = app.add_subcommand("builtin", "Materialize a builtin test feeder");
  builtin->add_option("name", inputs, "Case name")->required()->expected(1)->check(CLI::IsMember(builtin_case_names()));
  builtin->add_option("--out", out_path, "Output .dgnet file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*analyze) {
      if (spec.count() > 1) throw PartitionError("give only one elimination option");
      for (const auto& path : inputs) {
        const auto net = load_network(path, err);
        out << analyze_report(net, spec, tol);
      }
    } else if (*reduce) {
      if (spec.count() != 1) {
        err << "usage error: reduce needs exactly one of --eliminate/--retain/--all-interior/--stage1\n";
        return kUsage;
      }
      const auto net = load_network(inputs.front(), err);
      const auto part = spec.apply(net);
      ReduceOptions opts;
      opts.precheck = !no_precheck;
      opts.restore_tol = tol;
      ReductionResult r;
      try {
        r = kron_reduce(net, part, opts);
      } catch (const NotReducible& e) {
        err << "NotReducible: " << e.what() << "\n";
        return kNotReducible;
      } catch (const SingularBlock& e) {
        err << "SingularBlock: " << e.what() << "\n";
        return kNotReducible;
      }
      const fs::path dir(out_dir);
      write_file(dir / "L_red.txt", matrix_to_string(r.reduced));
      write_file(dir / "L_ac.txt", matrix_to_string(r.accompanying));
      write_file(dir / "reduced.dgnet", serialize_network(r.reduced_net));
      const auto summary = summary_block(net, r, opts.precheck);
      write_file(dir / "summary.txt", summary);
      out << summary;
    } else if (*flow) {
      const auto net = load_network(inputs.front(), err);
      const auto shifts = parse_vector(read_file(theta_path));
      const AngleProfile theta{shifts.labels, shifts.values, alpha};
      const auto state = evaluate_flow(net, theta);
      if (!reduced) {
        emit(out_path, format_vector(state.extraction()), out);
      } else {
        if (spec.count() != 1) {
          err << "usage error: --reduced needs exactly one elimination option\n";
          return kUsage;
        }
        const auto part = spec.apply(net);
        ReductionResult r;
        try {
          r = kron_reduce(net, part);
        } catch (const NotReducible& e) {
          err << "NotReducible: " << e.what() << "\n";
          return kNotReducible;
        } catch (const SingularBlock& e) {
          err << "SingularBlock: " << e.what() << "\n";
          return kNotReducible;
        }
        const auto rf = reduced_flow(r, theta, state.extraction(), &state);
        std::string text = format_vector(rf.p_vred);
        text += "# residual " + format_value(*rf.residual) + "\n";
        emit(out_path, text, out);
      }
    } else if (*restore) {
      const auto m = parse_matrix(read_file(inputs.front()));
      Network net;
      try {
        net = restore_graph(m, tol, name);
      } catch (const NotALaplacian& e) {
        err << "NotALaplacian(" << e.property() << ")\n";
        return kValidation;
      }
      emit(out_path, serialize_network(net), out);
    } else if (*export_cmd) {
      std::string text;
      for (const auto& path : inputs) {
        const auto net = load_network(path, err);
        if (format == "graph") {
          text += dot_graph(net);
        } else if (format == "matrix") {
          text += matrix_to_string(weighted_laplacian(net));
        } else {
          text += serialize_network(net);
        }
      }
      emit(out_path, text, out);
    } else if (*builtin) {
      emit(out_path, serialize_network(builtin_case(inputs.front())), out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const DimensionError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const NotReducible& e) {
    err << "NotReducible: " << e.what() << "\n";
    return kNotReducible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kSuccess;
}

}  // namespace dckron::cli
