#include "hyperdual/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hyperdual/css.hpp"
#include "hyperdual/duality.hpp"
#include "hyperdual/errors.hpp"
#include "hyperdual/hypergraph.hpp"
#include "hyperdual/model_io.hpp"
#include "hyperdual/spin_model.hpp"
#include "hyperdual/zoo.hpp"

namespace hyperdual::cli {

namespace {

constexpr double kVerifyTolerance = 1e-9;

struct Options {
  std::string input = "-";
  std::string out_path;
  std::string format;
  std::optional<double> coupling;
  std::optional<double> beta;
  std::string method = "brute";
  bool on_dual = false;

  std::string noise;
  double pmin = 0.0;
  double pmax = 0.5;
  std::size_t steps = 11;

  std::string family;
  std::vector<std::size_t> params;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io", message) {}
};

std::string json_real(double v) { return std::isfinite(v) ? format_real(v) : "null"; }

std::string read_input(const Options& opt, std::istream& in) {
  if (opt.input == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(opt.input, std::ios::binary);
  if (!file) throw IoError("cannot open " + opt.input);
  return std::string(std::istreambuf_iterator<char>(file), {});
}

ModelDocument read_document(const Options& opt, std::istream& in) {
  return parse_model(read_input(opt, in));
}

// Document couplings and beta, with --J (uniform) and --beta taking
// precedence when given.
SpinModel spin_model_of(const Options& opt, const ModelDocument& doc) {
  ModelDocument d = doc;
  if (opt.coupling) d.couplings = std::vector<double>(d.edges.size(), *opt.coupling);
  if (opt.beta) d.beta = *opt.beta;
  return d.spin_model();
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out_path.empty() || opt.out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open " + opt.out_path + " for writing");
  file << text;
}

std::string counts_json(const WeightDistribution& d) {
  std::string s = "[";
  for (std::size_t l = 0; l < d.counts().size(); ++l) {
    if (l) s += ",";
    s += std::to_string(d.counts()[l]);
  }
  return s + "]";
}

int cmd_dual(const Options& opt, std::istream& in, std::ostream& out) {
  const auto h = read_document(opt, in).hypergraph();
  emit(opt, out, serialize_model(document_from(dual(h))));
  return kExitOk;
}

int cmd_ortho(const Options& opt, std::istream& in, std::ostream& out) {
  const auto h = read_document(opt, in).hypergraph();
  emit(opt, out, serialize_model(document_from(orthogonal(h))));
  return kExitOk;
}

int cmd_css_info(const Options& opt, std::istream& in, std::ostream& out) {
  auto h = read_document(opt, in).hypergraph();
  if (opt.on_dual) h = dual(h);
  const CssState css = css_from_hypergraph(h);
  const auto xw = x_weight_distribution(css);
  const auto zw = z_weight_distribution(css);

  std::ostringstream s;
  if (opt.format == "csv") {
    s << "weight,x_count,z_count\n";
    for (std::size_t l = 0; l <= css.num_qubits(); ++l) {
      s << l << ',' << xw.count(l) << ',' << zw.count(l) << '\n';
    }
  } else {
    s << "{\"n_qubits\":" << css.num_qubits() << ",\"x_rank\":" << css.x_rank()
      << ",\"z_rank\":" << css.z_generators().size() << ",\"x_weights\":" << counts_json(xw)
      << ",\"z_weights\":" << counts_json(zw) << "}\n";
  }
  emit(opt, out, s.str());
  return kExitOk;
}

int cmd_partition(const Options& opt, std::istream& in, std::ostream& out) {
  const SpinModel model = spin_model_of(opt, read_document(opt, in));
  double z = 0.0;
  if (opt.method == "brute") {
    z = partition_function(model);
  } else if (opt.method == "edge-vars") {
    z = partition_function_edge_vars(model);
  } else {
    throw CLI::ValidationError("--method", "expected brute or edge-vars");
  }
  if (opt.format == "json") {
    emit(opt, out, "{\"z\":" + json_real(z) + "}\n");
  } else if (opt.format == "csv") {
    emit(opt, out, "z\n" + format_real(z) + "\n");
  } else {
    emit(opt, out, format_real(z) + "\n");
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
  const SpinModel model = spin_model_of(opt, read_document(opt, in));
  const DualityReport r = verify_duality(model);
  const bool ok = r.passed(kVerifyTolerance);
  std::ostringstream s;
  s << "{\"k\":" << r.k << ",\"n\":" << r.n << ",\"m\":" << r.m
    << ",\"z_bruteforce\":" << json_real(r.z_bruteforce) << ",\"overlap\":" << json_real(r.overlap)
    << ",\"constant\":" << json_real(r.constant)
    << ",\"constant_without_multiplicity\":" << json_real(r.constant_without_multiplicity)
    << ",\"relative_error\":" << json_real(r.relative_error)
    << ",\"tolerance\":" << json_real(kVerifyTolerance) << ",\"passed\":" << (ok ? "true" : "false")
    << "}\n";
  emit(opt, out, s.str());
  return ok ? kExitOk : kExitFailure;
}

int cmd_sweep(const Options& opt, std::istream& in, std::ostream& out) {
  const auto noise = parse_noise_kind(opt.noise);
  if (!noise) throw CLI::ValidationError("--noise", "expected bitflip or phaseflip");
  const auto h = read_document(opt, in).hypergraph();
  const auto grid = linear_grid(opt.pmin, opt.pmax, opt.steps);
  const StabilityCurve curve = sweep_stability(css_from_hypergraph(dual(h)), grid, *noise);

  std::ostringstream s;
  const std::string kind(to_string(curve.noise));
  if (opt.format == "json") {
    s << "[";
    for (std::size_t i = 0; i < curve.rows.size(); ++i) {
      const auto& row = curve.rows[i];
      s << (i ? "," : "") << "{\"p\":" << json_real(row.p) << ",\"value\":" << json_real(row.value)
        << ",\"noise\":\"" << kind << "\",\"n_qubits\":" << curve.n_qubits
        << ",\"m_rank\":" << curve.m_rank << "}";
    }
    s << "]\n";
  } else {
    s << "p,value,noise,n_qubits,m_rank\n";
    for (const auto& row : curve.rows) {
      s << format_real(row.p) << ',' << format_real(row.value) << ',' << kind << ','
        << curve.n_qubits << ',' << curve.m_rank << '\n';
    }
  }
  emit(opt, out, s.str());
  return kExitOk;
}

void need_params(const Options& opt, std::size_t count, const char* usage) {
  if (opt.params.size() != count) {
    throw CLI::ValidationError("zoo " + opt.family, std::string("expected parameters ") + usage);
  }
}

int cmd_zoo(const Options& opt, std::ostream& out) {
  const auto& f = opt.family;
  const auto& p = opt.params;
  std::optional<Graph> graph;
  Hypergraph h;

  if (f == "cycle" || f == "toric-cycle") {
    need_params(opt, 1, "<n>");
    graph = cycle_graph(p[0]);
  } else if (f == "square-torus" || f == "toric-square-torus") {
    need_params(opt, 2, "<lx> <ly>");
    graph = square_torus(p[0], p[1]);
  } else if (f == "cubic-torus" || f == "toric-cubic-torus") {
    need_params(opt, 1, "<l>");
    graph = cubic_torus(p[0]);
  } else if (f == "hex-colex") {
    need_params(opt, 2, "<lx> <ly>");
    h = hexagonal_2colex(p[0], p[1]);
  } else {
    throw CLI::ValidationError("zoo", "unknown family " + f);
  }
  if (graph) h = f.starts_with("toric-") ? toric_code_hypergraph(*graph) : graph->as_hypergraph();

  ModelDocument doc = document_from(h);
  if (opt.coupling) doc.couplings = std::vector<double>(doc.edges.size(), *opt.coupling);
  if (opt.beta) {
    if (!(*opt.beta >= 0.0)) throw ValidationError("beta must be non-negative");
    doc.beta = *opt.beta;
  }
  emit(opt, out, serialize_model(doc));
  return kExitOk;
}

void add_input(CLI::App* cmd, Options& opt) {
  cmd->add_option("input", opt.input, "Model document path, '-' for standard input");
}

void add_out(CLI::App* cmd, Options& opt) {
  cmd->add_option("--out", opt.out_path, "Output path (default standard output)");
}

void add_model_overrides(CLI::App* cmd, Options& opt) {
  cmd->add_option("--J", opt.coupling, "Uniform coupling for every edge");
  cmd->add_option("--beta", opt.beta, "Inverse temperature");
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  Options opt;
  CLI::App app{"Classical spin models and CSS states on dual hypergraphs", "hyperdual"};
  app.require_subcommand(1, 1);

  auto* dual_cmd = app.add_subcommand("dual", "Write the dual hypergraph of a model");
  add_input(dual_cmd, opt);
  add_out(dual_cmd, opt);

  auto* ortho_cmd = app.add_subcommand("ortho", "Write the orthogonal hypergraph of a model");
  add_input(ortho_cmd, opt);
  add_out(ortho_cmd, opt);

  auto* css_cmd = app.add_subcommand("css-info", "Print qubit count, ranks and weight distributions");
  add_input(css_cmd, opt);
  add_out(css_cmd, opt);
  css_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  css_cmd->add_flag("--dual", opt.on_dual, "Build the state on the dual hypergraph");

  auto* partition_cmd = app.add_subcommand("partition", "Print the partition function");
  add_input(partition_cmd, opt);
  add_out(partition_cmd, opt);
  add_model_overrides(partition_cmd, opt);
  partition_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  partition_cmd->add_option("--method", opt.method)->check(CLI::IsMember({"brute", "edge-vars"}));

  auto* verify_cmd =
      app.add_subcommand("verify", "Check Z against the CSS overlap; nonzero exit on mismatch");
  add_input(verify_cmd, opt);
  add_out(verify_cmd, opt);
  add_model_overrides(verify_cmd, opt);

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Stability probability of the dual CSS state over a p grid");
  add_input(sweep_cmd, opt);
  add_out(sweep_cmd, opt);
  sweep_cmd->add_option("--noise", opt.noise)->required()->check(
      CLI::IsMember({"bitflip", "phaseflip"}));
  sweep_cmd->add_option("--pmin", opt.pmin);
  sweep_cmd->add_option("--pmax", opt.pmax);
  sweep_cmd->add_option("--steps", opt.steps);
  sweep_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));

  auto* zoo_cmd = app.add_subcommand("zoo", "Emit a generated model document");
  zoo_cmd->add_option("family", opt.family,
                      "cycle | square-torus | cubic-torus | toric-cycle | toric-square-torus | "
                      "toric-cubic-torus | hex-colex")
      ->required();
  zoo_cmd->add_option("params", opt.params, "Size parameters of the family");
  add_out(zoo_cmd, opt);
  add_model_overrides(zoo_cmd, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (dual_cmd->parsed()) return cmd_dual(opt, in, out);
    if (ortho_cmd->parsed()) return cmd_ortho(opt, in, out);
    if (css_cmd->parsed()) return cmd_css_info(opt, in, out);
    if (partition_cmd->parsed()) return cmd_partition(opt, in, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, in, out);
    if (sweep_cmd->parsed()) return cmd_sweep(opt, in, out);
    if (zoo_cmd->parsed()) return cmd_zoo(opt, out);
  } catch (const CLI::Error& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "error: " << e.kind() << ": " << message << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitFailure;
  }
  err << "error: usage: no subcommand\n";
  return kExitUsage;
}

}  // namespace hyperdual::cli
