#include "toughness/cli/cli.hpp"

#include "toughness/core/errors.hpp"
#include "toughness/core/formats.hpp"
#include "toughness/gadgets/gadgets.hpp"
#include "toughness/harness/harness.hpp"
#include "toughness/recognizers/recognizers.hpp"
#include "toughness/solver/independence.hpp"
#include "toughness/solver/parallel.hpp"
#include "toughness/solver/toughness.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace tough::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Input {
  std::string path;
  std::string g6;
  std::string format = "graph6";
};

void add_input(CLI::App& app, Input& input) {
  app.add_option("input", input.path, "Input file, or - for standard input (default)");
  app.add_option("--g6", input.g6, "Inline graph6 string");
  app.add_option("--format", input.format, "Input and output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
}

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Graph> load(const Input& input, std::istream& in) {
  if (!input.g6.empty()) {
    if (!input.path.empty()) throw UsageError("give exactly one input source");
    return {parse_graph6(input.g6)};
  }
  std::string text;
  if (input.path.empty() || input.path == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(input.path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + input.path);
    text = read_all(file);
  }
  std::vector<Graph> graphs;
  if (input.format == "edgelist") {
    graphs.push_back(parse_edge_list(text));
  } else {
    std::istringstream stream(text);
    graphs = read_graph6_stream(stream);
  }
  if (graphs.empty()) throw UsageError("no graph in input");
  return graphs;
}

Graph load_one(const Input& input, std::istream& in) {
  std::vector<Graph> graphs = load(input, in);
  if (graphs.size() != 1) throw UsageError("expected exactly one graph, got " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

std::string format_graph(const Graph& g, const std::string& format) {
  return format == "edgelist" ? to_edge_list(g) : to_graph6(g) + "\n";
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "]";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << content;
}

Rational parse_t(const std::string& text) {
  Rational t = Rational::parse(text);
  if (t.is_zero()) throw UsageError("t must be positive");
  return t;
}

// Destination of a result: a file when a path is given, otherwise `out`.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

int cmd_tau(const Input& input, std::istream& in, std::ostream& out) {
  for (const Graph& g : load(input, in)) {
    const ToughnessResult r = toughness(g);
    out << r.value.to_string();
    if (r.value.kind() == ToughnessValue::Kind::Finite) {
      out << " witness=" << vertex_list(r.witness->vertices());
    } else if (r.value.kind() == ToughnessValue::Kind::Zero) {
      out << " witness=[]";
    }
    out << '\n';
  }
  return kExitOk;
}

struct CheckOptions {
  std::string kind;
  std::string t;
  std::optional<std::size_t> k;
  std::string certificate;
};

int cmd_check(const CheckOptions& o, const Input& input, std::istream& in, std::ostream& out) {
  const bool needs_t = o.kind == "t-tough" || o.kind == "min-tough";
  if (needs_t && o.t.empty()) throw UsageError(o.kind + " requires --t");
  if (!o.certificate.empty() && o.kind != "min-tough") throw UsageError("--certificate applies to min-tough only");
  const Graph g = load_one(input, in);

  if (o.kind == "t-tough") {
    const TToughResult r = is_t_tough(g, parse_t(o.t));
    out << (r.tough ? "true" : "false");
    if (r.violation) {
      out << " violation=" << vertex_list(r.violation->vertices())
          << " components=" << r.violation->component_count;
    }
    out << '\n';
    return r.tough ? kExitOk : kExitFalse;
  }
  if (o.kind == "min-tough") {
    const MinToughResult r = is_minimally_t_tough(g, parse_t(o.t));
    if (r.minimal) {
      out << "true\n";
      if (!o.certificate.empty()) emit(o.certificate, certificate_to_json(*r.certificate).dump(2) + "\n", out);
      return kExitOk;
    }
    out << "false: " << r.reason << '\n';
    return kExitFalse;
  }
  if (o.kind == "almost-min-1") {
    const AlmostMinClass c = is_almost_minimally_1_tough(g);
    out << to_string(c) << '\n';
    return c == AlmostMinClass::NotAlmostMinimal ? kExitFalse : kExitOk;
  }
  const bool critical = o.k ? is_alpha_critical_decision(g, *o.k) : is_alpha_critical_graph(g);
  out << (critical ? "true" : "false") << " alpha=" << independence_number(g).alpha << '\n';
  return critical ? kExitOk : kExitFalse;
}

struct ConstructOptions {
  std::string kind;
  std::optional<std::size_t> alpha;
  std::optional<std::size_t> t;
  std::optional<std::size_t> a;
  std::optional<std::size_t> b;
  std::optional<std::size_t> v;
  std::optional<std::size_t> size;
  std::string output;
  std::string labels;
};

std::size_t need(const std::optional<std::size_t>& value, const char* flag, const std::string& kind) {
  if (!value) throw UsageError(kind + " requires " + flag);
  return *value;
}

int cmd_construct(const ConstructOptions& o, const Input& input, std::istream& in, std::ostream& out) {
  const std::string& k = o.kind;
  std::optional<Gadget> gadget;
  Graph graph;
  if (k == "H") {
    gadget = build_H(need(o.a, "--a", k), need(o.b, "--b", k));
  } else if (k == "H-prime") {
    gadget = build_H_prime(need(o.a, "--a", k), need(o.b, "--b", k)).gadget;
  } else {
    const Graph host = load_one(input, in);
    if (k == "g-alpha") {
      gadget = build_G_alpha(host, need(o.alpha, "--alpha", k));
    } else if (k == "g-t-alpha") {
      gadget = build_G_t_alpha(host, need(o.t, "--t", k), need(o.alpha, "--alpha", k));
    } else if (k == "pendants") {
      gadget = attach_pendants(host, need(o.b, "--b", k));
    } else if (k == "glue") {
      const HPrime h = build_H_prime(need(o.a, "--a", k), need(o.b, "--b", k));
      gadget = glue(host, h.gadget.graph, glue_point(h.gadget));
    } else {
      if (!o.labels.empty()) throw UsageError("blowup has no labeling");
      graph = blow_up(host, static_cast<Vertex>(need(o.v, "--v", k)), need(o.size, "--size", k));
    }
  }
  if (gadget) graph = gadget->graph;
  emit(o.output, format_graph(graph, input.format), out);
  if (!o.labels.empty()) write_file(o.labels, labeling_to_json(gadget->labeling).dump(2) + "\n");
  return kExitOk;
}

struct VerifyOptions {
  std::string check;
  std::string check_flag;
  std::optional<std::size_t> n_min;
  std::optional<std::size_t> n_max;
  std::vector<std::size_t> alphas;
  std::size_t t = 1;
  std::size_t a = 1;
  std::size_t b = 2;
  std::size_t size_max = 2;
  std::size_t vertex_cap = 24;
  std::optional<std::size_t> budget_ms;
  std::string graphs;
  std::string output;
  std::string csv;
};

int cmd_verify(const VerifyOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!o.check.empty() && !o.check_flag.empty() && o.check != o.check_flag) {
    throw UsageError("conflicting check names");
  }
  SweepSpec spec;
  spec.check = o.check.empty() ? o.check_flag : o.check;
  if (spec.check.empty()) throw UsageError("verify requires a check name");
  if (!o.graphs.empty()) {
    Input stream;
    stream.path = o.graphs;
    spec.graphs = load(stream, in);
  } else if (spec.check != "blowup-alpha-critical") {
    if (!o.n_max) throw UsageError("verify requires --n-max or --graphs");
    spec.n_max = *o.n_max;
    spec.n_min = o.n_min.value_or(1);
  }
  if (!o.alphas.empty()) spec.alphas = o.alphas;
  spec.t = o.t;
  spec.a = o.a;
  spec.b = o.b;
  spec.size_max = o.size_max;
  spec.limits.vertex_cap = o.vertex_cap;
  if (o.budget_ms) spec.limits.time_budget = std::chrono::milliseconds(*o.budget_ms);

  const VerificationReport r = run_sweep(spec);
  emit(o.output, report_to_json(r).dump(2) + "\n", out);
  if (!o.csv.empty()) emit(o.csv, report_to_csv(r), out);
  err << r.check_name << ": total=" << r.total << " passed=" << r.passed << " failed=" << r.failed
      << " skipped=" << r.skipped << '\n';
  return r.failed == 0 ? kExitOk : kExitFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact graph toughness toolkit", "toughness");
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs,-j", jobs, "Kernel worker threads (0 = machine parallelism)")
      ->envname("TOUGHNESS_JOBS")
      ->check(CLI::NonNegativeNumber);

  Input tau_input;
  CLI::App* tau = app.add_subcommand("tau", "Print the exact toughness and a tough set of every input graph");
  add_input(*tau, tau_input);

  Input check_input;
  CheckOptions check_opts;
  CLI::App* check = app.add_subcommand("check", "Decide a graph class; exit 0 if it holds, 1 if not");
  check->add_option("class", check_opts.kind, "t-tough | min-tough | almost-min-1 | alpha-critical")
      ->required()
      ->check(CLI::IsMember({"t-tough", "min-tough", "almost-min-1", "alpha-critical"}));
  add_input(*check, check_input);
  check->add_option("--t", check_opts.t, "Toughness threshold, a/b or integer");
  check->add_option("--k", check_opts.k, "Independence bound for alpha-critical");
  check->add_option("--certificate", check_opts.certificate, "Write the min-tough certificate JSON here");

  Input construct_input;
  ConstructOptions construct_opts;
  CLI::App* construct = app.add_subcommand("construct", "Build a reduction gadget");
  construct->add_option("kind", construct_opts.kind, "g-alpha | g-t-alpha | pendants | H | H-prime | glue | blowup")
      ->required()
      ->check(CLI::IsMember({"g-alpha", "g-t-alpha", "pendants", "H", "H-prime", "glue", "blowup"}));
  add_input(*construct, construct_input);
  construct->add_option("--alpha", construct_opts.alpha);
  construct->add_option("--t", construct_opts.t);
  construct->add_option("--a", construct_opts.a);
  construct->add_option("--b", construct_opts.b);
  construct->add_option("--v", construct_opts.v);
  construct->add_option("--size", construct_opts.size);
  construct->add_option("--output,-o", construct_opts.output, "Graph output path (default stdout)");
  construct->add_option("--labels", construct_opts.labels, "Write the vertex-role JSON here");

  VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "Run an exhaustive sweep; exit 0 iff nothing failed");
  std::vector<std::string> names = check_names();
  verify->add_option("name", verify_opts.check, "Check name")->check(CLI::IsMember(names));
  verify->add_option("--check", verify_opts.check_flag, "Check name")->check(CLI::IsMember(names));
  verify->add_option("--n-min", verify_opts.n_min);
  verify->add_option("--n-max", verify_opts.n_max);
  verify->add_option("--alpha", verify_opts.alphas)->delimiter(',');
  verify->add_option("--t", verify_opts.t);
  verify->add_option("--a", verify_opts.a);
  verify->add_option("--b", verify_opts.b);
  verify->add_option("--size-max", verify_opts.size_max);
  verify->add_option("--vertex-cap", verify_opts.vertex_cap);
  verify->add_option("--time-budget-ms", verify_opts.budget_ms, "Per-case budget; expired cases are skipped");
  verify->add_option("--graphs", verify_opts.graphs, "graph6 stream replacing enumeration (- for stdin)");
  verify->add_option("--output,-o", verify_opts.output, "JSON report path (default stdout)");
  verify->add_option("--csv", verify_opts.csv, "CSV summary path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const CLI::App* sub : {tau, check, construct, verify}) {
      if (sub->parsed()) target = sub;
    }
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    set_worker_count(jobs);
    if (tau->parsed()) return cmd_tau(tau_input, in, out);
    if (check->parsed()) return cmd_check(check_opts, check_input, in, out);
    if (construct->parsed()) return cmd_construct(construct_opts, construct_input, in, out);
    return cmd_verify(verify_opts, in, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace tough::cli
