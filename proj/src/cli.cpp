#include "sgraph/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "sgraph/constructions.hpp"
#include "sgraph/error.hpp"
#include "sgraph/io.hpp"
#include "sgraph/lifts.hpp"
#include "sgraph/spectra.hpp"
#include "sgraph/switching.hpp"
#include "sgraph/twographs.hpp"

namespace sgraph::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20170923;

double rounded(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0 ? 0.0 : r;
}

json spectrum_json(const Spectrum& s) {
  json arr = json::array();
  for (const auto& p : s.pairs) arr.push_back({{"value", rounded(p.value)}, {"multiplicity", p.multiplicity}});
  return arr;
}

json matrix_json(const SignedMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Trit t : m.row(i)) r.push_back(static_cast<int>(t));
    rows.push_back(std::move(r));
  }
  return rows;
}

json edges_json(const Graph& g) {
  json arr = json::array();
  for (const auto& [u, v] : g.edges()) arr.push_back({u + 1, v + 1});
  return arr;
}

std::string edge_list_text(const Graph& g) {
  std::string s;
  for (const auto& [u, v] : g.edges()) s += (s.empty() ? "" : " ") + std::to_string(u + 1) + "-" + std::to_string(v + 1);
  return s.empty() ? "(none)" : s;
}

std::string matrix_text(const SignedMatrix& m) {
  std::ostringstream ss;
  io::write_matrix(ss, m);
  return ss.str();
}

// Accumulates labeled results; status is pass unless a verdict failed.
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void input(const std::string& key, const std::string& value) { inputs_.emplace_back(key, value); }

  void result(const std::string& label, const std::string& text, json value) {
    results_.push_back({label, text, std::move(value)});
  }
  void result(const std::string& label, const std::string& text) { result(label, text, text); }

  void spectrum(const std::string& label, const Spectrum& s) { result(label, io::format_spectrum(s), spectrum_json(s)); }

  void verdict(const std::string& label, bool ok) {
    result(label, ok ? "PASS" : "FAIL", ok);
    passed_ = passed_ && ok;
  }

  bool passed() const { return passed_; }

  int emit(std::ostream& out, bool as_json) const {
    if (as_json) {
      json doc;
      doc["command"] = command_;
      doc["inputs"] = json::object();
      for (const auto& [k, v] : inputs_) doc["inputs"][k] = v;
      doc["results"] = json::array();
      for (const auto& r : results_) doc["results"].push_back({{"label", r.label}, {"value", r.value}});
      doc["status"] = passed_ ? "pass" : "fail";
      out << doc.dump(2) << '\n';
    } else {
      out << "command: " << command_ << '\n';
      for (const auto& [k, v] : inputs_) out << "input " << k << ": " << v << '\n';
      for (const auto& r : results_) {
        if (r.text.find('\n') != std::string::npos) {
          out << r.label << ":\n" << r.text;
          if (r.text.back() != '\n') out << '\n';
        } else {
          out << r.label << ": " << r.text << '\n';
        }
      }
      out << "status: " << (passed_ ? "pass" : "fail") << '\n';
    }
    return passed_ ? 0 : 1;
  }

 private:
  struct Entry {
    std::string label;
    std::string text;
    json value;
  };
  std::string command_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<Entry> results_;
  bool passed_ = true;
};

struct Globals {
  double tol = kDefaultGroupingTol;
  std::uint64_t seed = kDefaultSeed;
  bool certify = false;
  bool as_json = false;
};

std::string certificate_text(const TwoEigCertificate& c) {
  std::ostringstream ss;
  ss << "a = " << c.a << ", b = " << c.b << ", lambda = " << io::format_value(c.lambda) << "^" << c.mult_lambda
     << ", mu = " << io::format_value(c.mu) << "^" << c.mult_mu;
  return ss.str();
}

json certificate_json(const TwoEigCertificate& c) {
  return {{"a", c.a},
          {"b", c.b},
          {"lambda", rounded(c.lambda)},
          {"mu", rounded(c.mu)},
          {"mult_lambda", c.mult_lambda},
          {"mult_mu", c.mult_mu}};
}

// Records a two-eigenvalue certificate and the regularity it forces.
bool report_two_eig(RunReport& report, const std::string& label, const SignedGraph& sg) {
  const auto cert = certify_two_eigenvalues(sg);
  if (!cert) {
    report.result(label, "absent", nullptr);
    return false;
  }
  report.result(label, certificate_text(*cert), certificate_json(*cert));
  const auto degree = is_regular(ground(sg));
  report.verdict(label + " forces regular degree " + std::to_string(degree_from_certificate(*cert)),
                 degree && static_cast<std::int64_t>(*degree) == degree_from_certificate(*cert));
  return true;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string kind;
  std::vector<std::string> files;
  unsigned k = 0;
  std::optional<std::uint64_t> q;
  std::string preset = "all-c";
  std::string input;
  std::string output;
};

SignedMatrix base_matrix(const GenOptions& o) {
  if (!o.input.empty()) return io::read_matrix_file(o.input);
  if (o.q) return paley_conference(*o.q);
  throw Error(ErrorKind::PreconditionFailed, o.kind + " needs a base matrix: give -q or --input");
}

int cmd_gen(const GenOptions& o, const Globals& g, std::ostream& out) {
  RunReport report("gen " + o.kind);
  std::optional<SignedMatrix> matrix;
  std::optional<std::int64_t> alpha;

  if (o.kind == "hadamard") {
    report.input("k", std::to_string(o.k));
    matrix = sylvester_hadamard(o.k);
  } else if (o.kind == "conference") {
    if (!o.q) throw Error(ErrorKind::PreconditionFailed, "conference needs -q");
    report.input("q", std::to_string(*o.q));
    matrix = paley_conference(*o.q);
    alpha = static_cast<std::int64_t>(*o.q);
  } else if (o.kind == "kron") {
    if (o.files.size() != 2) throw Error(ErrorKind::PreconditionFailed, "kron needs two matrix files");
    report.input("left", o.files[0]);
    report.input("right", o.files[1]);
    const auto a = io::read_matrix_file(o.files[0]);
    const auto b = io::read_matrix_file(o.files[1]);
    if (g.certify) {
      auto c = kronecker_orthogonal(a, b);
      matrix = std::move(c.matrix);
      alpha = c.certificate.alpha;
    } else {
      matrix = kronecker(a, b);
    }
  } else {
    if (o.q) report.input("q", std::to_string(*o.q));
    if (!o.input.empty()) report.input("input", o.input);
    const SignedMatrix base = base_matrix(o);
    std::optional<CertifiedMatrix> built;
    if (o.kind == "double") {
      built = double_symmetric(base);
    } else if (o.kind == "conference-block") {
      built = conference_block(base);
    } else {
      const auto preset = parse_williamson_preset(o.preset);
      if (!preset) throw Error(ErrorKind::PreconditionFailed, "unknown preset " + o.preset);
      report.input("preset", o.preset);
      built = williamson_preset(base, *preset);
    }
    matrix = std::move(built->matrix);
    alpha = built->certificate.alpha;
  }

  if (g.certify && !alpha) {
    const auto cert = is_orthogonal(*matrix);
    if (cert) alpha = cert->alpha;
  }
  report.result("order", std::to_string(matrix->rows()) + "x" + std::to_string(matrix->cols()),
                json::array({matrix->rows(), matrix->cols()}));
  if (g.certify) {
    if (alpha) {
      report.result("alpha", std::to_string(*alpha), *alpha);
    } else {
      report.verdict("orthogonal", false);
    }
  }

  std::string text = matrix_text(*matrix);
  if (g.certify && alpha) text += "alpha = " + std::to_string(*alpha) + "\n";
  if (!o.output.empty()) {
    std::ofstream file(o.output);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write " + o.output);
    file << text;
    report.input("output", o.output);
  }
  if (g.as_json) {
    report.result("matrix", text, matrix_json(*matrix));
    return report.emit(out, true);
  }
  if (o.output.empty()) {
    out << text;
    return report.passed() ? 0 : 1;
  }
  return report.emit(out, false);
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& path, const Globals& g, std::ostream& out) {
  RunReport report("verify");
  report.input("file", path);
  const SignedMatrix m = io::read_matrix_file(path);
  report.result("shape", std::to_string(m.rows()) + "x" + std::to_string(m.cols()),
                json::array({m.rows(), m.cols()}));
  if (!m.is_square()) {
    report.verdict("square", false);
    return report.emit(out, g.as_json);
  }

  const auto orth = is_orthogonal(m);
  report.result("orthogonal", orth ? "alpha = " + std::to_string(orth->alpha) : "absent",
                orth ? json(orth->alpha) : json(nullptr));

  const bool adjacency = m.is_symmetric() && m.has_zero_diagonal();
  const SignedGraph sg = adjacency ? SignedGraph(m) : star(m);
  const std::string which = adjacency ? "matrix" : "star";
  bool certified = false;
  if (sg.has_edge()) certified = report_two_eig(report, "two-eigenvalue certificate (" + which + ")", sg);
  report.spectrum("spectrum (" + which + ")", eigenvalues_symmetric(sg.adjacency(), g.tol));
  if (!adjacency) {
    report.verdict("star two eigenvalues iff orthogonal", certified == orth.has_value());
  }
  report.verdict(adjacency ? "two distinct eigenvalues" : "orthogonal signed matrix",
                 adjacency ? certified : orth.has_value());
  return report.emit(out, g.as_json);
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const std::string& path, bool graph_input, const Globals& g, std::ostream& out) {
  RunReport report("spectrum");
  report.input("file", path);
  report.input("format", graph_input ? "graph" : "matrix");
  const SignedMatrix m = graph_input ? io::read_signed_graph_file(path).adjacency() : io::read_matrix_file(path);
  const auto raw = jacobi_eigenvalues(RealMatrix::from(m));
  const Spectrum s = Spectrum::from_values(raw, g.tol);
  report.result("order", std::to_string(m.rows()), m.rows());
  report.spectrum("spectrum", s);
  report.result("distinct eigenvalues", std::to_string(s.pairs.size()), s.pairs.size());
  double trace = 0, sum = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) trace += m(i, i);
  for (double v : raw) sum += v;
  report.verdict("eigenvalue sum matches trace", std::abs(sum - trace) <= 1e-9);
  return report.emit(out, g.as_json);
}

// ---------------------------------------------------------------- lift

int cmd_lift(const std::string& path, const std::string& output, bool random_signature, const Globals& g,
             std::ostream& out) {
  RunReport report("lift");
  report.input("file", path);
  SignedGraph sg = io::read_signed_graph_file(path);
  if (random_signature) {
    report.input("seed", std::to_string(g.seed));
    const Graph base = ground(sg);
    std::mt19937_64 rng(g.seed);
    std::vector<int> signs(base.size());
    for (auto& s : signs) s = (rng() & 1u) ? -1 : 1;
    sg = SignedGraph(base, signs);
    std::ostringstream ss;
    io::write_signed_graph(ss, sg);
    report.result("signature", ss.str(), ss.str());
  }
  const LiftedGraph lift = two_lift(sg);
  report.result("lift order", std::to_string(lift.graph.order()), lift.graph.order());
  report.result("lift edges", std::to_string(lift.graph.size()), lift.graph.size());
  std::ostringstream edges;
  io::write_graph(edges, lift.graph);
  if (!output.empty()) {
    std::ofstream file(output);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write " + output);
    file << edges.str();
    report.input("output", output);
  } else {
    report.result("lifted graph", edges.str(), edges_json(lift.graph));
  }
  const auto cmp = lift_spectrum_compare(sg, g.tol);
  report.spectrum("lift spectrum", cmp.lift);
  report.spectrum("spec(|A|) union spec(A^s)", cmp.expected);
  bool degrees = true;
  for (Vertex v = 0; v < lift.graph.order(); ++v)
    degrees = degrees && lift.graph.degree(v) == ground(sg).degree(v % sg.order());
  report.verdict("lift keeps base degrees", degrees);
  report.verdict("lift spectrum equals union", cmp.match);
  return report.emit(out, g.as_json);
}

// ---------------------------------------------------------------- ramanujan

int cmd_ramanujan(const std::string& path, const std::string& mode_name, const Globals& g, std::ostream& out) {
  RunReport report("ramanujan");
  report.input("file", path);
  const auto mode = parse_ramanujan_mode(mode_name);
  if (!mode) throw Error(ErrorKind::PreconditionFailed, "unknown mode " + mode_name);
  report.input("mode", std::string(to_string(*mode)));
  const SignedGraph sg = io::read_signed_graph_file(path);
  const Graph base = ground(sg);
  const RamanujanReport r = is_ramanujan(base, *mode);
  report.result("degree", std::to_string(r.degree), r.degree);
  report.result("vertices", std::to_string(r.n), r.n);
  report.result(*mode == RamanujanMode::PaperLiteral ? "lambda2" : "nontrivial max |lambda|",
                io::format_value(r.lambda2), rounded(r.lambda2));
  report.result("bound 2 sqrt(d-1)", io::format_value(r.bound), rounded(r.bound));
  report.verdict("ramanujan", r.verdict);
  if (r.degree >= 2) {
    report.result("signature lambda1", io::format_value(eigenvalues_symmetric(sg.adjacency(), g.tol).largest()));
    report.result("good signature", is_good_signature(sg) ? "yes" : "no", is_good_signature(sg));
  }
  return report.emit(out, g.as_json);
}

// ---------------------------------------------------------------- table

void table_entry(RunReport& report, TableFamily family, std::size_t n, double tol) {
  const auto r = table_row(family, n, tol);
  const std::string p = std::string(to_string(family)) + " n=" + std::to_string(n);
  report.result(p + " ground", std::to_string(r.base_order) + " vertices, " + std::to_string(r.degree) + "-regular");
  report.result(p + " signature lambda1",
                io::format_value(r.lambda1_signed) + " <= " + io::format_value(r.bound) + ": " +
                    (r.good_signature ? "good" : "not good"),
                r.good_signature);
  report.spectrum(p + " expected", r.formula);
  report.spectrum(p + " computed", r.lift);
  report.spectrum(p + " spec(G) union spec(A^s)", r.computed_union);
  if (r.discrepancy) {
    report.spectrum(p + " printed table row", r.printed_row);
    report.result(p + " note", *r.discrepancy);
  }
  report.verdict(p, r.pass);
}

int cmd_table(const std::string& family_name, std::optional<std::size_t> n, const Globals& g, std::ostream& out) {
  RunReport report("table");
  const std::vector<std::pair<TableFamily, std::vector<std::size_t>>> defaults = {
      {TableFamily::Knn, {2, 4, 8}}, {TableFamily::KnnMinusM, {6, 14}}, {TableFamily::NC4Complement, {6, 14}}};
  std::optional<TableFamily> only;
  if (!family_name.empty()) {
    only = parse_table_family(family_name);
    if (!only) throw Error(ErrorKind::UnsupportedOrder, "unknown family " + family_name);
    report.input("family", family_name);
  }
  if (n) {
    if (!only) throw Error(ErrorKind::PreconditionFailed, "-n needs --family");
    report.input("n", std::to_string(*n));
  }
  for (const auto& [family, orders] : defaults) {
    if (only && family != *only) continue;
    if (n) {
      table_entry(report, family, *n, g.tol);
    } else {
      for (std::size_t order : orders) table_entry(report, family, order, g.tol);
    }
  }
  return report.emit(out, g.as_json);
}

// ---------------------------------------------------------------- switch-classes

int cmd_switch_classes(const std::string& path, const Globals& g, std::ostream& out) {
  RunReport report("switch-classes");
  report.input("file", path);
  const Graph base = ground(io::read_signed_graph_file(path));
  const std::size_t exponent = switching_class_exponent(base);
  const std::uint64_t formula = count_switching_classes(base);
  const auto classes = enumerate_switching_classes(base);
  report.result("m n c", std::to_string(base.size()) + " " + std::to_string(base.order()) + " " +
                             std::to_string(base.component_count()));
  report.result("formula 2^(m-n+c)", "2^" + std::to_string(exponent) + " = " + std::to_string(formula), formula);
  report.result("enumerated classes", std::to_string(classes.size()), classes.size());
  json reps = json::array();
  std::string text;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    json negative = json::array();
    std::string line;
    for (const auto& [u, v] : base.edges())
      if (classes[i].sign(u, v) < 0) {
        negative.push_back({u + 1, v + 1});
        line += " " + std::to_string(u + 1) + "-" + std::to_string(v + 1);
      }
    reps.push_back(negative);
    text += "  class " + std::to_string(i + 1) + " negative edges:" + (line.empty() ? " (none)" : line) + "\n";
  }
  report.result("representatives", text, reps);
  report.verdict("enumeration matches formula", classes.size() == formula);
  return report.emit(out, g.as_json);
}

// ---------------------------------------------------------------- twograph

int cmd_twograph(const std::string& path, std::size_t x, const Globals& g, std::ostream& out) {
  RunReport report("twograph");
  report.input("file", path);
  report.input("x", std::to_string(x));
  auto input = io::read_twograph_file(path);
  if (x < 1 || x > input.n) throw Error(ErrorKind::VertexOutOfRange, "x outside 1.." + std::to_string(input.n));
  const auto t = validate_twograph(input.n, std::move(input.triples));
  report.verdict("two-graph parity", t.has_value());
  if (!t) return report.emit(out, g.as_json);

  const auto regular = is_regular_twograph(*t);
  report.result("regular", regular ? "yes, pair count " + std::to_string(*regular) : "no",
                regular ? json(*regular) : json(nullptr));
  const Graph d = descendant(*t, x - 1);
  report.result("descendant edges", edge_list_text(d), edges_json(d));
  const SignedGraph sg = signed_complete_from_graph(d);
  report.result("signed complete matrix", matrix_text(sg.adjacency()), matrix_json(sg.adjacency()));
  report.spectrum("spectrum", eigenvalues_symmetric(sg.adjacency(), g.tol));
  bool certified = false;
  if (sg.has_edge()) certified = report_two_eig(report, "two-eigenvalue certificate", sg);
  report.verdict("round trip recovers the two-graph", twograph_from_signed_complete(sg) == *t);
  report.verdict("regular iff two eigenvalues", regular.has_value() == certified);
  return report.emit(out, g.as_json);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed graphs with two distinct eigenvalues: constructions, certificates, 2-lifts",
               "sgtool"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--tol", g.tol, "eigenvalue grouping tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized signatures");
  app.add_flag("--certify", g.certify, "append the orthogonality certificate");
  app.add_flag("--json", g.as_json, "structured output");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "construct a signed matrix");
  gen_cmd->add_option("kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"hadamard", "conference", "williamson", "double", "kron", "conference-block"}));
  gen_cmd->add_option("files", gen.files, "matrix files (kron)");
  gen_cmd->add_option("-k", gen.k, "Sylvester exponent");
  gen_cmd->add_option("-q", gen.q, "Paley prime");
  gen_cmd->add_option("--preset", gen.preset, "all-c | two-shifted | four-shifted | nonsymmetric-all-c");
  gen_cmd->add_option("-i,--input", gen.input, "base matrix file");
  gen_cmd->add_option("-o,--output", gen.output, "output file");

  std::string file;
  auto* verify_cmd = app.add_subcommand("verify", "certify a matrix file");
  verify_cmd->add_option("file", file)->required();

  bool graph_input = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "numeric spectrum of a matrix or signed graph");
  spectrum_cmd->add_option("file", file)->required();
  spectrum_cmd->add_flag("--graph", graph_input, "input is in graph format");

  std::string output;
  bool random_signature = false;
  auto* lift_cmd = app.add_subcommand("lift", "2-lift of a signed graph");
  lift_cmd->add_option("file", file)->required();
  lift_cmd->add_option("-o,--output", output, "lifted edge list file");
  lift_cmd->add_flag("--random-signature", random_signature, "replace the signs by seeded random ones");

  std::string mode = "paper-literal";
  auto* ram_cmd = app.add_subcommand("ramanujan", "Ramanujan and good-signature check");
  ram_cmd->add_option("file", file)->required();
  ram_cmd->add_option("--mode", mode, "paper-literal | bipartite-strict");

  std::string family;
  std::optional<std::size_t> order;
  auto* table_cmd = app.add_subcommand("table", "reproduce the Ramanujan 2-lift table");
  table_cmd->add_option("--family", family, "knn | knn-minus-m | nc4-complement");
  table_cmd->add_option("-n", order, "order");

  auto* switch_cmd = app.add_subcommand("switch-classes", "count and enumerate switching classes");
  switch_cmd->add_option("file", file)->required();

  std::size_t x = 1;
  auto* two_cmd = app.add_subcommand("twograph", "validate a two-graph and build its signed complete graph");
  two_cmd->add_option("file", file)->required();
  two_cmd->add_option("-x", x, "vertex for the descendant graph (1-based)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, g, out);
    if (*verify_cmd) return cmd_verify(file, g, out);
    if (*spectrum_cmd) return cmd_spectrum(file, graph_input, g, out);
    if (*lift_cmd) return cmd_lift(file, output, random_signature, g, out);
    if (*ram_cmd) return cmd_ramanujan(file, mode, g, out);
    if (*table_cmd) return cmd_table(family, order, g, out);
    if (*switch_cmd) return cmd_switch_classes(file, g, out);
    if (*two_cmd) return cmd_twograph(file, x, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace sgraph::cli
