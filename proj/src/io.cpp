#include "sgraph/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sgraph/error.hpp"

namespace sgraph::io {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next significant line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty() && tokens.front()[0] != '#') return true;
    }
    return false;
  }

  std::vector<std::string> require(const char* what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) fail(std::string("unexpected end of input, expected ") + what);
    return tokens;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no_) + ": " + why);
  }

  long long integer(const std::string& tok) const {
    std::string_view s = tok;
    if (s.size() > 1 && s.front() == '+') s.remove_prefix(1);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail("'" + tok + "' is not an integer");
    return v;
  }

  std::size_t count(const std::string& tok, bool positive) const {
    const long long v = integer(tok);
    if (v < 0 || (positive && v == 0)) fail("'" + tok + "' must be " + (positive ? "positive" : "non-negative"));
    return static_cast<std::size_t>(v);
  }

  Vertex vertex(const std::string& tok, std::size_t n) const {
    const long long v = integer(tok);
    if (v < 1 || static_cast<std::size_t>(v) > n) fail("vertex " + tok + " outside 1.." + std::to_string(n));
    return static_cast<Vertex>(v - 1);
  }

  void expect_end() {
    std::vector<std::string> tokens;
    if (next(tokens)) fail("unexpected trailing content");
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

template <typename T>
T from_file(const std::string& path, T (*reader)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return reader(in);
}

}  // namespace

SignedMatrix read_matrix(std::istream& in) {
  LineReader r(in);
  const auto header = r.require("header 'rows cols'");
  if (header.size() != 2) r.fail("header must be 'rows cols'");
  const std::size_t rows = r.count(header[0], true);
  const std::size_t cols = r.count(header[1], true);
  std::vector<Trit> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto tokens = r.require("matrix row");
    if (tokens.size() != cols) r.fail("expected " + std::to_string(cols) + " entries");
    for (const auto& tok : tokens) {
      const long long v = r.integer(tok);
      if (v < -1 || v > 1) r.fail("entry " + tok + " not in {-1,0,1}");
      entries.push_back(static_cast<Trit>(v));
    }
  }
  // An optional certificate trailer "alpha = <integer>" as written by gen.
  std::vector<std::string> tokens;
  if (r.next(tokens)) {
    if (tokens.size() != 3 || tokens[0] != "alpha" || tokens[1] != "=") r.fail("unexpected trailing content");
    r.count(tokens[2], true);
    r.expect_end();
  }
  return SignedMatrix(rows, cols, std::move(entries));
}

void write_matrix(std::ostream& out, const SignedMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << static_cast<int>(m(i, j));
    out << '\n';
  }
}

SignedGraph read_signed_graph(std::istream& in) {
  LineReader r(in);
  const auto header = r.require("header 'n m'");
  if (header.size() != 2) r.fail("header must be 'n m'");
  const std::size_t n = r.count(header[0], true);
  const std::size_t m = r.count(header[1], false);
  std::vector<Edge> edges;
  std::vector<int> signs;
  for (std::size_t e = 0; e < m; ++e) {
    const auto tokens = r.require("edge line");
    if (tokens.size() != 2 && tokens.size() != 3) r.fail("edge line must be 'u v [sign]'");
    const Vertex u = r.vertex(tokens[0], n);
    const Vertex v = r.vertex(tokens[1], n);
    int sign = 1;
    if (tokens.size() == 3) {
      const long long s = r.integer(tokens[2]);
      if (s != 1 && s != -1) r.fail("sign must be +1 or -1");
      sign = static_cast<int>(s);
    }
    if (u == v) r.fail("loop at vertex " + tokens[0]);
    edges.emplace_back(u, v);
    signs.push_back(sign);
  }
  r.expect_end();
  SignedMatrix a(n, n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (a(u, v) != 0) throw Error(ErrorKind::ParseError, "repeated edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    a.set(u, v, signs[e]);
    a.set(v, u, signs[e]);
  }
  return SignedGraph(std::move(a));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

void write_signed_graph(std::ostream& out, const SignedGraph& sg) {
  const Graph g = ground(sg);
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << ' ' << (sg.sign(u, v) > 0 ? "+1" : "-1") << '\n';
}

TwoGraphInput read_twograph(std::istream& in) {
  LineReader r(in);
  const auto header = r.require("header 'n t'");
  if (header.size() != 2) r.fail("header must be 'n t'");
  TwoGraphInput t{r.count(header[0], true), {}};
  const std::size_t count = r.count(header[1], false);
  for (std::size_t i = 0; i < count; ++i) {
    const auto tokens = r.require("triple line");
    if (tokens.size() != 3) r.fail("triple line must have three vertices");
    t.triples.push_back({r.vertex(tokens[0], t.n), r.vertex(tokens[1], t.n), r.vertex(tokens[2], t.n)});
  }
  r.expect_end();
  return t;
}

void write_twograph(std::ostream& out, const TwoGraph& t) {
  out << t.order() << ' ' << t.triples().size() << '\n';
  for (const auto& [a, b, c] : t.triples()) out << a + 1 << ' ' << b + 1 << ' ' << c + 1 << '\n';
}

SignedMatrix read_matrix_file(const std::string& path) { return from_file(path, &read_matrix); }
SignedGraph read_signed_graph_file(const std::string& path) { return from_file(path, &read_signed_graph); }
TwoGraphInput read_twograph_file(const std::string& path) { return from_file(path, &read_twograph); }

std::string format_value(double v) {
  if (std::abs(v) < 5e-7) v = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string format_spectrum(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (i) out += ", ";
    out += format_value(s.pairs[i].value) + ": " + std::to_string(s.pairs[i].multiplicity);
  }
  return out + "}";
}

}  // namespace sgraph::io
