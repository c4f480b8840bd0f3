// Acceptance run: one PASS/FAIL line per criterion, details indented below.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sgraph/constructions.hpp"
#include "sgraph/error.hpp"
#include "sgraph/io.hpp"
#include "sgraph/kernels.hpp"
#include "sgraph/lifts.hpp"
#include "sgraph/orthogonal.hpp"
#include "sgraph/spectra.hpp"
#include "sgraph/switching.hpp"
#include "sgraph/twographs.hpp"

using namespace sgraph;

namespace {

constexpr double kTol = 1e-6;

class Log {
 public:
  bool check(bool ok, const std::string& what) {
    lines_.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    all_ &= ok;
    return ok;
  }
  void note(const std::string& what) { lines_.push_back("     " + what); }
  bool passed() const { return all_; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  std::vector<std::string> lines_;
  bool all_ = true;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 means no limit
  std::function<void(Log&)> body;
};

std::string num(double v) { return io::format_value(v); }

bool scalar_is(const IntMatrix& m, std::int64_t alpha) {
  std::int64_t a = 0;
  return m.is_scalar(a) && a == alpha;
}

SignedMatrix rotation() { return SignedMatrix{{0, 1}, {-1, 0}}; }

std::vector<Triple> example_triples() {
  const int t[10][3] = {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                        {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
  std::vector<Triple> out;
  for (const auto& r : t) out.push_back({Vertex(r[0] - 1), Vertex(r[1] - 1), Vertex(r[2] - 1)});
  return out;
}

SignedMatrix example_matrix() {
  return SignedMatrix{{0, 1, 1, 1, 1, 1},   {1, 0, -1, -1, 1, 1}, {1, -1, 0, 1, -1, 1},
                      {1, -1, 1, 0, 1, -1}, {1, 1, -1, 1, 0, -1}, {1, 1, 1, -1, -1, 0}};
}

Spectrum expand(std::initializer_list<std::pair<double, std::size_t>> pairs) {
  std::vector<double> v;
  for (auto [x, m] : pairs) v.insert(v.end(), m, x);
  return Spectrum::from_values(v, kTol);
}

// Records a thrown library error as a failed sub-check.
template <typename F>
void guarded(Log& log, const std::string& what, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    log.check(false, what + ": " + e.what());
  }
}

void criterion1(Log& log) {
  const auto t = validate_twograph(6, example_triples());
  if (!log.check(t.has_value(), "10-triple two-graph validates")) return;
  log.check(is_regular_twograph(*t) == 2u, "regular with pair count 2");
  const Graph d = descendant(*t, 0);
  log.check(d == Graph(6, {{1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}}), "descendant at vertex 1 has edges 23 24 35 46 56");
  const auto sg = signed_complete_from_graph(d);
  log.check(sg.adjacency() == example_matrix(), "signed complete matrix equals the displayed 6x6 matrix");
  log.check(scalar_is(kernels::product(sg.adjacency(), sg.adjacency()), 5), "A^2 = 5I exactly");
  const auto s = eigenvalues_symmetric(sg.adjacency());
  const bool spectrum = s.pairs.size() == 2 && std::abs(s.pairs[0].value - 2.2361) < 1e-4 &&
                        s.pairs[0].multiplicity == 3 && std::abs(s.pairs[1].value + 2.2361) < 1e-4 &&
                        s.pairs[1].multiplicity == 3;
  log.check(spectrum, "spectrum " + io::format_spectrum(s) + " vs +-2.2361^3 within 1e-4");
}

void criterion2(Log& log) {
  bool hadamard = true;
  for (unsigned k = 0; k <= 10; ++k) {
    const auto c = is_orthogonal(sylvester_hadamard(k));
    hadamard &= c && c->alpha == (std::int64_t{1} << k);
  }
  log.check(hadamard, "sylvester_hadamard(k) has alpha = 2^k for k = 0..10");

  bool paley = true;
  for (std::uint64_t q : {5, 13, 17, 29, 37, 41}) {
    const auto c = is_orthogonal(paley_conference(q));
    paley &= c && c->alpha == std::int64_t(q);
  }
  log.check(paley, "paley_conference(q) has alpha = q for q in {5,13,17,29,37,41}");

  const std::vector<SignedMatrix> pool = {sylvester_hadamard(1), sylvester_hadamard(2), paley_conference(5),
                                          SignedMatrix::identity(3), shift_antisymmetric(rotation()).matrix};
  bool kron = true;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const auto r = kronecker_orthogonal(a, b);
      const auto direct = is_orthogonal(r.matrix);
      kron &= direct && direct->alpha == is_orthogonal(a)->alpha * is_orthogonal(b)->alpha &&
              r.certificate.alpha == direct->alpha;
    }
  log.check(kron, "kronecker certificate multiplies (25 pairs)");

  for (std::uint64_t q : {5, 13}) {
    const std::int64_t alpha = std::int64_t(q);
    const auto b = double_symmetric(paley_conference(q));
    const auto direct = is_orthogonal(b.matrix);
    const bool exact = direct && scalar_is(kernels::product(b.matrix, b.matrix), alpha + 2);
    log.check(exact, "double(Co_" + std::to_string(q + 1) + ") gives alpha + 2 = " + std::to_string(alpha + 2) +
                         "; exact B^2 = " + (direct ? std::to_string(direct->alpha) : std::string("non-scalar")) + " I");
  }
  log.note("B = [[C+I, C-I], [C-I, -C-I]] gives B^2 = 2C^2 + 2I = (2 alpha + 2) I; each row of B has");
  log.note("2(alpha + 1) nonzero entries, so no signed B of this form can reach alpha + 2.");

  bool shift = true;
  SignedMatrix c = rotation();
  for (int p = 0; p < 6; ++p) {
    const auto r = shift_antisymmetric(c);
    const auto direct = is_orthogonal(r.matrix);
    shift &= r.certificate.alpha == 2 && direct && direct->alpha == 2;
    c = kronecker(SignedMatrix::identity(2), c);
  }
  log.check(shift, "shift_antisymmetric gives alpha + 1 = 2 on the rotation block and I_2^k (x) it, k = 0..5");
}

void criterion3(Log& log) {
  const auto co6 = paley_conference(5);
  const std::vector<std::pair<WilliamsonPreset, std::int64_t>> presets = {
      {WilliamsonPreset::AllC, 20}, {WilliamsonPreset::TwoShifted, 22}, {WilliamsonPreset::FourShifted, 24}};
  for (auto [p, alpha] : presets) {
    guarded(log, std::string(to_string(p)), [&] {
      const auto h = williamson_preset(co6, p);
      const auto direct = is_orthogonal(h.matrix);
      log.check(direct && direct->alpha == alpha && h.matrix.rows() == 24,
                std::string(to_string(p)) + " with Co_6: order 24, alpha = " + std::to_string(alpha));
    });
  }
  guarded(log, "nonsymmetric-all-c", [&] {
    const auto h = williamson_preset(sylvester_hadamard(1), WilliamsonPreset::NonsymmetricAllC);
    const auto direct = is_orthogonal(h.matrix);
    log.check(direct && direct->alpha == 8 && h.matrix.rows() == 8, "nonsymmetric-all-c with H_2: order 8, alpha = 8");
  });
  const SignedMatrix p{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  const SignedMatrix q{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  bool rejected = false;
  try {
    WilliamsonQuadruple w(p, q, p, p);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::NotCommuting;
  }
  log.check(rejected, "non-commuting quadruple rejected with NotCommuting");
}

void criterion4(Log& log) {
  std::vector<std::pair<std::string, Graph>> corpus = {
      {"P3", Graph::path(3)},
      {"C4", Graph::cycle(4)},
      {"K4", Graph::complete(4)},
      {"K2,3", Graph::complete_bipartite(2, 3)},
      {"2K3", Graph::disjoint_copies(Graph::complete(3), 2)}};
  const Graph pet = Graph::petersen();
  for (std::size_t removed = 1; removed <= 6; ++removed) {
    std::vector<Edge> e(pet.edges().begin() + std::ptrdiff_t(removed), pet.edges().end());
    corpus.emplace_back("Petersen-" + std::to_string(removed), Graph(10, e));
  }
  for (const auto& [name, g] : corpus) {
    const auto classes = enumerate_switching_classes(g);
    const auto formula = count_switching_classes(g);
    log.check(classes.size() == formula, name + ": m=" + std::to_string(g.size()) + " n=" + std::to_string(g.order()) +
                                             " c=" + std::to_string(g.component_count()) + ", enumerated " +
                                             std::to_string(classes.size()) + " = 2^" +
                                             std::to_string(switching_class_exponent(g)));
  }
}

void criterion5(Log& log, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(2, 8);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  std::bernoulli_distribution coin(0.5);
  std::size_t good = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = order(rng);
    const double p = density(rng);
    std::bernoulli_distribution edge(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (edge(rng)) edges.emplace_back(u, v);
    const Graph g(n, edges);
    std::vector<int> signs(g.size());
    for (auto& s : signs) s = coin(rng) ? 1 : -1;
    good += lift_spectrum_check(SignedGraph(g, signs), kTol);
  }
  log.check(good == 50, std::to_string(good) + "/50 random signed graphs (n <= 8, seed " + std::to_string(seed) +
                            "): lift spectrum = spec(|A|) u spec(A^s)");
  for (auto [family, n] : {std::pair{TableFamily::Knn, std::size_t{2}}, std::pair{TableFamily::KnnMinusM, std::size_t{6}},
                           std::pair{TableFamily::NC4Complement, std::size_t{6}}}) {
    const auto cmp = lift_spectrum_compare(table_signature(family, n), kTol);
    log.check(cmp.match, std::string(to_string(family)) + " n=" + std::to_string(n) + ": lift " +
                             io::format_spectrum(cmp.lift));
  }
}

void criterion6(Log& log) {
  for (std::size_t n : {2, 4, 8}) {
    const auto r = table_row(TableFamily::Knn, n, kTol);
    const double s = std::sqrt(double(n));
    const auto want = expand({{double(n), 1}, {s, n}, {0, 2 * n - 2}, {-s, n}, {-double(n), 1}});
    log.check(r.good_signature && spectra_match(r.lift, want, kTol),
              "knn n=" + std::to_string(n) + ": " + io::format_spectrum(r.lift));
  }
  for (std::size_t n : {6, 14}) {
    const auto r = table_row(TableFamily::KnnMinusM, n, kTol);
    const double s = std::sqrt(double(n - 1));
    const double d = double(n - 1);
    const auto want = expand({{d, 1}, {s, n}, {1, n - 1}, {-1, n - 1}, {-s, n}, {-d, 1}});
    log.check(r.good_signature && spectra_match(r.lift, want, kTol),
              "knn-minus-m n=" + std::to_string(n) + ": " + io::format_spectrum(r.lift));
  }
  for (std::size_t n : {6, 14}) {
    const auto r = table_row(TableFamily::NC4Complement, n, kTol);
    log.check(r.good_signature && r.union_match && spectra_match(r.lift, r.computed_union, kTol),
              "nc4-complement n=" + std::to_string(n) + ": " + io::format_spectrum(r.lift));
    log.check(r.discrepancy.has_value() && !r.printed_row_match,
              "nc4-complement n=" + std::to_string(n) + " flags the printed row: " + r.discrepancy.value_or("none"));
  }
}

void criterion7(Log& log) {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto r = k_c4_complement(k, kTol);
    const double top = 2.0 * double(k) - 2.0;
    const auto want = expand({{top, 1}, {2, k - 1}, {0, 2 * k}, {-2, k - 1}, {-top, 1}});
    log.check(r.match && spectra_match(r.computed, want, kTol),
              "k=" + std::to_string(k) + ": " + io::format_spectrum(r.computed));
  }
}

void criterion8(Log& log) {
  std::vector<std::pair<std::string, SignedGraph>> instances;
  instances.emplace_back("example signed K_6", SignedGraph(example_matrix()));
  for (unsigned k = 0; k <= 10; ++k) instances.emplace_back("H_" + std::to_string(1u << k) + "*", star(sylvester_hadamard(k)));
  for (std::uint64_t q : {5, 13, 17, 29, 37, 41})
    instances.emplace_back("Co_" + std::to_string(q + 1) + "*", star(paley_conference(q)));
  const std::vector<std::pair<std::string, SignedMatrix>> factors = {
      {"H_2", sylvester_hadamard(1)}, {"H_4", sylvester_hadamard(2)}, {"Co_6", paley_conference(5)},
      {"I_3", SignedMatrix::identity(3)}, {"R+I", shift_antisymmetric(rotation()).matrix}};
  for (const auto& [na, a] : factors)
    for (const auto& [nb, b] : factors) instances.emplace_back("(" + na + " x " + nb + ")*", star(kronecker(a, b)));
  for (std::uint64_t q : {5, 13})
    instances.emplace_back("double(Co_" + std::to_string(q + 1) + ")*", star(double_symmetric(paley_conference(q)).matrix));
  SignedMatrix c = rotation();
  for (int p = 0; p < 6; ++p) {
    instances.emplace_back("(I (x) R + I)* order " + std::to_string(c.rows()), star(shift_antisymmetric(c).matrix));
    c = kronecker(SignedMatrix::identity(2), c);
  }
  const auto co6 = paley_conference(5);
  for (auto p : {WilliamsonPreset::AllC, WilliamsonPreset::TwoShifted, WilliamsonPreset::FourShifted})
    instances.emplace_back("williamson " + std::string(to_string(p)) + "*", star(williamson_preset(co6, p).matrix));
  instances.emplace_back("williamson nonsymmetric-all-c*",
                         star(williamson_preset(sylvester_hadamard(1), WilliamsonPreset::NonsymmetricAllC).matrix));

  std::size_t ok = 0;
  for (const auto& [name, sg] : instances) {
    const auto cert = certify_two_eigenvalues(sg);
    const auto degree = is_regular(ground(sg));
    const bool pass = cert && degree && std::int64_t(*degree) == degree_from_certificate(*cert) &&
                      degree_from_certificate(*cert) == -cert->b &&
                      std::llround(-cert->lambda * cert->mu) == -cert->b;
    if (pass) {
      ++ok;
    } else {
      log.check(false, name + ": certificate or regularity mismatch");
    }
  }
  log.check(ok == instances.size(), std::to_string(ok) + "/" + std::to_string(instances.size()) +
                                        " certified instances: ground regular with degree -lambda mu = -b");
  log.note("the minimal polynomial is x^2 + a x + b with b = lambda mu, so the degree is -b (b = -5 for K_6)");
}

void criterion9(Log& log) {
  std::size_t agree = 0, regular = 0;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const Graph k5 = Graph::complete(5);
    std::vector<int> signs(10);
    for (std::size_t e = 0; e < 10; ++e) signs[e] = (mask >> e) & 1 ? -1 : 1;
    const SignedGraph sg(k5, signs);
    const bool r = is_regular_twograph(twograph_from_signed_complete(sg)).has_value();
    const bool two = certify_two_eigenvalues(sg).has_value();
    agree += r == two;
    regular += r;
  }
  log.check(agree == 1024, std::to_string(agree) + "/1024 signings of K_5 agree (" + std::to_string(regular) +
                               " regular two-graphs)");
}

void criterion10(Log& log) {
  const auto co6 = paley_conference(5);
  const auto b = double_symmetric(co6).matrix;
  const auto direct = is_orthogonal(b);
  const std::int64_t alpha = direct ? direct->alpha : 0;
  log.check(b.rows() == 12, "double(Co_6) has order n = 12");
  log.check(alpha == 7, "double(Co_6) has alpha = 7 (exact: " + std::to_string(alpha) + ")");
  log.check(b.has_zero_diagonal(), "double(Co_6) has zero diagonal (needed for a ground graph)");
  const double lhs = 0.25 * 9.0 + 4 + 2;
  log.check(lhs <= 12.0, "with alpha = 7: k = 4 and (k-1)^2/4 + k + 2 = " + num(lhs) + " <= 12");
  const double l1 = eigenvalues_symmetric(b).largest();
  log.check(std::abs(l1 - std::sqrt(7.0)) <= kTol, "lambda_1(C) = sqrt 7 (computed " + num(l1) + ")");
  log.check(l1 <= 2 * std::sqrt(6.0) + kTol, "lambda_1(C) <= 2 sqrt 6 = " + num(2 * std::sqrt(6.0)));
  guarded(log, "ground-graph conditions", [&] {
    const auto r = ground_ramanujan_from_symmetric(b, kTol);
    log.check(r.ground.degree == 7 && r.ground.verdict && r.complement_lemma.inequality_holds,
              "7-regular ground graph and its complement verify");
  });
  guarded(log, "is_good_signature", [&] { log.check(is_good_signature(SignedGraph(b)), "is_good_signature"); });
  log.note("double(Co_6) is [[C+I, C-I], [C-I, -C-I]]: diagonal +-1, B^2 = 12 I, so it is neither an");
  log.note("adjacency matrix nor alpha = 7. Same hypotheses on valid inputs:");
  for (std::uint64_t q : {5, 13, 17}) {
    const auto r = ground_ramanujan_from_symmetric(paley_conference(q), kTol);
    log.note("Co_" + std::to_string(q + 1) + ": alpha " + std::to_string(r.alpha) + ", lambda_1 " + num(r.lambda1) +
             " <= " + num(r.signature_bound) + ", ground " + std::to_string(r.ground.degree) + "-regular lambda_2 " +
             num(r.ground.lambda2) + " <= " + num(r.ground.bound) + ": " + (r.verdict ? "verified" : "not verified"));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::uint64_t seed = 20170923;
  bool verbose = true;
  app.add_option("--seed", seed, "seed for the randomized criteria");
  app.add_flag("!--quiet", verbose, "only the per-criterion lines");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "worked two-graph example end to end", 1.0, criterion1},
      {2, "orthogonality certificates", 5.0, criterion2},
      {3, "Williamson constructions", 1.0, criterion3},
      {4, "switching classes vs 2^(m-n+c)", 30.0, criterion4},
      {5, "lift spectrum = spec(|A|) u spec(A^s)", 10.0, [seed](Log& l) { criterion5(l, seed); }},
      {6, "Ramanujan 2-lift table", 10.0, criterion6},
      {7, "bipartite complement of kC4", 0, criterion7},
      {8, "two eigenvalues force regularity", 0, criterion8},
      {9, "regular two-graph iff two eigenvalues on K_5", 10.0, criterion9},
      {10, "ground graph of double(Co_6)", 0, criterion10},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Log log;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(log);
    } catch (const std::exception& e) {
      log.check(false, std::string("unexpected error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0) log.check(secs < c.limit_s, "runtime " + num(secs) + " s < " + num(c.limit_s) + " s");
    const bool pass = log.passed();
    failed += !pass;
    std::printf("criterion %2d: %s  %s (%.3f s)\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(), secs);
    if (verbose)
      for (const auto& line : log.lines()) std::printf("    %s\n", line.c_str());
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
