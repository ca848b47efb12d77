// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tricert/certificate.hpp"
#include "tricert/oracle.hpp"
#include "tricert/sequencer.hpp"
#include "tricert/sparsifier.hpp"
#include "tricert/transforms.hpp"
#include "tricert/verifier.hpp"

using namespace tricert;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned sizes and tolerances.
constexpr double kOracleBudgetSec = 120.0;
constexpr std::size_t kRandomPerCell = 667;  // 5 sizes x 3 densities x 667 = 10005
constexpr std::size_t kMinMutants = 1000;
constexpr std::size_t kRoundTrips = 500;
constexpr std::size_t kMaxRoundTripN = 50;
constexpr std::size_t kNonBasic = 500;
constexpr std::size_t kContractionGraphs = 200;
constexpr std::size_t kMaxContractionN = 12;
constexpr double kQuadraticRatio = 5.0;
constexpr double kLinearRatio = 3.0;
constexpr double kSingleRunSec = 10.0;
constexpr double kMinTimedSec = 0.05;  // repeat short calls until this much time is spent
constexpr int kTimingReps = 5;         // median over this many measurements
constexpr std::size_t kSparsifyRandom = 1000;
constexpr std::size_t kMaxSparsifyN = 12;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Median seconds per call; short calls are batched.
double time_call(const std::function<void()>& f, double* longest = nullptr) {
  std::vector<double> samples;
  for (int r = 0; r < kTimingReps; ++r) {
    std::size_t calls = 0;
    auto t0 = Clock::now();
    double spent = 0;
    do {
      auto t1 = Clock::now();
      f();
      double one = seconds_since(t1);
      if (longest) *longest = std::max(*longest, one);
      ++calls;
      spent = seconds_since(t0);
    } while (spent < kMinTimedSec);
    samples.push_back(spent / static_cast<double>(calls));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

struct Corpus {
  std::size_t certified = 0, refuted = 0, cert_ok = 0, wit_ok = 0;
  std::vector<std::pair<MultiGraph, PathRepresentation>> honest;
};

void oracle_agreement(Corpus& c) {
  auto t0 = Clock::now();
  std::size_t total = 0, agree = 0;
  auto one = [&](const MultiGraph& g) {
    ++total;
    auto r = certify(g);
    if (r.certified() == is_3_connected_brute(g)) ++agree;
    if (r.certified()) {
      ++c.certified;
      if (verify_certificate(g, r.certificate()).accepted) ++c.cert_ok;
      if (c.honest.size() < 400 && !r.certificate().steps.empty()) c.honest.emplace_back(g, r.certificate());
    } else {
      ++c.refuted;
      if (verify_witness(g, r.witness())) ++c.wit_ok;
    }
  };
  for (std::uint64_t mask = 0; mask < 1024; ++mask) one(graph_from_mask(5, mask));
  std::uint64_t seed = 1;
  for (std::size_t n = 6; n <= 10; ++n)
    for (double p : {0.3, 0.5, 0.8})
      for (std::size_t k = 0; k < kRandomPerCell; ++k) one(random_graph(n, p, seed++));
  double sec = seconds_since(t0);
  report(1, agree == total && sec < kOracleBudgetSec,
         std::to_string(agree) + "/" + std::to_string(total) + " verdicts agree, " + fmt("%.1f s (limit %.0f s)", sec, kOracleBudgetSec));
}

void soundness(Corpus& c) {
  // add larger generated graphs to the corpus from criterion 1
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = gen_3_connected(20 + seed % 200, seed);
    auto r = certify(g);
    ++c.certified;
    if (r.certified() && verify_certificate(g, r.certificate()).accepted) ++c.cert_ok;
    auto h = g;
    h.remove_edge(static_cast<EdgeId>(seed % h.edge_slots()));
    auto rh = certify(h);
    if (rh.certified()) {
      ++c.certified;
      if (verify_certificate(h, rh.certificate()).accepted) ++c.cert_ok;
    } else {
      ++c.refuted;
      if (verify_witness(h, rh.witness())) ++c.wit_ok;
    }
  }
  report(2, c.cert_ok == c.certified && c.wit_ok == c.refuted,
         std::to_string(c.cert_ok) + "/" + std::to_string(c.certified) + " certificates and " + std::to_string(c.wit_ok) +
             "/" + std::to_string(c.refuted) + " witnesses accepted");
}

void mutation_killing(Corpus& c) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = gen_3_connected(8 + seed % 60, seed);
    c.honest.emplace_back(g, certify(g).certificate());
  }
  std::size_t applied = 0, rejected = 0;
  std::array<std::size_t, 5> per_kind{};
  std::uint64_t seed = 0;
  while (applied < kMinMutants && seed < 20 * kMinMutants) {
    const auto& [g, pr] = c.honest[seed % c.honest.size()];
    auto m = mutate_certificate(g, pr, seed++);
    if (!m.applied) continue;
    ++applied;
    ++per_kind[static_cast<std::size_t>(m.kind)];
    if (!verify_certificate(g, m.pr).accepted) ++rejected;
  }
  std::string kinds;
  for (std::size_t k = 0; k < 5; ++k)
    kinds += std::string(k ? ", " : "") + to_string(static_cast<MutationKind>(k)) + " " + std::to_string(per_kind[k]);
  report(3, applied >= kMinMutants && rejected == applied,
         std::to_string(rejected) + "/" + std::to_string(applied) + " mutants rejected (" + kinds + ")");
}

void round_trip() {
  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < kRoundTrips; ++seed) {
    auto g = gen_3_connected(5 + seed % (kMaxRoundTripN - 4), seed);
    auto pr = certify(g).certificate();
    auto er = path_to_edge(g, pr);
    auto pr2 = edge_to_path(er);
    auto er2 = path_to_edge(replay_edge_rep(er), pr2);
    if (write_certificate(g, pr2) == write_certificate(g, pr) && write_edge_rep(er2) == write_edge_rep(er)) ++ok;
  }
  report(4, ok == kRoundTrips, std::to_string(ok) + "/" + std::to_string(kRoundTrips) + " certificates byte-identical both ways");
}

void basic_transform() {
  std::size_t seen = 0, basic_ok = 0, back_ok = 0;
  for (std::uint64_t seed = 0; seen < kNonBasic && seed < 20 * kNonBasic; ++seed) {
    auto g = seed % 2 ? gen_3_connected(6 + seed % 45, seed, {8, 1, 1}) : random_graph(10 + seed % 20, 0.5, seed);
    auto r = certify(g);
    if (!r.certified() || verify_certificate(g, r.certificate(), true).accepted) continue;
    ++seen;
    auto b = to_basic(simplify(g).first, r.certificate());
    if (verify_certificate(g, b, true).accepted) ++basic_ok;
    if (verify_certificate(g, from_basic(b)).accepted) ++back_ok;
  }
  auto cx = parse_graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n5 2\n5 3\n");
  auto lk = edge_lookup(cx);
  std::vector<EdgeId> k4;
  for (auto [a, b] : std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
    k4.push_back(lk.at(pair_key(a, b)));
  auto r = certify(cx, {.s0 = k4});
  bool one_expand = false;
  if (r.certified()) {
    auto b = to_basic(cx, r.certificate());
    if (b.steps.size() == 1)
      if (const auto* x = std::get_if<ExpandRecord>(&b.steps[0])) one_expand = cx.degree(x->center) == 3;
  }
  report(5, seen == kNonBasic && basic_ok == seen && back_ok == seen && one_expand,
         std::to_string(seen) + " non-basic certificates, " + std::to_string(basic_ok) + " basic outputs accepted, " +
             std::to_string(back_ok) + " round trips accepted, counterexample " +
             (one_expand ? "gives one expand of degree 3" : "does not give one expand"));
}

void contractions() {
  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < kContractionGraphs; ++seed) {
    auto g = gen_3_connected(5 + seed % (kMaxContractionN - 4), seed, {static_cast<unsigned>(seed % 3), 1, 1});
    auto cs = to_contractions(path_to_edge(g, certify(g).certificate()));
    bool good = cs.size() == g.node_count() - 4;
    MultiGraph h = g;
    for (auto [u, v] : cs) {
      if (!good) break;
      good = h.neighbors(u).size() >= 3 && h.neighbors(v).size() >= 3;
      h = apply_contractions(h, {{u, v}});
      good = good && is_3_connected_brute(h);
    }
    if (good && h.node_count() == 4 && h.edge_count() == 6) ++ok;
  }
  report(6, ok == kContractionGraphs,
         std::to_string(ok) + "/" + std::to_string(kContractionGraphs) + " sequences of length n-4 through 3-connected graphs");
}

void scaling() {
  const std::size_t sizes[] = {500, 1000, 2000};
  std::vector<MultiGraph> gs;
  std::vector<PathRepresentation> prs;
  std::vector<EdgeRepresentation> ers;
  double longest = 0;
  double tc[3], tv[3], tpe[3], tep[3];
  for (int i = 0; i < 3; ++i) {
    gs.push_back(gen_3_connected(sizes[i], 1000 + static_cast<std::uint64_t>(i)));
    prs.push_back(certify(gs[i]).certificate());
    ers.push_back(path_to_edge(gs[i], prs[i]));
  }
  for (int i = 0; i < 3; ++i) {
    const auto& g = gs[static_cast<std::size_t>(i)];
    const auto& pr = prs[static_cast<std::size_t>(i)];
    const auto& er = ers[static_cast<std::size_t>(i)];
    tc[i] = time_call([&] { (void)certify(g); }, &longest);
    tv[i] = time_call([&] { (void)verify_certificate(g, pr); }, &longest);
    tpe[i] = time_call([&] { (void)path_to_edge(g, pr); }, &longest);
    tep[i] = time_call([&] { (void)edge_to_path(er); }, &longest);
  }
  auto worst = [](const double* t) { return std::max(t[1] / t[0], t[2] / t[1]); };
  double rc = worst(tc), rv = worst(tv), rpe = worst(tpe), rep = worst(tep);
  bool ok = rc <= kQuadraticRatio && rv <= kLinearRatio && rpe <= kLinearRatio && rep <= kLinearRatio && longest < kSingleRunSec;
  report(7, ok,
         fmt("certify ratio %.2f (limit %.0f), ", rc, kQuadraticRatio) +
             fmt("verify %.2f, path->edge %.2f, ", rv, rpe) + fmt("edge->path %.2f (limit %.0f), ", rep, kLinearRatio) +
             fmt("slowest run %.3f s, certify n=2000 %.1f ms", longest, tc[2] * 1e3));
}

void sparsifier() {
  std::size_t total = 0, bound = 0, agree = 0;
  auto one = [&](const MultiGraph& g) {
    ++total;
    auto gs = simplify(g).first;
    auto [h, d] = sparsify3(gs);
    std::size_t n = gs.node_count();
    if (h.edge_count() <= (n == 0 ? 0 : 3 * (n - 1))) ++bound;
    if (is_3_connected_brute(h) == is_3_connected_brute(gs)) ++agree;
  };
  for (std::uint64_t mask = 0; mask < 1024; ++mask) one(graph_from_mask(5, mask));
  for (std::uint64_t seed = 0; seed < kSparsifyRandom; ++seed)
    one(random_graph(4 + seed % (kMaxSparsifyN - 3), 0.3 + 0.6 * static_cast<double>(seed % 4) / 3.0, 7000 + seed));
  report(8, bound == total && agree == total,
         std::to_string(bound) + "/" + std::to_string(total) + " within 3n-3, " + std::to_string(agree) + "/" +
             std::to_string(total) + " agree with the oracle");
}

void fixed_instances() {
  // a..h as 1..8
  auto g = parse_graph("1 2\n2 3\n1 5\n5 6\n4 7\n7 6\n1 4\n3 6\n3 4\n5 8\n8 7\n");
  std::vector<char> all(g.edge_slots(), 1);
  std::vector<std::vector<Label>> got;
  for (const auto& l : compute_links(g, all)) {
    std::vector<Label> seq;
    for (NodeId v : l.nodes) seq.push_back(g.label(v));
    if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
    got.push_back(seq);
  }
  std::sort(got.begin(), got.end());
  const std::vector<std::vector<Label>> want{{1, 2, 3}, {1, 4}, {1, 5}, {3, 4}, {3, 6}, {4, 7}, {5, 6}, {5, 8, 7}, {6, 7}};
  bool links_ok = got == want;

  auto cx = parse_graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n5 2\n5 3\n");
  std::vector<EdgeId> k4{0, 1, 2, 3, 4, 5};
  auto r = certify(cx, {.s0 = k4});
  bool nonbasic = r.certified() && verify_certificate(cx, r.certificate()).accepted &&
                  !verify_certificate(cx, r.certificate(), true).accepted;
  report(9, links_ok && nonbasic,
         std::to_string(got.size()) + " links " + (links_ok ? "as listed" : "differ") +
             ", counterexample " + (nonbasic ? "certified with a non-basic step" : "not certified non-basically"));
}

}  // namespace

int main() {
  Corpus c;
  oracle_agreement(c);
  soundness(c);
  mutation_killing(c);
  round_trip();
  basic_transform();
  contractions();
  scaling();
  sparsifier();
  fixed_instances();
  return failures == 0 ? 0 : 1;
}
