// tricert command line: check, certify, verify, transform, gen, oracle, dot.
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "tricert/certificate.hpp"
#include "tricert/dot.hpp"
#include "tricert/k4_finder.hpp"
#include "tricert/oracle.hpp"
#include "tricert/sequencer.hpp"
#include "tricert/transforms.hpp"
#include "tricert/verifier.hpp"

using namespace tricert;

namespace {

enum Exit { kOk = 0, kNo = 1, kError = 2 };

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

MultiGraph load_graph(const std::string& path) {
  auto text = slurp(path);
  return parse_graph(text, detect_format(text));
}

bool starts_with_word(std::string_view text, std::string_view word) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string_view::npos && text.substr(p, word.size()) == word;
}

// "u v" label pairs, resolved to the lowest edge id joining them.
std::vector<EdgeId> load_s0(const MultiGraph& g, const std::string& path) {
  auto pairs = parse_graph(slurp(path));
  auto labels = label_lookup(g);
  auto lookup = edge_lookup(g);
  std::vector<EdgeId> out;
  for (EdgeId e : pairs.live_edges()) {
    auto u = labels.find(pairs.label(pairs.ends(e).u));
    auto v = labels.find(pairs.label(pairs.ends(e).v));
    if (u == labels.end() || v == labels.end()) throw Error("S0 edge uses a node missing from the graph");
    auto it = lookup.find(pair_key(u->second, v->second));
    if (it == lookup.end()) throw Error("S0 edge is not an edge of the graph");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OpMix parse_mix(const std::string& s) {
  OpMix mix;
  unsigned* dst[3] = {&mix.a, &mix.b, &mix.c};
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    auto end = s.find(':', pos);
    if ((k < 2) != (end != std::string::npos)) throw CLI::ValidationError("--mix", "expected a:b:c");
    auto part = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), *dst[k]);
    if (ec != std::errc() || p != part.data() + part.size()) throw CLI::ValidationError("--mix", "expected a:b:c");
    pos = end + 1;
  }
  if (mix.a + mix.b + mix.c == 0) throw CLI::ValidationError("--mix", "weights are all zero");
  return mix;
}

struct Options {
  std::string graph, cert, out, s0, to, mix = "1:1:1";
  bool basic = false, edge_rep = false, no_sparsify = false;
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::optional<std::size_t> stage;
};

int run_check(const Options& o) {
  auto g = load_graph(o.graph);
  auto r = certify(g);
  if (r.certified()) {
    std::cerr << "3-connected\n";
    return kOk;
  }
  std::cout << format_witness(g, r.witness());
  return kNo;
}

int run_certify(const Options& o) {
  auto g = load_graph(o.graph);
  CertifyOptions co;
  co.basic = o.basic;
  co.sparsify = !o.no_sparsify;
  if (!o.s0.empty()) {
    co.s0 = load_s0(g, o.s0);
    if (!is_k4_subdivision(simplify(g).first, *co.s0)) throw Error("--s0 must be a subdivision of K4");
  }
  auto r = certify(g, co);
  if (!r.simplify_report.empty())
    std::cerr << "simplified: " << r.simplify_report.removed_self_loops << " self-loops, "
              << r.simplify_report.merged_parallel_classes.size() << " parallel classes\n";
  if (!r.certified()) {
    emit(o.out, format_witness(g, r.witness()));
    return kNo;
  }
  if (o.edge_rep) emit(o.out, write_edge_rep(path_to_edge(simplify(g).first, r.certificate())));
  else emit(o.out, write_certificate(g, r.certificate()));
  return kOk;
}

int run_verify(const Options& o) {
  auto g = load_graph(o.graph);
  auto text = slurp(o.cert);
  if (starts_with_word(text, "WITNESS")) {
    bool ok = verify_witness(g, parse_witness(g, text));
    std::cout << (ok ? "ACCEPT\n" : "REJECT witness does not hold\n");
    return ok ? kOk : kNo;
  }
  auto file = read_certificate(g, text);
  auto v = verify_certificate(g, file.pr, o.basic);
  if (v.accepted) {
    std::cout << "ACCEPT\n";
    return kOk;
  }
  std::cout << "REJECT " << v.reason;
  if (v.step) std::cout << " (step " << *v.step << ")";
  std::cout << "\n";
  return kNo;
}

int run_transform(const Options& o) {
  auto text = slurp(o.cert);
  const std::string& to = o.to;
  if (starts_with_word(text, "edgerep")) {
    std::optional<MultiGraph> host;
    if (!o.graph.empty()) host = simplify(load_graph(o.graph)).first;
    auto er = read_edge_rep(text, host ? &*host : nullptr);
    auto g = replay_edge_rep(er);
    if (to == "edge") emit(o.out, write_edge_rep(er));
    else if (to == "contractions") emit(o.out, write_contractions(g, to_contractions(er)));
    else if (to == "path" || to == "nonbasic") emit(o.out, write_certificate(g, edge_to_path(er)));
    else emit(o.out, write_certificate(g, to_basic(g, edge_to_path(er))));
    return kOk;
  }
  auto g_raw = o.graph.empty() ? graph_from_certificate(text) : load_graph(o.graph);
  auto g = simplify(g_raw).first;
  auto pr = read_certificate(g_raw, text).pr;
  if (!verify_certificate(g_raw, pr)) throw TransformError("certificate does not verify");
  if (to == "path") emit(o.out, write_certificate(g_raw, pr));
  else if (to == "basic") {
    auto plain = from_basic(pr);
    emit(o.out, write_certificate(g_raw, to_basic(g, plain)));
  } else if (to == "nonbasic") emit(o.out, write_certificate(g_raw, from_basic(pr)));
  else if (to == "edge") emit(o.out, write_edge_rep(path_to_edge(g, pr)));
  else emit(o.out, write_contractions(g, to_contractions(path_to_edge(g, pr))));
  return kOk;
}

int run_gen(const Options& o) {
  emit(o.out, serialize_edge_list(gen_3_connected(o.n, o.seed, parse_mix(o.mix))));
  return kOk;
}

int run_oracle(const Options& o) {
  bool yes = is_3_connected_brute(load_graph(o.graph));
  std::cout << (yes ? "3-connected\n" : "not 3-connected\n");
  return yes ? kOk : kNo;
}

int run_dot(const Options& o) {
  auto g = load_graph(o.graph);
  auto pr = read_certificate(g, slurp(o.cert)).pr;
  if (!verify_certificate(g, pr)) throw Error("certificate does not verify");
  emit(o.out, stage_dot(g, pr, o.stage.value_or(pr.steps.size())));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certifying 3-connectivity toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "exit 0 if 3-connected, else print a witness and exit 1");
  check->add_option("graph", o.graph, "graph file (edge list or DIMACS, - for stdin)")->required();

  auto* cert = app.add_subcommand("certify", "print a certificate or a witness");
  cert->add_option("graph", o.graph)->required();
  cert->add_option("-o,--output", o.out);
  cert->add_flag("--basic", o.basic, "rewrite into a basic sequence with expand records");
  cert->add_flag("--edge-rep", o.edge_rep, "print the edge representation instead");
  cert->add_flag("--no-sparsify", o.no_sparsify);
  cert->add_option("--s0", o.s0, "start subdivision as \"u v\" lines");

  auto* ver = app.add_subcommand("verify", "check a certificate or witness (exit 0 accept, 1 reject)");
  ver->add_option("graph", o.graph)->required();
  ver->add_option("cert", o.cert, "certificate or witness file, - for stdin")->required();
  ver->add_flag("--basic", o.basic);

  auto* tr = app.add_subcommand("transform", "convert between representations");
  tr->add_option("cert", o.cert)->required();
  tr->add_option("--to", o.to)->required()->check(CLI::IsMember({"basic", "nonbasic", "edge", "path", "contractions"}));
  tr->add_option("-g,--graph", o.graph, "graph the certificate refers to");
  tr->add_option("-o,--output", o.out);

  auto* gen = app.add_subcommand("gen", "random 3-connected graph");
  gen->add_option("--n", o.n)->check(CLI::Range(std::size_t{4}, std::size_t{1} << 24));
  gen->add_option("--seed", o.seed);
  gen->add_option("--mix", o.mix, "weights a:b:c of the three operations");
  gen->add_option("-o,--output", o.out);

  auto* orc = app.add_subcommand("oracle", "brute-force verdict");
  orc->add_option("graph", o.graph)->required();

  auto* dot = app.add_subcommand("dot", "DOT drawing of one stage of a certificate");
  dot->add_option("graph", o.graph)->required();
  dot->add_option("cert", o.cert)->required();
  dot->add_option("--stage", o.stage);
  dot->add_option("-o,--output", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kError;
  }

  try {
    if (*check) return run_check(o);
    if (*cert) return run_certify(o);
    if (*ver) return run_verify(o);
    if (*tr) return run_transform(o);
    if (*gen) return run_gen(o);
    if (*orc) return run_oracle(o);
    if (*dot) return run_dot(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
