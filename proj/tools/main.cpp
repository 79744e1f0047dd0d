// Command-line front end: solvers, reductions, kernels, generators, the
// verification suites and a serial-vs-parallel benchmark.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "happy/cluster_fpt.hpp"
#include "happy/gadgets.hpp"
#include "happy/io.hpp"
#include "happy/kernel.hpp"
#include "happy/multiway.hpp"
#include "happy/oracles.hpp"
#include "happy/verify.hpp"

using namespace happy;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int verdict(bool yes, long long opt) {
  std::cout << "VERDICT " << (yes ? "yes" : "no") << " OPT " << opt << "\n";
  return yes ? kExitYes : kExitNo;
}

void dump_witness(const std::string& path, const Coloring& coloring) {
  std::ostringstream out;
  for (Vertex v = 1; v <= coloring.size(); ++v)
    out << v << ' ' << coloring.color(v) << '\n';
  write_file(path, out.str());
}

void dump_vertex_set(const std::string& path, const std::set<Vertex>& cut) {
  std::ostringstream out;
  for (Vertex v : cut) out << v << '\n';
  write_file(path, out.str());
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

std::set<Vertex> parse_id_list(const std::string& csv) {
  std::set<Vertex> ids;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    ids.insert(std::stoi(item));
  }
  return ids;
}

// Best of two timed runs, after one untimed warmup.
double run_ms(const std::function<void()>& fn) {
  fn();
  double best = 0;
  for (int rep = 0; rep < 2; ++rep) {
    auto start = std::chrono::steady_clock::now();
    fn();
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (rep == 0 || ms < best) best = ms;
  }
  return best;
}

struct Options {
  std::string file, expr_file, out, witness, terminals, mode, variant;
  long long k = 0;
  std::string algo = "brute";
  unsigned long long budget = 10'000'000ULL;
  unsigned seed = 1;
  int count = 100;
  bool serial = false;
  // generator parameters
  int gk = 2, gq = 2, gx = 0, gnb = 2, gper = 2;
  double gprob = 0.5;
};

int run_solve_mhv(const Options& opt) {
  ColoredGraph g = parse_happy(read_file(opt.file));
  long long optimum;
  std::optional<Coloring> witness;
  if (opt.algo == "cluster-fpt") {
    auto r = solve_mhv_cluster(g, std::nullopt, !opt.serial);
    optimum = r.optimum;
    witness = r.witness;
  } else {
    OracleOptions oo{opt.budget, !opt.serial};
    auto r = brute_mhv(g, oo);
    optimum = r.optimum;
    witness = r.witness;
  }
  if (!opt.witness.empty()) dump_witness(opt.witness, *witness);
  return verdict(optimum >= opt.k, optimum);
}

int run_solve_mhe(const Options& opt) {
  ColoredGraph g = parse_happy(read_file(opt.file));
  auto r = brute_mhe(g, {opt.budget, !opt.serial});
  if (!opt.witness.empty()) dump_witness(opt.witness, r.witness);
  return verdict(r.optimum >= opt.k, r.optimum);
}

int run_solve_gmc(const Options& opt) {
  GmcInstance inst = parse_gmc(read_file(opt.file));
  auto r = brute_gmc(inst, {opt.budget, !opt.serial});
  if (!opt.witness.empty()) dump_vertex_set(opt.witness, r.witness);
  return verdict(r.min_cut <= opt.k, r.min_cut);
}

int run_solve_nmc(const Options& opt) {
  WExpression expr = parse_wexpr(read_file(opt.expr_file));
  auto r = solve_nmc_cw(expr, parse_id_list(opt.terminals), opt.k);
  // -1 marks an unseparable instance (adjacent terminals).
  return verdict(r.yes, r.min_cut.value_or(-1));
}

int run_to_gmc(const Options& opt) {
  ColoredGraph g = parse_happy(read_file(opt.file));
  auto red = mhv_to_gmc(g, opt.k);
  if (!red) {
    std::cout << "VERDICT no OPT 0\n";  // k exceeds the potentially happy set
    return kExitNo;
  }
  std::ostringstream out;
  out << "# budget " << red->instance.budget << "\n"
      << serialize_gmc(red->instance);
  emit(opt.out, out.str());
  return kExitYes;
}

int run_kernelize(const Options& opt, const std::string& trace_path) {
  ColoredGraph g = parse_happy(read_file(opt.file));
  std::ostringstream out;
  if (opt.mode == "linear") {
    auto r = linear_kernel(g, opt.k, clique_modulator_2approx(g.graph()));
    out << "# k' = " << r.k << "\n" << serialize_happy(r.graph);
  } else if (opt.mode == "cubic") {
    auto r = cubic_kernel(g, opt.k);
    out << "# k' = " << r.k << "\n" << serialize_happy(r.graph);
    if (!trace_path.empty()) write_file(trace_path, serialize_trace(r.trace));
  } else if (opt.mode == "gmc-compress") {
    auto r = gmc_compress_to_mhv(g, opt.k);
    out << "# k' = " << r.k << "\n" << serialize_happy(r.graph);
  } else {
    throw CLI::ValidationError("--mode must be linear|cubic|gmc-compress");
  }
  emit(opt.out, out.str());
  return kExitYes;
}

int run_gen(const std::string& kind, const Options& opt) {
  std::ostringstream out;
  if (kind == "random-rmis") {
    out << serialize_rmis(gen_random_rmis(opt.gk, opt.gq, opt.gx, opt.seed));
  } else if (kind == "random-crbds") {
    out << serialize_crbds(
        gen_random_crbds(opt.gk, opt.gper, opt.gnb, opt.gprob, opt.seed));
  } else if (kind == "rmis-mhv" || kind == "rmis-mhe") {
    RmisInstance src = parse_rmis(read_file(opt.file));
    GadgetInstance gi =
        kind == "rmis-mhv"
            ? gen_rmis_to_mhv(src)
            : gen_rmis_to_mhe(src, opt.variant == "triangle"
                                       ? MheVariant::kTriangle
                                       : MheVariant::kPath);
    out << "# k' = " << gi.k_prime << "\n" << serialize_happy(gi.graph);
  } else if (kind == "crbds-mhv" || kind == "crbds-mhe") {
    CrbdsInstance src = parse_crbds(read_file(opt.file));
    GadgetInstance gi =
        kind == "crbds-mhv"
            ? gen_crbds_to_mhv(src)
            : gen_crbds_to_mhe(src, opt.variant == "cluster"
                                        ? CrbdsMheVariant::kCluster
                                        : CrbdsMheVariant::kStar);
    out << "# k' = " << gi.k_prime << "\n" << serialize_happy(gi.graph);
  } else {
    throw CLI::ValidationError("unknown generator kind " + kind);
  }
  emit(opt.out, out.str());
  return kExitYes;
}

int run_verify(const std::string& suite, const Options& opt) {
  std::vector<VerifyResult> results;
  auto want = [&](const char* name) {
    return suite == name || suite == "all";
  };
  if (want("cluster-fpt"))
    results.push_back(verify_cluster_fpt(opt.count, opt.seed));
  if (want("gmc"))
    results.push_back(verify_gmc_correspondence(opt.count, opt.seed));
  if (want("kernels")) results.push_back(verify_kernels(opt.count, opt.seed));
  if (want("nmc-cw")) results.push_back(verify_nmc_cw(opt.count, opt.seed));
  if (want("gadgets")) results.push_back(verify_gadgets());
  if (want("modulators"))
    results.push_back(verify_modulators(opt.count, opt.seed));
  if (want("io")) results.push_back(verify_io_roundtrip(opt.count, opt.seed));
  if (results.empty())
    throw CLI::ValidationError("unknown suite '" + suite + "'");

  bool pass = true;
  for (const auto& r : results) {
    std::cout << "SUITE " << r.suite << ' ' << (r.pass ? "PASS" : "FAIL")
              << " (" << r.cases << " cases)\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    pass = pass && r.pass;
  }
  return pass ? kExitYes : kExitNo;
}

// Ring plus skip-chords: connected, fixed size, a few precolored vertices.
ColoredGraph bench_ring(int n, int ell) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) {
    edges.push_back(make_edge(v, v % n + 1));
    if (v + 3 <= n) edges.push_back(make_edge(v, v + 3));
  }
  return ColoredGraph(Graph(n, std::move(edges)), ell, {{1, 1}, {n / 2, 2}});
}

// d hub vertices over a row of triangles; deleting the hubs leaves a
// cluster graph, so the hubs are a valid modulator.
ColoredGraph bench_hubs(int triangles, int hubs) {
  std::vector<Edge> edges;
  const int base = 3 * triangles;
  for (int t = 0; t < triangles; ++t) {
    Vertex a = 3 * t + 1;
    edges.push_back({a, a + 1});
    edges.push_back({a, a + 2});
    edges.push_back({a + 1, a + 2});
  }
  for (int h = 0; h < hubs; ++h) {
    Vertex hub = base + h + 1;
    int first = (2 * h) % base;
    edges.push_back(make_edge(hub, first + 1));
    edges.push_back(make_edge(hub, (first + base / 2) % base + 1));
  }
  return ColoredGraph(Graph(base + hubs, std::move(edges)), 3,
                      {{1, 1}, {4, 2}});
}

int run_bench() {
  std::cout << "kernel        instance                 serial    parallel  speedup\n";
  auto row = [](const std::string& name, const std::string& inst, double s,
                double p) {
    std::printf("%-13s %-22s %7.0fms %8.0fms %8.2fx\n", name.c_str(),
                inst.c_str(), s, p, s / p);
  };

  {
    ColoredGraph g = bench_ring(17, 3);  // 3^15 extensions
    double serial = run_ms([&] { brute_mhv(g, {1ULL << 40, false}); });
    double parallel = run_ms([&] { brute_mhv(g, {1ULL << 40, true}); });
    row("brute-mhv", "ring n=17 ell=3", serial, parallel);
  }
  {
    ColoredGraph g = bench_ring(17, 3);
    double serial = run_ms([&] { brute_mhe(g, {1ULL << 40, false}); });
    double parallel = run_ms([&] { brute_mhe(g, {1ULL << 40, true}); });
    row("brute-mhe", "ring n=17 ell=3", serial, parallel);
  }
  {
    ColoredGraph g = bench_hubs(5, 7);
    std::set<Vertex> mod;
    for (Vertex v = 16; v <= 22; ++v) mod.insert(v);
    double serial = run_ms([&] { solve_mhv_cluster(g, mod, false); });
    double parallel = run_ms([&] { solve_mhv_cluster(g, mod, true); });
    row("cluster-fpt", "triangles=5 d=7", serial, parallel);
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"happy-coloring toolkit"};
  app.require_subcommand(1);
  Options opt;
  std::string gen_kind, verify_suite, trace_path;

  auto* mhv = app.add_subcommand("solve-mhv", "maximum happy vertices");
  mhv->add_option("file", opt.file)->required();
  mhv->add_option("-k", opt.k)->required();
  mhv->add_option("--algo", opt.algo)
      ->check(CLI::IsMember({"brute", "cluster-fpt"}));
  mhv->add_option("--witness", opt.witness);
  mhv->add_option("--budget", opt.budget);
  mhv->add_flag("--serial", opt.serial);

  auto* mhe = app.add_subcommand("solve-mhe", "maximum happy edges");
  mhe->add_option("file", opt.file)->required();
  mhe->add_option("-k", opt.k)->required();
  mhe->add_option("--witness", opt.witness);
  mhe->add_option("--budget", opt.budget);
  mhe->add_flag("--serial", opt.serial);

  auto* gmc = app.add_subcommand("solve-gmc", "group multiway cut");
  gmc->add_option("file", opt.file)->required();
  gmc->add_option("-k", opt.k)->required();
  gmc->add_option("--witness", opt.witness);
  gmc->add_option("--budget", opt.budget);

  auto* nmc = app.add_subcommand("solve-nmc",
                                 "node multiway cut on a width expression");
  nmc->add_option("--expr", opt.expr_file)->required();
  nmc->add_option("--terminals", opt.terminals)->required();
  nmc->add_option("-k", opt.k)->required();

  auto* togmc = app.add_subcommand("to-gmc", "reduce to group multiway cut");
  togmc->add_option("file", opt.file)->required();
  togmc->add_option("-k", opt.k)->required();
  togmc->add_option("-o,--out", opt.out);

  auto* kern = app.add_subcommand("kernelize", "shrink an instance");
  kern->add_option("file", opt.file)->required();
  kern->add_option("-k", opt.k)->required();
  kern->add_option("--mode", opt.mode)
      ->required()
      ->check(CLI::IsMember({"linear", "cubic", "gmc-compress"}));
  kern->add_option("-o,--out", opt.out);
  kern->add_option("--trace", trace_path);

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->add_option("kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"rmis-mhv", "rmis-mhe", "crbds-mhv", "crbds-mhe",
                             "random-rmis", "random-crbds"}));
  gen->add_option("file", opt.file);
  gen->add_option("--variant", opt.variant)
      ->check(CLI::IsMember({"path", "triangle", "star", "cluster"}));
  gen->add_option("-o,--out", opt.out);
  gen->add_option("--seed", opt.seed);
  gen->add_option("--cliques", opt.gk);
  gen->add_option("--clique-size", opt.gq);
  gen->add_option("--matchings", opt.gx);
  gen->add_option("--colors", opt.gk);
  gen->add_option("--per-color", opt.gper);
  gen->add_option("--blue", opt.gnb);
  gen->add_option("--edge-prob", opt.gprob);

  auto* verify = app.add_subcommand("verify", "oracle-equivalence suites");
  verify->add_option("suite", verify_suite)->required();
  verify->add_option("--count", opt.count);
  verify->add_option("--seed", opt.seed);

  auto* bench = app.add_subcommand("bench", "serial vs parallel timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (mhv->parsed()) return run_solve_mhv(opt);
    if (mhe->parsed()) return run_solve_mhe(opt);
    if (gmc->parsed()) return run_solve_gmc(opt);
    if (nmc->parsed()) return run_solve_nmc(opt);
    if (togmc->parsed()) return run_to_gmc(opt);
    if (kern->parsed()) return run_kernelize(opt, trace_path);
    if (gen->parsed()) return run_gen(gen_kind, opt);
    if (verify->parsed()) return run_verify(verify_suite, opt);
    if (bench->parsed()) return run_bench();
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
