#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "arbor/decomp.h"
#include "arbor/error.h"
#include "arbor/generators.h"
#include "arbor/io.h"
#include "arbor/mincut.h"
#include "arbor/oracle.h"
#include "arbor/packing.h"
#include "report.h"

namespace arbor::tools {
namespace {

constexpr int kExitOperation = 1;
constexpr int kExitUsage = 2;

std::uint64_t DefaultSeed() {
  const char* env = std::getenv("ARBOR_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(env, &used);
    if (used == std::string(env).size()) return seed;
  } catch (const std::exception&) {
  }
  Fail(ErrorKind::kParameter, "ARBOR_SEED must be an unsigned integer");
}

ParsedGraph LoadGraph(const std::string& path) {
  ParsedGraph parsed = ParseGraph(ReadFile(path));
  const auto& r = parsed.report;
  if (r.dropped_self_loops > 0 || r.dropped_into_source > 0) {
    std::cerr << "arbor: " << path << ": dropped " << r.dropped_self_loops
              << " self-loop(s) and " << r.dropped_into_source
              << " arc(s) into the source\n";
  }
  return parsed;
}

void Emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

void RequireVertices(const Graph& g) {
  if (g.n() < 2) Fail(ErrorKind::kParameter, "graph has no vertex besides the source");
}

struct CommonFlags {
  std::uint64_t seed = 1;
  std::string phi = "1/8";
  int trials_mult = 4;
};

DecompOptions DecompFrom(const CommonFlags& f) {
  DecompOptions d;
  d.seed = f.seed;
  d.trials_multiplier = f.trials_mult;
  return d;
}

int RunHierarchy(const std::string& in, const CommonFlags& f) {
  const ParsedGraph parsed = LoadGraph(in);
  const Hierarchy h = BuildHierarchy(parsed.graph, Rational::Parse(f.phi), DecompFrom(f));
  Emit(HierarchyJson(parsed.graph, IdMap(parsed), h));
  return 0;
}

int RunMincut(const std::string& in, const CommonFlags& f, bool exact, bool verbose) {
  const ParsedGraph parsed = LoadGraph(in);
  const Graph& g = parsed.graph;
  RequireVertices(g);
  if (exact) {
    Emit(ExactMincutJson(ExactRootedMincut(g)));
    return 0;
  }
  const Hierarchy h = BuildHierarchy(g, Rational::Parse(f.phi), DecompFrom(f));
  MincutOptions options;
  options.seed = f.seed;
  options.trials_multiplier = f.trials_mult;
  const MincutResult result = ApproxRootedMincut(g, h, options);
  Json doc = MincutJson(result, h.num_levels());
  if (verbose) {
    const Capacity reference = ExactRootedMincut(g).value;
    doc["exact"] = reference;
    doc["ratio_vs_exact"] = RatioString(result.best.rho, reference);
  }
  Emit(doc);
  return 0;
}

int RunPack(const std::string& in, const CommonFlags& f, int k, int sweeps) {
  const ParsedGraph parsed = LoadGraph(in);
  PackOptions options;
  options.seed = f.seed;
  options.trials_multiplier = f.trials_mult;
  options.reroute_sweeps = sweeps;
  const PackingResult r = Pack(parsed.graph, k, Rational::Parse(f.phi), options);
  Emit(PackingJson(IdMap(parsed), r));
  return 0;
}

int RunVerify(const std::string& result_path, const std::string& in) {
  const ParsedGraph parsed = LoadGraph(in);
  const Json doc = Json::parse(ReadFile(result_path));
  const Json report = VerifyDocument(parsed.graph, IdMap(parsed), doc);
  Emit(report);
  return report["ok"].get<bool>() ? 0 : kExitOperation;
}

int RunGen(const std::string& kind, const GenParams& p, const std::string& out_path) {
  const GeneratedGraph gen = Generate(kind, p);
  const std::string text = SerializeGraph(
      gen.n, gen.source, gen.edges, {"arbor gen " + kind + " seed " + std::to_string(p.seed)});
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) Fail(ErrorKind::kParameter, "cannot write '" + out_path + "'");
  out << text;
  return 0;
}

Json ErrorOf(const Error& e) {
  return ErrorJson(std::string(ErrorKindName(e.kind())), e.what());
}

struct BenchFlags {
  CommonFlags common;
  int k = 0;
  int threads = 1;
  bool timing = false;
};

Json BenchOne(const std::filesystem::path& path, const BenchFlags& f) {
  const auto start = std::chrono::steady_clock::now();
  Json rec{{"instance", path.filename().string()}, {"seed", f.common.seed}};
  try {
    const ParsedGraph parsed = ParseGraph(ReadFile(path.string()));
    const Graph& g = parsed.graph;
    rec["n"] = g.n();
    rec["m"] = g.m();
    RequireVertices(g);
    const Hierarchy h =
        BuildHierarchy(g, Rational::Parse(f.common.phi), DecompFrom(f.common));
    MincutOptions mo;
    mo.seed = f.common.seed;
    mo.trials_multiplier = f.common.trials_mult;
    const Capacity value = ApproxRootedMincut(g, h, mo).best.rho;
    const Capacity exact = ExactRootedMincut(g).value;
    rec["levels"] = h.num_levels();
    rec["value"] = value;
    rec["exact"] = exact;
    rec["ratio"] = RatioString(value, exact);
    const int k = f.k > 0 ? f.k : static_cast<int>(std::clamp<Capacity>(exact, 1, 1 << 20));
    Json pack{{"k", k}};
    try {
      PackOptions po;
      po.seed = f.common.seed;
      po.trials_multiplier = f.common.trials_mult;
      const PackingResult r = Pack(g, h, k, po);
      const bool trees = r.outcome == PackingResult::Outcome::kTrees;
      pack["outcome"] = trees ? "trees" : "cut";
      if (trees) {
        pack["congestion"] = r.congestion;
      } else {
        pack["delta"] = r.cut_delta;
      }
    } catch (const Error& e) {
      pack.update(ErrorOf(e));
    }
    rec["pack"] = std::move(pack);
  } catch (const Error& e) {
    rec.update(ErrorOf(e));
  }
  if (f.timing) {
    rec["wall_ms"] = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return rec;
}

int RunBench(const std::string& dir, const BenchFlags& f) {
  if (!std::filesystem::is_directory(dir)) {
    Fail(ErrorKind::kParameter, "'" + dir + "' is not a directory");
  }
  if (f.threads < 1) Fail(ErrorKind::kParameter, "threads must be at least 1");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".dmc") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Json> records(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < files.size(); j = next++) {
      records[j] = BenchOne(files[j], f);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < f.threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const Json& rec : records) std::cout << rec.dump() << '\n';
  return 0;
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kParameter:
    case ErrorKind::kMalformedInput:
      return kExitUsage;
    default:
      return kExitOperation;
  }
}

int Main(int argc, char** argv) {
  CLI::App app{"Rooted minimum cuts and arborescence packings via expander hierarchies"};
  app.require_subcommand(1);

  std::uint64_t env_seed = 1;
  try {
    env_seed = DefaultSeed();
  } catch (const Error& e) {
    Emit(ErrorOf(e));
    return kExitUsage;
  }
  auto add_common = [&](CLI::App* cmd, CommonFlags& f) {
    f.seed = env_seed;
    cmd->add_option("--seed", f.seed, "random seed (default: ARBOR_SEED or 1)");
    cmd->add_option("--phi", f.phi, "expansion target, e.g. 1/8")->capture_default_str();
    cmd->add_option("--trials-mult", f.trials_mult, "trials per component are ceil(mult * log2 n)")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000));
  };

  std::string in;
  CommonFlags hier_flags;
  auto* hier = app.add_subcommand("hierarchy", "build and print an expander hierarchy");
  hier->add_option("input", in, "graph file")->required();
  add_common(hier, hier_flags);

  CommonFlags cut_flags;
  bool exact = false;
  bool verbose = false;
  auto* mincut = app.add_subcommand("mincut", "rooted minimum cut");
  mincut->add_option("input", in, "graph file")->required();
  add_common(mincut, cut_flags);
  mincut->add_flag("--exact", exact, "use the exact max-flow oracle");
  mincut->add_flag("--verbose", verbose, "also report the exact value and the ratio");

  CommonFlags pack_flags;
  int k = 0;
  int sweeps = 3;
  auto* pack = app.add_subcommand("pack", "k arborescences or a cut smaller than k");
  pack->add_option("input", in, "graph file")->required();
  pack->add_option("--k", k, "number of arborescences")->required()->check(CLI::Range(1, 1 << 20));
  pack->add_option("--reroute-sweeps", sweeps, "routing improvement passes")
      ->capture_default_str()
      ->check(CLI::Range(0, 100));
  add_common(pack, pack_flags);

  std::string result_path;
  auto* verify = app.add_subcommand("verify", "check a result document against its graph");
  verify->add_option("result", result_path, "result JSON")->required();
  verify->add_option("input", in, "graph file")->required();

  std::string kind;
  std::string out_path;
  GenParams gen_params;
  gen_params.seed = env_seed;
  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("kind", kind, "generator")->required()->check(CLI::IsMember(GeneratorKinds()));
  gen->add_option("--n", gen_params.n, "vertices")->capture_default_str();
  gen->add_option("--m", gen_params.m, "arcs")->capture_default_str();
  gen->add_option("--k", gen_params.k, "arborescences (known_packing)")->capture_default_str();
  gen->add_option("--layers", gen_params.layers, "layers (dag_layered)")->capture_default_str();
  gen->add_option("--chords", gen_params.chords, "chords (cycle_plus_chords)")->capture_default_str();
  gen->add_option("--bridges", gen_params.bridges, "bridges each way (two_cliques_bridge)")
      ->capture_default_str();
  gen->add_option("--max-cap", gen_params.max_cap, "largest arc capacity")->capture_default_str();
  gen->add_option("--seed", gen_params.seed, "random seed (default: ARBOR_SEED or 1)");
  gen->add_option("-o,--output", out_path, "output file (default: stdout)");

  std::string corpus;
  BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "mincut and pack over every .dmc file of a directory");
  bench->add_option("corpus", corpus, "corpus directory")->required();
  add_common(bench, bench_flags.common);
  bench->add_option("--k", bench_flags.k, "packing k (default: exact connectivity)");
  bench->add_option("--threads", bench_flags.threads, "worker threads")->capture_default_str();
  bench->add_flag("--timing", bench_flags.timing, "include wall_ms in records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    Emit(ErrorJson("parameter", e.what()));
    return kExitUsage;
  }

  try {
    if (*hier) return RunHierarchy(in, hier_flags);
    if (*mincut) return RunMincut(in, cut_flags, exact, verbose);
    if (*pack) return RunPack(in, pack_flags, k, sweeps);
    if (*verify) return RunVerify(result_path, in);
    if (*gen) return RunGen(kind, gen_params, out_path);
    if (*bench) return RunBench(corpus, bench_flags);
  } catch (const Error& e) {
    Emit(ErrorOf(e));
    return ExitCodeFor(e.kind());
  } catch (const Json::exception& e) {
    Emit(ErrorJson("parse", e.what()));
    return kExitUsage;
  } catch (const std::exception& e) {
    Emit(ErrorJson("internal", e.what()));
    return kExitOperation;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace arbor::tools

int main(int argc, char** argv) { return arbor::tools::Main(argc, argv); }
