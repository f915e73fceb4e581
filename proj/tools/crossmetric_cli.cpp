// crossmetric: instance generation, MST algorithms, embedding export,
// comparison harness and SVG rendering under the crossing metric.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "crossmetric/embedding.hpp"
#include "crossmetric/error.hpp"
#include "crossmetric/instance_io.hpp"
#include "crossmetric/mst_approx.hpp"
#include "crossmetric/mst_embedding.hpp"
#include "crossmetric/mst_exact.hpp"
#include "crossmetric/random.hpp"
#include "crossmetric/svg.hpp"

using namespace crossmetric;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  bool trace = false;
  std::string file;
};

std::string base64(const std::uint8_t* data, std::size_t len) {
  static constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((len + 2) / 3 * 4);
  for (std::size_t i = 0; i < len; i += 3) {
    const std::uint32_t b0 = data[i];
    const std::uint32_t b1 = i + 1 < len ? data[i + 1] : 0;
    const std::uint32_t b2 = i + 2 < len ? data[i + 2] : 0;
    const std::uint32_t v = (b0 << 16) | (b1 << 8) | b2;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += i + 1 < len ? kAlphabet[(v >> 6) & 63] : '=';
    out += i + 2 < len ? kAlphabet[v & 63] : '=';
  }
  return out;
}

// Little-endian byte image of 64-bit words.
std::string base64_words(std::span<const std::uint64_t> words) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(words.size() * 8);
  for (std::uint64_t w : words) {
    for (int b = 0; b < 8; ++b) bytes.push_back(static_cast<std::uint8_t>(w >> (8 * b)));
  }
  return base64(bytes.data(), bytes.size());
}

Instance read_instance(const Globals& g) {
  std::string text;
  if (g.file.empty() || g.file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(g.file);
    if (!in) throw Error("cannot open " + g.file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return instance_from_json(text);
}

void trace(const Globals& g, const json& event) {
  if (g.trace) std::cerr << event.dump() << '\n';
}

json edges_json(const std::vector<ForestEdge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.a, e.b, e.weight});
  return out;
}

json stage_json(const StageRecord& s) {
  return {{"index", s.index},         {"l", s.l},
          {"nu", s.nu},               {"sample_size", s.sample_size},
          {"depth", s.depth},         {"exact", s.exact},
          {"edges_added", s.edges_added}, {"weight_added", s.weight_added},
          {"components", s.components}};
}

json round_json(const RoundRecord& r) {
  return {{"index", r.index},
          {"components_before", r.components_before},
          {"edges_added", r.edges_added},
          {"scans", r.scans},
          {"exact_fallback", r.exact_fallback}};
}

double ratio_of(std::uint64_t weight, std::uint64_t optimum) {
  if (optimum == 0) return weight == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(weight) / static_cast<double>(optimum);
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

void add_sampling_flags(CLI::App* cmd, SamplingConfig& cfg) {
  cmd->add_option("--epsilon", cfg.eps, "approximation parameter in (0,1]")->capture_default_str();
  cmd->add_option("--c-samp", cfg.c_samp, "sampling rate constant")->capture_default_str();
  cmd->add_option("--c-prop", cfg.c_prop, "propagation depth constant")->capture_default_str();
  cmd->add_option("--c-short", cfg.c_short, "initial scale divisor")->capture_default_str();
  cmd->add_option("--c-est", cfg.c_est, "estimator budget constant")->capture_default_str();
  cmd->add_option("--alpha-fn", cfg.alpha_fn, "inverse Ackermann stand-in")->capture_default_str();
}

json sampling_params(const SamplingConfig& cfg) {
  return {{"epsilon", cfg.eps}, {"c_samp", cfg.c_samp},     {"c_prop", cfg.c_prop},
          {"c_short", cfg.c_short}, {"c_est", cfg.c_est}, {"alpha_fn", cfg.alpha_fn}};
}

json header(const std::string& command, const Instance& inst, const Globals& g, json params) {
  return {{"command", command}, {"digest", instance_digest(inst)}, {"seed", g.seed}, {"params", std::move(params)}};
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit(json report, Clock::time_point start) {
  report["wall_ms"] = elapsed_ms(start);
  std::cout << report.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossing-metric MST toolkit"};
  app.require_subcommand(1);
  Globals g;
  if (const char* env = std::getenv("CROSSMETRIC_SEED")) {
    try {
      g.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: CROSSMETRIC_SEED is not an unsigned integer\n";
      return 2;
    }
  }
  app.add_option("--seed", g.seed, "master seed (default: $CROSSMETRIC_SEED or 0)");
  app.add_flag("--trace", g.trace, "JSON-lines stage/round events on stderr");
  app.add_option("--file", g.file, "instance JSON (default: stdin)");
  app.fallthrough();

  // gen
  GenerateParams gen;
  std::size_t clusters = 0;
  Coord spread = 20;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--dim", gen.dim)->capture_default_str();
  gen_cmd->add_option("--points", gen.points)->capture_default_str();
  gen_cmd->add_option("--lines", gen.hyperplanes)->capture_default_str();
  gen_cmd->add_option("--range", gen.range)->capture_default_str();
  gen_cmd->add_option("--clusters", clusters, "cluster points around this many centers (0: uniform)");
  gen_cmd->add_option("--spread", spread, "cluster radius")->capture_default_str();

  // exact-mst
  std::string algo = "bruteforce";
  auto* exact_cmd = app.add_subcommand("exact-mst", "exact MST");
  exact_cmd->add_option("--algo", algo)->check(CLI::IsMember({"bruteforce", "wavefront"}))->capture_default_str();

  // approx-mst
  SamplingConfig approx_cfg;
  bool approx_ratio = false;
  auto* approx_cmd = app.add_subcommand("approx-mst", "sampling-based approximate MST");
  add_sampling_flags(approx_cmd, approx_cfg);
  approx_cmd->add_flag("--ratio", approx_ratio, "also report the ratio to the exact MST");

  // embed
  std::uint32_t embed_r = 1;
  double embed_eps = 0.5;
  EmbeddingConfig embed_cfg;
  std::size_t embed_reps = 0;
  auto* embed_cmd = app.add_subcommand("embed", "threshold embedding into Hamming space");
  embed_cmd->add_option("--r", embed_r, "distance threshold")->required();
  embed_cmd->add_option("--epsilon", embed_eps)->capture_default_str();
  embed_cmd->add_option("--c-embed", embed_cfg.c_embed)->capture_default_str();
  embed_cmd->add_option("--reps", embed_reps, "bits per label coordinate (default ceil(2 ln n))");

  // ann-mst
  double ann_eps = 0.5;
  bool ann_ratio = false, ann_require_gap = false;
  auto* ann_cmd = app.add_subcommand("ann-mst", "MST through the embedding ladder and LSH");
  ann_cmd->add_option("--epsilon", ann_eps)->capture_default_str();
  ann_cmd->add_flag("--ratio", ann_ratio, "also report the ratio to the exact MST");
  ann_cmd->add_flag("--require-gap", ann_require_gap, "drop rungs without a near/far gap");

  // compare
  std::vector<std::string> algos{"wavefront", "approx", "ann"};
  std::size_t trials = 1;
  double ratio_bound = 0;
  double cmp_eps = 0.5;
  int jobs = 1;
  auto* cmp_cmd = app.add_subcommand("compare", "run algorithms against the exact MST");
  cmp_cmd->add_option("--algos", algos)->check(CLI::IsMember({"wavefront", "approx", "ann"}))->delimiter(',');
  cmp_cmd->add_option("--trials", trials)->capture_default_str();
  cmp_cmd->add_option("--epsilon", cmp_eps)->capture_default_str();
  cmp_cmd->add_option("--ratio-bound", ratio_bound, "success threshold (default 1 + epsilon)");
  cmp_cmd->add_option("--jobs", jobs, "parallel trials")->capture_default_str();

  // render
  bool render_mst = false;
  double render_size = 800;
  auto* render_cmd = app.add_subcommand("render", "SVG of the instance");
  render_cmd->add_flag("--mst", render_mst, "overlay the exact MST");
  render_cmd->add_option("--size", render_size)->capture_default_str();

  // bench
  std::vector<std::size_t> sizes{50, 100, 200};
  double bench_eps = 0.5;
  auto* bench_cmd = app.add_subcommand("bench", "wall-clock scaling of every MST path on generated instances");
  bench_cmd->add_option("--sizes", sizes, "n = m values")->delimiter(',');
  bench_cmd->add_option("--epsilon", bench_eps)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  const auto start = Clock::now();
  try {
    if (*gen_cmd) {
      gen.seed = g.seed;
      const Instance inst = clusters ? generate_clustered_instance(gen, clusters, spread) : generate_instance(gen);
      std::cout << instance_to_json(inst) << '\n';
      return 0;
    }

    if (*bench_cmd) {
      json rows = json::array();
      for (std::size_t n : sizes) {
        GenerateParams p;
        p.points = p.hyperplanes = n;
        p.seed = derive_seed(g.seed, "bench", n);
        const Instance inst = generate_instance(p);
        const CrossingOracle oracle(inst);
        json row{{"n", n}, {"m", n}};
        auto timed = [&](const char* name, auto&& fn) {
          const auto t0 = Clock::now();
          const std::uint64_t w = fn();
          row[name] = {{"ms", elapsed_ms(t0)}, {"weight", w}};
        };
        timed("bruteforce", [&] { return mst_bruteforce(oracle).weight; });
        timed("wavefront", [&] { return mst_wavefront(oracle).weight; });
        SamplingConfig cfg;
        cfg.eps = bench_eps;
        cfg.seed = derive_seed(g.seed, "approx-mst");
        timed("approx", [&] { return approx_mst(oracle, cfg).weight; });
        AnnMstConfig acfg;
        acfg.seed = derive_seed(g.seed, "ann-mst");
        timed("ann", [&] { return mst_via_embedding(oracle, bench_eps, acfg).weight; });
        trace(g, {{"event", "bench"}, {"n", n}});
        rows.push_back(std::move(row));
      }
      json report{{"command", "bench"}, {"seed", g.seed}, {"params", {{"sizes", sizes}, {"epsilon", bench_eps}}}};
      report["rows"] = std::move(rows);
      emit(std::move(report), start);
      return 0;
    }

    const Instance inst = read_instance(g);

    if (*render_cmd) {
      SvgOptions opts;
      opts.size = render_size;
      std::vector<ForestEdge> edges;
      if (render_mst && inst.n() > 0) edges = mst_bruteforce(inst).forest.edges();
      std::cout << render_svg(inst, edges, opts);
      return 0;
    }

    const CrossingOracle oracle(inst);

    if (*exact_cmd) {
      if (inst.n() == 0) throw InvalidInstance("exact-mst needs at least one point");
      const MstResult r = algo == "wavefront" ? mst_wavefront(oracle) : mst_bruteforce(oracle);
      json report = header("exact-mst", inst, g, {{"algo", algo}});
      report["weight"] = r.weight;
      report["edges"] = edges_json(r.forest.edges());
      emit(std::move(report), start);
      return 0;
    }

    if (*approx_cmd) {
      approx_cfg.seed = derive_seed(g.seed, "approx-mst");
      const ApproxResult r =
          approx_mst(oracle, approx_cfg, [&](const StageRecord& s) { trace(g, {{"event", "stage"}, {"stage", stage_json(s)}}); });
      json report = header("approx-mst", inst, g, sampling_params(approx_cfg));
      report["weight"] = r.weight;
      if (approx_ratio) report["ratio_vs_oracle"] = ratio_of(r.weight, mst_bruteforce(oracle).weight);
      report["estimate"] = r.estimate.value;
      report["l0"] = r.l0;
      json stages = json::array();
      for (const auto& s : r.stages) stages.push_back(stage_json(s));
      report["stages"] = std::move(stages);
      report["edges"] = edges_json(r.forest.edges());
      emit(std::move(report), start);
      return 0;
    }

    if (*embed_cmd) {
      embed_cfg.seed = derive_seed(g.seed, "embed");
      if (embed_reps) embed_cfg.binary_reps = embed_reps;
      const EmbeddingSpec spec = plan_embedding(inst, embed_r, embed_eps, embed_cfg, false);
      const EmbeddedPoints e = embed_points(oracle, spec);
      json report = header("embed", inst, g, {{"r", embed_r}, {"epsilon", embed_eps}, {"c_embed", embed_cfg.c_embed}});
      report["spec"] = {{"k", spec.k},
                        {"mu", spec.mu},
                        {"z", spec.z},
                        {"Z", spec.Z},
                        {"alpha", spec.alpha},
                        {"m_eff", spec.m_eff},
                        {"binary_reps", spec.binary_reps},
                        {"gap_valid", spec.gap_valid},
                        {"thresholds", {{"near", spec.near_threshold}, {"far", spec.far_threshold}}}};
      report["labels"] = {{"rows", inst.n()}, {"cols", spec.mu}, {"data", base64_words(e.labels)}};
      report["binary"] = {{"rows", e.binary.rows()},
                          {"cols", e.binary.cols()},
                          {"words_per_row", e.binary.stride()},
                          {"data", base64_words(e.binary.data())}};
      emit(std::move(report), start);
      return 0;
    }

    if (*ann_cmd) {
      AnnMstConfig cfg;
      cfg.seed = derive_seed(g.seed, "ann-mst");
      cfg.require_gap = ann_require_gap;
      const AnnMstResult r = mst_via_embedding(oracle, ann_eps, cfg, [&](const RoundRecord& rr) {
        trace(g, {{"event", "round"}, {"round", round_json(rr)}});
      });
      json report = header("ann-mst", inst, g, {{"epsilon", ann_eps}, {"require_gap", ann_require_gap}});
      report["weight"] = r.weight;
      if (ann_ratio) report["ratio_vs_oracle"] = ratio_of(r.weight, mst_bruteforce(oracle).weight);
      json ladder = json::array();
      for (const auto& rung : r.ladder) {
        ladder.push_back({{"r", rung.r}, {"mu", rung.mu}, {"k", rung.k}, {"gap_valid", rung.gap_valid}});
      }
      report["ladder"] = std::move(ladder);
      report["ladder_search"] = "linear scan from the smallest threshold, first accepted rung wins";
      report["rounds"] = r.rounds.size();
      json rounds = json::array();
      for (const auto& rr : r.rounds) rounds.push_back(round_json(rr));
      report["round_log"] = std::move(rounds);
      report["eps_effective"] = r.eps_effective;
      report["min_gap_ratio"] = r.min_gap_ratio;
      report["edges"] = edges_json(r.forest.edges());
      emit(std::move(report), start);
      return 0;
    }

    if (*cmp_cmd) {
      if (ratio_bound <= 0) ratio_bound = 1 + cmp_eps;
      const std::uint64_t optimum = inst.n() ? mst_bruteforce(oracle).weight : 0;
      json report = header("compare", inst, g,
                           {{"algos", algos}, {"trials", trials}, {"epsilon", cmp_eps}, {"ratio_bound", ratio_bound}});
      report["oracle_weight"] = optimum;
      json results = json::object();
      for (const auto& name : algos) {
        std::vector<std::uint64_t> weights(trials, 0);
        std::string failure;
#pragma omp parallel for num_threads(std::max(jobs, 1)) schedule(dynamic)
        for (long t = 0; t < static_cast<long>(trials); ++t) {
          try {
            if (inst.n() <= 1) continue;
            const std::uint64_t s = derive_seed(g.seed, name, t);
            if (name == "wavefront") {
              weights[t] = mst_wavefront(oracle).weight;
            } else if (name == "approx") {
              SamplingConfig cfg;
              cfg.eps = cmp_eps;
              cfg.seed = s;
              weights[t] = approx_mst(oracle, cfg).weight;
            } else {
              AnnMstConfig cfg;
              cfg.seed = s;
              weights[t] = mst_via_embedding(oracle, cmp_eps, cfg).weight;
            }
          } catch (const std::exception& e) {
#pragma omp critical(crossmetric_cli_failure)
            failure = e.what();
          }
        }
        if (!failure.empty()) throw Error(name + ": " + failure);
        std::vector<double> ratios;
        std::size_t ok = 0;
        for (std::size_t t = 0; t < trials; ++t) {
          ratios.push_back(ratio_of(weights[t], optimum));
          ok += ratios.back() <= ratio_bound;
          trace(g, {{"event", "trial"}, {"algo", name}, {"trial", t}, {"weight", weights[t]}});
        }
        results[name] = {{"weights", weights},
                         {"ratios", ratios},
                         {"median_ratio", median(ratios)},
                         {"success_fraction", trials ? static_cast<double>(ok) / trials : 1.0}};
      }
      report["results"] = std::move(results);
      emit(std::move(report), start);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
