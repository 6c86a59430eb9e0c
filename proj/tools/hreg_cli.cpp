// Command-line surface: every subcommand reads files, runs one library
// entry point, and writes a deterministic report plus a manifest sidecar.
// Exit codes: 0 success, 1 bad input, 2 refusal (budget or undecided),
// 3 internal failure.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hreg/applications.hpp"
#include "hreg/corpus.hpp"
#include "hreg/density.hpp"
#include "hreg/errors.hpp"
#include "hreg/io.hpp"
#include "hreg/lemma_lab.hpp"
#include "hreg/pmap.hpp"
#include "hreg/regularity.hpp"
#include "hreg/regularize.hpp"
#include "hreg/removal.hpp"
#include "hreg/rng.hpp"
#include "hreg/schedule.hpp"

namespace {

using namespace hreg;

constexpr const char* kVersion = "1.0.0";

struct Common {
  std::uint64_t seed = 1;
  std::int64_t budget = 10000000;
  std::string mode = "exact";
  std::string out;
  std::string format = "json";
  std::string kernel = "parallel";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "root seed; all randomness derives from it");
  cmd->add_option("--budget", c.budget, "work ceiling for exact enumeration");
  cmd->add_option("--mode", c.mode, "evaluation mode")
      ->check(CLI::IsMember({"exact", "mc", "faithful", "empirical"}));
  cmd->add_option("--out", c.out, "output file; reports print to stdout without it");
  cmd->add_option("--format", c.format, "report format for --out")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--kernel", c.kernel, "kernel implementation")
      ->check(CLI::IsMember({"serial", "parallel"}));
}

KernelMode kernel_of(const Common& c) {
  return c.kernel == "serial" ? KernelMode::Serial : KernelMode::Parallel;
}

void require_mode(const Common& c, std::initializer_list<const char*> allowed) {
  for (const char* m : allowed)
    if (c.mode == m) return;
  std::string list;
  for (const char* m : allowed) list += list.empty() ? m : std::string("|") + m;
  throw ValidationError("this command supports --mode " + list + ", got " + c.mode);
}

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator");
    return Rational(num, den);
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw ValidationError("not a rational: " + s);
  }
}

std::vector<BigInt> parse_bigints(const std::string& s) {
  std::vector<BigInt> out;
  std::string cur;
  try {
    for (char ch : s + ",") {
      if (ch == ',') {
        if (!cur.empty()) out.emplace_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
  } catch (const std::exception&) {
    throw ValidationError("not an integer list: " + s);
  }
  return out;
}

// F as a point file: JSON array of tuples, or newline-separated text tuples.
std::vector<std::vector<int>> load_points(const std::string& path) {
  std::string text = read_text(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    Json j = Json::parse(text, nullptr, true, true);
    std::vector<std::vector<int>> pts;
    for (const auto& p : j) pts.push_back(p.get<std::vector<int>>());
    return pts;
  }
  return parse_point_lines(text);
}

struct Outputs {
  const Common* common = nullptr;
  std::vector<std::string> inputs;  // files read, for manifest digests
  std::vector<std::string> argv;
};

// Report to --out (or stdout), manifest to <out>.manifest.json.
void finish(const Outputs& o, const Json& params, const Json& report) {
  if (o.common->out.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  emit_report(report, o.common->format, o.common->out);
  RunManifest m;
  m.version = kVersion;
  m.command = o.argv;
  m.seed = o.common->seed;
  for (const std::string& path : o.inputs) m.input_digests[path] = digest_hex(read_text(path));
  write_manifest(m, params, o.common->out + ".manifest.json");
}

Json kv_report(const std::vector<std::pair<std::string, std::string>>& fields) {
  Json report;
  report["header"] = Json::array({"field", "value"});
  report["rows"] = Json::array();
  for (const auto& [k, v] : fields) report["rows"].push_back(Json::array({k, v}));
  return report;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// ---- subcommand bodies ----

void run_gen(const Common& c, const Outputs& o, int r, int k, const std::vector<int>& parts,
             const std::vector<int>& colors) {
  require_mode(c, {"exact"});
  if (c.out.empty()) throw ValidationError("gen needs --out to write the graph");
  Rng rng(c.seed);
  Hypergraph G = random_hypergraph(r, k, parts, colors, rng);
  save_hypergraph(G, c.out);
  RunManifest m;
  m.version = kVersion;
  m.command = o.argv;
  m.seed = c.seed;
  Json params = {{"r", r}, {"k", k}, {"parts", parts}, {"colors", colors}, {"seed", c.seed}};
  write_manifest(m, params, c.out + ".manifest.json");
  std::printf("wrote %s: r=%d k=%d parts=%s\n", c.out.c_str(), r, k, join_ints(parts).c_str());
}

void run_regularize(const Common& c, Outputs& o, const std::string& graph_path, int level,
                    const std::vector<int>& map_sizes) {
  require_mode(c, {"exact"});
  if (c.out.empty()) throw ValidationError("regularize needs --out to write the graph");
  Hypergraph G = load_hypergraph(graph_path);
  o.inputs.push_back(graph_path);
  Rng rng(c.seed);
  Hypergraph H = G;
  if (level > 0) {
    int m = map_sizes.empty() ? 1 : map_sizes[0];
    H = s_regularize(G, level, sample_map(G, m, rng), kernel_of(c));
  } else {
    std::vector<PartitionwiseMap> phis;
    for (int s = 1; s <= G.k() - 1; ++s) {
      int m = map_sizes.empty() ? 1
                                : map_sizes[std::min<std::size_t>(s - 1, map_sizes.size() - 1)];
      Rng child = rng.child(s);
      phis.push_back(sample_map(G, m, child));
    }
    H = regularize(G, phis, kernel_of(c));
  }
  save_hypergraph(H, c.out);
  RunManifest m;
  m.version = kVersion;
  m.command = o.argv;
  m.seed = c.seed;
  for (const std::string& path : o.inputs) m.input_digests[path] = digest_hex(read_text(path));
  Json params = {{"graph", graph_path}, {"level", level}, {"m", map_sizes}, {"seed", c.seed}};
  write_manifest(m, params, c.out + ".manifest.json");
  for (std::size_t ord = 0; ord < H.index_sets().size(); ++ord)
    std::printf("{%s}: %d classes\n", H.index_sets()[ord].str().c_str(),
                H.table_size(static_cast<int>(ord)));
}

void run_density(const Common& c, Outputs& o, const std::string& graph_path,
                 const std::string& index) {
  require_mode(c, {"exact"});
  Hypergraph G = load_hypergraph(graph_path);
  o.inputs.push_back(graph_path);
  Json report;
  report["header"] = Json::array({"index", "color", "edges", "frame_edges", "density"});
  report["rows"] = Json::array();
  for (std::size_t ord = 0; ord < G.index_sets().size(); ++ord) {
    const IndexSet& I = G.index_sets()[ord];
    if (!index.empty() && I.str() != index) continue;
    for (const DensityRow& row : density_table(G, static_cast<int>(ord)))
      report["rows"].push_back(Json::array({I.str(), row.color.str(),
                                            std::to_string(row.edges),
                                            std::to_string(row.frame_edges),
                                            rational_str(row.density)}));
  }
  if (!index.empty() && report["rows"].empty())
    throw ValidationError("index set {" + index + "} not in graph");
  finish(o, Json{{"graph", graph_path}, {"index", index}}, report);
}

void run_reg_bound(const Common& c, Outputs& o, const std::string& graph_path, int h, int m,
                   const std::string& eps_str) {
  require_mode(c, {"exact", "empirical", "mc", "faithful"});
  Hypergraph G = load_hypergraph(graph_path);
  o.inputs.push_back(graph_path);
  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("mode", c.mode);
  if (c.mode == "faithful") {
    Constants cst = regularity_constants(G.k(), h, G.r(), BigInt(G.max_colors(G.k())),
                                         parse_rational(eps_str));
    EtaConfig eta;
    eta.budget = c.budget;
    eta.seed = c.seed;
    eta.mode = kernel_of(c);
    ErrorFunction lower;
    ErrorFunction delta = faithful_error_function(G, lower, cst, m, eta);
    VerifyConfig vc;
    vc.embed_budget = c.budget;
    vc.seed = c.seed;
    vc.mode = kernel_of(c);
    std::vector<SimplicialComplex> family = enumerate_complexes(G, G.k(), h, 200000);
    RegularityCertificate cert = verify_error_function(G, delta, h, family, vc);
    fields.emplace_back("eps", eps_str);
    fields.emplace_back("eps1", rational_str(cst.eps1));
    fields.emplace_back("family_size", std::to_string(family.size()));
    fields.emplace_back("all_pass", cert.all_pass ? "true" : "false");
    fields.emplace_back("bound", rational_str(cert.bound));
    fields.emplace_back("bound_exact", cert.bound_exact ? "true" : "false");
  } else {
    RegBoundConfig cfg;
    cfg.embed_budget = c.budget;
    cfg.seed = c.seed;
    cfg.mode = kernel_of(c);
    RegBoundResult res = reg_upper_bound(G, h, cfg);
    RegularityCertificate cert = res.certificate;
    if (c.mode == "mc") {
      VerifyConfig vc;
      vc.exact = false;
      vc.samples = 20000;
      vc.seed = c.seed;
      vc.mode = kernel_of(c);
      std::vector<SimplicialComplex> family = enumerate_complexes(G, G.k(), h, 200000);
      cert = verify_error_function(G, res.delta, h, family, vc);
    }
    fields.emplace_back("family_size", std::to_string(res.family_size));
    fields.emplace_back("family_exhaustive", res.family_exhaustive ? "true" : "false");
    fields.emplace_back("all_pass", cert.all_pass ? "true" : "false");
    fields.emplace_back("exact", cert.exact ? "true" : "false");
    fields.emplace_back("bound", rational_str(cert.bound));
    fields.emplace_back("bound_exact", cert.bound_exact ? "true" : "false");
  }
  finish(o, Json{{"graph", graph_path}, {"h", h}, {"m", m}, {"mode", c.mode}},
         kv_report(fields));
}

void run_verify_lemmas(const Common& c, Outputs& o, const std::string& corpus_path) {
  require_mode(c, {"exact"});
  auto corpus = load_corpus(corpus_path);
  o.inputs.push_back(corpus_path);
  std::vector<CorpusRow> rows;
  for (const CorpusInstance& inst : corpus) {
    auto r = run_corpus_instance(inst);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  int failed = 0;
  for (const CorpusRow& r : rows)
    if (!r.pass) ++failed;
  finish(o, Json{{"corpus", corpus_path}}, corpus_report(rows));
  std::printf("%zu checks, %d failed\n", rows.size(), failed);
  if (failed > 0)
    throw std::logic_error("exact lemma check failed on the pinned corpus");
}

void run_remove(const Common& c, Outputs& o, const std::string& graph_path,
                const std::string& pattern_path, const std::string& eps_str,
                const std::vector<int>& map_sizes, const std::string& gprime_path) {
  require_mode(c, {"exact", "empirical"});
  Hypergraph G = load_hypergraph(graph_path);
  UniformPattern F = load_pattern(pattern_path);
  o.inputs.push_back(graph_path);
  o.inputs.push_back(pattern_path);
  RemovalConfig cfg;
  cfg.map_sizes = map_sizes;
  cfg.seed = c.seed;
  cfg.embed_budget = c.budget;
  RemovalOutcome out = removal_decision(G, F, parse_rational(eps_str), cfg);
  if (!gprime_path.empty()) save_hypergraph(out.g_prime, gprime_path);
  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("case", std::to_string(out.case_id));
  fields.emplace_back("eps", eps_str);
  fields.emplace_back("eps_bar", rational_str(out.eps_bar));
  fields.emplace_back("changed_edges", std::to_string(out.changed_edges));
  for (const auto& [key, frac] : out.change_fraction)
    fields.emplace_back("change_fraction{" + key + "}", rational_str(frac));
  fields.emplace_back("bad_colors", std::to_string(out.bad_color_count));
  fields.emplace_back("survivors", std::to_string(out.survivor_count));
  fields.emplace_back("copy_lower_bound", rational_str(out.copy_lower_bound));
  fields.emplace_back("copy_probability", rational_str(out.copy_probability));
  fields.emplace_back("residual_copy_probability", rational_str(out.residual_copy_probability));
  fields.emplace_back("delta_bound", rational_str(out.delta_bound));
  fields.emplace_back("a01_satisfied", out.a01_satisfied ? "true" : "false");
  finish(o,
         Json{{"graph", graph_path}, {"pattern", pattern_path}, {"eps", eps_str},
              {"m", map_sizes}, {"seed", c.seed}},
         kv_report(fields));
}

void run_find_corner(const Common& c, Outputs& o, const std::string& set_path) {
  require_mode(c, {"exact"});
  SimplexSet S = simplex_set_from_json(load_json(set_path));
  o.inputs.push_back(set_path);
  CornerConfig cfg;
  cfg.budget = c.budget;
  cfg.mode = kernel_of(c);
  auto res = find_simplex_corner(S, cfg);
  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("found", res ? "true" : "false");
  if (res) {
    fields.emplace_back("a", join_ints(res->a));
    fields.emplace_back("c", std::to_string(res->c));
  }
  finish(o, Json{{"set", set_path}}, kv_report(fields));
}

void run_find_config(const Common& c, Outputs& o, const std::string& set_path, int N, int r,
                     const std::string& pattern_path) {
  require_mode(c, {"exact"});
  GridSet S = load_grid_set(set_path, N, r);
  std::vector<std::vector<int>> F = load_points(pattern_path);
  o.inputs.push_back(set_path);
  o.inputs.push_back(pattern_path);
  FindConfig cfg;
  cfg.budget = c.budget;
  cfg.seed = c.seed;
  cfg.mode = kernel_of(c);
  auto res = find_configuration(S, F, cfg);
  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("found", res ? "true" : "false");
  if (res) {
    fields.emplace_back("a", join_ints(res->a));
    fields.emplace_back("c", std::to_string(res->c));
    fields.emplace_back("engine", res->engine);
    for (const auto& w : res->witnesses) fields.emplace_back("witness", join_ints(w));
  }
  finish(o, Json{{"set", set_path}, {"N", N}, {"r", r}, {"pattern", pattern_path}},
         kv_report(fields));
}

void run_find_ap(const Common& c, Outputs& o, const std::string& set_path, int N, int length) {
  require_mode(c, {"exact"});
  GridSet S = load_grid_set(set_path, N, 1);
  o.inputs.push_back(set_path);
  FindConfig cfg;
  cfg.budget = c.budget;
  cfg.seed = c.seed;
  cfg.mode = kernel_of(c);
  auto res = find_ap(S, length, cfg);
  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("found", res ? "true" : "false");
  if (res) {
    fields.emplace_back("start", std::to_string(res->a[0]));
    fields.emplace_back("step", std::to_string(res->c));
    std::string terms;
    for (const auto& w : res->witnesses) terms += (terms.empty() ? "" : ",") + std::to_string(w[0]);
    fields.emplace_back("terms", terms);
  }
  finish(o, Json{{"set", set_path}, {"N", N}, {"length", length}}, kv_report(fields));
}

void run_schedule(const Common& c, Outputs& o, int r, int k, int h, const std::string& b_str,
                  const std::string& eps_str, int m_level, int ntilde_level,
                  const std::string& args_str) {
  require_mode(c, {"exact", "faithful"});
  if ((m_level < 0) == (ntilde_level < 0))
    throw ValidationError("schedule needs exactly one of --m-level or --ntilde-level");
  ScheduleCeiling ceiling;
  if (c.budget != 10000000) ceiling.max_bits = c.budget;
  SampleSchedule s(r, k, h, parse_bigints(b_str), parse_rational(eps_str), ceiling);
  std::vector<BigInt> args = parse_bigints(args_str);
  BigInt value = m_level >= 0 ? s.m(m_level, args) : s.ntilde(ntilde_level, args);
  std::int64_t bits = value == 0 ? 1 : static_cast<std::int64_t>(msb(value)) + 1;
  std::vector<std::pair<std::string, std::string>> fields;
  fields.emplace_back("query", m_level >= 0 ? "m" : "ntilde");
  fields.emplace_back("level", std::to_string(m_level >= 0 ? m_level : ntilde_level));
  fields.emplace_back("args", args_str);
  fields.emplace_back("bits", std::to_string(bits));
  fields.emplace_back("value", bits > 256 ? "~2^" + std::to_string(bits - 1) : value.str());
  fields.emplace_back("eps1", rational_str(s.constants().eps1));
  finish(o,
         Json{{"r", r}, {"k", k}, {"h", h}, {"b", b_str}, {"eps", eps_str},
              {"query", m_level >= 0 ? "m" : "ntilde"}, {"args", args_str}},
         kv_report(fields));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sampling-based regularity toolkit for colored hypergraphs"};
  app.require_subcommand(1);

  Common c;
  Outputs o;
  o.common = &c;
  for (int i = 0; i < argc; ++i) o.argv.emplace_back(argv[i]);

  // gen
  int gen_r = 2, gen_k = 2;
  std::vector<int> gen_parts, gen_colors;
  auto* gen = app.add_subcommand("gen", "generate a seeded iid-colored hypergraph");
  gen->add_option("--r", gen_r, "number of parts")->required();
  gen->add_option("--k", gen_k, "maximum edge size")->required();
  gen->add_option("--parts", gen_parts, "part sizes")->required()->delimiter(',');
  gen->add_option("--colors", gen_colors, "colors per edge size")->required()->delimiter(',');
  add_common(gen, c);
  gen->callback([&] { run_gen(c, o, gen_r, gen_k, gen_parts, gen_colors); });

  // regularize
  std::string rz_graph;
  int rz_level = 0;
  std::vector<int> rz_m;
  auto* rz = app.add_subcommand("regularize", "recolor edges by sampled traces");
  rz->add_option("--graph", rz_graph, "input hypergraph")->required();
  rz->add_option("--level", rz_level, "single level s; 0 runs the full chain");
  rz->add_option("--m", rz_m, "samples per part (per level for the chain)")->delimiter(',');
  add_common(rz, c);
  rz->callback([&] { run_regularize(c, o, rz_graph, rz_level, rz_m); });

  // density
  std::string d_graph, d_index;
  auto* den = app.add_subcommand("density", "relative densities of realized colors");
  den->add_option("--graph", d_graph, "input hypergraph")->required();
  den->add_option("--index", d_index, "restrict to one index set, e.g. 0,1");
  add_common(den, c);
  den->callback([&] { run_density(c, o, d_graph, d_index); });

  // reg-bound
  std::string rb_graph, rb_eps = "1/2";
  int rb_h = 1, rb_m = 1;
  auto* rb = app.add_subcommand("reg-bound", "fit and certify an error function");
  rb->set_help_flag("--help", "print help");
  rb->add_option("--graph", rb_graph, "input hypergraph")->required();
  rb->add_option("--h", rb_h, "pattern vertices per part");
  rb->add_option("--m", rb_m, "sample size for the faithful mode");
  rb->add_option("--eps", rb_eps, "target accuracy for the faithful mode");
  add_common(rb, c);
  rb->callback([&] { run_reg_bound(c, o, rb_graph, rb_h, rb_m, rb_eps); });

  // verify-lemmas
  std::string vl_corpus;
  auto* vl = app.add_subcommand("verify-lemmas", "run the exact checks on a pinned corpus");
  vl->add_option("--corpus", vl_corpus, "corpus json")->required();
  add_common(vl, c);
  vl->callback([&] { run_verify_lemmas(c, o, vl_corpus); });

  // remove
  std::string rm_graph, rm_pattern, rm_eps = "1/2", rm_gprime;
  std::vector<int> rm_m;
  auto* rm = app.add_subcommand("remove", "decide recoloring-vs-many-copies for a pattern");
  rm->add_option("--graph", rm_graph, "input hypergraph")->required();
  rm->add_option("--pattern", rm_pattern, "uniform pattern json")->required();
  rm->add_option("--eps", rm_eps, "change budget per index set");
  rm->add_option("--m", rm_m, "regularization samples per level")->delimiter(',');
  rm->add_option("--gprime", rm_gprime, "write the recolored graph here");
  add_common(rm, c);
  rm->callback([&] { run_remove(c, o, rm_graph, rm_pattern, rm_eps, rm_m, rm_gprime); });

  // find-corner
  std::string fc_set;
  auto* fc = app.add_subcommand("find-corner", "first corner a + c E in a simplex set");
  fc->add_option("--set", fc_set, "simplex set json")->required();
  add_common(fc, c);
  fc->callback([&] { run_find_corner(c, o, fc_set); });

  // find-config
  std::string cfg_set, cfg_pattern;
  int cfg_N = 0, cfg_r = 1;
  auto* cf = app.add_subcommand("find-config", "homothetic copy a + cF inside a grid set");
  cf->add_option("--set", cfg_set, "grid set (json or point lines)")->required();
  cf->add_option("--N", cfg_N, "box side")->required();
  cf->add_option("--r", cfg_r, "dimension");
  cf->add_option("--pattern", cfg_pattern, "pattern points file")->required();
  add_common(cf, c);
  cf->callback([&] { run_find_config(c, o, cfg_set, cfg_N, cfg_r, cfg_pattern); });

  // find-ap
  std::string ap_set;
  int ap_N = 0, ap_len = 3;
  auto* ap = app.add_subcommand("find-ap", "arithmetic progression inside a set");
  ap->add_option("--set", ap_set, "grid set (json or point lines)")->required();
  ap->add_option("--N", ap_N, "box side")->required();
  ap->add_option("--length", ap_len, "progression length");
  add_common(ap, c);
  ap->callback([&] { run_find_ap(c, o, ap_set, ap_N, ap_len); });

  // schedule
  int sc_r = 2, sc_k = 2, sc_h = 1, sc_mlvl = -1, sc_nlvl = -1;
  std::string sc_b = "1,2", sc_eps = "1/2", sc_args;
  auto* sc = app.add_subcommand("schedule", "exact sample-size recursion with refusal");
  sc->set_help_flag("--help", "print help");
  sc->add_option("--r", sc_r, "number of parts");
  sc->add_option("--k", sc_k, "maximum edge size");
  sc->add_option("--h", sc_h, "pattern vertices per part");
  sc->add_option("--b", sc_b, "colors per size, comma list");
  sc->add_option("--eps", sc_eps, "target accuracy");
  sc->add_option("--m-level", sc_mlvl, "query m at this level");
  sc->add_option("--ntilde-level", sc_nlvl, "query the threshold at this level");
  sc->add_option("--args", sc_args, "comma list of arguments");
  add_common(sc, c);
  sc->callback([&] { run_schedule(c, o, sc_r, sc_k, sc_h, sc_b, sc_eps, sc_mlvl, sc_nlvl,
                                  sc_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const BudgetExceeded& e) {
    std::fprintf(stderr, "refused: %s\n", e.what());
    for (const std::string& line : e.partial_trace)
      std::fprintf(stderr, "  trace: %s\n", line.c_str());
    return 2;
  } catch (const Undecided& e) {
    std::fprintf(stderr, "undecided: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal: %s\n", e.what());
    return 3;
  }
  return 0;
}
