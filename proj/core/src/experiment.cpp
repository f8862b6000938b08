#include "dcol/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dcol/constructions.hpp"
#include "dcol/errors.hpp"
#include "dcol/greedy.hpp"
#include "dcol/oracle.hpp"
#include "dcol/planar.hpp"
#include "dcol/separator.hpp"
#include "dcol/structural.hpp"
#include "json.hpp"

namespace dcol {

namespace {

std::string normalise(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

int as_int(long long v, const std::string& key) {
  if (v < -(1LL << 30) || v > (1LL << 30)) throw InvalidInput("parameter " + key + " out of range");
  return static_cast<int>(v);
}

// Portable across standard libraries: only raw mt19937_64 output is used.
ListAssignment make_lists(const Graph& g, int size, const Params& p, std::uint64_t seed) {
  if (!p.has("palette")) return ListAssignment::uniform(g.n(), size);
  int palette = as_int(p.integer("palette"), "palette");
  if (palette < size) throw InvalidInput("palette smaller than the list size " + std::to_string(size));
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> ls(g.n());
  std::vector<int> all(palette);
  for (int v = 0; v < g.n(); ++v) {
    for (int i = 0; i < palette; ++i) all[i] = i;
    for (int i = 0; i < size; ++i) std::swap(all[i], all[i + static_cast<int>(rng() % (palette - i))]);
    ls[v].assign(all.begin(), all.begin() + size);
    std::sort(ls[v].begin(), ls[v].end());
  }
  return ListAssignment(std::move(ls));
}

OracleLimits limits_from(const Params& p, unsigned threads) {
  OracleLimits lim;
  lim.threads = std::max(1u, threads);
  if (p.has("cap")) {
    int cap = as_int(p.integer("cap"), "cap");
    lim.colour_cap = lim.list_cap = lim.ctd_cap = lim.circumference_cap = lim.separator_cap = cap;
    lim.minor_host_cap = cap;
  }
  return lim;
}

const std::vector<std::string> kConstructions = {
    "complete", "path", "cycle", "grid", "complete-bipartite", "star", "petersen",
    "standard-defect", "standard-cluster", "kst-star", "hex", "outerplanar-gadget", "fan-gadget",
    "kkn", "xkc", "gk-circumference", "thickness", "standard-thickness", "high-girth",
    "random-outerplanar", "random-triangulation", "random-planar", "random-bounded-degree",
    "random-subcubic"};

const std::vector<std::string> kEngines = {
    "lovasz", "outerplanar", "poh", "genus-three", "light-edge", "island", "thickness", "tree-peel",
    "surface-four", "surface-three", "minor-free", "immersion", "vdhw", "circumference", "defect2"};

const std::vector<std::string> kQuestions = {
    "min-colours-defect", "min-colours-clustering", "chromatic-number", "circumference", "tree-depth",
    "connected-tree-depth", "has-minor", "mad", "balanced-separator", "girth"};

const std::vector<std::string> kFormulas = {
    "lovasz", "oow-light-bound", "mad-defect-params", "thickness-light-bound", "c-t",
    "surface-four-bound", "circumference-budget", "light-edge-conditions", "epsilon-params"};

}  // namespace

Params::Params(const std::map<std::string, std::string>& kv) {
  for (const auto& [k, v] : kv) set(k, v);
}

void Params::set(const std::string& key, const std::string& value) { kv_[normalise(key)] = value; }

bool Params::has(const std::string& key) const { return kv_.count(normalise(key)) > 0; }

std::string Params::str(const std::string& key) const {
  auto k = normalise(key);
  auto it = kv_.find(k);
  if (it == kv_.end()) throw InvalidInput("missing parameter --" + k);
  read_.insert(k);
  return it->second;
}

std::string Params::str(const std::string& key, const std::string& fallback) const {
  return has(key) ? str(key) : fallback;
}

long long Params::integer(const std::string& key) const {
  std::string s = str(key);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidInput("parameter --" + normalise(key) + " expects an integer, got '" + s + "'");
  return v;
}

long long Params::integer(const std::string& key, long long fallback) const {
  return has(key) ? integer(key) : fallback;
}

double Params::real(const std::string& key, double fallback) const {
  if (!has(key)) return fallback;
  std::string s = str(key);
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput("parameter --" + normalise(key) + " expects a number, got '" + s + "'");
}

Rational Params::rational(const std::string& key) const { return parse_rational(str(key)); }

void Params::check_consumed(const std::string& context) const {
  for (const auto& [k, v] : kv_)
    if (!read_.count(k)) throw InvalidInput(context + ": unknown parameter --" + k);
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  auto num = [&](const std::string& t) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
      throw InvalidInput("expected a rational p/q, got '" + s + "'");
    return v;
  };
  if (slash == std::string::npos) return Rational(num(s));
  long long q = num(s.substr(slash + 1));
  if (q == 0) throw InvalidInput("zero denominator in '" + s + "'");
  return Rational(num(s.substr(0, slash)), q);
}

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::vector<std::string> construction_names() { return kConstructions; }

bool construction_is_random(const std::string& name) {
  return name.rfind("random-", 0) == 0 || name == "high-girth";
}

Graph generate(const std::string& construction, const Params& p, std::uint64_t seed) {
  const std::string& c = construction;
  auto I = [&](const char* key) { return as_int(p.integer(key), key); };
  auto Id = [&](const char* key, long long fb) { return as_int(p.integer(key, fb), key); };
  Graph g;
  if (c == "complete") g = complete_graph(I("n"));
  else if (c == "path") g = path_graph(I("n"));
  else if (c == "cycle") g = cycle_graph(I("n"));
  else if (c == "grid") g = grid_graph(I("rows"), I("cols"));
  else if (c == "complete-bipartite") g = complete_bipartite(I("a"), I("b"));
  else if (c == "star") g = star_graph(I("leaves"));
  else if (c == "petersen") g = petersen_graph();
  else if (c == "standard-defect") g = standard_defect(I("h"), I("d"));
  else if (c == "standard-cluster") g = standard_cluster(I("h"), I("c"));
  else if (c == "kst-star") g = kst_star(I("s"), I("t"));
  else if (c == "hex") g = hex_grid(I("k")).tri.graph;
  else if (c == "outerplanar-gadget") g = outerplanar_gadget();
  else if (c == "fan-gadget") g = fan_gadget();
  else if (c == "kkn") g = kkn_gadget(I("s"), I("d")).graph;
  else if (c == "xkc") g = xkc_family(I("k"), I("c"), p.str("recipe"), Id("cap", 400));
  else if (c == "gk-circumference") g = gk_circumference_gadget(I("k"), I("c"), Id("cap", 2000));
  else if (c == "thickness") g = thickness_gadget(I("n")).graph;
  else if (c == "standard-thickness") g = standard_thickness_witness(I("k"), I("d")).graph;
  else if (c == "high-girth") g = high_girth_regular(I("r"), I("g"), seed, Id("n", 0));
  else if (c == "random-outerplanar") g = random_maximal_outerplanar(I("n"), seed).graph;
  else if (c == "random-triangulation") g = random_plane_triangulation(I("n"), seed).graph;
  else if (c == "random-planar") g = random_planar(I("n"), p.real("keep", 0.7), seed);
  else if (c == "random-bounded-degree")
    g = random_bounded_degree(I("n"), I("delta"), p.real("density", 0.8), seed);
  else if (c == "random-subcubic") g = random_subcubic(I("n"), seed);
  else throw InvalidInput("unknown construction '" + c + "'; known: " + join(kConstructions));
  p.check_consumed(c);
  return g;
}

std::vector<std::string> engine_names() { return kEngines; }

bool engine_is_random(const std::string& name, const Params& p) { return name == "defect2" || p.has("palette"); }

EngineRun run_engine(const std::string& e, const Graph& g, const Params& p, std::uint64_t seed, unsigned threads) {
  auto I = [&](const char* key) { return as_int(p.integer(key), key); };
  auto Id = [&](const char* key, long long fb) { return as_int(p.integer(key, fb), key); };
  EngineRun run;
  if (e == "lovasz") {
    auto r = lovasz_defective(g, Id("d", 1));
    run.colouring = r.colouring;
    run.extra.add("colour_bound", r.k);
    run.extra.add("iterations", r.iterations);
  } else if (e == "outerplanar") {
    run.colouring = outerplanar_two_colour(g);
  } else if (e == "poh") {
    run.colouring = poh_three_colour_graph(g);
  } else if (e == "genus-three") {
    int genus = Id("genus", 0);
    run.colouring = genus_three_colour(g, genus);
    run.extra.add("defect_bound", genus_defect_bound(genus));
  } else if (e == "light-edge") {
    int k = I("k"), ell = I("ell");
    run.colouring = light_edge_colour(g, make_lists(g, k + 1, p, seed), k, ell);
    run.extra.add("defect_bound", ell - k);
  } else if (e == "island") {
    int k = I("k");
    auto r = island_colour(g, make_lists(g, k + 1, p, seed), k, degenerate_islands(k));
    run.colouring = r.colouring;
    run.extra.add("max_island", r.max_island);
  } else if (e == "thickness") {
    int k = I("k"), genus = Id("genus", 0);
    run.colouring = thickness_peel(g, make_lists(g, 6 * k + 1, p, seed), k, genus);
    run.extra.add("clustering_bound", std::max(genus, 1));
  } else if (e == "tree-peel") {
    run.colouring = tree_subgraph_peel(g, I("n"), I("r"));
  } else if (e == "surface-four") {
    int genus = Id("genus", 0);
    auto o = genus_oracle(genus);
    run.colouring = surface_four_colour(g, make_lists(g, 4, p, seed), genus, o);
    run.extra.add("clustering_bound", static_cast<long long>(island_loop_bound(surface_four_spec(genus), o)));
  } else if (e == "surface-three") {
    int genus = Id("genus", 0);
    int gi = girth(g);
    int gr = Id("girth", gi == 0 ? 5 : gi);
    auto o = genus_oracle(genus);
    run.colouring = surface_three_colour(g, make_lists(g, gr >= 5 ? 2 : 3, p, seed), genus, gr, o);
    run.extra.add("clustering_bound", static_cast<long long>(island_loop_bound(surface_three_spec(genus, gr), o)));
  } else if (e == "minor-free") {
    int t = I("t");
    auto o = minor_oracle(t);
    run.colouring = minor_free_colour(g, make_lists(g, t - 1, p, seed), t, o);
    run.extra.add("clustering_bound", static_cast<long long>(island_loop_bound(minor_free_spec(t), o)));
  } else if (e == "immersion") {
    run.colouring = immersion_two_colour(g, I("t"));
  } else if (e == "vdhw") {
    int t = I("t");
    std::string variant = p.str("variant", "defect");
    if (variant != "defect" && variant != "cluster") throw InvalidInput("vdhw: variant is defect or cluster");
    auto r = vdhw_colour(g, t);
    run.colouring = variant == "defect" ? r.defect_variant : r.cluster_variant;
    run.extra.add("parts", r.parts);
  } else if (e == "circumference") {
    int k = I("k");
    run.colouring = circumference_colour(g, k, limits_from(p, threads));
    run.extra.add("colour_budget", circumference_colour_budget(k));
  } else if (e == "defect2") {
    Defect2Options opt;
    opt.seed = seed;
    opt.segment_factor = Id("segment-factor", opt.segment_factor);
    int delta = Id("delta", std::max(1, g.max_degree()));
    auto base = lovasz_defective(g, 2);
    auto r = defect2_to_cluster(g, base.colouring, delta, opt);
    run.colouring = r.colouring;
    run.extra.add("base_colours", base.colouring.num_colours());
    run.extra.add("segments", static_cast<int>(r.segments.size()));
    run.extra.add("resamples", static_cast<long long>(r.resamples));
    run.extra.add("reseeds", r.reseeds);
  } else {
    throw InvalidInput("unknown engine '" + e + "'; known: " + join(kEngines));
  }
  p.check_consumed(e);
  return run;
}

Report colour_report(const std::string& engine, const Graph& g, const Params& p, std::uint64_t seed,
                     unsigned threads) {
  auto run = run_engine(engine, g, p, seed, threads);
  Report r;
  r.add("engine", engine);
  r.add("seed", std::to_string(seed));
  r.append(colouring_report(g, run.colouring));
  r.append(run.extra);
  return r;
}

std::vector<std::string> oracle_questions() { return kQuestions; }

Report oracle_answer(const std::string& q, const Graph& g, const Params& p, unsigned threads) {
  auto lim = limits_from(p, threads);
  auto I = [&](const char* key) { return as_int(p.integer(key), key); };
  Report r;
  r.add("question", q);
  if (q == "min-colours-defect") {
    int d = I("d");
    r.add("d", d);
    r.add("answer", min_colours_defect(g, d, lim));
  } else if (q == "min-colours-clustering") {
    int c = I("c");
    r.add("c", c);
    r.add("answer", min_colours_clustering(g, c, lim));
  } else if (q == "chromatic-number") {
    r.add("answer", min_colours_defect(g, 0, lim));
  } else if (q == "circumference") {
    r.add("answer", circumference(g, lim));
  } else if (q == "tree-depth") {
    r.add("answer", tree_depth(g, lim));
  } else if (q == "connected-tree-depth") {
    r.add("answer", connected_tree_depth(g, lim));
  } else if (q == "has-minor") {
    int t = I("t");
    auto m = find_minor(g, complete_graph(t), lim);
    r.add("pattern", "K_" + std::to_string(t));
    r.add("answer", m.has_value());
    if (m) {
      for (std::size_t i = 0; i < m->size(); ++i) r.add("branch_" + std::to_string(i), (*m)[i]);
    }
  } else if (q == "mad") {
    r.add("answer", rational_text(mad_exact(g)));
  } else if (q == "balanced-separator") {
    auto s = min_balanced_separator(g, lim);
    r.add("answer", static_cast<int>(s.size()));
    r.add("separator", s);
  } else if (q == "girth") {
    r.add("answer", girth(g));
  } else {
    throw InvalidInput("unknown oracle question '" + q + "'; known: " + join(kQuestions));
  }
  p.check_consumed(q);
  return r;
}

std::vector<std::string> formula_names() { return kFormulas; }

Report evaluate_formula(const std::string& name, const Params& p) {
  std::string f = normalise(name);
  if (f == "ct") f = "c-t";
  auto I = [&](const char* key) { return as_int(p.integer(key), key); };
  Report r;
  r.add("formula", f);
  if (f == "lovasz") {
    int delta = I("delta"), d = I("d");
    if (delta < 0 || d < 0) throw InvalidInput("lovasz: need delta, d >= 0");
    r.add("k", delta / (d + 1) + 1);
  } else if (f == "oow-light-bound") {
    r.add("bound", static_cast<long long>(oow_light_bound(I("s"), I("t"), p.rational("mad"), p.rational("nabla"))));
  } else if (f == "mad-defect-params") {
    auto mp = mad_defect_params(p.rational("m"));
    r.add("k", mp.k);
    r.add("d", mp.d);
  } else if (f == "thickness-light-bound") {
    r.add("bound", static_cast<long long>(thickness_light_bound(I("g"), I("k"))));
  } else if (f == "c-t") {
    int t = I("t");
    r.add("c_t", static_cast<long long>(minor_clustering_bound(t)));
    if (t >= 3 && t <= 9)
      r.add("island_bound", static_cast<long long>(island_loop_bound(minor_free_spec(t), minor_oracle(t))));
  } else if (f == "surface-four-bound") {
    int genus = I("genus");
    r.add("bound", static_cast<long long>(island_loop_bound(surface_four_spec(genus), genus_oracle(genus))));
    r.add("target", 1500LL * (genus + 2));
  } else if (f == "circumference-budget") {
    r.add("colours", circumference_colour_budget(I("k")));
  } else if (f == "light-edge-conditions") {
    auto c = light_edge_conditions(I("g"), I("k"), I("delta"), p.integer("ell"));
    r.add("degree_range", c.degree_range);
    r.add("linear", c.linear);
    r.add("quadratic", c.quadratic);
    r.add("all", c.all());
  } else if (f == "epsilon-params") {
    EngineContract ct{p.rational("x"), p.rational("y"), p.rational("alpha")};
    auto ep = epsilon_params(ct, p.rational("eps"));
    r.add("d", ep.d);
    r.add("c", rational_text(ep.c));
  } else {
    throw InvalidInput("unknown formula '" + name + "'; known: " + join(kFormulas));
  }
  p.check_consumed(f);
  return r;
}

namespace {

Params params_from_json(const nlohmann::json& j, const std::string& where) {
  Params p;
  if (j.is_null()) return p;
  if (!j.is_object()) throw InvalidInput(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (v.is_string()) p.set(k, v.get<std::string>());
    else if (v.is_number() || v.is_boolean()) p.set(k, v.dump());
    else throw InvalidInput(where + "." + k + " must be a string, number or boolean");
  }
  return p;
}

std::optional<int> bound_from_json(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_number_integer()) throw InvalidInput(std::string("expected.") + key + " must be an integer");
  return j[key].get<int>();
}

}  // namespace

ExperimentManifest parse_manifest(const std::string& text, const std::string& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("manifest must be a JSON object");
  static const std::set<std::string> known{"engine", "graph", "params", "seed", "expected"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw InvalidInput("manifest: unknown key '" + k + "'");
  ExperimentManifest m;
  if (!j.contains("engine") || !j["engine"].is_string()) throw InvalidInput("manifest: 'engine' must be a string");
  m.engine = j["engine"].get<std::string>();
  if (!j.contains("graph") || !j["graph"].is_object()) throw InvalidInput("manifest: 'graph' must be an object");
  const auto& gj = j["graph"];
  if (gj.contains("generator") == gj.contains("file"))
    throw InvalidInput("manifest: graph needs exactly one of 'generator' and 'file'");
  if (gj.contains("generator")) {
    m.generator = gj["generator"].get<std::string>();
    m.generator_params = params_from_json(gj.value("params", nlohmann::json()), "graph.params");
  } else {
    std::filesystem::path f = gj["file"].get<std::string>();
    if (f.is_relative() && !base_dir.empty()) f = std::filesystem::path(base_dir) / f;
    m.file = f.string();
    if (gj.contains("format")) {
      m.format = format_from_name(gj["format"].get<std::string>());
      if (!m.format) throw InvalidInput("manifest: unknown graph format");
    }
  }
  m.params = params_from_json(j.value("params", nlohmann::json()), "params");
  if (j.contains("seed") && !j["seed"].is_null()) {
    if (!j["seed"].is_number_unsigned()) throw InvalidInput("manifest: 'seed' must be a non-negative integer");
    m.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("expected")) {
    const auto& e = j["expected"];
    if (!e.is_object()) throw InvalidInput("manifest: 'expected' must be an object");
    m.expected.colours = bound_from_json(e, "colours");
    m.expected.defect = bound_from_json(e, "defect");
    m.expected.clustering = bound_from_json(e, "clustering");
  }
  return m;
}

ExperimentManifest read_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), std::filesystem::path(path).parent_path().string());
}

ManifestOutcome run_manifest(const ExperimentManifest& m, unsigned threads) {
  bool random = engine_is_random(m.engine, m.params) ||
                (!m.generator.empty() && construction_is_random(m.generator));
  if (random && !m.seed) throw InvalidInput("manifest: randomised runs need an explicit 'seed'");
  std::uint64_t seed = m.seed.value_or(kDefaultSeed);
  Graph g = m.generator.empty() ? read_graph_file(m.file, m.format).graph : generate(m.generator, m.generator_params, seed);
  ManifestOutcome out;
  out.report.add("source", m.generator.empty() ? "file " + std::filesystem::path(m.file).filename().string()
                                               : "generator " + m.generator);
  out.report.append(colour_report(m.engine, g, m.params, seed, threads));
  auto check = [&](const char* key, const std::optional<int>& bound) {
    if (!bound) return;
    int got = std::stoi(*out.report.get(key));
    bool ok = got <= *bound;
    out.report.add(std::string("expected_") + key, *bound);
    out.bounds_met = out.bounds_met && ok;
  };
  check("colours", m.expected.colours);
  check("defect", m.expected.defect);
  check("clustering", m.expected.clustering);
  out.report.add("bounds_met", out.bounds_met);
  return out;
}

}  // namespace dcol
