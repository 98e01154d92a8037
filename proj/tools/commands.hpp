#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "linram/linram.hpp"

namespace linram::cli {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

enum class Exit { ok = 0, usage = 1, disagree = 2 };

struct RunConfig {
  std::string subcommand;
  std::string format = "json";
  std::string cache_dir;
  int jobs = 1;

  std::string forbid;
  std::string graph;
  std::string id;
  std::string klass;
  std::string a_range = "3..4";
  std::string b_range = "3..4";
  int p = 0, q = 0;
  int a = 0, b = 0;
  int cap = -1;
  bool bipartite = false;
  int n = 0, k = 6;
  std::uint64_t seed = 1;
  int samples = 1;
  int na = 0, nb = 0;
  int max_omega = -1, max_alpha = -1;
  bool count_only = false;
};

// ---------------------------------------------------------------------------
// input parsing

/// Splits on commas that are not inside parentheses.
inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(cur);
  std::erase_if(out, [](const std::string& t) { return t.find_first_not_of(' ') == std::string::npos; });
  for (auto& t : out) {
    t.erase(0, t.find_first_not_of(' '));
    t.erase(t.find_last_not_of(' ') + 1);
  }
  if (depth != 0) throw parse_error("unbalanced parentheses in '" + std::string(s) + "'");
  return out;
}

inline ClassSpec parse_class(const std::string& forbid) {
  std::vector<Graph> hs;
  for (const auto& name : split_list(forbid)) hs.push_back(resolve_graph(name));
  return ClassSpec(hs, forbid);
}

inline Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw parse_error("");
      return {v, v};
    }
    const std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
    Range r{std::stoi(lo, &used), 0};
    if (used != lo.size()) throw parse_error("");
    r.hi = std::stoi(hi, &used);
    if (used != hi.size()) throw parse_error("");
    if (r.lo > r.hi) throw parse_error("");
    return r;
  } catch (const std::exception&) {
    throw parse_error("bad range '" + s + "', expected lo..hi");
  }
}

struct GraphInput {
  bool bipartite = false;
  Graph graph;
  BipartiteGraph bip;
};

inline GraphInput parse_graph_input(const std::string& s) {
  GraphInput in;
  if (s.starts_with("B ")) {
    in.bipartite = true;
    in.bip = from_line(s);
    in.graph = in.bip.to_graph();
  } else {
    in.graph = resolve_graph(s);
  }
  return in;
}

// ---------------------------------------------------------------------------
// output

inline void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << '\n';
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

inline void emit(const RunConfig& cfg, const Json& body, std::ostream& out) {
  Json j{{"schema_version", schema_version}, {"command", cfg.subcommand}};
  for (const auto& [k, v] : body.items()) j[k] = v;
  if (cfg.format == "text") flatten(j, "", out);
  else out << j.dump(2) << '\n';
}

inline Json class_json(const ClassSpec& x) {
  std::vector<std::string> g6;
  for (const auto& h : x.forbidden()) g6.push_back(to_graph6(h));
  return {{"name", x.name()}, {"forbidden", g6}, {"key", x.key()}};
}

inline Json to_json(const HomogeneousWitness& w) {
  return {{"type", w.biclique ? "biclique" : "co-biclique"}, {"a", w.a}, {"b", w.b}, {"method", w.method}};
}

inline Json to_json(const LemmaReport& r) {
  Json cx = Json::array();
  for (const auto& c : r.counterexamples) cx.push_back({{"graph", c.graph}, {"reason", c.reason}});
  return {{"lemma", r.lemma},       {"cap", r.cap},   {"counts", r.counts},          {"checked", r.checked},
          {"failures", r.failures}, {"passed", r.passed}, {"counterexamples", cx}, {"notes", r.notes}};
}

inline Json to_json(const GirthReport& r) {
  return {{"short_cycles", r.short_cycles}, {"deletions_a", r.deletions_a}, {"deletions_b", r.deletions_b},
          {"final_a", r.final_a},           {"final_b", r.final_b},         {"co_biclique", r.co_biclique},
          {"co_biclique_exact", r.co_biclique_exact}, {"cycles_after", r.cycles_after},
          {"attempts", r.attempts},         {"seed_used", r.seed_used},     {"p", r.p}};
}

inline Json to_json(const DecompositionNode& node) {
  Json j{{"kind", to_string(node.kind)}, {"a", BipartiteGraph::bits_of(node.a)}, {"b", BipartiteGraph::bits_of(node.b)}};
  if (node.kind == DecompKind::leaf) {
    j["graph"] = to_line(node.graph);
    if (node.certificate) {
      Json ab = Json::array(), bb = Json::array();
      for (auto m : node.certificate->a_blocks) ab.push_back(BipartiteGraph::bits_of(m));
      for (auto m : node.certificate->b_blocks) bb.push_back(BipartiteGraph::bits_of(m));
      j["interval"] = {{"complemented", node.certificate->complemented},
                       {"closed", node.certificate->closed},
                       {"a_blocks", ab},
                       {"b_blocks", bb}};
    }
  } else {
    Json kids = Json::array();
    for (const auto& c : node.children) kids.push_back(to_json(c));
    j["children"] = kids;
  }
  return j;
}

// ---------------------------------------------------------------------------
// subcommands

inline Cache open_cache(const RunConfig& cfg, std::ostream& err) {
  std::string dir = cfg.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("RAMSEY_CACHE")) dir = env;
  return dir.empty() ? Cache() : Cache(dir, engine_version, &err);
}

inline int default_cap(bool bipartite) { return bipartite ? 6 : 11; }

inline Exit cmd_ramsey(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ClassSpec x = parse_class(cfg.forbid);
  const int cap = cfg.cap < 0 ? default_cap(cfg.bipartite) : cfg.cap;
  Cache cache = open_cache(cfg, err);
  const auto r = cached_engine(cache)(x, cfg.bipartite, cfg.p, cfg.q, cap);
  emit(cfg,
       {{"class", class_json(x)},
        {"bipartite", cfg.bipartite},
        {"p", cfg.p},
        {"q", cfg.q},
        {"cap", cap},
        {"value", r.value},
        {"saturated", r.saturated},
        {"bound", r.saturated ? "exact" : "lower"},
        {"counts", r.counts},
        {"witnesses", r.witnesses}},
       out);
  return Exit::ok;
}

inline Exit cmd_formula(const RunConfig& cfg, std::ostream& out) {
  const auto& f = theorem_formula(cfg.id);
  const int v = formula_value(cfg.id, cfg.a, cfg.b);
  bool exception = false;
  for (const auto& [x, y] : f.exceptions) exception = exception || (x == cfg.a && y == cfg.b);
  emit(cfg,
       {{"theorem", f.id},
        {"title", f.title},
        {"bipartite", f.bipartite},
        {"a", cfg.a},
        {"b", cfg.b},
        {"value", v},
        {"exception", exception}},
       out);
  return Exit::ok;
}

inline Exit cmd_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& f = theorem_formula(cfg.id);
  const int cap = cfg.cap < 0 ? default_cap(f.bipartite) : cfg.cap;
  const Range as = parse_range(cfg.a_range), bs = parse_range(cfg.b_range);
  // reject out-of-range cells before enumerating anything
  for (int a = as.lo; a <= as.hi; ++a)
    for (int b = bs.lo; b <= bs.hi; ++b) formula_value(cfg.id, a, b);
  Cache cache = open_cache(cfg, err);
  const auto rep = cross_check(cfg.id, as, bs, cap, cached_engine(cache));
  Json cells = Json::array();
  for (const auto& c : rep.cells)
    cells.push_back({{"a", c.a},
                     {"b", c.b},
                     {"formula", c.formula},
                     {"engine", c.engine},
                     {"saturated", c.saturated},
                     {"status", to_string(c.status)},
                     {"counts", c.counts},
                     {"witnesses", c.witnesses}});
  emit(cfg,
       {{"theorem", rep.theorem},
        {"bipartite", f.bipartite},
        {"cap", cap},
        {"a", {as.lo, as.hi}},
        {"b", {bs.lo, bs.hi}},
        {"cells", cells},
        {"summary",
         {{"agree", rep.count(CellStatus::agree)},
          {"disagree", rep.count(CellStatus::disagree)},
          {"skipped", rep.count(CellStatus::skipped)}}}},
       out);
  return rep.count(CellStatus::disagree) ? Exit::disagree : Exit::ok;
}

inline Exit cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const auto r = witness_lower(cfg.id, cfg.a, cfg.b);
  const std::string enc = r.bipartite ? to_line(r.bip) : to_graph6(r.graph);
  if (cfg.format == "graph6") {
    out << enc << '\n';
  } else {
    emit(cfg,
         {{"theorem", r.theorem},
          {"a", r.a},
          {"b", r.b},
          {"formula", formula_value(cfg.id, cfg.a, cfg.b)},
          {"construction", r.construction},
          {"bipartite", r.bipartite},
          {"size", r.size()},
          {"graph", enc},
          {"verified", r.verified},
          {"problem", r.problem}},
         out);
  }
  return r.verified ? Exit::ok : Exit::disagree;
}

inline Exit cmd_check(const RunConfig& cfg, std::ostream& out) {
  const GraphInput in = parse_graph_input(cfg.graph);
  const ClassSpec x = parse_class(cfg.forbid);
  const Graph& g = in.graph;
  Json j{{"graph", in.bipartite ? to_line(in.bip) : to_graph6(g)}, {"order", g.order()}, {"class", class_json(x)}};
  const auto v = x.violation(g);
  j["in_class"] = !v.has_value();
  if (v) j["violation"] = {{"forbidden", to_graph6(x.forbidden()[v->index])}, {"embedding", v->embedding}};
  j["clique_number"] = clique_number(g);
  j["independence_number"] = independence_number(g);
  if (g.order() <= chromatic_exact_cap) j["chromatic_number"] = chromatic_number(g);
  if (g.order() <= cochromatic_exact_cap) j["cochromatic_number"] = cochromatic_number(g);
  if (in.bipartite && in.bip.size_a() <= biclique_exact_cap && in.bip.size_b() <= biclique_exact_cap) {
    j["biclique_number"] = biclique_number(in.bip);
    j["co_biclique_number"] = co_biclique_number(in.bip);
  }
  emit(cfg, j, out);
  return Exit::ok;
}

inline Exit cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const BipartiteGraph g = from_line(cfg.graph);
  const auto root = canonical_decompose(g);
  emit(cfg, {{"graph", to_line(g)}, {"indecomposable", root.kind == DecompKind::leaf}, {"tree", to_json(root)}}, out);
  return Exit::ok;
}

inline Exit cmd_find_hom(const RunConfig& cfg, std::ostream& out) {
  const BipartiteGraph g = from_line(cfg.graph);
  const int q = cfg.q > 0 ? cfg.q : cfg.p;
  HomogeneousWitness w;
  int threshold = 0;
  if (cfg.klass == "p2p3") {
    w = p2p3_find_homogeneous(g, cfg.p, q);
    threshold = detail::value_p2p3(cfg.p, q);
  } else if (cfg.klass == "s123") {
    // both sides at once: K_{n,n} contains K_{p,p}, co-K_{n,n} contains co-K_{q,q}
    const int n = std::max(cfg.p, q);
    w = s123_find_homogeneous(g, n);
    const int keep = w.biclique ? cfg.p : q;
    w.a.resize(static_cast<std::size_t>(keep));
    w.b.resize(static_cast<std::size_t>(keep));
    threshold = 6 * n;
  } else {
    throw parse_error("unknown class '" + cfg.klass + "', expected p2p3 or s123");
  }
  const int size = w.biclique ? cfg.p : q;
  if (!homogeneous_ok(g, w, size)) throw error("find-hom: witness failed verification");
  emit(cfg,
       {{"class", cfg.klass}, {"graph", to_line(g)}, {"p", cfg.p}, {"q", q}, {"threshold", threshold},
        {"witness", to_json(w)}, {"verified", true}},
       out);
  return Exit::ok;
}

inline Exit cmd_verify_lemma(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> ids = cfg.id == "all" ? lemma_ids() : std::vector<std::string>{cfg.id};
  for (const auto& id : ids) lemma_spec(id);
  Json reports = Json::array();
  bool passed = true;
  for (const auto& id : ids) {
    const int cap = cfg.cap < 0 ? lemma_spec(id).default_cap : cfg.cap;
    const auto r = verify_structure_lemma(id, cap);
    passed = passed && r.passed;
    reports.push_back(to_json(r));
  }
  emit(cfg, {{"lemmas", reports}, {"passed", passed}}, out);
  return passed ? Exit::ok : Exit::disagree;
}

inline Exit cmd_girth_sample(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples < 1) throw precondition_error("--samples must be at least 1");
  Json samples = Json::array();
  bool certified = true;
  for (int i = 0; i < cfg.samples; ++i) {
    RandomParams params{cfg.n, cfg.k, cfg.seed + static_cast<std::uint64_t>(i)};
    const auto s = sample_girth_construction(params);
    certified = certified && s.report.cycles_after == 0;
    samples.push_back({{"seed", params.seed}, {"graph", to_line(s.graph)}, {"report", to_json(s.report)}});
  }
  RandomParams shown{cfg.n, cfg.k, cfg.seed};
  emit(cfg,
       {{"n", cfg.n}, {"k", cfg.k}, {"seed", cfg.seed}, {"big_n", shown.big_n()}, {"p", shown.p()},
        {"samples", samples}, {"certified", certified}},
       out);
  return certified ? Exit::ok : Exit::disagree;
}

inline Exit cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const ClassSpec x = parse_class(cfg.forbid);
  Json j{{"class", class_json(x)}, {"bipartite", cfg.bipartite}};
  std::vector<std::string> graphs;
  if (cfg.bipartite) {
    if (cfg.na < 0 || cfg.nb < 0 || cfg.na > bipartite_enumeration_cap || cfg.nb > bipartite_enumeration_cap)
      throw size_limit_error("part sizes must lie in 0.." + std::to_string(bipartite_enumeration_cap));
    BipartiteEnumerator e(x, BipartiteCaps{cfg.max_omega, cfg.max_alpha});
    for (const auto& g : e.level(cfg.na, cfg.nb)) graphs.push_back(to_line(g));
    j["na"] = cfg.na;
    j["nb"] = cfg.nb;
  } else {
    if (cfg.n < 0 || cfg.n > enumeration_cap)
      throw size_limit_error("order must lie in 0.." + std::to_string(enumeration_cap));
    ClassEnumerator e(x, Caps{cfg.max_omega, cfg.max_alpha});
    for (const auto& g : e.level(cfg.n)) graphs.push_back(to_graph6(g));
    j["n"] = cfg.n;
  }
  j["count"] = graphs.size();
  if (!cfg.count_only) j["graphs"] = graphs;
  emit(cfg, j, out);
  return Exit::ok;
}

// ---------------------------------------------------------------------------

inline std::string id_footer() {
  std::string s = "Theorem ids:";
  for (const auto& id : theorem_ids()) s += " " + id;
  s += "\nLemma ids:";
  for (const auto& id : lemma_ids()) s += " " + id;
  return s;
}

/// Parses argv and runs one subcommand. Returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Ramsey numbers of hereditary graph classes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(id_footer());
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text", "graph6"}));
  app.add_option("--cache-dir", cfg.cache_dir, "result cache directory (default: $RAMSEY_CACHE)");
  app.add_option("--jobs", cfg.jobs, "worker bound; output is identical for every value")->check(CLI::PositiveNumber);

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->footer(id_footer());
    return s;
  };

  auto* ramsey = sub("ramsey", "exact R_X(p,q) by enumeration (or R^b_X with --bipartite)");
  ramsey->add_option("--forbid", cfg.forbid, "forbidden graphs: catalog names or graph6, comma separated");
  ramsey->add_option("--p", cfg.p, "clique size (biclique order with --bipartite)")->required();
  ramsey->add_option("--q", cfg.q, "independent set size (co-biclique order with --bipartite)")->required();
  ramsey->add_option("--cap", cfg.cap, "largest order enumerated (default 11, bipartite 6 per part)");
  ramsey->add_flag("--bipartite", cfg.bipartite, "bipartite Ramsey number with fixed parts");

  auto* formula = sub("formula", "value of a theorem's formula");
  formula->add_option("id", cfg.id, "theorem id")->required();
  formula->add_option("a", cfg.a, "first parameter")->required();
  formula->add_option("b", cfg.b, "second parameter")->required();

  auto* cross = sub("crosscheck", "formula against exhaustive enumeration on a parameter grid");
  cross->add_option("id", cfg.id, "theorem id")->required();
  cross->add_option("--a,--p", cfg.a_range, "first parameter range lo..hi");
  cross->add_option("--b,--q", cfg.b_range, "second parameter range lo..hi");
  cross->add_option("--cap", cfg.cap, "largest order enumerated (default 11, bipartite 6 per part)");

  auto* construct = sub("construct", "lower-bound witness on R-1 vertices, verified");
  construct->add_option("id", cfg.id, "theorem id")->required();
  construct->add_option("a", cfg.a, "first parameter")->required();
  construct->add_option("b", cfg.b, "second parameter")->required();

  auto* check = sub("check", "class membership and invariants of one graph");
  check->add_option("--graph", cfg.graph, "graph6, catalog name, or bipartite line 'B nA nB hex'")->required();
  check->add_option("--forbid", cfg.forbid, "forbidden graphs, comma separated");

  auto* decompose = sub("decompose", "canonical decomposition of a bipartite graph");
  decompose->add_option("--graph", cfg.graph, "bipartite line 'B nA nB hex'")->required();

  auto* findhom = sub("find-hom", "constructive K_{p,p} or co-K_{q,q} finder");
  findhom->add_option("--class", cfg.klass, "p2p3 or s123")->required()->check(CLI::IsMember({"p2p3", "s123"}));
  findhom->add_option("--graph", cfg.graph, "bipartite line 'B nA nB hex'")->required();
  findhom->add_option("--p", cfg.p, "biclique order")->required();
  findhom->add_option("--q", cfg.q, "co-biclique order (default p)");

  auto* lemma = sub("verify-lemma", "check a structure lemma on every class member up to the cap");
  lemma->add_option("id", cfg.id, "lemma id or 'all'")->required();
  lemma->add_option("--cap", cfg.cap, "largest order (default 8, finiteness lemmas 10)");

  auto* girth = sub("girth-sample", "random bipartite graph with short cycles destroyed");
  girth->add_option("--n", cfg.n, "vertices kept per part")->required();
  girth->add_option("--k", cfg.k, "cycles of length <= k are destroyed");
  girth->add_option("--seed", cfg.seed, "seed of the first sample");
  girth->add_option("--samples", cfg.samples, "samples, seeded seed, seed+1, ...");

  auto* enumerate = sub("enumerate", "isomorph-free members of a class");
  enumerate->add_option("--forbid", cfg.forbid, "forbidden graphs, comma separated");
  enumerate->add_option("--n", cfg.n, "order");
  enumerate->add_flag("--bipartite", cfg.bipartite, "bipartite graphs with fixed parts");
  enumerate->add_option("--na", cfg.na, "part A size (bipartite)");
  enumerate->add_option("--nb", cfg.nb, "part B size (bipartite)");
  enumerate->add_option("--max-omega", cfg.max_omega, "clique number cap (biclique cap with --bipartite)");
  enumerate->add_option("--max-alpha", cfg.max_alpha, "independence cap (co-biclique cap with --bipartite)");
  enumerate->add_flag("--count-only", cfg.count_only, "omit the graph list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(Exit::usage);
  }
  for (auto* s : app.get_subcommands()) cfg.subcommand = s->get_name();
  if (cfg.format == "graph6" && cfg.subcommand != "construct") {
    err << "error: --format graph6 is only available for construct\n";
    return static_cast<int>(Exit::usage);
  }
  try {
    Exit e = Exit::ok;
    if (cfg.subcommand == "ramsey") e = cmd_ramsey(cfg, out, err);
    else if (cfg.subcommand == "formula") e = cmd_formula(cfg, out);
    else if (cfg.subcommand == "crosscheck") e = cmd_crosscheck(cfg, out, err);
    else if (cfg.subcommand == "construct") e = cmd_construct(cfg, out);
    else if (cfg.subcommand == "check") e = cmd_check(cfg, out);
    else if (cfg.subcommand == "decompose") e = cmd_decompose(cfg, out);
    else if (cfg.subcommand == "find-hom") e = cmd_find_hom(cfg, out);
    else if (cfg.subcommand == "verify-lemma") e = cmd_verify_lemma(cfg, out);
    else if (cfg.subcommand == "girth-sample") e = cmd_girth_sample(cfg, out);
    else if (cfg.subcommand == "enumerate") e = cmd_enumerate(cfg, out);
    return static_cast<int>(e);
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const size_limit_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const error& e) {
    // a construction or finder failed its own postcondition
    err << "verification failed: " << e.what() << '\n';
    return static_cast<int>(Exit::disagree);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return static_cast<int>(Exit::usage);
}

}  // namespace linram::cli
