// One PASS/FAIL line per acceptance criterion. All comparisons are exact.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "generators.hpp"
#include "linram/catalog.hpp"
#include "linram/enumerate.hpp"
#include "linram/graph6.hpp"
#include "linram/invariants.hpp"
#include "linram/lemmas.hpp"
#include "linram/structure/kneser.hpp"
#include "linram/structure/p2p3.hpp"
#include "linram/structure/s123.hpp"
#include "oracles.hpp"

using namespace linram;
using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(LINRAM_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json cli_json(const std::string& args, int want_status = 0) {
  const auto r = cli(args);
  if (r.status != want_status) throw std::runtime_error("'" + args + "' exited " + std::to_string(r.status));
  return json::parse(r.out);
}

// every cell agrees and saturates; returns a short summary
bool crosscheck_agrees(const std::string& args, std::string& detail, json* keep = nullptr) {
  const auto j = cli_json("crosscheck " + args);
  bool ok = !j["cells"].empty();
  std::ostringstream s;
  for (const auto& c : j["cells"]) {
    const bool good = c["status"] == "agree" && c["saturated"] == true && c["engine"] == c["formula"];
    ok = ok && good;
    s << " (" << c["a"] << "," << c["b"] << ")=" << c["engine"] << (good ? "" : "!=" + c["formula"].dump());
  }
  detail += j["theorem"].get<std::string>() + ":" + s.str() + ";";
  if (keep) *keep = j;
  return ok;
}

const json& cell(const json& report, int a, int b) {
  for (const auto& c : report["cells"])
    if (c["a"] == a && c["b"] == b) return c;
  throw std::runtime_error("missing cell");
}

int failures = 0;

void criterion(int n, double limit_s, const std::function<bool(std::string&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    ok = false;
    detail += " over the time limit";
  }
  failures += ok ? 0 : 1;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << " [" << secs << " s, limit " << limit_s << " s]"
            << std::endl;
}

bool witness_verified(const BipartiteGraph& g, const HomogeneousWitness& w, int n) {
  return static_cast<int>(w.a.size()) == n && static_cast<int>(w.b.size()) == n && oracle::homogeneous(g, w.a, w.b, w.biclique);
}

}  // namespace

int main() {
  criterion(1, 120, [](std::string& d) { return crosscheck_agrees("thm_2k2_c4 --a 3..5 --b 3..5 --cap 10", d); });

  criterion(2, 600, [](std::string& d) {
    json j;
    bool ok = crosscheck_agrees("thm_claw_coclaw --a 3..4 --b 3..4 --cap 10", d, &j);
    const auto& c = cell(j, 4, 4);
    const std::string rook = to_graph6(canonical_label(rook3()));
    bool found = false;
    for (const auto& w : c["witnesses"]) found = found || w == rook;
    ok = ok && c["engine"] == 10 && found;
    d += found ? " rook3 among the (4,4) witnesses" : " rook3 missing from the (4,4) witnesses";
    return ok;
  });

  criterion(3, 600, [](std::string& d) {
    json j;
    bool ok = crosscheck_agrees("thm_diamond --a 3..4 --b 3..4 --cap 10", d, &j);
    return ok && cell(j, 3, 3)["engine"] == 6 && cell(j, 4, 4)["engine"] == 10;
  });

  criterion(4, 600, [](std::string& d) {
    json j;
    bool ok = crosscheck_agrees("thm_2k2_diamond --a 3..4 --b 3..4 --cap 10", d, &j);
    return ok && cell(j, 4, 4)["engine"] == 10;
  });

  criterion(5, 900, [](std::string& d) {
    const bool x = crosscheck_agrees("thm_p4c4coclaw --a 3..5 --b 3..4 --cap 10", d);
    const bool y = crosscheck_agrees("thm_cdpawclaw --a 3..5 --b 3..6 --cap 11", d);
    return x && y;
  });

  criterion(6, 600, [](std::string& d) {
    json j;
    bool ok = crosscheck_agrees("thm_p2p3_bip --p 2..2 --q 2..3 --cap 6", d, &j);
    return ok && cell(j, 2, 2)["engine"] == 4 && cell(j, 2, 3)["engine"] == 6;
  });

  criterion(7, 1800, [](std::string& d) {
    bool ok = true;
    int lemmas = 0;
    for (const auto& spec : lemma_registry()) {
      const int cap = spec.kind == LemmaKind::bipartite ? 8 : 10;
      const auto j = cli_json("verify-lemma " + spec.id + " --cap " + std::to_string(cap));
      const auto& l = j["lemmas"][0];
      bool good = l["passed"] == true && l["failures"] == 0;
      if (spec.kind == LemmaKind::finiteness) {
        const auto& counts = l["counts"];
        good = good && counts.size() == 11 && counts[10] == 0 && counts[9].get<int>() >= 1;
      }
      ++lemmas;
      if (!good) d += " " + spec.id + " failed;";
      ok = ok && good;
    }
    d += " " + std::to_string(lemmas) + " lemmas and claims, zero counterexamples";
    return ok && lemmas > 0;
  });

  criterion(8, 300, [](std::string& d) {
    const auto k = kneser(9, 3);
    const int omega = clique_number(k.graph);
    const auto s = pigeonhole_independent_set(k);
    bool independent = true;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) independent = independent && !k.graph.adjacent(s[i], s[j]);
    const int chi = chromatic_number(kneser(6, 2).graph);
    d += "omega(KG(9,3))=" + std::to_string(omega) + " pigeonhole=" + std::to_string(s.size()) + " of " +
         std::to_string(k.graph.order()) + " chi(KG(6,2))=" + std::to_string(chi) + " (a-2b+2=" + std::to_string(6 - 4 + 2) + ")";
    return omega == 3 && s.size() == 28 && 3 * s.size() >= 84 && independent && chi == 6 - 2 * 2 + 2;
  });

  criterion(9, 1200, [](std::string& d) {
    bool ok = true;
    for (const auto& [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
      const int m = std::max(p, q) + p + q - 2;
      BipartiteEnumerator e(ClassSpec({parse_graph_name("P2+P3")}), BipartiteCaps{});
      int good = 0, total = 0;
      for (const auto& g : e.level(m, m)) {
        ++total;
        try {
          const auto w = p2p3_find_homogeneous(g, p, q);
          good += witness_verified(g, w, w.biclique ? p : q);
        } catch (const std::exception&) {
        }
      }
      d += " p2p3(" + std::to_string(p) + "," + std::to_string(q) + ") " + std::to_string(good) + "/" + std::to_string(total) + ";";
      ok = ok && total > 0 && good == total;
    }
    std::mt19937_64 rng(2024);
    for (int n = 1; n <= 2; ++n) {
      int good = 0, total = 0, drawn = 0;
      while (total < 200 && drawn < 200000) {
        ++drawn;
        const auto g0 = gen::composed(rng, 6 * n, 12 * n);
        auto pa = oracle::random_permutation(rng, g0.size_a()), pb = oracle::random_permutation(rng, g0.size_b());
        pa.resize(static_cast<std::size_t>(6 * n));
        pb.resize(static_cast<std::size_t>(6 * n));
        const auto g = g0.induced(pa, pb);
        if (oracle::contains_induced(g.to_graph(), s123())) continue;
        ++total;
        try {
          const auto w = s123_find_homogeneous(g, n);
          good += witness_verified(g, w, n);
        } catch (const std::exception&) {
        }
      }
      d += " s123 n=" + std::to_string(n) + " " + std::to_string(good) + "/" + std::to_string(total) + ";";
      ok = ok && total == 200 && good == total;
    }
    return ok;
  });

  criterion(10, 120, [](std::string& d) {
    const auto j = cli_json("girth-sample --n 16 --k 6 --seed 1 --samples 50");
    bool ok = j["certified"] == true && j["samples"].size() == 50;
    int certified = 0, replayed = 0;
    for (const auto& s : j["samples"]) {
      const auto g = from_line(s["graph"].get<std::string>());
      const bool girth = s["report"]["cycles_after"] == 0 && oracle::short_cycles(g, 6) == 0 && g.size_a() == 16 && g.size_b() == 16;
      certified += girth;
      const auto again = cli_json("girth-sample --n 16 --k 6 --seed " + s["seed"].dump() + " --samples 1");
      replayed += again["samples"][0]["graph"] == s["graph"] && again["samples"][0]["report"] == s["report"];
    }
    d += std::to_string(certified) + "/50 girth > 6, " + std::to_string(replayed) + "/50 replayed identically";
    return ok && certified == 50 && replayed == 50;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
