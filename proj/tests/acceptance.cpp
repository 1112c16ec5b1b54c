// Acceptance gate: every release-blocking behavior, one line of output per
// criterion.  Exits nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gca/certificate.hpp"
#include "gca/hereditary.hpp"
#include "gca/stability.hpp"
#include "gca/stabilize.hpp"
#include "gca/trace.hpp"
#include "support/cli_cases.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gca;

namespace {

std::vector<std::string> g_notes;  // failure details for the current criterion

void note(const std::string& msg) {
  if (g_notes.size() < 8) g_notes.push_back(msg);
}

// ---------------------------------------------------------------------------
// 1. The one-vertex graph with an infinite self-loop: not stable as given,
//    stable once every vertex grows a head.  Fast enough to feel instant.
bool criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = PresentedGraph::make(
      {"u"}, {{"u", "u", Multiplicity::omega()}}, {});
  const auto before = is_stable(g);
  const auto after = is_stable(stabilize_graph(g));
  const auto dt = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  bool ok = true;
  if (before.stable) {
    ok = false;
    note("expected NOT_STABLE before stabilization");
  }
  if (before.loop_check.pass || before.loop_check.witness != "u") {
    ok = false;
    note("expected the loop check to fail at u");
  }
  if (!after.stable) {
    ok = false;
    note("expected STABLE after stabilize_graph");
  }
  if (dt >= 1.0) {
    ok = false;
    note("took " + std::to_string(dt) + "s, budget is 1s");
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 2. The two decision routes agree on 1000 random presented graphs
//    (up to 8 base vertices, multiplicities 1/2/3/omega, random heads).
bool criterion_2() {
  std::mt19937_64 rng(90210);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const auto g = testgen::random_graph(rng);
    if (is_stable(g).stable != is_stable_via_T(g).stable) {
      ok = false;
      note("route disagreement at corpus index " + std::to_string(i));
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 3. Source-free graphs: stable exactly when every vertex is left infinite.
//    With sources, all-left-infinite still forces stability.
bool criterion_3() {
  std::mt19937_64 rng(31415);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const auto g = testgen::random_graph(rng, {.source_free = true});
    bool all_li = true;
    for (const auto& v : g.vertex_ids())
      if (!is_left_infinite(g, Vertex{v})) all_li = false;
    if (is_stable(g).stable != all_li) {
      ok = false;
      note("source-free equivalence broken at index " + std::to_string(i));
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const auto g = testgen::random_graph(rng);
    bool all_li = true;
    for (const auto& v : g.vertex_ids())
      if (!is_left_infinite(g, Vertex{v})) all_li = false;
    if (all_li && !is_stable(g).stable) {
      ok = false;
      note("all-left-infinite graph judged unstable at index " +
           std::to_string(i));
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 4. Both stabilizations always yield stable graphs.
bool criterion_4() {
  std::mt19937_64 rng(27182);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const auto g = testgen::random_graph(rng);
    if (!is_stable(stabilize_graph(g)).stable) {
      ok = false;
      note("stabilize_graph output unstable at index " + std::to_string(i));
    }
    if (!is_stable(stabilize_minimal(g)).stable) {
      ok = false;
      note("stabilize_minimal output unstable at index " + std::to_string(i));
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 5. Zero sets of 500 cone-sampled traces are hereditary and saturated.
bool criterion_5() {
  std::mt19937_64 rng(16180);
  bool ok = true;
  int produced = 0;
  while (produced < 500) {
    const auto g = testgen::random_graph(rng);
    if (g.vertex_ids().empty()) continue;
    const auto t = testgen::random_cone_trace(g, rng);
    if (!is_graph_trace(g, t)) {
      ok = false;
      note("cone sample failed the trace predicate");
      continue;
    }
    ++produced;
    const auto z = zero_set(g, t);
    if (!is_hereditary(g, z)) {
      ok = false;
      note("zero set not hereditary at sample " + std::to_string(produced));
    } else if (!is_saturated(g, z)) {
      ok = false;
      note("zero set not saturated at sample " + std::to_string(produced));
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 6. saturate() is the minimal saturated hereditary superset: it equals the
//    meet of every enumerated saturated hereditary superset.  Checked on a
//    fixed exhaustive family (all 1- and 2-vertex graphs over multiplicities
//    {none, 1, omega} with all head masks) plus 200 random graphs.
bool check_saturation_minimality(const PresentedGraph& g, const VertexSet& h0,
                                 int tag) {
  const auto closed = hereditary_closure(g, h0);
  const auto sat = saturate(g, closed);
  std::set<std::string> meet;
  bool first = true;
  for (const auto& cand : enumerate_saturated_hereditary(g)) {
    bool contains = true;
    for (const auto& v : closed.base())
      if (cand.base().count(v) == 0) contains = false;
    if (!contains) continue;
    if (first) {
      meet = cand.base();
      first = false;
    } else {
      std::set<std::string> tmp;
      for (const auto& v : meet)
        if (cand.base().count(v)) tmp.insert(v);
      meet = tmp;
    }
  }
  if (first || sat.base() != meet) {
    note("saturation at case " + std::to_string(tag) +
         " is not the meet of its saturated supersets");
    return false;
  }
  return true;
}

bool criterion_6() {
  bool ok = true;
  int tag = 0;
  // fixed family: every multigraph on {a} and {a,b} with edge multiplicity
  // in {absent, 1, omega}, every head mask, every base subset as seed
  const Multiplicity choices[] = {Multiplicity::finite(1),
                                  Multiplicity::omega()};
  for (int nv = 1; nv <= 2; ++nv) {
    std::vector<std::string> ids(nv == 1 ? std::vector<std::string>{"a"}
                                         : std::vector<std::string>{"a", "b"});
    const int pairs = nv * nv;
    int total_adj = 1;
    for (int i = 0; i < pairs; ++i) total_adj *= 3;
    for (int adj = 0; adj < total_adj; ++adj) {
      std::vector<EdgeSpec> edges;
      int code = adj;
      for (int i = 0; i < pairs; ++i, code /= 3) {
        const int c = code % 3;
        if (c == 0) continue;
        edges.push_back(
            {ids[i / nv], ids[i % nv], choices[c - 1]});
      }
      for (int hm = 0; hm < (1 << nv); ++hm) {
        std::vector<std::string> heads;
        for (int i = 0; i < nv; ++i)
          if (hm & (1 << i)) heads.push_back(ids[i]);
        const auto g = PresentedGraph::make(ids, edges, heads);
        for (int sm = 0; sm < (1 << nv); ++sm) {
          std::set<std::string> seed;
          for (int i = 0; i < nv; ++i)
            if (sm & (1 << i)) seed.insert(ids[i]);
          if (!check_saturation_minimality(g, VertexSet(seed, {}), ++tag))
            ok = false;
        }
      }
    }
  }
  // plus 200 random graphs with random seeds
  std::mt19937_64 rng(14142);
  for (int i = 0; i < 200; ++i) {
    const auto g = testgen::random_graph(rng, {.max_vertices = 6});
    const auto h0 = testgen::random_vertex_set(g, rng);
    if (!check_saturation_minimality(g, h0, ++tag)) ok = false;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 7. Exact agreement with the independent elimination oracle.
bool criterion_7() {
  std::mt19937_64 rng(17320);
  bool ok = true;
  const auto check = [&ok](const PresentedGraph& g, int tag) {
    if (nonzero_bounded_trace(g).nonzero != oracle::nonzero_trace_fm(g)) {
      ok = false;
      note("oracle mismatch at case " + std::to_string(tag));
    }
  };
  int tag = 0;
  for (const auto& g : {fixtures::g1(), fixtures::g2(), fixtures::g3(),
                        fixtures::g4(), fixtures::g5(), fixtures::g6(),
                        fixtures::g7(), fixtures::g8(), fixtures::g9()})
    check(g, ++tag);
  for (int i = 0; i < 500; ++i)
    check(testgen::random_graph(rng, {.max_vertices = 6}), ++tag);
  return ok;
}

// ---------------------------------------------------------------------------
// 8. Certificates: everything we produce verifies; a mutation suite of
//    broken certificates is rejected without exception.
bool criterion_8() {
  bool ok = true;
  std::mt19937_64 rng(24494);
  int produced = 0;
  int rejected_mutations = 0;
  int expected_mutations = 0;

  const auto expect_reject = [&](const PresentedGraph& g,
                                 const ComparisonCertificate& c,
                                 const std::string& what) {
    ++expected_mutations;
    if (verify_certificate(g, c).ok) {
      ok = false;
      note("mutation not rejected: " + what);
    } else {
      ++rejected_mutations;
    }
  };

  // deterministic edge-deletion mutation: the certificate's path crosses a
  // base edge that we then remove from the graph
  {
    const auto g = PresentedGraph::make(
        {"a", "b"}, {{"a", "b", Multiplicity::finite(1)}}, {"a"});
    const auto cert = find_witness_single(g, Vertex{"b"}, {Vertex{"b"}});
    if (!verify_certificate(g, cert).ok) {
      ok = false;
      note("baseline certificate for edge-deletion case did not verify");
    }
    const auto g_cut = PresentedGraph::make({"a", "b"}, {}, {"a"});
    expect_reject(g_cut, cert, "deleted path edge");
  }

  // deterministic SPLIT-on-singular mutation: w is a sink in g5
  {
    const auto g5 = fixtures::g5();
    auto cert = find_witness_single(g5, Vertex{"v"}, {});
    CertNode split;
    split.kind = CertNode::Kind::SPLIT;
    split.vertex = Vertex{"w"};
    cert.trees[0].children[0] = split;
    expect_reject(g5, cert, "SPLIT on a singular vertex");
  }

  // randomized production + avoid-violation and edge-deletion mutations
  for (int i = 0; i < 600 && produced < 200; ++i) {
    const auto g = testgen::random_graph(rng, {.max_vertices = 6});
    if (g.vertex_ids().empty()) continue;
    const auto& ids = g.vertex_ids();
    const Vertex v{ids[rng() % ids.size()]};
    ComparisonCertificate cert;
    try {
      cert = find_witness_single(g, v, {v});
    } catch (const WitnessUnavailableError&) {
      continue;
    }
    ++produced;
    if (!verify_certificate(g, cert).ok) {
      ok = false;
      note("produced witness rejected at sample " + std::to_string(produced));
    }

    // avoid violation: the avoid set may not touch the dominating set
    if (!cert.dominating.empty()) {
      auto bad = cert;
      bad.avoid.insert(bad.dominating.front());
      expect_reject(g, bad, "avoid-set violation");
    }

    // edge deletion: find a base edge used by some REACH path and cut it
    const CertNode* reach = nullptr;
    std::vector<const CertNode*> stack;
    for (const auto& t : cert.trees) stack.push_back(&t);
    std::pair<std::string, std::string> cut;
    while (!stack.empty() && !reach) {
      const auto* n = stack.back();
      stack.pop_back();
      if (n->kind == CertNode::Kind::REACH) {
        for (std::size_t k = 0; k + 1 < n->path.size(); ++k) {
          if (!n->path[k].is_head() && !n->path[k + 1].is_head()) {
            reach = n;
            cut = {n->path[k].base, n->path[k + 1].base};
            break;
          }
        }
      }
      for (const auto& c : n->children) stack.push_back(&c);
    }
    if (reach) {
      std::vector<EdgeSpec> kept;
      for (const auto& e : g.edge_specs())
        if (!(e.src == cut.first && e.dst == cut.second)) kept.push_back(e);
      std::vector<std::string> hs(g.heads().begin(), g.heads().end());
      const auto g_cut = PresentedGraph::make(g.vertex_ids(), kept, hs);
      expect_reject(g_cut, cert, "deleted path edge (random)");
    }
  }
  if (produced < 200) {
    ok = false;
    note("only produced " + std::to_string(produced) + " witnesses");
  }
  if (expected_mutations < 100) {
    ok = false;
    note("mutation suite too small: " + std::to_string(expected_mutations));
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 9. Pushforward along the zero-set quotient is a trace of the same norm.
bool criterion_9() {
  std::mt19937_64 rng(36787);
  bool ok = true;
  int admitted = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto g = testgen::random_graph(rng);
    const auto verdict = nonzero_bounded_trace(g);
    if (!verdict.nonzero) continue;
    ++admitted;
    const auto& t = verdict.witness;
    const auto [q, p] = pushforward_trace(g, t);
    if (q.vertex_ids().empty()) {
      ok = false;
      note("nonzero trace pushed to the empty graph at index " +
           std::to_string(i));
      continue;
    }
    if (!is_graph_trace(q, p)) {
      ok = false;
      note("pushforward not a trace at index " + std::to_string(i));
    } else if (!(trace_norm(q, p) == trace_norm(g, t))) {
      ok = false;
      note("pushforward norm drift at index " + std::to_string(i));
    }
  }
  if (admitted < 100) {
    ok = false;
    note("corpus admitted only " + std::to_string(admitted) +
         " nonzero traces");
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 10. CLI transcripts are byte-identical to the frozen golden files.
bool criterion_10() {
  bool ok = true;
  for (const auto& c : clicases::golden_cases()) {
    const auto res = clicases::run_cli(
        GCA_CLI_PATH, clicases::subcommand_of(c.name) + " " +
                          std::string(GCA_FIXTURE_DIR) + "/" + c.fixture_file +
                          " " + c.args);
    const auto want =
        clicases::slurp(std::string(GCA_GOLDEN_DIR) + "/" + c.name + ".out");
    if (res.exit_code != c.exit_code) {
      ok = false;
      note(c.name + ": exit " + std::to_string(res.exit_code) + ", want " +
           std::to_string(c.exit_code));
    }
    if (want.empty() || res.out != want) {
      ok = false;
      note(c.name + ": stdout differs from golden file");
    }
  }
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    bool (*fn)();
  };
  const std::vector<Criterion> criteria = {
      {1, "infinite self-loop graph: NOT_STABLE, STABLE once stabilized, <1s",
       criterion_1},
      {2, "both decision routes agree on 1000 random graphs", criterion_2},
      {3, "left-infinite criterion: equivalence without sources, sufficiency "
          "always",
       criterion_3},
      {4, "full and minimal stabilization both yield stable graphs",
       criterion_4},
      {5, "zero sets of 500 cone-sampled traces are hereditary and saturated",
       criterion_5},
      {6, "saturation is minimal against exhaustive enumeration",
       criterion_6},
      {7, "trace feasibility matches the elimination oracle exactly",
       criterion_7},
      {8, "certificates: produced witnesses verify, mutations are rejected",
       criterion_8},
      {9, "pushforward traces stay traces with the exact same norm",
       criterion_9},
      {10, "CLI output is byte-identical to the golden transcripts",
       criterion_10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    g_notes.clear();
    const bool pass = c.fn();
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", c.id,
                c.label);
    for (const auto& n : g_notes) std::printf("       %s\n", n.c_str());
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
