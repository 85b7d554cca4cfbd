#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "pathgraph/generators.hpp"
#include "pathgraph/oracle.hpp"
#include "pathgraph/recognition.hpp"
#include "support.hpp"

using namespace pathgraph;
using pathgraph::test::load_fixture;

namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), e);
}

const BlockTrace* find_block(const SeparatorTrace& t, SetLabel label) {
  for (const auto& b : t.blocks) {
    if (b.label == label) return &b;
  }
  return nullptr;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("figure 1 is a path graph") {
  auto g = load_fixture("figure1.txt");
  RecognizerOptions opt;
  opt.check_invariants = true;
  auto rec = recognize_path_graph(g.graph, opt);
  REQUIRE(rec.accepted);
  CHECK_FALSE(rec.rejection);
  CHECK(rec.clique_count == 10);
  REQUIRE(rec.tree);
  CHECK(rec.tree->cliques.size() == 10);
  CHECK(rec.tree->tree.node_count == 10);
  CHECK(check_certificate(g.graph, *rec.tree, false));
  CHECK(rec.invariants.ok());
}

TEST_CASE("C4 is rejected as non-chordal") {
  auto rec = recognize_path_graph(load_fixture("c4.txt").graph);
  CHECK_FALSE(rec.accepted);
  CHECK_FALSE(rec.tree);
  REQUIRE(rec.rejection);
  CHECK(rec.rejection->reason == RejectReason::NonChordal);
  CHECK(rec.rejection->stage == "chordality");
}

TEST_CASE("base cases") {
  for (int n : {1, 2, 5}) {
    auto rec = recognize_path_graph(test::complete_graph(n));
    REQUIRE(rec.accepted);
    CHECK(rec.clique_count == 1);
    CHECK(rec.tree->tree.edges.empty());
  }
  std::vector<Edge> e{{0, 1}, {1, 2}};
  auto rec = recognize_path_graph(Graph::from_edges(3, e));
  REQUIRE(rec.accepted);
  CHECK(rec.tree->tree.edges.size() == 1);
}

TEST_CASE("a claw of cliques is not a path graph") {
  auto g = load_fixture("claw_of_cliques.txt");
  CHECK_FALSE(oracle_is_path_graph(g.graph));
  auto rec = recognize_path_graph(g.graph);
  CHECK_FALSE(rec.accepted);
  REQUIRE(rec.rejection);
  CHECK(rec.rejection->reason == RejectReason::FullAntipodalTriangle);
  CHECK(rec.rejection->depth == 0);
  CHECK(test::relabel(g, rec.rejection->separator) == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(test::relabel(g, rec.rejection->vertices) == std::vector<std::int64_t>{1});
}

TEST_CASE("figure 3 trace at separator {1,2,3,4,5}") {
  auto g = load_fixture("figure1.txt");
  RecognizerOptions opt;
  opt.collect_trace = true;
  opt.check_invariants = true;
  opt.first_separator = test::dense(g, {1, 2, 3, 4, 5});
  auto rec = recognize_path_graph(g.graph, opt);
  REQUIRE(rec.accepted);
  CHECK(rec.invariants.ok());
  REQUIRE_FALSE(rec.trace.empty());
  const auto& t = rec.trace.back();
  CHECK(t.depth == 0);
  CHECK(test::relabel(g, t.separator) == std::vector<std::int64_t>{1, 2, 3, 4, 5});
  REQUIRE(t.private_sets.size() == 5);

  // Component k is gamma_{k+1}.
  CHECK(t.uppers == std::vector<int>{2, 4});
  const auto* d1 = find_block(t, {1, 0});
  const auto* d2 = find_block(t, {2, 0});
  const auto* d12 = find_block(t, {1, 2});
  REQUIRE(d1);
  REQUIRE(d2);
  REQUIRE(d12);
  CHECK(t.blocks.size() == 3);
  CHECK(sorted(d1->members) == std::vector<int>{1, 2});
  CHECK(sorted(d2->members) == std::vector<int>{0, 4});
  CHECK(d12->members == std::vector<int>{3});

  // Darts: gamma3 -> gamma2 and gamma5 -> gamma1.
  auto parents_of = [](const BlockTrace& b, int id) {
    auto it = std::find(b.members.begin(), b.members.end(), id);
    return b.dag_parents[static_cast<std::size_t>(it - b.members.begin())];
  };
  CHECK(parents_of(*d1, 1) == std::vector<int>{2});
  CHECK(parents_of(*d1, 2).empty());
  CHECK(parents_of(*d2, 0) == std::vector<int>{4});
  CHECK(parents_of(*d12, 3).empty());

  std::map<std::pair<int, int>, Relation> rel;
  for (const auto& r : t.relations) rel[{r.a, r.b}] = r.relation;
  CHECK(rel.size() == 10);
  const std::map<std::pair<int, int>, Relation> expected{
      {{0, 1}, Relation::Antipodal},      {{0, 2}, Relation::Antipodal},      {{0, 3}, Relation::Unattached},
      {{0, 4}, Relation::RightDominates}, {{1, 2}, Relation::RightDominates}, {{1, 3}, Relation::Antipodal},
      {{1, 4}, Relation::Antipodal},      {{2, 3}, Relation::LeftDominates},  {{2, 4}, Relation::Antipodal},
      {{3, 4}, Relation::RightDominates}};
  CHECK(rel == expected);
  CHECK(t.classes.size() == 5);

  // f(gamma2) = 1 by the upper rule, f(gamma1) = 2, f(gamma4) = 2 across D_1 and D_2.
  CHECK(t.colors == Coloring{2, 1, 1, 2, 2});
}

TEST_CASE("forced separator contract") {
  auto g = load_fixture("figure1.txt");
  RecognizerOptions opt;
  opt.first_separator = test::dense(g, {2, 3, 4});
  CHECK_THROWS_AS(recognize_path_graph(g.graph, opt), ContractError);
}

TEST_CASE("every internal clique of figure 1 works as the first separator") {
  auto g = load_fixture("figure1.txt");
  auto cs = maximal_cliques(g.graph, mcs_order(g.graph));
  int tried = 0;
  for (const auto& k : cs.cliques) {
    auto pieces = connected_components(induced_subgraph(g.graph, [&] {
                                         VertexSet rest;
                                         for (Vertex v = 0; v < g.graph.vertex_count(); ++v) {
                                           if (!contains(k, v)) rest.push_back(v);
                                         }
                                         return rest;
                                       }())
                                           .graph);
    if (pieces.size() < 2) continue;
    RecognizerOptions opt;
    opt.first_separator = k;
    opt.check_invariants = true;
    auto rec = recognize_path_graph(g.graph, opt);
    REQUIRE(rec.accepted);
    CHECK(check_certificate(g.graph, *rec.tree, false));
    CHECK(rec.invariants.ok());
    ++tried;
  }
  CHECK(tried >= 5);
}

TEST_CASE("disconnected input") {
  auto a = load_fixture("figure1.txt").graph;
  auto b = load_fixture("figure2.txt").graph;
  auto g = disjoint_union(a, b);
  auto rec = recognize_path_graph(g);
  REQUIRE(rec.accepted);
  CHECK(rec.clique_count == 15);
  CHECK(check_certificate(g, *rec.tree, false));

  auto bad = disjoint_union(a, load_fixture("claw_of_cliques.txt").graph);
  CHECK_FALSE(recognize_path_graph(bad).accepted);
  auto holes = disjoint_union(a, load_fixture("c4.txt").graph);
  CHECK(recognize_path_graph(holes).rejection->reason == RejectReason::NonChordal);
}

TEST_CASE("pinned rejection witnesses") {
  struct Case {
    const char* file;
    const char* stage;
    RejectReason reason;
  };
  const Case cases[] = {
      {"reject/path_upper_set.txt", "upper-set", RejectReason::FullAntipodalTriangle},
      {"reject/path_quotient.txt", "quotient", RejectReason::FullAntipodalTriangle},
      {"reject/path_dag.txt", "dag", RejectReason::FullAntipodalTriangle},
      {"reject/path_extend_single.txt", "extend-single", RejectReason::ColoringConflict},
      {"reject/path_cross_pairs.txt", "cross-pairs", RejectReason::CrossPairConflict},
      {"reject/path_extend_pair.txt", "extend-pair", RejectReason::ColoringConflict},
  };
  for (const auto& c : cases) {
    CAPTURE(c.file);
    auto g = load_fixture(c.file);
    CHECK_FALSE(oracle_is_path_graph(g.graph));
    RecognizerOptions opt;
    opt.check_invariants = true;
    auto rec = recognize_path_graph(g.graph, opt);
    REQUIRE_FALSE(rec.accepted);
    CHECK(rec.rejection->stage == c.stage);
    CHECK(rec.rejection->reason == c.reason);
    CHECK(rec.rejection->depth >= 0);
    CHECK(rec.invariants.ok());
  }
}

TEST_CASE("property: agreement with the oracle and checked certificates") {
  std::mt19937_64 rng(21);
  int negatives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 4 + static_cast<int>(rng() % 4);
    Graph g = random_chordal(k, 2 + static_cast<int>(rng() % 5), rng());
    RecognizerOptions opt;
    opt.check_invariants = true;
    auto rec = recognize_path_graph(g, opt);
    const bool truth = oracle_is_path_graph(g);
    negatives += truth ? 0 : 1;
    CHECK(rec.accepted == truth);
    if (rec.accepted) CHECK(check_certificate(g, *rec.tree, false));
    CHECK(rec.invariants.ok());
  }
  CHECK(negatives >= 20);
}

TEST_CASE("property: generated positives are accepted") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    for (Graph g : {random_path_graph_positive(12, seed), random_interval_graph(12, seed),
                    random_rooted_path_positive(12, seed)}) {
      auto rec = recognize_path_graph(g);
      REQUIRE(rec.accepted);
      CHECK(check_certificate(g, *rec.tree, false));
    }
  }
}

TEST_CASE("property: the answer does not depend on vertex numbering") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = random_chordal(6, 4, rng());
    std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (auto [a, b] : g.edges()) {
      Vertex x = perm[static_cast<std::size_t>(a)], y = perm[static_cast<std::size_t>(b)];
      e.emplace_back(std::min(x, y), std::max(x, y));
    }
    Graph h = Graph::from_edges(g.vertex_count(), e);
    CHECK(recognize_path_graph(g).accepted == recognize_path_graph(h).accepted);
  }
}

TEST_CASE("recognition is deterministic") {
  auto g = load_fixture("figure1.txt").graph;
  auto a = recognize_path_graph(g);
  auto b = recognize_path_graph(g);
  CHECK(a.tree->cliques == b.tree->cliques);
  CHECK(a.tree->tree.edges == b.tree->tree.edges);
}
