#include "doctest.h"
#include "pathgraph/generators.hpp"
#include "pathgraph/oracle.hpp"
#include "pathgraph/recognition.hpp"
#include "pathgraph/separation.hpp"
#include "support.hpp"

using namespace pathgraph;
using pathgraph::test::load_fixture;

namespace {

// Splits g at C and installs, for every piece, the path tree found by the
// recognizer on that piece alone.
SeparationContext prepare(const Graph& g, const VertexSet& c) {
  auto ctx = split(g, c);
  for (auto& comp : ctx.components) {
    auto sub = induced_subgraph(g, comp.ambient);
    auto rec = recognize_path_graph(sub.graph);
    REQUIRE(rec.accepted);
    auto cert = *rec.tree;
    for (auto& k : cert.cliques) {
      for (Vertex& v : k) v = sub.to_parent[static_cast<std::size_t>(v)];
      std::sort(k.begin(), k.end());
    }
    attach_tree(comp, c, std::move(cert.cliques), std::move(cert.tree));
    compute_F_table(comp);
  }
  return ctx;
}

// Separator {0,1,2}; every piece hangs off {0,1} through x, and a piece with
// a tail y adjacent to 0 only is not flat.
Graph fan(int flat, int tailed) {
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}};
  int next = 3;
  for (int k = 0; k < flat + tailed; ++k) {
    int x = next++;
    e.emplace_back(0, x);
    e.emplace_back(1, x);
    if (k >= flat) {
      int y = next++;
      e.emplace_back(0, y);
      e.emplace_back(x, y);
    }
  }
  return Graph::from_edges(next, e);
}

}  // namespace

TEST_CASE("separator choice is an internal clique") {
  auto g = load_fixture("figure1.txt");
  auto cs = maximal_cliques(g.graph, mcs_order(g.graph));
  auto t = clique_tree(g.graph, cs);
  auto sep = find_clique_separator(cs, t);
  REQUIRE(sep);
  CHECK(t.adjacency()[static_cast<std::size_t>(*sep)].size() >= 2);

  auto k4 = test::complete_graph(4);
  auto one = maximal_cliques(k4, mcs_order(k4));
  CHECK_FALSE(find_clique_separator(one, clique_tree(k4, one)));
}

TEST_CASE("figure 3 split") {
  auto g = load_fixture("figure1.txt");
  auto c = test::dense(g, {1, 2, 3, 4, 5});
  auto ctx = split(g.graph, c);
  REQUIRE(ctx.components.size() == 5);
  std::vector<std::vector<std::int64_t>> priv;
  for (const auto& comp : ctx.components) priv.push_back(test::relabel(g, comp.private_set));
  CHECK(priv == std::vector<std::vector<std::int64_t>>{{6, 11, 12}, {7, 13, 14}, {8}, {9, 15}, {10}});
  CHECK(test::relabel(g, ctx.components[0].ambient) == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 11, 12});
}

TEST_CASE("split contract") {
  auto g = load_fixture("figure1.txt");
  CHECK_THROWS_AS(split(g.graph, test::dense(g, {1, 2, 3, 4, 6})), ContractError);  // not a clique
  CHECK_THROWS_AS(split(g.graph, test::dense(g, {2, 3, 4})), ContractError);        // not maximal
  CHECK_THROWS_AS(split(g.graph, VertexSet{2, 1}), ContractError);                  // unsorted
  std::vector<Edge> e{{0, 1}, {1, 2}};
  Graph path = Graph::from_edges(3, e);
  CHECK_THROWS_AS(split(path, VertexSet{0, 1}), ContractError);  // leaves one piece
}

TEST_CASE("figure 3 attachment sets and furthest cliques") {
  auto g = load_fixture("figure1.txt");
  auto ctx = prepare(g.graph, test::dense(g, {1, 2, 3, 4, 5}));
  const auto& comps = ctx.components;
  CHECK(test::relabel(g, comps[0].attachment) == std::vector<std::int64_t>{1, 2});
  CHECK(test::relabel(g, comps[2].attachment) == std::vector<std::int64_t>{2, 3, 4, 5});
  for (const auto& comp : comps) {
    CHECK(comp.tree.adjacency()[static_cast<std::size_t>(comp.c_node)].size() == 1);
    CHECK(comp.cliques[static_cast<std::size_t>(comp.c_node)] == ctx.separator);
  }
  const auto& g2 = comps[1];
  const int f = g2.furthest_clique(test::dense(g, {2})[0]);
  REQUIRE(f != kAbsent);
  CHECK(test::relabel(g, g2.cliques[static_cast<std::size_t>(f)]) == std::vector<std::int64_t>{2, 3, 4, 7});
  CHECK(g2.furthest_clique(test::dense(g, {1})[0]) == kAbsent);
  CHECK(g2.furthest_clique(test::dense(g, {5})[0]) == kAbsent);
}

TEST_CASE("figure 3 relations") {
  auto g = load_fixture("figure1.txt");
  auto ctx = prepare(g.graph, test::dense(g, {1, 2, 3, 4, 5}));
  auto rel = [&](int a, int b) {
    return compare(ctx.components[static_cast<std::size_t>(a - 1)], ctx.components[static_cast<std::size_t>(b - 1)]);
  };
  CHECK(rel(5, 1) == Relation::LeftDominates);
  CHECK(rel(1, 5) == Relation::RightDominates);
  CHECK(rel(5, 4) == Relation::LeftDominates);
  CHECK(rel(3, 2) == Relation::LeftDominates);
  CHECK(rel(3, 4) == Relation::LeftDominates);
  CHECK(rel(1, 2) == Relation::Antipodal);
  CHECK(rel(1, 3) == Relation::Antipodal);
  CHECK(rel(3, 5) == Relation::Antipodal);
  CHECK(rel(2, 5) == Relation::Antipodal);
  CHECK(rel(2, 4) == Relation::Antipodal);
  CHECK(rel(1, 4) == Relation::Unattached);
  quotient(ctx);
  CHECK(ctx.classes == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {4}});
}

TEST_CASE("attach_tree refuses a tree where the separator is internal") {
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
  Graph g = Graph::from_edges(5, e);
  Component comp;
  CliqueTree t;
  t.node_count = 3;
  t.edges = {{1, 0}, {0, 2}};
  CHECK_THROWS_AS(attach_tree(comp, VertexSet{0, 1, 2}, {{0, 1, 2}, {0, 1, 3}, {1, 2, 4}}, t), InternalError);
}

TEST_CASE("flat pieces with one attachment set collapse into one class") {
  auto g = fan(3, 0);
  auto ctx = prepare(g, VertexSet{0, 1, 2});
  for (const auto& comp : ctx.components) CHECK(comp.flat());
  CHECK(compare(ctx.components[0], ctx.components[1]) == Relation::Equivalent);
  quotient(ctx);
  CHECK(ctx.classes == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(ctx.representatives() == std::vector<int>{0});
}

TEST_CASE("two tailed pieces on one attachment set are antipodal singletons") {
  auto g = fan(1, 2);
  auto ctx = prepare(g, VertexSet{0, 1, 2});
  CHECK(ctx.components[0].flat());
  CHECK_FALSE(ctx.components[1].flat());
  CHECK(compare(ctx.components[1], ctx.components[2]) == Relation::Antipodal);
  quotient(ctx);
  CHECK(ctx.classes.size() == 3);
  CHECK(oracle_is_path_graph(g));
}

TEST_CASE("three tailed pieces on one attachment set reject in the quotient") {
  auto g = fan(0, 3);
  auto ctx = prepare(g, VertexSet{0, 1, 2});
  try {
    quotient(ctx);
    FAIL("quotient accepted a full antipodal triangle");
  } catch (const RejectSignal& s) {
    CHECK(s.rejection().reason == RejectReason::FullAntipodalTriangle);
    CHECK(s.rejection().stage == "quotient");
  }
  CHECK_FALSE(oracle_is_path_graph(g));
  CHECK_FALSE(recognize_path_graph(g).accepted);
}

TEST_CASE("property: attachment and furthest-clique invariants") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Graph g = random_path_graph_positive(7, seed);
    auto cs = maximal_cliques(g, mcs_order(g));
    auto t = clique_tree(g, cs);
    auto sep = find_clique_separator(cs, t);
    if (!sep || connected_components(g).size() != 1) continue;
    auto ctx = prepare(g, cs[*sep]);
    std::size_t total = 0;
    for (const auto& comp : ctx.components) {
      total += comp.attachment.size();
      CHECK_FALSE(comp.attachment.empty());
      auto adj = comp.tree.adjacency();
      for (Vertex v : ctx.separator) {
        const int f = comp.furthest_clique(v);
        CHECK((f == kAbsent) == !contains(comp.attachment, v));
        if (f == kAbsent) continue;
        // The cliques holding v are exactly the tree path from C to F(v).
        std::vector<int> parent(comp.cliques.size(), -2);
        std::vector<int> queue{comp.c_node};
        parent[static_cast<std::size_t>(comp.c_node)] = -1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
          for (int y : adj[static_cast<std::size_t>(queue[h])]) {
            if (parent[static_cast<std::size_t>(y)] == -2) {
              parent[static_cast<std::size_t>(y)] = queue[h];
              queue.push_back(y);
            }
          }
        }
        std::set<int> on_path;
        for (int x = f; x != -1; x = parent[static_cast<std::size_t>(x)]) on_path.insert(x);
        std::set<int> holding;
        for (std::size_t x = 0; x < comp.cliques.size(); ++x) {
          if (contains(comp.cliques[x], v)) holding.insert(static_cast<int>(x));
        }
        CHECK(on_path == holding);
      }
    }
    CHECK(total <= g.vertex_count() + g.edge_count());
    for (std::size_t a = 0; a < ctx.components.size(); ++a) {
      for (std::size_t b = 0; b < ctx.components.size(); ++b) {
        auto ab = compare(ctx.components[a], ctx.components[b]);
        auto ba = compare(ctx.components[b], ctx.components[a]);
        if (ab == Relation::LeftDominates) CHECK(ba == Relation::RightDominates);
        if (ab == Relation::Antipodal || ab == Relation::Equivalent || ab == Relation::Unattached) CHECK(ab == ba);
      }
    }
  }
}
