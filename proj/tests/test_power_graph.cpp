#include <gtest/gtest.h>

#include <set>

#include "powcol/families.hpp"
#include "powcol/power_graph.hpp"
#include "support/brute_force.hpp"

using namespace powcol;

using EdgeList = std::vector<std::pair<vertex_type, vertex_type>>;

TEST(BuildPowerGraph, CyclicPrimeIsComplete) {
  auto pg = build_power_graph(build_magma(brute::cyclic_table(5)));
  EXPECT_EQ(pg.n_vertices(), 5u);
  EXPECT_EQ(pg.n_edges(), 10u);
}

TEST(BuildPowerGraph, TrivialMagma) {
  auto pg = build_power_graph(build_magma({{0}}));
  EXPECT_EQ(pg.n_vertices(), 1u);
  EXPECT_EQ(pg.n_edges(), 0u);
  EXPECT_TRUE(pg.is_power_of(0, 0));
}

TEST(BuildPowerGraph, MonogenicThreeTwo) {
  // 0..3 are g, g^2, g^3, g^4
  auto pg = build_power_graph(build_magma(brute::m32_table()));
  EXPECT_EQ(pg.edges(), (EdgeList{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}));
  EXPECT_FALSE(pg.adjacent(1, 2));
}

TEST(BuildPowerGraph, MatchesBruteForceOnCorpus) {
  for (auto const& spec : default_corpus()) {
    auto m  = generate(spec);
    auto pg = build_power_graph(m);
    brute::Table t(m.size(), std::vector<std::int64_t>(m.size()));
    for (element_type g = 0; g < m.size(); ++g) {
      for (element_type h = 0; h < m.size(); ++h) {
        t[g][h] = m(g, h);
      }
    }
    for (vertex_type x = 0; x < m.size(); ++x) {
      EXPECT_FALSE(pg.adjacent(x, x));
      EXPECT_TRUE(pg.is_power_of(x, x));
      for (vertex_type y = x + 1; y < m.size(); ++y) {
        ASSERT_EQ(pg.adjacent(x, y), brute::adjacent(t, x, y))
            << spec.to_string() << " " << x << "," << y;
        ASSERT_EQ(pg.adjacent(x, y), pg.adjacent(y, x));
      }
      // outdegree without the loop is order or order - 1
      auto out   = pg.out_neighbours(x).count() - 1;
      auto order = m.profile(static_cast<element_type>(x)).order;
      EXPECT_TRUE(out == order || out + 1 == order) << spec.to_string();
    }
  }
}

TEST(ConnectedComponents, Examples) {
  auto z5 = build_power_graph(build_magma(brute::cyclic_table(5)));
  auto c  = connected_components(z5, z5.all_vertices());
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].size(), 5u);

  EXPECT_TRUE(connected_components(z5, std::vector<vertex_type>{}).empty());

  auto m32   = build_power_graph(build_magma(brute::m32_table()));
  auto split = connected_components(m32, std::vector<vertex_type>{1, 2});
  EXPECT_EQ(split, (std::vector<std::vector<vertex_type>>{{1}, {2}}));
}

TEST(ConnectedComponents, PartitionProperty) {
  for (auto const& spec : {FamilySpec::full_transformation(3),
                           FamilySpec::dihedral(6), FamilySpec::monogenic(5, 4)}) {
    auto m  = generate(spec);
    auto pg = build_power_graph(m);
    // drop the elements of order 1 and 2 and see what remains
    std::vector<vertex_type> subset;
    for (auto const& p : m.profiles()) {
      if (p.order > 2) {
        subset.push_back(p.element);
      }
    }
    auto comps = connected_components(pg, subset);
    std::set<vertex_type> seen;
    vertex_type           prev_min = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      ASSERT_FALSE(comps[i].empty());
      EXPECT_TRUE(std::is_sorted(comps[i].begin(), comps[i].end()));
      if (i > 0) {
        EXPECT_GT(comps[i].front(), prev_min);
      }
      prev_min = comps[i].front();
      for (auto v : comps[i]) {
        EXPECT_TRUE(seen.insert(v).second);
      }
      // no edges leave a component inside the subset
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        for (auto a : comps[i]) {
          for (auto b : comps[j]) {
            EXPECT_FALSE(pg.adjacent(a, b));
          }
        }
      }
    }
    EXPECT_EQ(std::vector<vertex_type>(seen.begin(), seen.end()), subset);
  }
}

TEST(ConnectedComponents, LongPathDoesNotRecurse) {
  // a path 0 - 1 - ... - n-1 as a directed relation
  std::size_t const      n = 20000;
  std::vector<VertexSet> d(n, VertexSet(n));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    d[i].set(i + 1);
  }
  PowerGraph pg(std::move(d));
  auto       comps = connected_components(pg, pg.all_vertices());
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].size(), n);
}
