#include <gtest/gtest.h>

#include "powcol/coloring.hpp"
#include "powcol/families.hpp"
#include "support/brute_force.hpp"

using namespace powcol;

using Classes = std::vector<std::vector<element_type>>;

TEST(Totient, AgreesWithGcdCount) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    ASSERT_EQ(totient(n), brute::totient(n)) << n;
  }
}

TEST(ColorTag, NamespacesAreDisjoint) {
  EXPECT_NE(ColorTag::A(1, 1), ColorTag::C(1, 1));
  EXPECT_NE(ColorTag::B(1), ColorTag::A(1, 1));
  EXPECT_EQ(ColorTag::A(5, 2), ColorTag::A(5, 2));
  EXPECT_EQ(ColorTag::A(5, 2).to_string(), "A(5,2)");
  EXPECT_EQ(ColorTag::B(3).to_string(), "B(3)");
  EXPECT_EQ(ColorTag::C(2, 7).to_string(), "C(2,7)");
}

TEST(ClassifyElement, Examples) {
  auto z6  = build_magma(brute::cyclic_table(6));
  auto m32 = build_magma(brute::m32_table());
  EXPECT_EQ(classify_element(z6.profile(0)), ElementClass(CyclicOfOrder{1}));
  EXPECT_EQ(classify_element(z6.profile(1)), ElementClass(CyclicOfOrder{6}));
  EXPECT_EQ(classify_element(m32.profile(0)), ElementClass(NonCyclicFinite{2}));
}

TEST(CyclicCliqueDecomposition, Examples) {
  auto z5 = build_magma(brute::cyclic_table(5));
  auto p5 = build_power_graph(z5);
  EXPECT_EQ(cyclic_clique_decomposition(z5, p5, 5), (Classes{{1, 2, 3, 4}}));
  EXPECT_EQ(cyclic_clique_decomposition(z5, p5, 1), (Classes{{0}}));

  auto z12 = build_magma(brute::cyclic_table(12));
  auto p12 = build_power_graph(z12);
  EXPECT_EQ(cyclic_clique_decomposition(z12, p12, 12), (Classes{{1, 5, 7, 11}}));
  EXPECT_EQ(cyclic_clique_decomposition(z12, p12, 4), (Classes{{3, 9}}));

  // every idempotent of a semigroup is its own class
  auto t3 = generate(FamilySpec::full_transformation(3));
  auto pt = build_power_graph(t3);
  for (auto const& cls : cyclic_clique_decomposition(t3, pt, 1)) {
    ASSERT_EQ(cls.size(), 1u);
    EXPECT_EQ(t3(cls[0], cls[0]), cls[0]);
  }
}

TEST(CyclicCliqueDecomposition, MutualPowersAndTotientSizes) {
  for (auto const& spec : default_corpus()) {
    auto m  = generate(spec);
    auto pg = build_power_graph(m);
    brute::Table t(m.size(), std::vector<std::int64_t>(m.size()));
    for (element_type g = 0; g < m.size(); ++g) {
      for (element_type h = 0; h < m.size(); ++h) {
        t[g][h] = m(g, h);
      }
    }
    for (auto n : cyclic_orders(m)) {
      for (auto const& cls : cyclic_clique_decomposition(m, pg, n)) {
        EXPECT_EQ(cls.size(), brute::totient(n)) << spec.to_string();
        for (auto x : cls) {
          for (auto y : cls) {
            ASSERT_TRUE(brute::is_power(t, x, y) && brute::is_power(t, y, x))
                << spec.to_string();
          }
        }
      }
    }
  }
}

TEST(PaperColorFinite, CyclicTwo) {
  auto m = build_magma(brute::cyclic_table(2));
  auto c = paper_color_finite(m);
  EXPECT_EQ(c.assignment, (std::vector{ColorTag::A(1, 1), ColorTag::A(2, 1)}));
  EXPECT_TRUE(verify_proper_coloring(build_power_graph(m), c).empty());
}

TEST(PaperColorFinite, MonogenicThreeTwo) {
  auto m = build_magma(brute::m32_table());
  auto c = paper_color_finite(m);
  EXPECT_EQ(c.assignment, (std::vector{ColorTag::B(2), ColorTag::B(1),
                                       ColorTag::A(2, 1), ColorTag::A(1, 1)}));
  EXPECT_TRUE(verify_proper_coloring(build_power_graph(m), c).empty());
}

TEST(PaperColorFinite, CyclicFive) {
  auto m = build_magma(brute::cyclic_table(5));
  auto c = paper_color_finite(m);
  EXPECT_EQ(c.assignment,
            (std::vector{ColorTag::A(1, 1), ColorTag::A(5, 1), ColorTag::A(5, 2),
                         ColorTag::A(5, 3), ColorTag::A(5, 4)}));
  EXPECT_EQ(c.palette_size(), 5u);
}

TEST(PaperColorFinite, PositionsNeverExceedTotient) {
  for (auto const& spec : default_corpus()) {
    auto m = generate(spec);
    auto c = paper_color_finite(m);
    for (auto const& tag : c.assignment) {
      if (auto a = std::get_if<CyclicColor>(&tag.value())) {
        ASSERT_LE(a->position, totient(a->order));
      }
    }
  }
}

TEST(PaperColorFinite, Deterministic) {
  auto m = generate(FamilySpec::product(FamilySpec::symmetric(3),
                                        FamilySpec::monogenic(2, 3)));
  EXPECT_EQ(paper_color_finite(m), paper_color_finite(m));
}

TEST(VerifyProperColoring, Examples) {
  auto k5       = build_power_graph(build_magma(brute::cyclic_table(5)));
  Coloring flat{std::vector<ColorTag>(5, ColorTag::B(1))};
  EXPECT_EQ(verify_proper_coloring(k5, flat).size(), 10u);

  std::vector<VertexSet> empty(2, VertexSet(2));
  PowerGraph             edgeless(empty);
  EXPECT_TRUE(verify_proper_coloring(edgeless, IntColoring{{0, 0}}).empty());

  EXPECT_THROW(verify_proper_coloring(k5, IntColoring{{0, 1}}), MissingAssignment);
}
