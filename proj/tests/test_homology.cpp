#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace stratify;
using namespace stratify::testing;

TEST(Presentation, SimpleOne) {
  const auto& u = cyclic_universe();
  const auto pres = min_proj_presentation(mod(u, "S1"));
  EXPECT_EQ(pres.p0.vertices, (std::vector<int>{0}));
  EXPECT_TRUE(is_isomorphic(pres.syzygy.module, mod(u, "M23")));
  EXPECT_EQ(pres.p1.vertices, (std::vector<int>{1}));
}

TEST(Presentation, Projective) {
  const auto& u = cyclic_universe();
  const auto pres = min_proj_presentation(mod(u, "P2"));
  EXPECT_EQ(pres.p0.vertices, (std::vector<int>{1}));
  EXPECT_TRUE(pres.p1.vertices.empty());
  EXPECT_TRUE(pres.cover.is_isomorphism());
}

TEST(Presentation, M12) {
  const auto& u = cyclic_universe();
  const auto pres = min_proj_presentation(mod(u, "M12"));
  EXPECT_EQ(pres.p0.vertices, (std::vector<int>{0}));
  EXPECT_TRUE(is_isomorphic(pres.syzygy.module, mod(u, "S3")));
  EXPECT_EQ(pres.p1.vertices, (std::vector<int>{2}));
}

TEST(Presentation, Minimality) {
  const auto& u = cyclic_universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& m = u.module(i);
    const auto pres = min_proj_presentation(m);
    EXPECT_TRUE(pres.cover.is_surjective());
    EXPECT_EQ(pres.p0.module.total_dim() - pres.syzygy.module.total_dim(), m.total_dim());
    EXPECT_EQ(top_dims(pres.p0.module), top_dims(m));
    // im p1 = ker p0, and it lies in the radical of P0.
    EXPECT_TRUE(pres.relations.then(pres.cover).is_zero());
    EXPECT_EQ(image(pres.relations).module.total_dim(), pres.syzygy.module.total_dim());
    EXPECT_EQ(top_dims(pres.p1.module), top_dims(pres.syzygy.module));
    const auto rad = radical(pres.p0.module);
    for (int v = 0; v < 3; ++v) {
      const auto& inc = pres.syzygy.inclusion.map(v);
      const auto& r = rad.inclusion.map(v);
      EXPECT_EQ(rank(hstack(r, inc)), rank(r));
    }
  }
}

TEST(Dual, Examples) {
  const auto& a = cyclic();
  EXPECT_TRUE(dual(Representation::zero(a)).is_zero());
  const auto op = a.opposite();
  for (int v = 0; v < 3; ++v) EXPECT_TRUE(is_isomorphic(dual(simple(a, v)), simple(op, v)));
  const auto dp = dual(projective(a, 0));
  EXPECT_EQ(dp.dims(), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_TRUE(is_isomorphic(socle(dp).module, simple(op, 0)));
  EXPECT_TRUE(is_isomorphic(dp, injective(op, 0)));
}

TEST(Dual, Involution) {
  const auto& u = cyclic_universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto dd = dual(dual(u.module(i)));
    EXPECT_TRUE(dd.algebra() == cyclic());
    EXPECT_TRUE(is_isomorphic(dd, u.module(i)));
  }
}

TEST(Transpose, Examples) {
  const auto& u = cyclic_universe();
  EXPECT_TRUE(transpose(mod(u, "P1")).is_zero());
  const auto tr = transpose(mod(u, "S1"));
  EXPECT_TRUE(is_isomorphic(dual(tr), mod(u, "S2")));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.is_projective(i)) continue;
    EXPECT_TRUE(is_isomorphic(transpose(transpose(u.module(i))), u.module(i))) << u.name(i);
  }
}

TEST(Tau, Examples) {
  const auto& u = cyclic_universe();
  EXPECT_TRUE(tau(mod(u, "P1")).is_zero());
  EXPECT_TRUE(is_isomorphic(tau(mod(u, "S1")), mod(u, "S2")));
  EXPECT_TRUE(is_isomorphic(tau(mod(u, "S3")), mod(u, "S1")));
  EXPECT_TRUE(is_isomorphic(tau(mod(u, "S2")), mod(u, "S3")));
  EXPECT_TRUE(is_isomorphic(tau(mod(u, "M12")), mod(u, "M23")));
  EXPECT_TRUE(is_isomorphic(tau_inverse(tau(mod(u, "S1"))), mod(u, "S1")));
  EXPECT_TRUE(is_isomorphic(ar_translate(mod(u, "S1"), Direction::forward), mod(u, "S2")));
  EXPECT_TRUE(is_isomorphic(ar_translate(mod(u, "S2"), Direction::backward), mod(u, "S1")));
}

TEST(Tau, VanishesExactlyOnProjectivesAndInjectives) {
  const auto& u = cyclic_universe();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& m = u.module(i);
    EXPECT_EQ(tau(m).is_zero(), is_projective(m));
    EXPECT_EQ(tau_inverse(m).is_zero(), is_injective(m));
  }
  EXPECT_TRUE(tau(sum_of(u, {"P1", "P3"})).is_zero());
  EXPECT_FALSE(tau(sum_of(u, {"P1", "S3"})).is_zero());
  const auto& l = linear_universe();
  EXPECT_TRUE(is_isomorphic(tau(mod(l, "S1")), mod(l, "S2")));
  EXPECT_TRUE(tau(mod(l, "P1")).is_zero());
  EXPECT_TRUE(tau_inverse(mod(l, "S1")).is_zero());
}

TEST(Ext, Examples) {
  const auto& u = cyclic_universe();
  for (const char* p : {"P1", "P2", "P3"})
    for (std::size_t j = 0; j < u.size(); ++j) EXPECT_EQ(ext1_dim(mod(u, p), u.module(j)), 0u);
  EXPECT_EQ(ext1_dim(mod(u, "S1"), mod(u, "S2")), 1u);
  EXPECT_EQ(ext1_dim(mod(u, "S1"), mod(u, "S3")), 0u);
  const auto w = ext1_witness(mod(u, "S1"), mod(u, "S2"));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(is_isomorphic(*w, mod(u, "M12")));
  EXPECT_FALSE(ext1_witness(mod(u, "S1"), mod(u, "S3")).has_value());
}

TEST(Ext, SimplesCountArrows) {
  for (const auto* a : {&cyclic(), &linear(), &cyclic(3)}) {
    for (int i = 0; i < a->vertex_count(); ++i)
      for (int j = 0; j < a->vertex_count(); ++j) {
        std::size_t arrows = 0;
        for (std::size_t k = 0; k < a->arrow_count(); ++k) arrows += a->arrow(k).source == i && a->arrow(k).target == j;
        EXPECT_EQ(ext1_dim(simple(*a, i), simple(*a, j)), arrows);
      }
  }
}

TEST(Ext, CocycleOracleOnUniverse) {
  const auto& u = cyclic_universe();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) EXPECT_EQ(u.ext(i, j), oracle::ext_dim(u.module(i), u.module(j)));
}

TEST(Ext, WitnessesAreNonSplit) {
  const auto& u = cyclic_universe();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      const auto w = ext1_witness(u.module(i), u.module(j));
      EXPECT_EQ(w.has_value(), u.ext(i, j) != 0);
      if (!w) continue;
      EXPECT_EQ(w->total_dim(), u.module(i).total_dim() + u.module(j).total_dim());
      EXPECT_FALSE(is_isomorphic(*w, direct_sum(cyclic(), {u.module(i), u.module(j)})));
    }
}

TEST(AuslanderReiten, HomToTauVanishingGivesExtVanishing) {
  const auto& u = cyclic_universe();
  for (std::size_t m = 0; m < u.size(); ++m)
    for (std::size_t n = 0; n < u.size(); ++n)
      if (u.hom_to_tau(m, n) == 0) EXPECT_EQ(u.ext(n, m), 0u) << u.name(m) << " " << u.name(n);
}

TEST(AuslanderReiten, TauRigidModulesAreRigid) {
  const auto& u = cyclic_universe();
  for (const auto& t : enumerate_tau_tilting(u)) {
    const auto m = u.sum(t);
    EXPECT_EQ(ext1_dim(m, m), 0u);
  }
}
