#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxcluster/reptheory.hpp"
#include "test_util.hpp"
#include "typea_hom_oracle.hpp"

using namespace coxcluster;

static AdaptedFrame frame_of(const char* label) {
  return AdaptedFrame::build(CartanData::from_type(label));
}

TEST_CASE("A2 category, fully explicit") {
  AdaptedFrame f = frame_of("A2");
  RepTheory rt(f);
  CHECK(rt.count() == 3);
  CHECK(rt.indec(1).dim == Root{1, 0});
  CHECK(rt.indec(2).dim == Root{1, 1});
  CHECK(rt.indec(3).dim == Root{0, 1});
  CHECK(rt.indec(1).projective);
  CHECK(rt.indec(2).projective);
  CHECK(rt.indec(2).injective);
  CHECK(rt.indec(3).injective);
  CHECK(!rt.indec(3).projective);
  CHECK(rt.indec(3).tau == 1);
  CHECK(rt.indec(1).tau_inv == 3);
  CHECK(rt.arrows() ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});

  CHECK(rt.hom(2, 1) == 0);
  CHECK(rt.hom(1, 2) == 1);
  CHECK(rt.hom(2, 3) == 1);
  CHECK(rt.hom(3, 1) == 0);
  CHECK(rt.ext(3, 1) == 1);  // the almost split sequence P1 -> P2 -> I2
  CHECK(rt.ext(1, 3) == 0);
  for (int x = 1; x <= 3; ++x) {
    CHECK(rt.hom(x, x) == 1);
    CHECK(rt.ext(x, x) == 0);
    CHECK(rt.ext(1, x) == 0);
    CHECK(rt.ext(2, x) == 0);
  }
}

TEST_CASE("non-simply-laced input is refused") {
  AdaptedFrame f = frame_of("B3");
  CHECK_THROWS_AS(RepTheory{f}, DomainError);
}

TEST_CASE("knitting agrees with the interval-representation oracle") {
  for (const char* label : {"A2", "A3", "A4"}) {
    CAPTURE(label);
    AdaptedFrame f = frame_of(label);
    RepTheory rt(f);
    for (int x = 1; x <= rt.count(); ++x)
      for (int y = 1; y <= rt.count(); ++y)
        CHECK(rt.hom(x, y) ==
              testutil::typea_hom(f.cartan(), rt.indec(x).dim,
                                  rt.indec(y).dim));
  }
}

TEST_CASE("Euler form identity") {
  for (const char* label : {"A2", "A3", "A4", "D4", "E6"}) {
    CAPTURE(label);
    AdaptedFrame f = frame_of(label);
    RepTheory rt(f);
    const CartanData& cd = f.cartan();
    for (int x = 1; x <= rt.count(); ++x)
      for (int y = 1; y <= rt.count(); ++y) {
        const Root& dx = rt.indec(x).dim;
        const Root& dy = rt.indec(y).dim;
        Int euler = 0;
        for (int i = 1; i <= cd.rank(); ++i)
          euler += dx[i - 1] * dy[i - 1];
        for (const Arrow& a : cd.arrows())
          euler -= a.mult * dx[a.from - 1] * dy[a.to - 1];
        CHECK(rt.hom(x, y) - rt.ext(x, y) == euler);
      }
  }
}

TEST_CASE("frame order controls Hom and Ext directions") {
  for (const char* label : {"A4", "D4"}) {
    CAPTURE(label);
    RepTheory rt{frame_of(label)};
    for (int t = 1; t <= rt.count(); ++t)
      for (int u = t + 1; u <= rt.count(); ++u) {
        CHECK(rt.hom(u, t) == 0);
        CHECK(rt.ext(t, u) == 0);
      }
  }
}

TEST_CASE("objects behind cluster positions") {
  AdaptedFrame f = frame_of("A2");
  RepTheory rt(f);
  CHECK(rt.module_of(3) == 3);
  CHECK(rt.module_of(4) == 1);
  CHECK(rt.module_of(5) == 2);
  CHECK_THROWS_AS(rt.module_of(0), DomainError);
  CHECK_THROWS_AS(rt.module_of(6), DomainError);

  AdaptedFrame a4 = frame_of("A4");
  RepTheory rt4(a4);
  CHECK(rt4.module_of(11) == 1);
}

TEST_CASE("exceptional sequences") {
  AdaptedFrame f = frame_of("A3");
  RepTheory rt(f);
  const CartanData& cd = f.cartan();

  std::vector<int> projectives, simples_rev;
  for (int k = 1; k <= 3; ++k) projectives.push_back(k);
  for (int k = 3; k >= 1; --k)
    simples_rev.push_back(f.frame_index(testutil::simple(3, k)));
  CHECK(rt.is_exceptional_sequence(projectives));
  CHECK(rt.is_exceptional_sequence(simples_rev));
  CHECK(rt.is_exceptional_sequence({}));
  CHECK(!rt.is_exceptional_sequence({1, 2, 3, 3}));  // too long

  AdaptedFrame a2 = frame_of("A2");
  RepTheory rt2(a2);
  CHECK(rt2.is_exceptional_sequence({1, 2}));   // (S1, P2)
  CHECK(!rt2.is_exceptional_sequence({2, 1}));  // (P2, S1): Hom(S1,P2) != 0

  // braid move: replace (E_i, E_{i+1}) by (X, E_i) with dim X the reflected
  // root; the result stays exceptional with the same reflection product
  for (auto seq : {projectives, simples_rev}) {
    GroupElement prod(3);
    for (int m : seq) prod = prod * reflection_in(cd, rt.indec(m).dim);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      std::vector<int> moved = seq;
      Root x = abs_root(reflect_in_root(cd, rt.indec(seq[i]).dim,
                                        rt.indec(seq[i + 1]).dim));
      moved[i] = f.frame_index(x);
      moved[i + 1] = seq[i];
      CHECK(rt.is_exceptional_sequence(moved));
      GroupElement prod2(3);
      for (int m : moved) prod2 = prod2 * reflection_in(cd, rt.indec(m).dim);
      CHECK(prod2 == prod);
    }
  }
}

TEST_CASE("cluster tilting equals the word conditions") {
  for (const char* label : {"A2", "A3"}) {
    CAPTURE(label);
    AdaptedFrame f = frame_of(label);
    RepTheory rt(f);
    for (const Selection& sel : all_selections(f)) {
      bool reduced = is_reduced_w0(f, sel);
      CHECK(rt.is_cluster_tilting(sel) == reduced);
      std::vector<int> mods;
      for (int t : sel) mods.push_back(rt.module_of(t));
      CHECK(rt.is_exceptional_sequence(mods) == reduced);
      CHECK(condition3(f, sel) == reduced);
    }
  }
  AdaptedFrame a4 = frame_of("A4");
  RepTheory rt4(a4);
  CHECK(rt4.is_cluster_tilting({1, 4, 7, 9}));
}
