#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxcluster/group.hpp"
#include "test_util.hpp"

using namespace coxcluster;

static CartanData kronecker() {
  return CartanData::from_quiver(2, {{2, 1, 2}});
}

TEST_CASE("cartan matrices by type") {
  CartanData a2 = CartanData::from_type("A2");
  CHECK(a2.rank() == 2);
  CHECK(a2.a(1, 2) == -1);
  CHECK(a2.a(2, 1) == -1);
  CHECK(a2.d(1) == 1);
  CHECK(a2.simply_laced());
  CHECK(a2.finite_type());

  CartanData g2 = CartanData::from_type("G2");
  CHECK(g2.a(1, 2) * g2.a(2, 1) == 3);
  CHECK(!g2.simply_laced());
  CHECK(g2.finite_type());

  CartanData b3 = CartanData::from_type("B3");
  CartanData c3 = CartanData::from_type("C3");
  for (const CartanData* cd : {&b3, &c3})
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        CHECK(cd->d(i) * cd->a(i, j) == cd->d(j) * cd->a(j, i));
  CHECK(b3.a(2, 3) * b3.a(3, 2) == 2);
  CHECK(b3.a(2, 3) != c3.a(2, 3));  // B and C are dual, not equal

  CHECK(CartanData::from_type("F4").finite_type());
  CHECK(CartanData::from_type("E6").finite_type());
  CHECK(CartanData::from_type("E8").rank() == 8);

  CHECK_THROWS_AS(CartanData::from_type("H3"), DomainError);
  CHECK_THROWS_AS(CartanData::from_type("A0"), DomainError);
  CHECK_THROWS_AS(CartanData::from_type("Z5"), DomainError);
}

TEST_CASE("quiver input and renumbering") {
  // source->sink must be renumbered so the sink comes first
  CartanData cd = CartanData::from_quiver(2, {{1, 2, 1}});
  CHECK(cd.original_label(1) == 2);
  CHECK(cd.original_label(2) == 1);
  CHECK(cd.a(1, 2) == -1);

  CHECK_THROWS_AS(CartanData::from_quiver(2, {{1, 2, 1}, {2, 1, 1}}),
                  DomainError);  // oriented cycle
  CHECK(!kronecker().finite_type());
  CHECK(kronecker().a(1, 2) == -2);
}

TEST_CASE("reflection convention on simple roots") {
  // s_i(alpha_j) = alpha_j - a_ij alpha_i, checked entrywise
  for (const char* label : {"A3", "B3", "G2"}) {
    CartanData cd = CartanData::from_type(label);
    for (int i = 1; i <= cd.rank(); ++i) {
      GroupElement s = simple_reflection(cd, i);
      for (int j = 1; j <= cd.rank(); ++j) {
        Root img = s.column(j);
        Root expect(cd.rank(), 0);
        expect[j - 1] += 1;
        expect[i - 1] -= cd.a(i, j);
        CHECK(img == expect);
      }
      CHECK((s * s).is_identity());
    }
  }
}

TEST_CASE("bilinear form invariance") {
  CartanData cd = CartanData::from_type("A3");
  for (int trial = 0; trial < 1000; ++trial) {
    Root x(3), y(3);
    for (int i = 0; i < 3; ++i) {
      x[i] = testutil::pick(-5, 5);
      y[i] = testutil::pick(-5, 5);
    }
    GroupElement w = word_to_element(cd, testutil::random_word(3, 6));
    CHECK(cd.pair2(w.apply(x), w.apply(y)) == cd.pair2(x, y));
  }
}

TEST_CASE("conjugation of reflections") {
  CartanData cd = CartanData::from_type("A3");
  std::vector<Root> phi = positive_roots(cd);
  for (int trial = 0; trial < 100; ++trial) {
    GroupElement w = word_to_element(cd, testutil::random_word(3, 8));
    const Root& beta = phi[testutil::pick(0, (int)phi.size() - 1)];
    Root gamma = conjugate_reflection(cd, w, beta);
    CHECK(is_positive(gamma));
    CHECK(reflection_in(cd, gamma) ==
          w * reflection_in(cd, beta) * w.inverse());
  }
}

TEST_CASE("positive root enumeration") {
  auto count = [](const char* label) {
    return positive_roots(CartanData::from_type(label)).size();
  };
  CHECK(count("A2") == 3);
  CHECK(count("A3") == 6);
  CHECK(count("A4") == 10);
  CHECK(count("B2") == 4);
  CHECK(count("B3") == 9);
  CHECK(count("C3") == 9);
  CHECK(count("D4") == 12);
  CHECK(count("G2") == 6);
  CHECK(count("F4") == 24);

  CartanData cd = CartanData::from_type("A2");
  auto phi = positive_roots(cd);
  CHECK(phi == std::vector<Root>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(projective_roots(cd) == std::vector<Root>{{1, 0}, {1, 1}});
  CHECK_THROWS_AS(positive_roots(kronecker()), DomainError);
}

TEST_CASE("length and longest element") {
  CartanData cd = CartanData::from_type("A3");
  CHECK(length(cd, GroupElement(3)) == 0);
  CHECK(length(cd, coxeter_element(cd)) == 3);
  GroupElement w0 = longest_element(cd);
  CHECK(length(cd, w0) == 6);
  CHECK((w0 * w0).is_identity());
  CHECK(is_reduced(cd, {1, 2, 1}));
  CHECK(!is_reduced(cd, {1, 1}));
  CHECK(!is_reduced(cd, {1, 2, 1, 2}));

  // infinite dihedral: alternating words never shorten
  CartanData kr = kronecker();
  CHECK(length(kr, word_to_element(kr, {1, 2, 1, 2})) == 4);
  CHECK(length(kr, word_to_element(kr, {2, 1, 2, 1, 2})) == 5);
}

TEST_CASE("word products compose") {
  CartanData cd = CartanData::from_type("A3");
  for (int trial = 0; trial < 200; ++trial) {
    Word u = testutil::random_word(3, testutil::pick(0, 6));
    Word v = testutil::random_word(3, testutil::pick(0, 6));
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(word_to_element(cd, uv) ==
          word_to_element(cd, u) * word_to_element(cd, v));
  }
}

TEST_CASE("reflection length") {
  CartanData cd = CartanData::from_type("A4");
  CHECK(reflection_length(GroupElement(4)) == 0);
  CHECK(reflection_length(simple_reflection(cd, 2)) == 1);
  CHECK(reflection_length(coxeter_element(cd)) == 4);
  for (const Root& beta : positive_roots(cd))
    CHECK(reflection_length(reflection_in(cd, beta)) == 1);
}

TEST_CASE("reflection in a non-root is rejected") {
  CartanData cd = CartanData::from_type("A2");
  // (2,0) is not a root: the coefficient turns non-integral
  CHECK_THROWS_AS(reflect_in_root(cd, {2, 0}, {0, 1}), DomainError);
  CHECK_NOTHROW(reflect_in_root(cd, {1, 1}, {1, 0}));
}
