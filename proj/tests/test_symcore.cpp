#include "capelli/symcore.hpp"
#include "capelli/young.hpp"

#include <doctest.h>

#include <random>

using namespace capelli;

namespace {

Permutation cyc(int k, std::string_view text) { return parse_permutation(text, k); }

Permutation random_permutation(std::mt19937& rng, int k)
{
  auto all = all_permutations(k);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

GroupAlgebraElement random_element(std::mt19937& rng, int k, int terms)
{
  GroupAlgebraElement u(k);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int t = 0; t < terms; ++t)
    u.add_term(random_permutation(rng, k), make_rational(coeff(rng), 1 + t % 3));
  return u;
}

}  // namespace

TEST_CASE("compose applies the right factor first")
{
  CHECK(compose(cyc(3, "(1 2)"), cyc(3, "(2 3)")) == cyc(3, "(1 2 3)"));
  const auto p = cyc(4, "(1 3 4)");
  CHECK(compose(p, Permutation::identity(4)) == p);
  CHECK(compose(cyc(3, "(1 2)"), cyc(3, "(1 2)")).is_identity());
  CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("inverse is an involution and a two-sided inverse")
{
  for (int k = 1; k <= 5; ++k)
    for (const auto& p : all_permutations(k)) {
      CHECK(p.inverse().inverse() == p);
      CHECK(compose(p, p.inverse()).is_identity());
      CHECK(compose(p.inverse(), p).is_identity());
    }
}

TEST_CASE("composition is associative")
{
  for (int k = 1; k <= 3; ++k) {
    const auto all = all_permutations(k);
    for (const auto& p : all)
      for (const auto& q : all)
        for (const auto& r : all)
          CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 4 + trial % 2;
    const auto p = random_permutation(rng, k);
    const auto q = random_permutation(rng, k);
    const auto r = random_permutation(rng, k);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }
}

TEST_CASE("permutation syntax")
{
  CHECK(to_cycle_string(cyc(4, "(1 2)(3 4)")) == "(1 2)(3 4)");
  CHECK(to_one_line_string(cyc(4, "(1 2)(3 4)")) == "[2,1,4,3]");
  CHECK(parse_permutation("[2,1,4,3]") == cyc(4, "(3 4)(1 2)"));
  CHECK(to_cycle_string(Permutation::identity(3)) == "()");
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK(to_cycle_string(cyc(5, "(4 2 5)")) == "(2 5 4)");

  for (int k = 1; k <= 4; ++k)
    for (const auto& p : all_permutations(k)) {
      CHECK(parse_permutation(to_cycle_string(p), k) == p);
      CHECK(parse_permutation(to_one_line_string(p)) == p);
    }

  CHECK_THROWS_AS(parse_permutation("[1,1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("(1 4)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("[2,1]", 3), std::invalid_argument);
}

TEST_CASE("reduced word reproduces the permutation")
{
  for (int k = 1; k <= 5; ++k)
    for (const auto& p : all_permutations(k)) {
      auto product = Permutation::identity(k);
      for (int r : reduced_word(p))
        product = product * Permutation::transposition(k, r, r + 1);
      CHECK(product == p);
    }
}

TEST_CASE("cycle type and sign")
{
  CHECK(cyc(5, "(1 2 3)(4 5)").cycle_type() == std::vector<int>{3, 2});
  CHECK(cyc(4, "(2 4)").cycle_type() == std::vector<int>{2, 1, 1});
  CHECK(cyc(4, "(1 2 3 4)").sign() == -1);
  CHECK(cyc(3, "(1 2 3)").sign() == 1);
}

TEST_CASE("group algebra products")
{
  const auto e = GroupAlgebraElement::identity(2);
  const GroupAlgebraElement swap(cyc(2, "(1 2)"), Rational(1));
  CHECK((e + swap) * (e - swap) == GroupAlgebraElement(2));
  CHECK(((e + swap) * (e - swap)).is_zero());

  const GroupAlgebraElement a(cyc(3, "(1 2)"), Rational(1));
  const GroupAlgebraElement b(cyc(3, "(2 3)"), Rational(1));
  CHECK(ga_multiply(a, b) == GroupAlgebraElement(cyc(3, "(1 2 3)"), Rational(1)));

  CHECK_THROWS_AS(ga_multiply(e, GroupAlgebraElement::identity(3)), std::invalid_argument);

  // The unit is two-sided.
  std::mt19937 rng(5);
  const auto u = random_element(rng, 4, 7);
  CHECK(GroupAlgebraElement::identity(4) * u == u);
  CHECK(u * GroupAlgebraElement::identity(4) == u);
}

TEST_CASE("scaled matrix element for [[1,2],[3]] is idempotent")
{
  const auto t = StandardTableau::parse("[[1,2],[3]]");
  const auto p = make_rational(1, 3) * psi(t, t);

  // Brute-force expansion over all 6 x 6 products.
  std::map<Permutation, Rational> square;
  for (const auto& [s, a] : p.terms())
    for (const auto& [r, b] : p.terms()) {
      std::vector<int> images(3);
      for (int i = 1; i <= 3; ++i)
        images[i - 1] = s(r(i));
      square[Permutation::from_images(images)] += a * b;
    }
  GroupAlgebraElement expanded(3);
  for (const auto& [s, c] : square)
    expanded.add_term(s, c);
  CHECK(p.size() == 6);
  CHECK(expanded == p);
  CHECK(p * p == p);
}

TEST_CASE("group algebra multiplication is associative and distributive")
{
  for (int k = 1; k <= 3; ++k) {
    const auto all = all_permutations(k);
    for (const auto& p : all)
      for (const auto& q : all)
        for (const auto& r : all) {
          const GroupAlgebraElement a(p, Rational(2)), b(q, Rational(-1)), c(r, make_rational(1, 3));
          CHECK((a * b) * c == a * (b * c));
        }
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 4 + trial % 2;
    const auto u = random_element(rng, k, 5);
    const auto v = random_element(rng, k, 5);
    const auto w = random_element(rng, k, 5);
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * (v + w) == u * v + u * w);
    CHECK((u + v) * w == u * w + v * w);
  }
}

TEST_CASE("Jucys-Murphy elements")
{
  CHECK(jm_element(2, 2) == GroupAlgebraElement(cyc(2, "(1 2)"), Rational(1)));
  CHECK(jm_element(3, 3) ==
        GroupAlgebraElement(cyc(3, "(1 3)"), Rational(1)) + GroupAlgebraElement(cyc(3, "(2 3)"), Rational(1)));
  CHECK(jm_element(5, 1).is_zero());
  CHECK_THROWS_AS(jm_element(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(jm_element(3, 4), std::invalid_argument);

  for (int k = 1; k <= 5; ++k)
    for (int r = 1; r <= k; ++r)
      for (int q = 1; q <= k; ++q)
        CHECK(jm_element(k, r) * jm_element(k, q) == jm_element(k, q) * jm_element(k, r));
}

TEST_CASE("group algebra printing")
{
  const auto u = GroupAlgebraElement::identity(3) - make_rational(1, 2) * GroupAlgebraElement(cyc(3, "(1 2 3)"), Rational(1));
  CHECK(to_string(u) == "1 - 1/2 (1 2 3)");
  CHECK(to_string(GroupAlgebraElement(3)) == "0");
}
