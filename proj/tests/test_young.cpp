#include "capelli/young.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace capelli;

namespace {

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

Permutation adjacent(int k, int r) { return Permutation::transposition(k, r, r + 1); }

}  // namespace

TEST_CASE("partition parsing and validation")
{
  CHECK(Partition::parse("2,1") == Partition({2, 1}));
  CHECK(Partition::parse(" 3, 3 ,1 ").weight() == 7);
  CHECK(to_string(Partition::parse("4,2,2")) == "4,2,2");
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,0"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);

  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(4).front() == Partition({4}));
  CHECK(partitions_of(4).back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("tableau parsing, printing and validation")
{
  const auto t = StandardTableau::parse("[[1,2],[3]]");
  CHECK(to_string(t) == "[[1,2],[3]]");
  CHECK(t.shape() == Partition({2, 1}));
  CHECK(to_string(StandardTableau::parse(" [ [1, 3], [2] ] ")) == "[[1,3],[2]]");
  CHECK_THROWS_AS(StandardTableau::parse("[[2,1],[3]]"), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau::parse("[[1,3],[2,4,5]]"), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau::parse("[[1,2],[2]]"), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau::parse("[[1,3],[4],[2]]"), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau::parse("[[1,2],[3]"), std::invalid_argument);

  for (int k = 1; k <= 5; ++k)
    for (const auto& lambda : partitions_of(k))
      for (const auto& tab : enumerate_standard_tableaux(lambda))
        CHECK(StandardTableau::parse(to_string(tab)) == tab);
}

TEST_CASE("standard tableau enumeration")
{
  CHECK(enumerate_standard_tableaux(Partition({1, 1, 1})).size() == 1);

  const auto two_one = enumerate_standard_tableaux(Partition({2, 1}));
  REQUIRE(two_one.size() == 2);
  CHECK(to_string(two_one[0]) == "[[1,2],[3]]");
  CHECK(to_string(two_one[1]) == "[[1,3],[2]]");

  CHECK(oracle::hook_length_dimension({2, 1}) == 2);
  CHECK(oracle::hook_length_dimension({2, 2}) == 2);
  CHECK(enumerate_standard_tableaux(Partition({2, 2})).size() == 2);

  for (int k = 1; k <= 7; ++k)
    for (const auto& lambda : partitions_of(k)) {
      const auto tabs = enumerate_standard_tableaux(lambda);
      CHECK(static_cast<long>(tabs.size()) == oracle::hook_length_dimension(parts_of(lambda)));
      CHECK(std::is_sorted(tabs.begin(), tabs.end()));
      for (const auto& t : tabs)
        CHECK(t.shape() == lambda);
    }
}

TEST_CASE("contents")
{
  const auto t = StandardTableau::parse("[[1,2],[3]]");
  CHECK(content(t, 2) == 1);
  CHECK(content(t, 3) == -1);
  CHECK_THROWS_AS(content(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(content(t, 4), std::invalid_argument);
  for (int k = 1; k <= 5; ++k)
    for (const auto& lambda : partitions_of(k))
      for (const auto& tab : enumerate_standard_tableaux(lambda))
        CHECK(content(tab, 1) == 0);
}

TEST_CASE("removing the largest entry branches to a standard tableau")
{
  const auto t = StandardTableau::parse("[[1,3],[2,4]]");
  CHECK(to_string(t.without_largest()) == "[[1,3],[2]]");
  CHECK(to_string(StandardTableau::parse("[[1,2],[3]]").without_largest()) == "[[1,2]]");
  for (int k = 2; k <= 6; ++k)
    for (const auto& lambda : partitions_of(k))
      for (const auto& tab : enumerate_standard_tableaux(lambda)) {
        const auto u = tab.without_largest();
        CHECK(u.size() == k - 1);
        CHECK(u.shape().weight() == k - 1);
      }
}

TEST_CASE("seminormal matrices: worked examples")
{
  const Partition lambda({2, 1});
  const auto swap12 = seminormal_matrix(lambda, parse_permutation("(1 2)", 3));
  CHECK(swap12(0, 0) == 1);
  CHECK(swap12(1, 1) == -1);
  CHECK(swap12(0, 1) == 0);
  CHECK(swap12(1, 0) == 0);

  const auto swap23 = seminormal_matrix(lambda, parse_permutation("(2 3)", 3));
  CHECK(swap23(0, 0) == make_rational(-1, 2));

  for (int k = 1; k <= 4; ++k)
    for (const auto& mu : partitions_of(k))
      CHECK(seminormal_matrix(mu, Permutation::identity(k)) == RationalMatrix::identity(seminormal_representation(mu).dim()));

  CHECK_THROWS_AS(seminormal_matrix(lambda, Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("seminormal representation is a homomorphism")
{
  for (int k = 1; k <= 4; ++k)
    for (const auto& lambda : partitions_of(k)) {
      const auto& rep = seminormal_representation(lambda);
      const auto all = all_permutations(k);
      for (const auto& s : all)
        for (const auto& t : all)
          CHECK(rep.matrix(compose(s, t)) == rep.matrix(s) * rep.matrix(t));
    }

  std::mt19937 rng(3);
  const auto all5 = all_permutations(5);
  std::uniform_int_distribution<std::size_t> pick(0, all5.size() - 1);
  for (const auto& lambda : partitions_of(5)) {
    const auto& rep = seminormal_representation(lambda);
    for (int trial = 0; trial < 30; ++trial) {
      const auto& s = all5[pick(rng)];
      const auto& t = all5[pick(rng)];
      CHECK(rep.matrix(compose(s, t)) == rep.matrix(s) * rep.matrix(t));
    }
  }
}

TEST_CASE("Coxeter relations of the generators")
{
  for (int k = 2; k <= 5; ++k)
    for (const auto& lambda : partitions_of(k)) {
      const auto& rep = seminormal_representation(lambda);
      const auto id = RationalMatrix::identity(rep.dim());
      for (int r = 1; r < k; ++r) {
        const auto& g = rep.generator(r);
        CHECK(g * g == id);
        CHECK(g == rep.matrix(adjacent(k, r)));
        if (r + 1 < k) {
          const auto& h = rep.generator(r + 1);
          CHECK(g * h * g == h * g * h);
        }
        for (int q = r + 2; q < k; ++q)
          CHECK(g * rep.generator(q) == rep.generator(q) * g);
      }
    }
}

TEST_CASE("Jucys-Murphy elements act diagonally with content eigenvalues")
{
  for (int k = 1; k <= 5; ++k)
    for (const auto& lambda : partitions_of(k)) {
      const auto& rep = seminormal_representation(lambda);
      for (int r = 1; r <= k; ++r) {
        RationalMatrix sum(rep.dim());
        for (int i = 1; i < r; ++i)
          sum += rep.matrix(Permutation::transposition(k, i, r));
        CHECK(sum.is_diagonal());
        for (int j = 0; j < rep.dim(); ++j)
          CHECK(sum(j, j) == rep.tableaux()[j].content(r));
      }
    }
}

TEST_CASE("matrix elements: worked examples")
{
  const auto row = StandardTableau::parse("[[1,2]]");
  CHECK(psi(row, row) == GroupAlgebraElement::identity(2) + GroupAlgebraElement(parse_permutation("(1 2)", 2), Rational(1)));

  const auto col = StandardTableau::parse("[[1],[2]]");
  CHECK(psi(col, col) == GroupAlgebraElement::identity(2) - GroupAlgebraElement(parse_permutation("(1 2)", 2), Rational(1)));

  const auto t = StandardTableau::parse("[[1,2],[3]]");
  GroupAlgebraElement expected = GroupAlgebraElement::identity(3);
  expected.add_term(parse_permutation("(1 2)", 3), Rational(1));
  for (const char* s : {"(2 3)", "(1 3)", "(1 2 3)", "(1 3 2)"})
    expected.add_term(parse_permutation(s, 3), make_rational(-1, 2));
  CHECK(psi(t, t) == expected);

  CHECK_THROWS_AS(psi(t, row), std::invalid_argument);
}

TEST_CASE("scaled diagonal matrix elements are orthogonal idempotents")
{
  for (int k = 1; k <= 4; ++k)
    for (const auto& lambda : partitions_of(k)) {
      const auto tabs = enumerate_standard_tableaux(lambda);
      const auto scale = make_rational(static_cast<long>(tabs.size()), oracle::factorial(k));
      for (const auto& t : tabs) {
        const auto p = scale * psi(t, t);
        CHECK(p * p == p);
        for (const auto& u : tabs)
          if (!(u == t))
            CHECK((psi(t, t) * psi(u, u)).is_zero());
      }
    }
}

TEST_CASE("characters")
{
  const auto sign = character_element(Partition({1, 1}));
  CHECK(sign.coefficient(parse_permutation("(1 2)", 2)) == -1);

  const auto chi = character_element(Partition({2, 1}));
  CHECK(chi.coefficient(Permutation::identity(3)) == 2);
  CHECK(chi.coefficient(parse_permutation("(1 2 3)", 3)) == -1);

  for (int k = 1; k <= 5; ++k) {
    Rational squares = 0;
    for (const auto& lambda : partitions_of(k)) {
      const auto c = character_element(lambda).coefficient(Permutation::identity(k));
      squares += c * c;
    }
    CHECK(squares == oracle::factorial(k));
  }
}

TEST_CASE("trace characters agree with Murnaghan-Nakayama")
{
  for (int k = 1; k <= 5; ++k)
    for (const auto& lambda : partitions_of(k)) {
      const auto chi = character_element(lambda);
      for (const auto& s : all_permutations(k)) {
        const auto value = chi.coefficient(s);
        CHECK(is_integer(value));
        CHECK(value == oracle::murnaghan_nakayama(parts_of(lambda), s.cycle_type()));
      }
    }
}

TEST_CASE("seminormal matrix elements are proportional to orthonormal ones")
{
  for (int k = 1; k <= 4; ++k)
    for (const auto& lambda : partitions_of(k)) {
      const auto tabs = enumerate_standard_tableaux(lambda);
      for (const auto& t : tabs)
        for (const auto& u : tabs) {
          const auto exact = psi(t, u);
          const auto approx = oracle::orthonormal_psi(t, u);
          double ratio = 0.0;
          for (const auto& [s, c] : exact.terms())
            if (std::abs(c.get_d()) > std::abs(ratio))
              ratio = approx.at(s) / c.get_d();
          REQUIRE(ratio != 0.0);
          for (const auto& [s, value] : approx) {
            const double scaled = exact.coefficient(s).get_d() * ratio;
            CHECK(std::abs(scaled - value) <= 1e-9 * std::max(1.0, std::abs(value)));
          }
          if (t == u)
            CHECK(std::abs(ratio - 1.0) < 1e-12);
        }
    }
}
