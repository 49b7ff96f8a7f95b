#pragma once

#include "capelli/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace capelli {

/// A permutation of {1..k} in one-line notation: images()[i-1] == p(i).
///
/// Products follow the "right factor acts first" convention, so
/// compose(p, q)(i) == p(q(i)).
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(int degree);
  /// Throws std::invalid_argument unless `images` is a bijection of {1..k}.
  static Permutation from_images(std::vector<int> images);
  static Permutation transposition(int degree, int i, int j);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;

  /// Nontrivial cycles, each starting at its smallest element, ordered by
  /// that element.
  std::vector<std::vector<int>> cycles() const;
  /// Cycle lengths including fixed points, weakly decreasing.
  std::vector<int> cycle_type() const;

  /// Same permutation viewed in S_degree, fixing the extra points.
  Permutation extended(int degree) const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// Apply q first, then p. Throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// All of S_k in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int degree);

/// Indices r (1-based) of adjacent transpositions s_r = (r, r+1) with
/// s == s_{r_1} * s_{r_2} * ... * s_{r_l}, a reduced word found by bubble sort.
std::vector<int> reduced_word(const Permutation& s);

/// "(1 2)(3 4)"; the identity prints as "()".
std::string to_cycle_string(const Permutation& p);
/// "[2,1,4,3]".
std::string to_one_line_string(const Permutation& p);

/// Accepts cycle notation "(1 2 3)(4 5)" or one-line notation "[2,1,3]".
/// Cycle notation needs `degree`; one-line notation checks it when given.
Permutation parse_permutation(std::string_view text, std::optional<int> degree = std::nullopt);

/// Sparse rational combination of permutations of a fixed degree.
class GroupAlgebraElement {
public:
  using TermMap = std::map<Permutation, Rational>;

  explicit GroupAlgebraElement(int degree = 1) : degree_(degree) {}
  GroupAlgebraElement(const Permutation& s, const Rational& coeff);

  static GroupAlgebraElement identity(int degree);

  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& s) const;
  Rational coefficient_sum() const;

  /// Accumulates into the coefficient of s; zero results are erased.
  void add_term(const Permutation& s, const Rational& coeff);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& c);

  /// Image of the element in S_degree under the standard inclusion.
  GroupAlgebraElement extended(int degree) const;

  bool operator==(const GroupAlgebraElement&) const = default;

private:
  void check_degree(const GroupAlgebraElement& other) const;

  int degree_;
  TermMap terms_;
};

GroupAlgebraElement operator+(GroupAlgebraElement u, const GroupAlgebraElement& v);
GroupAlgebraElement operator-(GroupAlgebraElement u, const GroupAlgebraElement& v);
GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement u);

/// Bilinear extension of compose.
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& u, const GroupAlgebraElement& v);
inline GroupAlgebraElement operator*(const GroupAlgebraElement& u, const GroupAlgebraElement& v)
{
  return ga_multiply(u, v);
}

/// Jucys-Murphy element (1 r) + (2 r) + ... + (r-1 r) in Q[S_k].
GroupAlgebraElement jm_element(int degree, int r);

/// e.g. "1 + (1 2) - 1/2 (1 2 3)"; terms in canonical order.
std::string to_string(const GroupAlgebraElement& u);

}  // namespace capelli
