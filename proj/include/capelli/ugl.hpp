#pragma once

#include "capelli/rational.hpp"
#include "capelli/weyl.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

/// Generators E[a,b] of gl(m) numbered in PBW order: lowering (a > b),
/// then Cartan (a == b), then raising (a < b), each block lexicographic.
class GeneratorOrder {
public:
  explicit GeneratorOrder(int m);

  int rank() const { return m_; }
  int count() const { return m_ * m_; }
  int index(int a, int b) const { return index_[(a - 1) * m_ + (b - 1)]; }
  std::pair<int, int> pair(int index) const { return pairs_[index]; }
  bool is_cartan(int index) const { return pairs_[index].first == pairs_[index].second; }

private:
  int m_;
  std::vector<int> index_;
  std::vector<std::pair<int, int>> pairs_;
};

/// A PBW monomial as a nondecreasing word of generator indices.
using PbwWord = std::vector<std::uint8_t>;

/// Graded order: total degree first, then lexicographic.
struct PbwLess {
  bool operator()(const PbwWord& a, const PbwWord& b) const
  {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

/// Element of U(gl(m)) in PBW normal form with exact coefficients.
class UglElement {
public:
  using TermMap = std::map<PbwWord, Rational, PbwLess>;

  explicit UglElement(int m = 1) : m_(m) {}

  static UglElement constant(int m, const Rational& c);
  static UglElement generator(int m, int a, int b);

  int rank() const { return m_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const PbwWord& word) const;

  /// `word` must already be in PBW order.
  void add_term(const PbwWord& word, const Rational& c);

  UglElement& operator+=(const UglElement& other);
  UglElement& operator-=(const UglElement& other);
  UglElement& operator*=(const Rational& c);

  bool operator==(const UglElement&) const = default;

private:
  void check_rank(const UglElement& other) const;

  int m_;
  TermMap terms_;
};

UglElement operator+(UglElement u, const UglElement& v);
UglElement operator-(UglElement u, const UglElement& v);
UglElement operator*(const Rational& c, UglElement u);

/// Product straightened with [E_ab, E_cd] = d_cb E_ad - d_ad E_cb.
UglElement ugl_multiply(const UglElement& u, const UglElement& v);
inline UglElement operator*(const UglElement& u, const UglElement& v) { return ugl_multiply(u, v); }

/// Hard-coded structure constants: [E_ab, E_cd] as an element of U(gl(m)).
UglElement lie_bracket(int m, int a, int b, int c, int d);

/// The homomorphism E_ab -> sum_i x[a,i] D[b,i] into the Weyl algebra on an m x n grid.
WeylElement ugl_to_weyl(const UglElement& u, int n);

struct CentralityResult {
  bool central = true;
  /// First generator (a, b) in PBW order with [u, E_ab] != 0.
  std::optional<std::pair<int, int>> witness;
  UglElement commutator;

  explicit operator bool() const { return central; }
};

CentralityResult is_central(const UglElement& u);

/// Eigenvalue of a central element on the highest-weight module of the given
/// weight: the Cartan-only part of the PBW form evaluated at E_aa -> weights[a].
/// Throws std::domain_error for non-central input.
Rational hc_eigenvalue(const UglElement& u, std::span<const Rational> weights);

/// "E[2,1] E[1,2] - E[2,2] + E[1,1]"; factors in PBW order, terms in
/// descending graded order.
std::string to_string(const UglElement& u);

}  // namespace capelli
