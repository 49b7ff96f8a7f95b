#pragma once

#include "capelli/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace capelli {

/// The m x n grid of variables x[a,i] (1 <= a <= m, 1 <= i <= n).
struct WeylSpace {
  int m = 1;
  int n = 1;

  int slots() const { return m * n; }
  /// Row-major slot index of (a, i), both 1-based.
  int slot(int a, int i) const { return (a - 1) * n + (i - 1); }
  bool operator==(const WeylSpace&) const = default;
};

using Exponent = std::uint16_t;

/// x^alpha D^beta with all x factors to the left. Ordered lexicographically
/// by (alpha, beta) flattened row-major.
class WeylMonomial {
public:
  WeylMonomial() = default;
  explicit WeylMonomial(int slots) : exps_(2 * static_cast<std::size_t>(slots), 0) {}

  int slots() const { return static_cast<int>(exps_.size() / 2); }
  Exponent x(int slot) const { return exps_[slot]; }
  Exponent d(int slot) const { return exps_[slots() + slot]; }
  Exponent& x(int slot) { return exps_[slot]; }
  Exponent& d(int slot) { return exps_[slots() + slot]; }

  int x_degree() const;
  int d_degree() const;
  bool is_unit() const;

  auto operator<=>(const WeylMonomial&) const = default;
  bool operator==(const WeylMonomial&) const = default;

private:
  std::vector<Exponent> exps_;
};

/// Element of the algebra of polynomial-coefficient differential operators,
/// stored in normal order with exact coefficients and no zero terms.
class WeylElement {
public:
  using TermMap = std::map<WeylMonomial, Rational>;

  WeylElement() = default;
  explicit WeylElement(WeylSpace space) : space_(space) {}

  static WeylElement constant(WeylSpace space, const Rational& c);
  static WeylElement x(WeylSpace space, int a, int i);
  static WeylElement d(WeylSpace space, int a, int i);
  static WeylElement monomial(WeylSpace space, const WeylMonomial& mono, const Rational& c);

  const WeylSpace& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const WeylMonomial& mono) const;

  void add_term(const WeylMonomial& mono, const Rational& c);

  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator-=(const WeylElement& other);
  WeylElement& operator*=(const Rational& c);
  WeylElement operator-() const;

  bool operator==(const WeylElement&) const = default;

private:
  void check_space(const WeylElement& other) const;

  WeylSpace space_;
  TermMap terms_;
};

WeylElement operator+(WeylElement u, const WeylElement& v);
WeylElement operator-(WeylElement u, const WeylElement& v);
WeylElement operator*(const Rational& c, WeylElement u);

/// Normal-ordered product. Per slot, D^p x^q = sum_j j! C(p,j) C(q,j) x^(q-j) D^(p-j).
WeylElement weyl_multiply(const WeylElement& u, const WeylElement& v);
inline WeylElement operator*(const WeylElement& u, const WeylElement& v) { return weyl_multiply(u, v); }

/// Polynomial in the x[a,i] with exact coefficients.
class Polynomial {
public:
  using Exponents = std::vector<Exponent>;
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;
  explicit Polynomial(WeylSpace space) : space_(space) {}

  static Polynomial constant(WeylSpace space, const Rational& c);
  static Polynomial variable(WeylSpace space, int a, int i);

  const WeylSpace& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  bool operator==(const Polynomial&) const = default;

private:
  WeylSpace space_;
  TermMap terms_;
};

Polynomial operator+(Polynomial f, const Polynomial& g);
Polynomial operator-(Polynomial f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Rational& c, Polynomial f);
Polynomial pow(const Polynomial& f, int e);

/// Acts with the differential operator u on f.
Polynomial weyl_apply(const WeylElement& u, const Polynomial& f);

/// "x[1,1]^2 D[1,1]^2 + 4 x[1,1] D[1,1] + 2"; terms in descending monomial order.
std::string to_string(const WeylElement& u);
std::string to_string(const Polynomial& f);

}  // namespace capelli
