#pragma once

#include "capelli/rational.hpp"
#include "capelli/symcore.hpp"
#include "capelli/ugl.hpp"
#include "capelli/weyl.hpp"

#include <concepts>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

/// Coefficient algebra plugged into AlgMatrix / TensorElement. Multiplication
/// need not be commutative; products are always formed left-to-right.
template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::value_type& a,
                                   typename R::value_type& acc, const Rational& q) {
  { ring.scalar(q) } -> std::same_as<typename R::value_type>;
  { ring.mul(a, a) } -> std::same_as<typename R::value_type>;
  { ring.scale(q, a) } -> std::same_as<typename R::value_type>;
  { ring.is_zero(a) } -> std::convertible_to<bool>;
  { ring.format(a) } -> std::convertible_to<std::string>;
  ring.add_to(acc, a);
};

struct RationalRing {
  using value_type = Rational;
  Rational scalar(const Rational& q) const { return q; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational scale(const Rational& q, const Rational& a) const { return q * a; }
  bool is_zero(const Rational& a) const { return a == 0; }
  void add_to(Rational& acc, const Rational& a) const { acc += a; }
  std::string format(const Rational& a) const { return a.get_str(); }
  bool operator==(const RationalRing&) const = default;
};

struct WeylRing {
  using value_type = WeylElement;
  WeylSpace space;
  WeylElement scalar(const Rational& q) const { return WeylElement::constant(space, q); }
  WeylElement mul(const WeylElement& a, const WeylElement& b) const { return a * b; }
  WeylElement scale(const Rational& q, const WeylElement& a) const { return q * a; }
  bool is_zero(const WeylElement& a) const { return a.is_zero(); }
  void add_to(WeylElement& acc, const WeylElement& a) const { acc += a; }
  std::string format(const WeylElement& a) const { return to_string(a); }
  bool operator==(const WeylRing&) const = default;
};

struct UglRing {
  using value_type = UglElement;
  int m = 1;
  UglElement scalar(const Rational& q) const { return UglElement::constant(m, q); }
  UglElement mul(const UglElement& a, const UglElement& b) const { return a * b; }
  UglElement scale(const Rational& q, const UglElement& a) const { return q * a; }
  bool is_zero(const UglElement& a) const { return a.is_zero(); }
  void add_to(UglElement& acc, const UglElement& a) const { acc += a; }
  std::string format(const UglElement& a) const { return to_string(a); }
  bool operator==(const UglRing&) const = default;
};

/// Dense p x q matrix over a coefficient ring; indices are 1-based.
template <CoefficientRing Ring>
class AlgMatrix {
public:
  using value_type = typename Ring::value_type;

  AlgMatrix(Ring ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        entries_(static_cast<std::size_t>(rows) * cols, ring_.scalar(Rational(0)))
  {
    if (rows < 1 || cols < 1)
      throw std::invalid_argument("matrix dimensions must be positive");
  }

  static AlgMatrix identity(Ring ring, int size)
  {
    AlgMatrix out(ring, size, size);
    for (int a = 1; a <= size; ++a)
      out(a, a) = ring.scalar(Rational(1));
    return out;
  }

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  value_type& operator()(int a, int b) { return entries_[static_cast<std::size_t>(a - 1) * cols_ + (b - 1)]; }
  const value_type& operator()(int a, int b) const
  {
    return entries_[static_cast<std::size_t>(a - 1) * cols_ + (b - 1)];
  }

  AlgMatrix transpose() const
  {
    AlgMatrix out(ring_, cols_, rows_);
    for (int a = 1; a <= rows_; ++a)
      for (int b = 1; b <= cols_; ++b)
        out(b, a) = (*this)(a, b);
    return out;
  }

  /// this - c * Id.
  AlgMatrix shifted(const Rational& c) const
  {
    if (rows_ != cols_)
      throw std::invalid_argument("shift needs a square matrix");
    AlgMatrix out = *this;
    for (int a = 1; a <= rows_; ++a)
      ring_.add_to(out(a, a), ring_.scalar(-c));
    return out;
  }

  bool operator==(const AlgMatrix& other) const
  {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }

private:
  Ring ring_;
  int rows_;
  int cols_;
  std::vector<value_type> entries_;
};

template <CoefficientRing Ring>
AlgMatrix<Ring> operator*(const AlgMatrix<Ring>& u, const AlgMatrix<Ring>& v)
{
  if (u.cols() != v.rows())
    throw std::invalid_argument("matrix product: dimension mismatch");
  const auto& ring = u.ring();
  AlgMatrix<Ring> out(ring, u.rows(), v.cols());
  for (int a = 1; a <= u.rows(); ++a)
    for (int b = 1; b <= v.cols(); ++b)
      for (int i = 1; i <= u.cols(); ++i)
        ring.add_to(out(a, b), ring.mul(u(a, i), v(i, b)));
  return out;
}

/// Row-major encoding of a multi-index (i_1..i_k), each 0-based in [0, base),
/// with i_1 most significant so the integer order is lexicographic.
using MultiIndex = std::uint32_t;

inline std::vector<int> decode_multi_index(MultiIndex code, int base, int k)
{
  std::vector<int> digits(k);
  for (int t = k - 1; t >= 0; --t) {
    digits[t] = static_cast<int>(code % base);
    code /= base;
  }
  return digits;
}

inline MultiIndex encode_multi_index(const std::vector<int>& digits, int base)
{
  MultiIndex code = 0;
  for (int d : digits)
    code = code * base + d;
  return code;
}

inline MultiIndex multi_index_count(int base, int k)
{
  MultiIndex n = 1;
  for (int t = 0; t < k; ++t)
    n *= base;
  return n;
}

/// Element of A (x) (Mat_{p x q})^{(x) k}, stored sparsely as
/// (row multi-index, column multi-index) -> coefficient, zero entries absent.
template <CoefficientRing Ring>
class TensorElement {
public:
  using value_type = typename Ring::value_type;
  using Key = std::pair<MultiIndex, MultiIndex>;
  using TermMap = std::map<Key, value_type>;

  TensorElement(Ring ring, int k, int p, int q) : ring_(std::move(ring)), k_(k), p_(p), q_(q)
  {
    if (k < 1 || p < 1 || q < 1)
      throw std::invalid_argument("tensor dimensions must be positive");
  }

  /// Identity of (Mat_{m x m})^{(x) k}.
  static TensorElement identity(Ring ring, int k, int m)
  {
    TensorElement out(ring, k, m, m);
    const auto one = ring.scalar(Rational(1));
    for (MultiIndex a = 0; a < multi_index_count(m, k); ++a)
      out.terms_.emplace(Key{a, a}, one);
    return out;
  }

  const Ring& ring() const { return ring_; }
  int factors() const { return k_; }
  int rows() const { return p_; }
  int cols() const { return q_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  value_type entry(MultiIndex row, MultiIndex col) const
  {
    auto it = terms_.find(Key{row, col});
    return it == terms_.end() ? ring_.scalar(Rational(0)) : it->second;
  }

  void add_entry(MultiIndex row, MultiIndex col, const value_type& value)
  {
    if (ring_.is_zero(value))
      return;
    auto [it, inserted] = terms_.try_emplace(Key{row, col}, value);
    if (!inserted) {
      ring_.add_to(it->second, value);
      if (ring_.is_zero(it->second))
        terms_.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& other)
  {
    check_shape(other);
    for (const auto& [key, value] : other.terms_)
      add_entry(key.first, key.second, value);
    return *this;
  }

  TensorElement& operator-=(const TensorElement& other)
  {
    check_shape(other);
    for (const auto& [key, value] : other.terms_)
      add_entry(key.first, key.second, ring_.scale(Rational(-1), value));
    return *this;
  }

  TensorElement scaled(const Rational& c) const
  {
    TensorElement out(ring_, k_, p_, q_);
    if (c == 0)
      return out;
    for (const auto& [key, value] : terms_)
      out.terms_.emplace(key, ring_.scale(c, value));
    return out;
  }

  bool operator==(const TensorElement& other) const
  {
    return k_ == other.k_ && p_ == other.p_ && q_ == other.q_ && terms_ == other.terms_;
  }

  void check_shape(const TensorElement& other) const
  {
    if (k_ != other.k_ || p_ != other.p_ || q_ != other.q_)
      throw std::invalid_argument("tensor shape mismatch");
  }

private:
  Ring ring_;
  int k_;
  int p_;
  int q_;
  TermMap terms_;
};

template <CoefficientRing Ring>
TensorElement<Ring> operator+(TensorElement<Ring> u, const TensorElement<Ring>& v)
{
  return u += v;
}

template <CoefficientRing Ring>
TensorElement<Ring> operator-(TensorElement<Ring> u, const TensorElement<Ring>& v)
{
  return u -= v;
}

/// A (x) B (x) ... (x) C with entry ((a),(i)) = A_{a1 i1} B_{a2 i2} ... C_{ak ik},
/// multiplied in factor order.
template <CoefficientRing Ring>
TensorElement<Ring> tensor_product(const std::vector<AlgMatrix<Ring>>& factors)
{
  if (factors.empty())
    throw std::invalid_argument("tensor_product: need at least one factor");
  const auto& ring = factors.front().ring();
  const int p = factors.front().rows();
  const int q = factors.front().cols();
  for (const auto& f : factors)
    if (f.rows() != p || f.cols() != q)
      throw std::invalid_argument("tensor_product: factor dimension mismatch");

  // Kronecker accumulation keeps row/column codes lexicographic.
  std::map<std::pair<MultiIndex, MultiIndex>, typename Ring::value_type> current{{{0, 0}, ring.scalar(Rational(1))}};
  for (const auto& f : factors) {
    std::map<std::pair<MultiIndex, MultiIndex>, typename Ring::value_type> next;
    for (const auto& [key, value] : current)
      for (int a = 1; a <= p; ++a)
        for (int b = 1; b <= q; ++b) {
          if (ring.is_zero(f(a, b)))
            continue;
          auto product = ring.mul(value, f(a, b));
          if (ring.is_zero(product))
            continue;
          next.emplace(std::make_pair(key.first * p + (a - 1), key.second * q + (b - 1)), std::move(product));
        }
    current = std::move(next);
  }
  TensorElement<Ring> out(ring, static_cast<int>(factors.size()), p, q);
  for (const auto& [key, value] : current)
    out.add_entry(key.first, key.second, value);
  return out;
}

/// Contracts the shared multi-index; coefficients multiply as u-entry * v-entry.
template <CoefficientRing Ring>
TensorElement<Ring> tensor_matmul(const TensorElement<Ring>& u, const TensorElement<Ring>& v)
{
  if (u.factors() != v.factors() || u.cols() != v.rows())
    throw std::invalid_argument("tensor_matmul: dimension mismatch");
  const auto& ring = u.ring();
  TensorElement<Ring> out(ring, u.factors(), u.rows(), v.cols());
  const auto& vt = v.terms();
  for (const auto& [key, left] : u.terms()) {
    const MultiIndex inner = key.second;
    for (auto it = vt.lower_bound({inner, 0}); it != vt.end() && it->first.first == inner; ++it)
      out.add_entry(key.first, it->first.second, ring.mul(left, it->second));
  }
  return out;
}

/// Place permutation on (C^m)^{(x) k}: u_1 (x) ... (x) u_k -> u_{s^-1(1)} (x) ... (x) u_{s^-1(k)}.
/// Entry ((a),(b)) is 1 iff a_t = b_{s^-1(t)} for all t.
template <CoefficientRing Ring>
TensorElement<Ring> perm_tensor(const Ring& ring, const Permutation& s, int m)
{
  const int k = s.degree();
  TensorElement<Ring> out(ring, k, m, m);
  const auto inv = s.inverse();
  const auto one = ring.scalar(Rational(1));
  for (MultiIndex code = 0; code < multi_index_count(m, k); ++code) {
    const auto b = decode_multi_index(code, m, k);
    std::vector<int> a(k);
    for (int t = 1; t <= k; ++t)
      a[t - 1] = b[inv(t) - 1];
    out.add_entry(encode_multi_index(a, m), code, one);
  }
  return out;
}

/// u * sum_s g(s) P(s). Right multiplication by P(s) sends entry (a, b) to
/// (a, c) with c_j = b_{s(j)}.
template <CoefficientRing Ring>
TensorElement<Ring> right_mul_group_algebra(const TensorElement<Ring>& u, const GroupAlgebraElement& g)
{
  const int k = u.factors();
  const int m = u.cols();
  if (g.degree() != k)
    throw std::invalid_argument("right_mul_group_algebra: degree mismatch");
  const auto& ring = u.ring();
  TensorElement<Ring> out(ring, k, u.rows(), m);
  const MultiIndex count = multi_index_count(m, k);
  std::vector<MultiIndex> column_image(count);
  for (const auto& [s, coeff] : g.terms()) {
    for (MultiIndex code = 0; code < count; ++code) {
      const auto b = decode_multi_index(code, m, k);
      std::vector<int> c(k);
      for (int j = 1; j <= k; ++j)
        c[j - 1] = b[s(j) - 1];
      column_image[code] = encode_multi_index(c, m);
    }
    for (const auto& [key, value] : u.terms())
      out.add_entry(key.first, column_image[key.second], ring.scale(coeff, value));
  }
  return out;
}

/// Sum of the diagonal entries ((a),(a)).
template <CoefficientRing Ring>
typename Ring::value_type full_trace(const TensorElement<Ring>& u)
{
  if (u.rows() != u.cols())
    throw std::invalid_argument("full_trace: factors are not square");
  auto out = u.ring().scalar(Rational(0));
  for (const auto& [key, value] : u.terms())
    if (key.first == key.second)
      u.ring().add_to(out, value);
  return out;
}

/// Nonzero entries as "(a1,..,ak | b1,..,bk): value", one per line, 1-based.
template <CoefficientRing Ring>
std::string to_string(const TensorElement<Ring>& u)
{
  auto fmt = [&](MultiIndex code, int base) {
    std::string s;
    for (int d : decode_multi_index(code, base, u.factors()))
      s += (s.empty() ? "" : ",") + std::to_string(d + 1);
    return s;
  };
  std::string out;
  for (const auto& [key, value] : u.terms())
    out += "(" + fmt(key.first, u.rows()) + " | " + fmt(key.second, u.cols()) + "): " + u.ring().format(value) + "\n";
  return out;
}

}  // namespace capelli
