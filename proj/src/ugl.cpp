#include "capelli/ugl.hpp"

#include <algorithm>
#include <stdexcept>

namespace capelli {

GeneratorOrder::GeneratorOrder(int m) : m_(m), index_(static_cast<std::size_t>(m) * m)
{
  if (m < 1)
    throw std::invalid_argument("gl(m) rank must be positive");
  auto push = [&](int a, int b) {
    index_[(a - 1) * m + (b - 1)] = static_cast<int>(pairs_.size());
    pairs_.emplace_back(a, b);
  };
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b < a; ++b)
      push(a, b);
  for (int a = 1; a <= m; ++a)
    push(a, a);
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      push(a, b);
}

UglElement UglElement::constant(int m, const Rational& c)
{
  UglElement u(m);
  u.add_term({}, c);
  return u;
}

UglElement UglElement::generator(int m, int a, int b)
{
  if (a < 1 || b < 1 || a > m || b > m)
    throw std::invalid_argument("gl(m) generator index out of range");
  UglElement u(m);
  u.add_term({static_cast<std::uint8_t>(GeneratorOrder(m).index(a, b))}, Rational(1));
  return u;
}

Rational UglElement::coefficient(const PbwWord& word) const
{
  auto it = terms_.find(word);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UglElement::add_term(const PbwWord& word, const Rational& c)
{
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void UglElement::check_rank(const UglElement& other) const
{
  if (other.m_ != m_)
    throw std::invalid_argument("U(gl(m)): rank mismatch");
}

UglElement& UglElement::operator+=(const UglElement& other)
{
  check_rank(other);
  for (const auto& [w, c] : other.terms_)
    add_term(w, c);
  return *this;
}

UglElement& UglElement::operator-=(const UglElement& other)
{
  check_rank(other);
  for (const auto& [w, c] : other.terms_)
    add_term(w, -c);
  return *this;
}

UglElement& UglElement::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_)
    coeff *= c;
  return *this;
}

UglElement operator+(UglElement u, const UglElement& v) { return u += v; }
UglElement operator-(UglElement u, const UglElement& v) { return u -= v; }
UglElement operator*(const Rational& c, UglElement u) { return u *= c; }

namespace {

using Bracket = std::vector<std::pair<std::uint8_t, int>>;  // (generator, coefficient)

// [E_ab, E_cd] = d_cb E_ad - d_ad E_cb, expressed on generator indices.
Bracket bracket(const GeneratorOrder& order, int g, int h)
{
  const auto [a, b] = order.pair(g);
  const auto [c, d] = order.pair(h);
  Bracket out;
  if (c == b)
    out.emplace_back(static_cast<std::uint8_t>(order.index(a, d)), 1);
  if (a == d)
    out.emplace_back(static_cast<std::uint8_t>(order.index(c, b)), -1);
  // E_aa - E_aa cancels when a == b == c == d.
  if (out.size() == 2 && out[0].first == out[1].first)
    out.clear();
  return out;
}

/// Straightens products of PBW monomials by a single generator on the right,
/// caching every (monomial, generator) product it has seen.
class Straightener {
public:
  explicit Straightener(int m) : order_(m) {}

  const UglElement::TermMap& times(const PbwWord& word, std::uint8_t g)
  {
    const auto key = std::make_pair(word, g);
    if (auto it = cache_.find(key); it != cache_.end())
      return it->second;

    UglElement::TermMap result;
    auto add = [&](const PbwWord& w, const Rational& c) {
      if (c == 0)
        return;
      auto [it, inserted] = result.try_emplace(w, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0)
          result.erase(it);
      }
    };

    if (word.empty() || word.back() <= g) {
      PbwWord w = word;
      w.push_back(g);
      add(w, Rational(1));
    } else {
      // w' l g = (w' g) l + w' [l, g]
      const std::uint8_t last = word.back();
      PbwWord prefix(word.begin(), word.end() - 1);
      const auto first = times(prefix, g);
      for (const auto& [w, c] : first) {
        const auto second = times(w, last);
        for (const auto& [w2, c2] : second)
          add(w2, c * c2);
      }
      for (const auto& [h, coeff] : bracket(order_, last, g)) {
        const auto third = times(prefix, h);
        for (const auto& [w, c] : third)
          add(w, c * coeff);
      }
    }
    return cache_.emplace(key, std::move(result)).first->second;
  }

private:
  GeneratorOrder order_;
  std::map<std::pair<PbwWord, std::uint8_t>, UglElement::TermMap> cache_;
};

}  // namespace

UglElement ugl_multiply(const UglElement& u, const UglElement& v)
{
  if (u.rank() != v.rank())
    throw std::invalid_argument("ugl_multiply: rank mismatch");
  Straightener straightener(u.rank());
  UglElement out(u.rank());
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      UglElement::TermMap partial{{wu, cu * cv}};
      for (std::uint8_t g : wv) {
        UglElement::TermMap next;
        for (const auto& [w, c] : partial)
          for (const auto& [w2, c2] : straightener.times(w, g)) {
            auto [it, inserted] = next.try_emplace(w2, c * c2);
            if (!inserted) {
              it->second += c * c2;
              if (it->second == 0)
                next.erase(it);
            }
          }
        partial = std::move(next);
      }
      for (const auto& [w, c] : partial)
        out.add_term(w, c);
    }
  }
  return out;
}

UglElement lie_bracket(int m, int a, int b, int c, int d)
{
  UglElement out(m);
  if (c == b)
    out += UglElement::generator(m, a, d);
  if (a == d)
    out -= UglElement::generator(m, c, b);
  return out;
}

WeylElement ugl_to_weyl(const UglElement& u, int n)
{
  if (n < 1)
    throw std::invalid_argument("ugl_to_weyl: n must be positive");
  const int m = u.rank();
  const WeylSpace space{m, n};
  const GeneratorOrder order(m);
  std::vector<WeylElement> images;
  for (int g = 0; g < order.count(); ++g) {
    const auto [a, b] = order.pair(g);
    WeylElement e(space);
    for (int i = 1; i <= n; ++i)
      e += WeylElement::x(space, a, i) * WeylElement::d(space, b, i);
    images.push_back(std::move(e));
  }
  WeylElement out(space);
  for (const auto& [word, c] : u.terms()) {
    WeylElement term = WeylElement::constant(space, c);
    for (std::uint8_t g : word)
      term = term * images[g];
    out += term;
  }
  return out;
}

CentralityResult is_central(const UglElement& u)
{
  const int m = u.rank();
  const GeneratorOrder order(m);
  for (int g = 0; g < order.count(); ++g) {
    const auto [a, b] = order.pair(g);
    const auto e = UglElement::generator(m, a, b);
    auto commutator = u * e - e * u;
    if (!commutator.is_zero())
      return CentralityResult{false, std::make_pair(a, b), std::move(commutator)};
  }
  return CentralityResult{true, std::nullopt, UglElement(m)};
}

Rational hc_eigenvalue(const UglElement& u, std::span<const Rational> weights)
{
  if (static_cast<int>(weights.size()) != u.rank())
    throw std::invalid_argument("hc_eigenvalue: need one weight per Cartan generator");
  if (!is_central(u))
    throw std::domain_error("hc_eigenvalue: element is not central");
  const GeneratorOrder order(u.rank());
  Rational value = 0;
  for (const auto& [word, c] : u.terms()) {
    if (!std::all_of(word.begin(), word.end(), [&](std::uint8_t g) { return order.is_cartan(g); }))
      continue;
    Rational term = c;
    for (std::uint8_t g : word)
      term *= weights[order.pair(g).first - 1];
    value += term;
  }
  return value;
}

std::string to_string(const UglElement& u)
{
  if (u.is_zero())
    return "0";
  const GeneratorOrder order(u.rank());
  std::string out;
  bool first = true;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    const auto& [word, c] = *it;
    std::string mono;
    for (std::size_t t = 0; t < word.size();) {
      std::size_t run = t;
      while (run < word.size() && word[run] == word[t])
        ++run;
      const auto [a, b] = order.pair(word[t]);
      if (!mono.empty())
        mono += ' ';
      mono += "E[" + std::to_string(a) + "," + std::to_string(b) + "]";
      if (run - t > 1)
        mono += "^" + std::to_string(run - t);
      t = run;
    }
    const Rational mag = abs(c);
    if (first)
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    first = false;
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + " " + mono;
  }
  return out;
}

}  // namespace capelli
