#include "capelli/weyl.hpp"

#include <numeric>
#include <stdexcept>

namespace capelli {

namespace {

// j! C(p,j) C(q,j) = p! q! / ((p-j)! (q-j)! j!)
Rational contraction_coefficient(int p, int q, int j)
{
  mpz_class num = 1;
  for (int t = 0; t < j; ++t)
    num *= (p - t) * (q - t);
  mpz_class jfact;
  mpz_fac_ui(jfact.get_mpz_t(), j);
  Rational c(num, jfact);
  c.canonicalize();
  return c;
}

void check_same(const WeylSpace& a, const WeylSpace& b)
{
  if (!(a == b))
    throw std::invalid_argument("Weyl algebra: grid dimension mismatch");
}

std::string variable_name(char letter, const WeylSpace& space, int slot)
{
  return std::string(1, letter) + "[" + std::to_string(slot / space.n + 1) + "," +
         std::to_string(slot % space.n + 1) + "]";
}

void append_factor(std::string& out, const std::string& name, int e)
{
  if (e == 0)
    return;
  if (!out.empty())
    out += ' ';
  out += name;
  if (e > 1)
    out += '^' + std::to_string(e);
}

template <class Map, class MonoPrinter>
std::string print_terms(const Map& terms, MonoPrinter mono_text)
{
  if (terms.empty())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Rational& c = it->second;
    const std::string mono = mono_text(it->first);
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

}  // namespace

int WeylMonomial::x_degree() const
{
  int s = 0;
  for (int t = 0; t < slots(); ++t)
    s += x(t);
  return s;
}

int WeylMonomial::d_degree() const
{
  int s = 0;
  for (int t = 0; t < slots(); ++t)
    s += d(t);
  return s;
}

bool WeylMonomial::is_unit() const
{
  for (Exponent e : exps_)
    if (e)
      return false;
  return true;
}

WeylElement WeylElement::constant(WeylSpace space, const Rational& c)
{
  WeylElement u(space);
  u.add_term(WeylMonomial(space.slots()), c);
  return u;
}

WeylElement WeylElement::x(WeylSpace space, int a, int i)
{
  if (a < 1 || a > space.m || i < 1 || i > space.n)
    throw std::invalid_argument("Weyl variable index out of range");
  WeylMonomial mono(space.slots());
  mono.x(space.slot(a, i)) = 1;
  return monomial(space, mono, Rational(1));
}

WeylElement WeylElement::d(WeylSpace space, int a, int i)
{
  if (a < 1 || a > space.m || i < 1 || i > space.n)
    throw std::invalid_argument("Weyl variable index out of range");
  WeylMonomial mono(space.slots());
  mono.d(space.slot(a, i)) = 1;
  return monomial(space, mono, Rational(1));
}

WeylElement WeylElement::monomial(WeylSpace space, const WeylMonomial& mono, const Rational& c)
{
  if (mono.slots() != space.slots())
    throw std::invalid_argument("Weyl monomial does not fit the grid");
  WeylElement u(space);
  u.add_term(mono, c);
  return u;
}

Rational WeylElement::coefficient(const WeylMonomial& mono) const
{
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(const WeylMonomial& mono, const Rational& c)
{
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void WeylElement::check_space(const WeylElement& other) const { check_same(space_, other.space_); }

WeylElement& WeylElement::operator+=(const WeylElement& other)
{
  check_space(other);
  for (const auto& [mono, c] : other.terms_)
    add_term(mono, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other)
{
  check_space(other);
  for (const auto& [mono, c] : other.terms_)
    add_term(mono, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_)
    coeff *= c;
  return *this;
}

WeylElement WeylElement::operator-() const
{
  WeylElement u = *this;
  return u *= Rational(-1);
}

WeylElement operator+(WeylElement u, const WeylElement& v) { return u += v; }
WeylElement operator-(WeylElement u, const WeylElement& v) { return u -= v; }
WeylElement operator*(const Rational& c, WeylElement u) { return u *= c; }

WeylElement weyl_multiply(const WeylElement& u, const WeylElement& v)
{
  check_same(u.space(), v.space());
  const int slots = u.space().slots();
  WeylElement out(u.space());

  struct Contraction {
    int slot;
    int max_j;
    std::vector<Rational> coeffs;
  };
  std::vector<Contraction> contractions;
  std::vector<int> j;

  for (const auto& [left, a] : u.terms()) {
    for (const auto& [right, b] : v.terms()) {
      contractions.clear();
      for (int s = 0; s < slots; ++s) {
        const int p = left.d(s);
        const int q = right.x(s);
        if (p && q) {
          Contraction c{s, std::min(p, q), {}};
          for (int t = 0; t <= c.max_j; ++t)
            c.coeffs.push_back(contraction_coefficient(p, q, t));
          contractions.push_back(std::move(c));
        }
      }
      WeylMonomial base(slots);
      for (int s = 0; s < slots; ++s) {
        base.x(s) = left.x(s) + right.x(s);
        base.d(s) = left.d(s) + right.d(s);
      }
      const Rational ab = a * b;
      if (contractions.empty()) {
        out.add_term(base, ab);
        continue;
      }
      // Odometer over the contraction orders of the interacting slots.
      j.assign(contractions.size(), 0);
      while (true) {
        WeylMonomial mono = base;
        Rational c = ab;
        for (std::size_t t = 0; t < contractions.size(); ++t) {
          const auto& ct = contractions[t];
          mono.x(ct.slot) -= j[t];
          mono.d(ct.slot) -= j[t];
          c *= ct.coeffs[j[t]];
        }
        out.add_term(mono, c);
        std::size_t t = 0;
        while (t < j.size() && j[t] == contractions[t].max_j)
          j[t++] = 0;
        if (t == j.size())
          break;
        ++j[t];
      }
    }
  }
  return out;
}

Polynomial Polynomial::constant(WeylSpace space, const Rational& c)
{
  Polynomial f(space);
  f.add_term(Exponents(space.slots(), 0), c);
  return f;
}

Polynomial Polynomial::variable(WeylSpace space, int a, int i)
{
  if (a < 1 || a > space.m || i < 1 || i > space.n)
    throw std::invalid_argument("polynomial variable index out of range");
  Exponents e(space.slots(), 0);
  e[space.slot(a, i)] = 1;
  Polynomial f(space);
  f.add_term(e, Rational(1));
  return f;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c)
{
  if (static_cast<int>(exps.size()) != space_.slots())
    throw std::invalid_argument("polynomial exponent vector does not fit the grid");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
  check_same(space_, other.space_);
  for (const auto& [e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
  check_same(space_, other.space_);
  for (const auto& [e, c] : other.terms_)
    add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_)
    coeff *= c;
  return *this;
}

Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }

Polynomial operator*(const Polynomial& f, const Polynomial& g)
{
  check_same(f.space(), g.space());
  Polynomial out(f.space());
  Polynomial::Exponents e(f.space().slots());
  for (const auto& [ea, a] : f.terms())
    for (const auto& [eb, b] : g.terms()) {
      for (std::size_t s = 0; s < e.size(); ++s)
        e[s] = ea[s] + eb[s];
      out.add_term(e, a * b);
    }
  return out;
}

Polynomial pow(const Polynomial& f, int e)
{
  if (e < 0)
    throw std::invalid_argument("negative polynomial power");
  Polynomial out = Polynomial::constant(f.space(), Rational(1));
  for (int t = 0; t < e; ++t)
    out = out * f;
  return out;
}

Polynomial weyl_apply(const WeylElement& u, const Polynomial& f)
{
  check_same(u.space(), f.space());
  const int slots = u.space().slots();
  Polynomial out(f.space());
  Polynomial::Exponents e(slots);
  for (const auto& [mono, a] : u.terms()) {
    for (const auto& [exps, b] : f.terms()) {
      Rational c = a * b;
      bool vanishes = false;
      for (int s = 0; s < slots && !vanishes; ++s) {
        const int g = exps[s];
        const int dd = mono.d(s);
        if (dd > g) {
          vanishes = true;
          break;
        }
        for (int t = 0; t < dd; ++t)
          c *= g - t;
        e[s] = static_cast<Exponent>(g - dd + mono.x(s));
      }
      if (!vanishes)
        out.add_term(e, c);
    }
  }
  return out;
}

std::string to_string(const WeylElement& u)
{
  const WeylSpace space = u.space();
  return print_terms(u.terms(), [&](const WeylMonomial& mono) {
    std::string text;
    for (int s = 0; s < space.slots(); ++s)
      append_factor(text, variable_name('x', space, s), mono.x(s));
    for (int s = 0; s < space.slots(); ++s)
      append_factor(text, variable_name('D', space, s), mono.d(s));
    return text;
  });
}

std::string to_string(const Polynomial& f)
{
  const WeylSpace space = f.space();
  return print_terms(f.terms(), [&](const Polynomial::Exponents& e) {
    std::string text;
    for (int s = 0; s < space.slots(); ++s)
      append_factor(text, variable_name('x', space, s), e[s]);
    return text;
  });
}

}  // namespace capelli
