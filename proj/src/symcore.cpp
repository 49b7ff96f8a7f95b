#include "capelli/symcore.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace capelli {

Permutation Permutation::identity(int degree)
{
  if (degree < 1)
    throw std::invalid_argument("permutation degree must be positive");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images)
{
  const int k = static_cast<int>(images.size());
  if (k < 1)
    throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(k + 1, false);
  for (int v : images) {
    if (v < 1 || v > k || seen[v])
      throw std::invalid_argument("images are not a bijection of {1..k}");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int i, int j)
{
  if (i < 1 || j < 1 || i > degree || j > degree || i == j)
    throw std::invalid_argument("invalid transposition");
  auto p = identity(degree);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles)
{
  auto p = identity(degree);
  std::vector<bool> used(degree + 1, false);
  for (const auto& cycle : cycles) {
    for (int v : cycle) {
      if (v < 1 || v > degree)
        throw std::invalid_argument("cycle entry out of range");
      if (used[v])
        throw std::invalid_argument("cycles are not disjoint");
      used[v] = true;
    }
    for (std::size_t t = 0; t < cycle.size(); ++t)
      p.images_[cycle[t] - 1] = cycle[(t + 1) % cycle.size()];
  }
  return p;
}

Permutation Permutation::inverse() const
{
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1)
      return false;
  return true;
}

int Permutation::sign() const
{
  int transpositions = 0;
  for (const auto& c : cycles())
    transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start])
      continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = images_[v - 1]) {
      seen[v] = true;
      cycle.push_back(v);
    }
    if (cycle.size() > 1)
      result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<int> Permutation::cycle_type() const
{
  std::vector<int> lengths;
  int moved = 0;
  for (const auto& c : cycles()) {
    lengths.push_back(static_cast<int>(c.size()));
    moved += static_cast<int>(c.size());
  }
  lengths.insert(lengths.end(), degree() - moved, 1);
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

Permutation Permutation::extended(int new_degree) const
{
  if (new_degree < degree())
    throw std::invalid_argument("cannot shrink permutation degree");
  std::vector<int> images = images_;
  for (int i = degree() + 1; i <= new_degree; ++i)
    images.push_back(i);
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i)
    images[i - 1] = p(q(i));
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> all_permutations(int degree)
{
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::vector<int> reduced_word(const Permutation& s)
{
  // Swapping one-line positions r, r+1 right-multiplies by s_r. Sorting w to
  // the identity gives w * s_{j1} * ... * s_{jl} = e, so w = s_{jl} ... s_{j1}.
  std::vector<int> w(s.images().begin(), s.images().end());
  std::vector<int> swaps;
  const int k = s.degree();
  for (int pass = 0; pass < k; ++pass) {
    bool changed = false;
    for (int r = 1; r < k; ++r) {
      if (w[r - 1] > w[r]) {
        std::swap(w[r - 1], w[r]);
        swaps.push_back(r);
        changed = true;
      }
    }
    if (!changed)
      break;
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

std::string to_cycle_string(const Permutation& p)
{
  const auto cs = p.cycles();
  if (cs.empty())
    return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (t)
        out += ' ';
      out += std::to_string(c[t]);
    }
    out += ')';
  }
  return out;
}

std::string to_one_line_string(const Permutation& p)
{
  std::string out = "[";
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1)
      out += ',';
    out += std::to_string(p(i));
  }
  return out + "]";
}

namespace {

std::vector<int> parse_int_list(std::string_view body, char sep)
{
  std::vector<int> values;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      for (char ch : token)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw std::invalid_argument("bad permutation entry: " + token);
      values.push_back(std::stoi(token));
      token.clear();
    }
  };
  for (char ch : body) {
    if (ch == sep || std::isspace(static_cast<unsigned char>(ch)))
      flush();
    else
      token += ch;
  }
  flush();
  return values;
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<int> degree)
{
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos)
    throw std::invalid_argument("empty permutation");
  text = text.substr(first, last - first + 1);

  if (text.front() == '[') {
    if (text.back() != ']')
      throw std::invalid_argument("unterminated one-line permutation");
    auto p = Permutation::from_images(parse_int_list(text.substr(1, text.size() - 2), ','));
    if (degree && p.degree() != *degree)
      throw std::invalid_argument("permutation degree mismatch");
    return p;
  }

  if (!degree)
    throw std::invalid_argument("cycle notation needs an explicit degree");
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos)
      throw std::invalid_argument("unterminated cycle");
    auto cycle = parse_int_list(text.substr(pos + 1, close - pos - 1), ',');
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return Permutation::from_cycles(*degree, cycles);
}

GroupAlgebraElement::GroupAlgebraElement(const Permutation& s, const Rational& coeff) : degree_(s.degree())
{
  add_term(s, coeff);
}

GroupAlgebraElement GroupAlgebraElement::identity(int degree)
{
  return GroupAlgebraElement(Permutation::identity(degree), Rational(1));
}

Rational GroupAlgebraElement::coefficient(const Permutation& s) const
{
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GroupAlgebraElement::coefficient_sum() const
{
  Rational sum = 0;
  for (const auto& [s, c] : terms_)
    sum += c;
  return sum;
}

void GroupAlgebraElement::add_term(const Permutation& s, const Rational& coeff)
{
  if (s.degree() != degree_)
    throw std::invalid_argument("group algebra: degree mismatch");
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void GroupAlgebraElement::check_degree(const GroupAlgebraElement& other) const
{
  if (other.degree_ != degree_)
    throw std::invalid_argument("group algebra: degree mismatch");
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other)
{
  check_degree(other);
  for (const auto& [s, c] : other.terms_)
    add_term(s, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other)
{
  check_degree(other);
  for (const auto& [s, c] : other.terms_)
    add_term(s, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, coeff] : terms_)
    coeff *= c;
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::extended(int degree) const
{
  GroupAlgebraElement out(degree);
  for (const auto& [s, c] : terms_)
    out.add_term(s.extended(degree), c);
  return out;
}

GroupAlgebraElement operator+(GroupAlgebraElement u, const GroupAlgebraElement& v) { return u += v; }
GroupAlgebraElement operator-(GroupAlgebraElement u, const GroupAlgebraElement& v) { return u -= v; }
GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement u) { return u *= c; }

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& u, const GroupAlgebraElement& v)
{
  if (u.degree() != v.degree())
    throw std::invalid_argument("ga_multiply: degree mismatch");
  GroupAlgebraElement out(u.degree());
  for (const auto& [s, a] : u.terms())
    for (const auto& [t, b] : v.terms())
      out.add_term(compose(s, t), a * b);
  return out;
}

GroupAlgebraElement jm_element(int degree, int r)
{
  if (r < 1 || r > degree)
    throw std::invalid_argument("jm_element: index out of range");
  GroupAlgebraElement out(degree);
  for (int i = 1; i < r; ++i)
    out.add_term(Permutation::transposition(degree, i, r), Rational(1));
  return out;
}

std::string to_string(const GroupAlgebraElement& u)
{
  if (u.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : u.terms()) {
    Rational mag = abs(c);
    if (first)
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    first = false;
    if (s.is_identity()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1)
      out += mag.get_str() + " ";
    out += to_cycle_string(s);
  }
  return out;
}

}  // namespace capelli
