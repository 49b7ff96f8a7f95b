#include "capelli/young.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace capelli {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text)
{
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty())
      throw std::invalid_argument("malformed partition: " + std::string(text));
    for (char ch : token)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("malformed partition: " + std::string(text));
    parts.push_back(std::stoi(token));
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)))
      continue;
    if (ch == ',')
      flush();
    else
      token += ch;
  }
  flush();
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<Partition> partitions_of(int k)
{
  std::vector<Partition> result;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      result.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(k, k);
  return result;
}

std::string to_string(const Partition& lambda)
{
  std::string out;
  for (int i = 0; i < lambda.length(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(lambda.parts()[i]);
  }
  return out;
}

StandardTableau StandardTableau::from_rows(const std::vector<std::vector<int>>& rows)
{
  std::vector<int> parts;
  int k = 0;
  for (const auto& r : rows) {
    if (r.empty())
      throw std::invalid_argument("tableau rows must be nonempty");
    parts.push_back(static_cast<int>(r.size()));
    k += static_cast<int>(r.size());
  }
  StandardTableau t;
  t.shape_ = Partition(parts);
  t.positions_.assign(k, Cell{});
  std::vector<bool> seen(k + 1, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const int v = rows[i][j];
      if (v < 1 || v > k || seen[v])
        throw std::invalid_argument("tableau entries must be 1..k, each once");
      seen[v] = true;
      if (j > 0 && rows[i][j - 1] >= v)
        throw std::invalid_argument("tableau rows must increase");
      if (i > 0 && rows[i - 1][j] >= v)
        throw std::invalid_argument("tableau columns must increase");
      t.positions_[v - 1] = Cell{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    }
  }
  return t;
}

StandardTableau StandardTableau::parse(std::string_view text)
{
  std::vector<std::vector<int>> rows;
  int depth = 0;
  std::string token;
  auto flush = [&] {
    if (token.empty())
      return;
    for (char ch : token)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("malformed tableau entry: " + token);
    rows.back().push_back(std::stoi(token));
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)))
      continue;
    if (ch == '[') {
      if (++depth > 2)
        throw std::invalid_argument("tableau nesting too deep");
      if (depth == 2)
        rows.emplace_back();
    } else if (ch == ']') {
      if (depth == 2)
        flush();
      if (--depth < 0)
        throw std::invalid_argument("unbalanced brackets in tableau");
    } else if (ch == ',') {
      if (depth == 2)
        flush();
    } else if (depth == 2) {
      token += ch;
    } else {
      throw std::invalid_argument("malformed tableau: " + std::string(text));
    }
  }
  if (depth != 0 || rows.empty())
    throw std::invalid_argument("malformed tableau: " + std::string(text));
  return from_rows(rows);
}

Cell StandardTableau::cell(int r) const
{
  if (r < 1 || r > size())
    throw std::invalid_argument("tableau entry out of range");
  return positions_[r - 1];
}

std::vector<std::vector<int>> StandardTableau::rows() const
{
  std::vector<std::vector<int>> out(shape_.length());
  for (int i = 0; i < shape_.length(); ++i)
    out[i].resize(shape_.parts()[i]);
  for (int r = 1; r <= size(); ++r)
    out[positions_[r - 1].row - 1][positions_[r - 1].col - 1] = r;
  return out;
}

int StandardTableau::content(int r) const
{
  const Cell c = cell(r);
  return c.col - c.row;
}

StandardTableau StandardTableau::without_largest() const
{
  if (size() == 0)
    throw std::invalid_argument("empty tableau");
  auto r = rows();
  const Cell last = positions_.back();
  r[last.row - 1].pop_back();
  if (r[last.row - 1].empty())
    r.pop_back();
  if (r.empty())
    return StandardTableau{};
  return from_rows(r);
}

std::optional<StandardTableau> StandardTableau::swapped(int r) const
{
  if (r < 1 || r >= size())
    throw std::invalid_argument("swap index out of range");
  const Cell a = positions_[r - 1];
  const Cell b = positions_[r];
  if (a.row == b.row || a.col == b.col)
    return std::nullopt;
  StandardTableau t = *this;
  std::swap(t.positions_[r - 1], t.positions_[r]);
  return t;
}

std::string to_string(const StandardTableau& t)
{
  std::string out = "[";
  const auto rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i)
      out += ',';
    out += '[';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j)
        out += ',';
      out += std::to_string(rows[i][j]);
    }
    out += ']';
  }
  return out + "]";
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& lambda)
{
  const int k = lambda.weight();
  std::vector<std::vector<int>> rows(lambda.length());
  std::vector<StandardTableau> result;
  std::function<void(int)> place = [&](int entry) {
    if (entry > k) {
      result.push_back(StandardTableau::from_rows(rows));
      return;
    }
    for (int i = 0; i < lambda.length(); ++i) {
      const auto len = static_cast<int>(rows[i].size());
      if (len >= lambda.parts()[i])
        continue;
      if (i > 0 && static_cast<int>(rows[i - 1].size()) <= len)
        continue;
      rows[i].push_back(entry);
      place(entry + 1);
      rows[i].pop_back();
    }
  };
  if (k > 0)
    place(1);
  std::sort(result.begin(), result.end());
  return result;
}

RationalMatrix RationalMatrix::identity(int dim)
{
  RationalMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    m(i, i) = 1;
  return m;
}

Rational RationalMatrix::trace() const
{
  Rational t = 0;
  for (int i = 0; i < dim_; ++i)
    t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_diagonal() const
{
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (i != j && (*this)(i, j) != 0)
        return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other)
{
  if (other.dim_ != dim_)
    throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += other.entries_[i];
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
  if (a.dim() != b.dim())
    throw std::invalid_argument("matrix dimension mismatch");
  const int n = a.dim();
  RationalMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      if (a(i, l) == 0)
        continue;
      for (int j = 0; j < n; ++j)
        if (b(l, j) != 0)
          c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

SeminormalRepresentation::SeminormalRepresentation(const Partition& shape)
    : shape_(shape), tableaux_(enumerate_standard_tableaux(shape))
{
  const int k = shape.weight();
  const int n = dim();
  for (int r = 1; r < k; ++r) {
    RationalMatrix g(n);
    for (int j = 0; j < n; ++j) {
      const auto& t = tableaux_[j];
      const int d = t.content(r + 1) - t.content(r);
      g(j, j) = Rational(1, d);
      g(j, j).canonicalize();
      if (auto other = t.swapped(r)) {
        const int i = index_of(*other);
        g(i, j) = (j < i) ? Rational(1) : Rational(1) - Rational(1, d * d);
      }
    }
    generators_.push_back(std::move(g));
  }
}

int SeminormalRepresentation::index_of(const StandardTableau& t) const
{
  auto it = std::lower_bound(tableaux_.begin(), tableaux_.end(), t);
  if (it == tableaux_.end() || !(*it == t))
    throw std::invalid_argument("tableau is not of this shape");
  return static_cast<int>(it - tableaux_.begin());
}

RationalMatrix SeminormalRepresentation::matrix(const Permutation& s) const
{
  if (s.degree() != degree())
    throw std::invalid_argument("seminormal_matrix: degree mismatch");
  RationalMatrix m = RationalMatrix::identity(dim());
  for (int r : reduced_word(s))
    m = m * generators_[r - 1];
  return m;
}

const SeminormalRepresentation& seminormal_representation(const Partition& shape)
{
  static std::mutex mutex;
  static std::map<Partition, std::unique_ptr<SeminormalRepresentation>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[shape];
  if (!slot)
    slot = std::make_unique<SeminormalRepresentation>(shape);
  return *slot;
}

RationalMatrix seminormal_matrix(const Partition& lambda, const Permutation& s)
{
  return seminormal_representation(lambda).matrix(s);
}

GroupAlgebraElement psi(const StandardTableau& t, const StandardTableau& t_prime)
{
  if (!(t.shape() == t_prime.shape()))
    throw std::invalid_argument("psi: tableaux of different shapes");
  const auto& rep = seminormal_representation(t.shape());
  const int col = rep.index_of(t);
  const int row = rep.index_of(t_prime);
  GroupAlgebraElement out(rep.degree());
  for (const auto& s : all_permutations(rep.degree()))
    out.add_term(s.inverse(), rep.matrix(s)(row, col));
  return out;
}

GroupAlgebraElement character_element(const Partition& lambda)
{
  const auto& rep = seminormal_representation(lambda);
  GroupAlgebraElement out(rep.degree());
  for (const auto& s : all_permutations(rep.degree()))
    out.add_term(s, rep.matrix(s).trace());
  return out;
}

}  // namespace capelli
