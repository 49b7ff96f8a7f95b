#pragma once

#include "capelli/rational.hpp"
#include "capelli/symcore.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace capelli {

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// "2,1" (also accepts surrounding whitespace).
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  /// Row length for 1-based row i; 0 past the last row.
  int row(int i) const { return i <= length() ? parts_[i - 1] : 0; }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

/// All partitions of k, in reverse lexicographic order: (k) first, (1^k) last.
std::vector<Partition> partitions_of(int k);

std::string to_string(const Partition& lambda);

struct Cell {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  auto operator<=>(const Cell&) const = default;
};

class StandardTableau {
public:
  StandardTableau() = default;

  /// Rows of entries, e.g. {{1,2},{3}}. Throws std::invalid_argument unless
  /// the filling is standard.
  static StandardTableau from_rows(const std::vector<std::vector<int>>& rows);
  /// "[[1,2],[3]]".
  static StandardTableau parse(std::string_view text);

  const Partition& shape() const { return shape_; }
  int size() const { return static_cast<int>(positions_.size()); }
  Cell cell(int r) const;
  std::span<const Cell> positions() const { return positions_; }
  std::vector<std::vector<int>> rows() const;

  /// col - row of the cell holding r.
  int content(int r) const;

  /// The tableau of one less entry obtained by removing the cell holding k.
  StandardTableau without_largest() const;

  /// The tableau with r and r+1 exchanged, if it is still standard.
  std::optional<StandardTableau> swapped(int r) const;

  auto operator<=>(const StandardTableau& other) const { return positions_ <=> other.positions_; }
  bool operator==(const StandardTableau& other) const { return positions_ == other.positions_; }

private:
  Partition shape_;
  std::vector<Cell> positions_;  // positions_[r-1] holds entry r
};

std::string to_string(const StandardTableau& t);

inline int content(const StandardTableau& t, int r) { return t.content(r); }

/// Sorted lexicographically by the sequence of entry positions.
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& lambda);

/// Dense square rational matrix.
class RationalMatrix {
public:
  RationalMatrix() = default;
  explicit RationalMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}
  static RationalMatrix identity(int dim);

  int dim() const { return dim_; }
  Rational& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Rational& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }

  Rational trace() const;
  bool is_diagonal() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  bool operator==(const RationalMatrix&) const = default;

private:
  int dim_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Young's seminormal representation of S_k attached to a partition.
///
/// Basis vectors are indexed by the standard tableaux in enumeration order.
/// Column T of rho(s_r) has diagonal entry 1/d with axial distance
/// d = c_T(r+1) - c_T(r); when s_r T is standard its entry in that column is
/// 1 if T precedes s_r T and 1 - 1/d^2 otherwise.
class SeminormalRepresentation {
public:
  explicit SeminormalRepresentation(const Partition& shape);

  const Partition& shape() const { return shape_; }
  int degree() const { return shape_.weight(); }
  int dim() const { return static_cast<int>(tableaux_.size()); }
  const std::vector<StandardTableau>& tableaux() const { return tableaux_; }
  int index_of(const StandardTableau& t) const;

  /// rho(s_r) for the adjacent transposition (r, r+1).
  const RationalMatrix& generator(int r) const { return generators_.at(r - 1); }
  RationalMatrix matrix(const Permutation& s) const;

private:
  Partition shape_;
  std::vector<StandardTableau> tableaux_;
  std::vector<RationalMatrix> generators_;
};

/// Shared, lazily-filled per-shape cache. Safe for concurrent use.
const SeminormalRepresentation& seminormal_representation(const Partition& shape);

/// Matrix of s in the seminormal representation of shape lambda.
RationalMatrix seminormal_matrix(const Partition& lambda, const Permutation& s);

/// Sum over s in S_k of rho(s)_{T'T} * s^{-1}.
GroupAlgebraElement psi(const StandardTableau& t, const StandardTableau& t_prime);

/// Sum over s of chi^lambda(s) * s, with chi the trace of the seminormal matrices.
GroupAlgebraElement character_element(const Partition& lambda);

}  // namespace capelli
