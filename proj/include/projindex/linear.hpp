#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "projindex/multipoly.hpp"

namespace projindex {

using SparseVector = std::map<std::size_t, Scalar>;

/// Incremental row echelon form over Q for sparse vectors.
///
/// Each stored row has its smallest column as pivot with coefficient 1. A row
/// may carry a tag: a sparse combination of the caller's original vectors that
/// produces it, so reductions can report how a vector decomposes.
class RowEchelon {
 public:
  struct Reduction {
    SparseVector residual;
    /// v - residual = sum_t combination[t] * original_t
    SparseVector combination;
  };

  /// Inserts v (with provenance `tag`); returns false if v was dependent.
  bool insert(SparseVector v, SparseVector tag = {});
  Reduction reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).residual.empty(); }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t column) const { return rows_.count(column) != 0; }

 private:
  struct Row {
    SparseVector vec;
    SparseVector tag;
  };
  void eliminate(SparseVector& v, SparseVector* tag, SparseVector* combination) const;

  std::map<std::size_t, Row> rows_;
};

/// All exponent vectors in `nvars` variables of total degree <= max_degree,
/// listed in ascending graded-lex order, with the inverse index.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, unsigned max_degree);

  std::size_t size() const { return list_.size(); }
  unsigned max_degree() const { return max_degree_; }
  const Exponent& operator[](std::size_t i) const { return list_[i]; }
  const std::vector<Exponent>& list() const { return list_; }
  /// Index of e, or size() when e is above the degree bound.
  std::size_t index_of(const Exponent& e) const;

  /// Coefficients of p (terms above the bound are dropped) keyed by index,
  /// offset by `offset`.
  SparseVector coordinates(const MultiPoly& p, std::size_t offset = 0) const;

 private:
  std::size_t nvars_;
  unsigned max_degree_;
  std::vector<Exponent> list_;
  std::map<Exponent, std::size_t, GrlexLess> index_;
};

}  // namespace projindex
