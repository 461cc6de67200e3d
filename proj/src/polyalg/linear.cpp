#include "projindex/linear.hpp"

#include <functional>

namespace projindex {

namespace {

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  for (const auto& [col, val] : x) {
    auto [it, inserted] = y.try_emplace(col, 0);
    it->second -= a * val;
    if (is_zero(it->second)) y.erase(it);
  }
}

}  // namespace

void RowEchelon::eliminate(SparseVector& v, SparseVector* tag, SparseVector* combination) const {
  auto it = v.begin();
  while (it != v.end()) {
    std::size_t col = it->first;
    auto row = rows_.find(col);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    Scalar factor = it->second;
    axpy(v, factor, row->second.vec);  // clears column col
    if (tag) axpy(*tag, factor, row->second.tag);
    if (combination) axpy(*combination, -factor, row->second.tag);
    it = v.upper_bound(col);
  }
}

bool RowEchelon::insert(SparseVector v, SparseVector tag) {
  eliminate(v, &tag, nullptr);
  if (v.empty()) return false;
  Scalar inv = 1 / v.begin()->second;
  for (auto& [c, x] : v) x *= inv;
  for (auto& [c, x] : tag) x *= inv;
  std::size_t pivot = v.begin()->first;
  rows_.emplace(pivot, Row{std::move(v), std::move(tag)});
  return true;
}

RowEchelon::Reduction RowEchelon::reduce(SparseVector v) const {
  Reduction r;
  eliminate(v, nullptr, &r.combination);
  r.residual = std::move(v);
  return r;
}

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned max_degree)
    : nvars_(nvars), max_degree_(max_degree) {
  Exponent e(nvars, 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t var, unsigned left) {
    if (var + 1 >= nvars) {
      if (nvars > 0) e[nvars - 1] = left;
      index_.emplace(e, 0);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[var] = k;
      fill(var + 1, left - k);
    }
    e[var] = 0;
  };
  for (unsigned d = 0; d <= max_degree; ++d) {
    if (nvars == 0 && d > 0) break;
    fill(0, d);
  }
  for (auto& [exp, idx] : index_) {
    idx = list_.size();
    list_.push_back(exp);
  }
}

std::size_t MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? list_.size() : it->second;
}

SparseVector MonomialBasis::coordinates(const MultiPoly& p, std::size_t offset) const {
  SparseVector out;
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) > max_degree_) break;
    out.emplace(offset + index_of(e), c);
  }
  return out;
}

}  // namespace projindex
