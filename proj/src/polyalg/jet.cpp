#include "projindex/jet.hpp"

#include <algorithm>

#include "projindex/error.hpp"

namespace projindex {

namespace {

void require_same_order(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) throw DomainError("jets of different orders");
}

}  // namespace

Jet operator+(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  return Jet(a.base_ + b.base_, a.order_);
}

Jet operator-(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  return Jet(a.base_ - b.base_, a.order_);
}

Jet operator*(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  // Multiply term by term, skipping products that land above the order.
  MultiPoly r(a.nvars());
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.base_.terms()) {
    unsigned da = total_degree(ea);
    for (const auto& [eb, cb] : b.base_.terms()) {
      if (da + total_degree(eb) > a.order_) break;
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  }
  return Jet(r, a.order_);
}

namespace {

std::size_t system_nvars(const JetMatrix& a) {
  return a.empty() || a.front().empty() ? 0 : a.front().front().nvars();
}

}  // namespace

JetLinearSystem::JetLinearSystem(const JetMatrix& a, unsigned order)
    : rows_(a.size()),
      cols_(a.empty() ? 0 : a.front().size()),
      nvars_(system_nvars(a)),
      order_(order),
      basis_(system_nvars(a), order) {
  for (const auto& row : a) {
    if (row.size() != cols_) throw DomainError("jet system: ragged matrix");
    for (const auto& j : row)
      if (j.order() != order || j.nvars() != nvars_) throw DomainError("jet system: order or variable mismatch");
  }
  const std::size_t block = basis_.size();
  // Unknown (col, monomial m) contributes column  (trunc(A[i][col] * m))_i.
  for (std::size_t col = 0; col < cols_; ++col) {
    unsigned low = order + 1;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!a[i][col].base().is_zero()) low = std::min(low, static_cast<unsigned>(a[i][col].base().min_degree()));
    // high-degree columns first: their images are short, which keeps fill-in low
    for (std::size_t k = block; k-- > 0;) {
      if (total_degree(basis_[k]) + low > order) continue;  // image truncates to zero
      MultiPoly mono = MultiPoly::monomial(basis_[k]);
      SparseVector image;
      for (std::size_t i = 0; i < rows_; ++i)
        image.merge(basis_.coordinates((a[i][col].base() * mono).truncate(order), i * block));
      echelon_.insert(std::move(image), SparseVector{{col * block + k, Scalar(1)}});
    }
  }
}

std::optional<std::vector<Jet>> JetLinearSystem::solve(const std::vector<Jet>& b) const {
  if (b.size() != rows_) throw DomainError("jet system: right-hand side length mismatch");
  for (const auto& j : b)
    if (j.order() != order_ || j.nvars() != nvars_) throw DomainError("jet system: order or variable mismatch");
  const std::size_t block = basis_.size();
  SparseVector rhs;
  for (std::size_t i = 0; i < rows_; ++i) rhs.merge(basis_.coordinates(b[i].base(), i * block));
  auto red = echelon_.reduce(std::move(rhs));
  if (!red.residual.empty()) return std::nullopt;

  std::vector<MultiPoly> x(cols_, MultiPoly(nvars_));
  for (const auto& [unknown, value] : red.combination) x[unknown / block].add_term(basis_[unknown % block], value);
  std::vector<Jet> out;
  out.reserve(cols_);
  for (auto& p : x) out.emplace_back(p, order_);
  return out;
}

std::optional<std::vector<Jet>> jet_solve_linear(const JetMatrix& a, const std::vector<Jet>& b,
                                                 unsigned order) {
  if (b.size() != a.size()) throw DomainError("jet system: right-hand side length mismatch");
  if (a.empty()) return std::vector<Jet>{};
  return JetLinearSystem(a, order).solve(b);
}

namespace {

Jet determinant_rec(const JetMatrix& m, std::vector<std::size_t>& cols_left, std::size_t row) {
  const Jet& probe = m.front().front();
  if (row == m.size()) return Jet(MultiPoly(probe.nvars(), Scalar(1)), probe.order());
  Jet acc(MultiPoly(probe.nvars()), probe.order());
  for (std::size_t k = 0; k < cols_left.size(); ++k) {
    std::size_t col = cols_left[k];
    if (m[row][col].base().is_zero()) continue;
    cols_left.erase(cols_left.begin() + static_cast<std::ptrdiff_t>(k));
    Jet minor = determinant_rec(m, cols_left, row + 1);
    cols_left.insert(cols_left.begin() + static_cast<std::ptrdiff_t>(k), col);
    Jet term = m[row][col] * minor;
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

Jet jet_determinant(const JetMatrix& m) {
  if (m.empty()) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw DomainError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return determinant_rec(m, cols, 0);
}

}  // namespace projindex
