#include "projindex/poly_matrix.hpp"

#include "projindex/error.hpp"

namespace projindex {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, MultiPoly(nvars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
  PolyMatrix m(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly(nvars, Scalar(1));
  return m;
}

PolyMatrix PolyMatrix::from_scalars(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size(), c = r == 0 ? 0 : rows.front().size();
  PolyMatrix m(r, c, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = MultiPoly(0, rows[i][j]);
  }
  return m;
}

Scalar PolyMatrix::scalar(std::size_t i, std::size_t j) const {
  const MultiPoly& e = (*this)(i, j);
  if (!e.is_constant()) throw DomainError("matrix entry is not constant");
  return e.constant_term();
}

PolyMatrix PolyMatrix::evaluate(std::span<const Scalar> point) const {
  PolyMatrix out(rows_, cols_, 0);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = MultiPoly(0, entries_[k].evaluate(point));
  return out;
}

namespace {

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.nvars() != b.nvars())
    throw DomainError("matrix shape mismatch");
}

}  // namespace

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
  return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_) throw DomainError("matrix product shape mismatch");
  PolyMatrix r(a.rows_, b.cols_, a.nvars_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const MultiPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

PolyMatrix operator*(const Scalar& c, const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& e : r.entries_) e *= c;
  return r;
}

MultiPoly PolyMatrix::trace() const {
  if (!is_square()) throw DomainError("trace of a non-square matrix");
  MultiPoly t(nvars_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<MultiPoly> char_poly_coeffs(const PolyMatrix& m) {
  if (!m.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // det(sI - M) = sum_k c_k s^k, c_n = 1;
  // N_k = M N_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M N_k) / k.
  std::vector<MultiPoly> sigma;
  sigma.reserve(n);
  PolyMatrix identity = PolyMatrix::identity(n, m.nvars());
  PolyMatrix acc(n, n, m.nvars());
  MultiPoly c_prev(m.nvars(), Scalar(1));
  for (std::size_t k = 1; k <= n; ++k) {
    PolyMatrix c_identity = identity;
    for (std::size_t i = 0; i < n; ++i) c_identity(i, i) = c_prev;
    acc = m * acc + c_identity;
    Scalar factor(-1);
    factor /= static_cast<long>(k);
    MultiPoly c = (m * acc).trace() * factor;
    // sigma_k = (-1)^k c_{n-k}
    sigma.push_back(k % 2 == 0 ? c : -c);
    c_prev = std::move(c);
  }
  return sigma;
}

std::vector<Scalar> char_poly_values(const PolyMatrix& m) {
  std::vector<Scalar> out;
  for (const auto& s : char_poly_coeffs(m)) {
    if (!s.is_constant()) throw DomainError("matrix is not constant");
    out.push_back(s.constant_term());
  }
  return out;
}

}  // namespace projindex
