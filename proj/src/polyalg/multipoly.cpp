#include "projindex/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "projindex/error.hpp"

namespace projindex {

unsigned total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(std::size_t nvars, const Scalar& constant) : nvars_(nvars) {
  if (!projindex::is_zero(constant)) terms_.emplace(Exponent(nvars, 0), constant);
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Scalar& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && projindex::total_degree(terms_.begin()->first) == 0);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return kZeroDegree;
  return static_cast<int>(projindex::total_degree(terms_.rbegin()->first));
}

int MultiPoly::min_degree() const {
  if (terms_.empty()) return kZeroDegree;
  return static_cast<int>(projindex::total_degree(terms_.begin()->first));
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return kZeroDegree;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return static_cast<int>(d);
}

bool MultiPoly::is_homogeneous() const {
  return terms_.empty() || min_degree() == total_degree();
}

Scalar MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar MultiPoly::constant_term() const { return coefficient(Exponent(nvars_, 0)); }

MultiPoly& MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) throw DomainError("exponent length does not match variable count");
  if (projindex::is_zero(c)) return *this;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (projindex::is_zero(it->second)) terms_.erase(it);
  }
  return *this;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.nvars_ != nvars_)
    throw DomainError("polynomials over different variable counts (" + std::to_string(nvars_) +
                      " vs " + std::to_string(o.nvars_) + ")");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (projindex::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(nvars_, Scalar(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_)
    throw DomainError("evaluation point has " + std::to_string(point.size()) +
                      " coordinates, polynomial has " + std::to_string(nvars_) + " variables");
  return evaluate_in<Scalar>(*this, point, Scalar(1));
}

MultiPoly MultiPoly::partial(std::size_t var) const {
  if (var >= nvars_) throw DomainError("partial derivative index out of range");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::truncate(unsigned max_degree) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (projindex::total_degree(e) > max_degree) break;  // graded order
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

MultiPoly MultiPoly::homogeneous_part(unsigned degree) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (projindex::total_degree(e) == degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) throw DomainError("composition needs one image per variable");
  std::size_t out_vars = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != out_vars) throw DomainError("composition images over different variable counts");
  return evaluate_in<MultiPoly>(*this, images, MultiPoly(out_vars, Scalar(1)));
}

MultiPoly MultiPoly::translate(std::span<const Scalar> shift) const {
  if (shift.size() != nvars_) throw DomainError("translation vector length mismatch");
  std::vector<MultiPoly> images;
  images.reserve(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v)
    images.push_back(variable(nvars_, v) + MultiPoly(nvars_, shift[v]));
  return compose(images);
}

const Exponent& MultiPoly::leading_exponent() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

std::string MultiPoly::to_string(char prefix, unsigned first_index) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = projindex::total_degree(e) == 0;
    bool wrote = false;
    if (is_const || mag != 1) {
      out << projindex::to_string(mag);
      wrote = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (wrote) out << '*';
      out << prefix << (v + first_index);
      if (e[v] > 1) out << '^' << e[v];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace projindex
