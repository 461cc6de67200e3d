#include "projindex/scalar.hpp"

#include <cctype>

#include "projindex/error.hpp"

namespace projindex {

Scalar make_scalar(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = trim(text);
  Integer num, den = 1;
  auto slash = s.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(s, num)
                : parse_integer(trim(s.substr(0, slash)), num) &&
                      parse_integer(trim(s.substr(slash + 1)), den);
  if (!ok) throw DomainError("malformed rational literal '" + std::string(text) + "'");
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return make_scalar(num, den);
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Scalar power(const Scalar& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw DomainError("negative power of zero");
    Scalar inv = 1 / base;
    return power(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return make_scalar(num, den);
}

}  // namespace projindex
