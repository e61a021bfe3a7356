#include "hwcat/field.hpp"

#include <cctype>

namespace hwcat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw InputError("empty scalar");
  if (s[0] == '+') s = s.substr(1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("malformed scalar '" + std::string(text) + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in scalar '" + std::string(text) + "'");
  return Scalar(q);
}

FieldCtx FieldCtx::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw InputError("prime field characteristic must be below 2^31");
  return FieldCtx(p);
}

FieldCtx FieldCtx::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.substr(0, 3) == "Fp:" || text.substr(0, 3) == "GF:") {
    std::string digits(text.substr(3));
    if (digits.empty()) throw InputError("missing prime in field '" + std::string(text) + "'");
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InputError("malformed field '" + std::string(text) + "'");
    unsigned long long p = std::stoull(digits);
    if (p > 0xffffffffull) throw InputError("prime too large in field '" + std::string(text) + "'");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw InputError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string FieldCtx::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

std::uint32_t FieldCtx::residue(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  if (num < 0) num += p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw InputError("denominator " + q.get_den().get_str() + " vanishes in " + to_string());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
  mpz_class r = (num * inv) % p_;
  return static_cast<std::uint32_t>(r.get_ui());
}

Scalar FieldCtx::normalize(const Scalar& s) const {
  if (is_rational()) return s;
  return Scalar(static_cast<long>(residue(s.value())));
}

Scalar FieldCtx::add(const Scalar& a, const Scalar& b) const { return normalize(Scalar(a.value() + b.value())); }
Scalar FieldCtx::sub(const Scalar& a, const Scalar& b) const { return normalize(Scalar(a.value() - b.value())); }
Scalar FieldCtx::mul(const Scalar& a, const Scalar& b) const { return normalize(Scalar(a.value() * b.value())); }
Scalar FieldCtx::neg(const Scalar& a) const { return normalize(Scalar(mpq_class(-a.value()))); }

Scalar FieldCtx::inv(const Scalar& a) const {
  Scalar n = normalize(a);
  if (n.is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return Scalar(mpq_class(1) / n.value());
  mpz_class r;
  mpz_invert(r.get_mpz_t(), n.value().get_num_mpz_t(), mpz_class(p_).get_mpz_t());
  return Scalar(mpq_class(r));
}

}  // namespace hwcat
