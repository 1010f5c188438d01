#include "tss/rational.hpp"

#include <cctype>
#include <ostream>

#include "tss/error.hpp"

namespace tss {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den == 0 ? 1 : den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("malformed rational literal: \"" + std::string(text) + "\"");
  }
  mpq_class v(std::string(num) + "/" + std::string(den));
  if (v.get_den() == 0) {
    throw ParseError("rational with zero denominator: \"" + std::string(text) + "\"");
  }
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DomainError("rational division by zero");
  return Rational(mpq_class(value_ / o.value_));
}

Rational Rational::mod(const Rational& period) const {
  if (period.sign() <= 0) throw DomainError("mod requires a positive period");
  // floor(this / period), then subtract.
  mpq_class ratio = value_ / period.value_;
  mpz_class floor_q;
  mpz_fdiv_q(floor_q.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
  return Rational(mpq_class(value_ - floor_q * period.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace tss
