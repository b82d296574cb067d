#include "mixq/rational.hpp"

#include <cctype>

#include "mixq/error.hpp"

namespace mixq {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("invalid rational literal component '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    auto rest = text.substr(slash + 1);
    if (!rest.empty() && (rest[0] == '-' || rest[0] == '+'))
      throw ParseError("sign not allowed in denominator: '" + std::string(text) + "'");
    den = parse_integer(rest);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace mixq
