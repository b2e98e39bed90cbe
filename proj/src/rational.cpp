#include "multipers/rational.hpp"

#include <cctype>

namespace multipers {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw precondition_error("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class d{std::string(den)};
  if (d == 0) throw precondition_error("zero denominator in '" + std::string(text) + "'");
  rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const rational& q, int places) {
  mpz_class scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  mpz_class num = q.get_num() * scale;
  mpz_class den = q.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  mpz_class rounded = (2 * num + den) / (2 * den);
  std::string digits = rounded.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && rounded != 0) digits.insert(0, "-");
  return digits;
}

std::string to_report(const rational& q) { return to_string(q) + " (" + to_decimal(q) + ")"; }

double to_double(const rational& q) { return q.get_d(); }

rational abs(const rational& q) { return q < 0 ? rational(-q) : q; }

const rational& extended::value() const {
  if (infinite_) throw precondition_error("value() of infinite extended rational");
  return value_;
}

extended operator*(const rational& s, const extended& a) {
  if (a.infinite_) {
    if (s < 0) throw precondition_error("negative multiple of infinity");
    return s == 0 ? extended(0L) : extended::infinity();
  }
  return extended(rational(s * a.value_));
}

std::string to_string(const extended& e) { return e.is_infinite() ? "inf" : to_string(e.value()); }

std::string to_report(const extended& e) { return e.is_infinite() ? "inf" : to_report(e.value()); }

extended parse_extended(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity") return extended::infinity();
  return extended(parse_rational(text));
}

}  // namespace multipers
