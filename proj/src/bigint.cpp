#include "invfp/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace invfp {

namespace {

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty integer");
  size_t pos = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (pos == s.size()) throw std::invalid_argument("parse_rational: sign without digits");
  for (size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("parse_rational: bad digit in '" + s + "'");
    }
  }
  return BigInt(s);
}

}  // namespace

BigRat parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return BigRat(num, den);
  }
  size_t dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) return BigRat(parse_integer(head));
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("parse_rational: bad fractional part in '" + text + "'");
      }
    }
    bool neg = !head.empty() && head[0] == '-';
    std::string digits = head;
    digits.erase(digits.begin(), digits.begin() + ((neg || (!head.empty() && head[0] == '+')) ? 1 : 0));
    BigInt scale = big_pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt num = parse_integer(digits.empty() ? "0" : digits) * scale + parse_integer(frac);
    if (neg) num = -num;
    return BigRat(num, scale);
  }
  return BigRat(parse_integer(text));
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= (n - k + i);
    b /= i;  // exact at every step
  }
  return b;
}

}  // namespace invfp
