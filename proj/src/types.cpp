#include "lks/types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace lks {

namespace {

boost::multiprecision::cpp_int pow10(int e) {
  boost::multiprecision::cpp_int p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

Rational parse_decimal(std::string_view text) {
  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  boost::multiprecision::cpp_int mantissa = 0;
  int frac_digits = 0;
  bool seen_dot = false;
  bool seen_digit = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw Error("bad-number", std::string(text));
  int exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    const auto* first = text.data() + i;
    const auto* last = text.data() + text.size();
    if (i < text.size() && text[i] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last) throw Error("bad-number", std::string(text));
    i = text.size();
  }
  if (i != text.size()) throw Error("bad-number", std::string(text));
  const int shift = exponent - frac_digits;
  Rational r = shift >= 0 ? Rational(mantissa * pow10(shift))
                          : Rational(mantissa, pow10(-shift));
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error("bad-number", "empty");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw Error("bad-number", "zero denominator");
  return num / den;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::int64_t floor_int(const Rational& r) {
  boost::multiprecision::cpp_int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return q.convert_to<std::int64_t>();
}

std::int64_t ceil_int(const Rational& r) {
  boost::multiprecision::cpp_int q = numerator(r) / denominator(r);
  if (numerator(r) > 0 && q * denominator(r) != numerator(r)) q += 1;
  return q.convert_to<std::int64_t>();
}

VertexList sorted_unique(VertexList v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace lks
