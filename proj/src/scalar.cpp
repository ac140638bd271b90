#include "superleib/scalar.hpp"

#include <cctype>

namespace superleib {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size())
    throw Error("malformed_scalar", "malformed scalar '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error("malformed_scalar", "malformed scalar '" + std::string(whole) + "'");
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

Scalar make_scalar(long num, long den) {
  if (den == 0) throw Error("malformed_scalar", "zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_integer(text, text));
  mpz_class num = parse_integer(text.substr(0, slash), text);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw Error("malformed_scalar", "malformed scalar '" + std::string(text) + "'");
  mpz_class den = parse_integer(den_text, text);
  if (den == 0)
    throw Error("malformed_scalar", "zero denominator in scalar '" + std::string(text) + "'");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

}  // namespace superleib
