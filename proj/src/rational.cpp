#include "gt/rational.hpp"

#include <cctype>

namespace gt {

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t num = std::stoll(text.substr(0, slash));
    std::int64_t den = std::stoll(text.substr(slash + 1));
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t places = text.size() - dot - 1;
    if (places > 15) throw std::invalid_argument("Rational::parse: too many decimal places");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < places; ++i) den *= 10;
    return Rational(std::stoll(digits), den);
  }
  return Rational(std::stoll(text));
}

}  // namespace gt
