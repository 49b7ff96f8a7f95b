#include "capelli/rational.hpp"

#include <stdexcept>

namespace capelli {

Rational parse_rational(std::string_view text)
{
  std::string s(text);
  auto trim = [](std::string& v) {
    const auto b = v.find_first_not_of(" \t");
    const auto e = v.find_last_not_of(" \t");
    v = (b == std::string::npos) ? std::string{} : v.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty())
    throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace capelli
