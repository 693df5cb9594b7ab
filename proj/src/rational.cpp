#include "mt/rational.hpp"

#include <cctype>

#include "mt/error.hpp"

namespace mt {

const char* error_kind_name(error_kind k) {
  switch (k) {
    case error_kind::insufficient_truncation: return "insufficient-truncation";
    case error_kind::domain: return "domain";
    case error_kind::outside_catalog: return "outside-catalog";
    case error_kind::parse: return "parse";
  }
  return "unknown";
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  std::size_t slash = s.find('/');
  bool ok = slash == std::string::npos ? all_digits(s, start, s.size())
                                       : all_digits(s, start, slash) && all_digits(s, slash + 1, s.size());
  if (!ok) fail(error_kind::parse, "malformed rational \"" + s + "\"");
  if (slash != std::string::npos && s.find_first_not_of('0', slash + 1) == std::string::npos)
    fail(error_kind::parse, "zero denominator in \"" + s + "\"");
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace mt
