#include "dsn/weight.hpp"

#include <cctype>
#include <cstdlib>

namespace dsn {

std::string Weight::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Weight Weight::parse(const std::string& text) {
  auto parse_ll = [&](const std::string& part, long long& out) {
    if (part.empty()) return false;
    size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (size_t j = i; j < part.size(); ++j)
      if (!std::isdigit((unsigned char)part[j])) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtoll(part.c_str(), &end, 10);
    return errno == 0 && end == part.c_str() + part.size();
  };

  long long n = 0, d = 1;
  auto slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = parse_ll(text, n);
  } else {
    ok = parse_ll(text.substr(0, slash), n) && parse_ll(text.substr(slash + 1), d);
  }
  if (!ok) throw ParseError("malformed weight '" + text + "'");
  if (d <= 0) throw ParseError("non-positive denominator in weight '" + text + "'");
  return Weight(n, d);
}

}  // namespace dsn
