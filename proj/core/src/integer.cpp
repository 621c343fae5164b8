#include "deltasurf/integer.hpp"

#include <algorithm>
#include <limits>

#include "deltasurf/error.hpp"

namespace deltasurf {

std::string to_string(const Int& value) { return value.str(); }

std::string to_string(const IntSequence& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += values[k].str();
  }
  return out;
}

std::size_t to_index(const Int& value, const char* what) {
  // 2^31 entries is already far past anything this library should allocate.
  static const Int kLimit = Int(1) << 31;
  if (value < 0 || value > kLimit) {
    fail("resource_limit", std::string(what) + " = " + value.str() +
                               " is outside the supported index range");
  }
  return value.convert_to<std::size_t>();
}

std::optional<Int> parse_integer(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  return Int(std::string(text));
}

std::optional<IntSequence> parse_sequence(std::string_view text,
                                          std::string* offending_token) {
  IntSequence out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    auto value = parse_integer(token);
    if (!value || *value == 0) {
      if (offending_token) *offending_token = std::string(token);
      return std::nullopt;
    }
    out.push_back(std::move(*value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::size_t prime_omega(Int value) {
  if (value <= 0) fail("domain", "prime_omega requires a positive integer");
  std::size_t count = 0;
  for (Int p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      value /= p;
      ++count;
    }
  }
  if (value > 1) ++count;
  return count;
}

std::vector<Int> divisors(const Int& value) {
  if (value <= 0) fail("domain", "divisors requires a positive integer");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= value; ++d) {
    if (value % d == 0) {
      small.push_back(d);
      if (d * d != value) large.push_back(value / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Int mod_inverse(Int a, const Int& modulus) {
  // Extended Euclid on (a mod m, m).
  a %= modulus;
  if (a < 0) a += modulus;
  Int r0 = modulus, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) fail("domain", "mod_inverse of non-unit " + a.str() + " mod " + modulus.str());
  s0 %= modulus;
  if (s0 < 0) s0 += modulus;
  return s0;
}

}  // namespace deltasurf
