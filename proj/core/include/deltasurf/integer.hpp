#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace deltasurf {

// Every quantity in this library is an exact integer.  Paper-scale inputs fit
// in a machine word, but intermediate products (n_i * delta_i, gluing scales,
// curve-polynomial coefficients) and user-supplied sequences need not.
// Expression templates are off so arithmetic yields plain values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using IntSequence = std::vector<Int>;

using boost::multiprecision::gcd;

std::string to_string(const Int& value);
std::string to_string(const IntSequence& values);  // "12,8,9"

// Narrow to a container index; throws DomainError("resource_limit") when the
// value is negative or too large to index memory we are willing to allocate.
std::size_t to_index(const Int& value, const char* what);

// Digits-only literal; rejects sign characters, empty strings, leading junk.
std::optional<Int> parse_integer(std::string_view text);

// Comma-separated positive integers.  On failure returns nullopt and, when
// offending_token is non-null, stores the token that failed to parse.
std::optional<IntSequence> parse_sequence(std::string_view text,
                                          std::string* offending_token = nullptr);

// Number of prime factors counted with multiplicity (trial division).
std::size_t prime_omega(Int value);

// All positive divisors in ascending order (trial division).
std::vector<Int> divisors(const Int& value);

// Inverse of a modulo m; gcd(a, m) == 1 is a precondition.
Int mod_inverse(Int a, const Int& modulus);

}  // namespace deltasurf
