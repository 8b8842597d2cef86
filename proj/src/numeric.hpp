#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace weylsig {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

// Raised for malformed input or results that violate a module contract.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// How a recovered label's signature is compared against the input.
enum class Match { Exact, Support };

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace weylsig
