#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypernull {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, std::uint32_t exp)
{
  return boost::multiprecision::pow(base, exp);
}

inline std::string to_decimal(const BigInt& x)
{
  return x.str();
}

//! Numerator and denominator must agree with the quotient exactly.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what)
{
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw std::domain_error(std::string("inexact division in ") + what);
  return q;
}

}  // namespace hypernull
