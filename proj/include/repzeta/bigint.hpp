#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace repzeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(const BigInt& base, std::uint64_t exponent);
double to_double(const BigInt& value);
std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

}  // namespace repzeta
