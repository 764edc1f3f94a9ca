#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace kostka {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "a", "-a" or "a/b" into an exact rational. Throws std::invalid_argument
/// on malformed input (floating point is rejected on purpose).
Rat parse_rat(const std::string& s);

/// Prints a rational as "a" or "a/b".
std::string rat_to_string(const Rat& r);

}  // namespace kostka
