#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tcc {

using Integer = boost::multiprecision::cpp_int;

/// Signed decimal; throws std::invalid_argument on anything else.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace tcc
