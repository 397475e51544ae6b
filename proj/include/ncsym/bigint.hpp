#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ncsym {

// Exact signed integer used for every coefficient and count in the library.
using Int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Int& v) { return v.str(); }

// Parses an optionally signed base-10 integer; throws on anything else.
Int parse_decimal(const std::string& text);

}  // namespace ncsym
