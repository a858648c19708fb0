#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace chalg {

using Int = boost::multiprecision::cpp_int;

inline int sign_of(const Int& a) { return a.sign(); }

inline Int abs_of(const Int& a) { return a < 0 ? Int(-a) : a; }

/* (-1)^e for possibly negative exponents */
inline int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace chalg
