#ifndef GUARD_SUBN_COMMON_H
#define GUARD_SUBN_COMMON_H

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace subn {

using Integer = boost::multiprecision::cpp_int;

struct Error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

// arithmetic with no defined result: inverting zero, singular matrices
struct DomainError : Error { using Error::Error; };

// the requested (family, n, q) or name is not covered by the constructors
struct UnsupportedError : Error { using Error::Error; };

// inputs violate the hypotheses of a prediction or formula
struct RefusalError : Error { using Error::Error; };

// a configured resource ceiling would be exceeded
struct CeilingError : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

// directory holding bundled tables and generator files
std::string data_dir();

} // namespace subn

#endif // GUARD_SUBN_COMMON_H
