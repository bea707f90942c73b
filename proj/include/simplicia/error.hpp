#pragma once

#include <stdexcept>
#include <string>

namespace simplicia {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (.cplx files, permutation files, CLI arguments).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace simplicia
