#pragma once

#include <stdexcept>
#include <string>

namespace rankmod {

// A built object failed one of its verification gates. Signals an
// implementation bug or a tampered input file, never a math failure.
class verification_error : public std::runtime_error {
  public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented resource cap (table size, codebook size, brute-force range)
// would be exceeded; the message names the limiting parameter.
class cap_exceeded : public std::runtime_error {
  public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rankmod
