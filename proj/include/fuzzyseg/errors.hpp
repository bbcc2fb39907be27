#pragma once

#include <stdexcept>
#include <string>

namespace fuzzyseg {

// Bad user input: malformed pattern files, text characters outside the
// declared alphabet, out-of-range positions. CLI exit code 1.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally impossible problem instance (e.g. m * lambda > n).
// CLI exit code 2.
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Brute-force enumeration exceeded its candidate cap.
class enumeration_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fuzzyseg
