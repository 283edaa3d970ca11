#pragma once

#include <stdexcept>
#include <string>

namespace paw {

// A word (or other input) was syntactically malformed.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structurally valid word fell outside the domain of the requested map.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace paw
