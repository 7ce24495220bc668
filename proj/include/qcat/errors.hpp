// errors.hpp — exception types used across the library

#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

// Requested tensor dimension exceeds the configured cap (catalyst
// constructions grow exponentially in the copy count).
class dimension_limit_error : public std::runtime_error {
public:
    explicit dimension_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative routine failed to converge or produced non-finite values.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// A pure-state conversion was requested outside the majorization cone.
class infeasibility_error : public std::runtime_error {
public:
    explicit infeasibility_error(const std::string& what) : std::runtime_error(what) {}
};

// A quantity is only defined in a limit (e.g. entropy matching a pure state
// needs beta -> +inf).
class boundary_error : public std::runtime_error {
public:
    explicit boundary_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qcat
