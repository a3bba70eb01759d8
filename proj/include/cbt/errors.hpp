#pragma once

#include <stdexcept>
#include <string>

namespace cbt {

// Input outside the documented domain of an operation (bad parameter range,
// invalid residue class, non-prime where a prime is required).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Input exceeds a documented computational ceiling (sieve limit, series
// truncation, oracle range).
struct bounds_error : std::out_of_range {
    explicit bounds_error(const std::string& what) : std::out_of_range(what) {}
};

// A certified enclosure could not be tightened to the requested tolerance
// within the cell/iteration budget.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// A search operation found no element satisfying its conditions.
struct not_found_error : std::runtime_error {
    explicit not_found_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cbt
