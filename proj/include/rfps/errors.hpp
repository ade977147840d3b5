#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rfps {

// Base class for every error the library raises.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Binary operation on series with different truncation orders.
class order_mismatch : public error {
public:
    order_mismatch(std::size_t lhs, std::size_t rhs)
        : error("truncation orders differ: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
    {
    }
};

// A value violates the precondition of a refinement type or an operation.
class domain_violation : public error {
public:
    using error::error;
};

// Coefficient requested above the truncation order.
class out_of_window : public error {
public:
    out_of_window(std::size_t index, std::size_t order)
        : error("coefficient x^" + std::to_string(index) + " lies beyond truncation order "
                + std::to_string(order))
    {
    }
};

// The requested object provably does not exist (no involution, no inner series, ...).
class no_solution : public error {
public:
    using error::error;
};

// A self-verification step failed. Always a library bug, never bad input.
class internal_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"), position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace rfps
