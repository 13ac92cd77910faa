#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace peano {

/// Thrown when an enumeration would exceed the caller's cell budget.
/// Carries the required and allowed sizes so callers can report
/// the budget that would be needed.
class resource_error : public std::runtime_error {
public:
    resource_error(std::uint64_t required, std::uint64_t allowed)
        : std::runtime_error("grid of " + std::to_string(required) +
                             " cells exceeds budget of " + std::to_string(allowed)),
          required_(required),
          allowed_(allowed)
    {
    }

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t allowed() const noexcept { return allowed_; }

private:
    std::uint64_t required_;
    std::uint64_t allowed_;
};

} // namespace peano
