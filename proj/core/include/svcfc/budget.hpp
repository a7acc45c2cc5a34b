#pragma once

#include <cstdint>

#include "svcfc/errors.hpp"

namespace svcfc {

// Node counter for the exhaustive searches. A null Budget* means unlimited.
class Budget {
public:
    explicit Budget(std::uint64_t limit) : remaining_(limit) {}

    void charge(std::uint64_t n = 1) {
        if (remaining_ < n)
            throw budget_error("search budget exhausted");
        remaining_ -= n;
    }

    std::uint64_t remaining() const { return remaining_; }

private:
    std::uint64_t remaining_;
};

inline void charge(Budget* budget, std::uint64_t n = 1) {
    if (budget != nullptr)
        budget->charge(n);
}

} // namespace svcfc
