#pragma once

#include <chrono>
#include <optional>

#include "coaltrade/errors.hpp"

namespace coaltrade {

/// Cooperative wall-clock budget.  Long-running routines call check() at
/// natural boundaries (formation rounds, ADMM solves, MPC steps); an expired
/// deadline throws BudgetExceededError so drivers can mark the run timed out.
class Deadline {
public:
    Deadline() = default;

    static Deadline after_seconds(double secs) {
        Deadline d;
        d.expiry_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(secs));
        return d;
    }

    bool expired() const {
        return expiry_ && std::chrono::steady_clock::now() > *expiry_;
    }

    void check(const char* where) const {
        if (expired())
            throw BudgetExceededError(std::string("wall-clock budget exhausted in ") + where);
    }

private:
    std::optional<std::chrono::steady_clock::time_point> expiry_;
};

}  // namespace coaltrade
