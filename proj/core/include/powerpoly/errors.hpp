#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace powerpoly {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class StepLimitExceeded : public Error {
public:
    using Error::Error;
};

// Counts elementary steps of long-running algorithms. A limit of 0 means unbounded.
class StepBudget {
public:
    StepBudget() = default;
    explicit StepBudget(std::uint64_t limit) : limit_(limit) {}

    void tick(const char* what, std::uint64_t amount = 1) {
        used_ += amount;
        if (limit_ != 0 && used_ > limit_)
            throw StepLimitExceeded(std::string(what) + ": step limit of " + std::to_string(limit_) +
                                    " exceeded");
    }
    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_ = 0;
    std::uint64_t used_ = 0;
};

inline void tick(StepBudget* budget, const char* what, std::uint64_t amount = 1) {
    if (budget) budget->tick(what, amount);
}

}  // namespace powerpoly
