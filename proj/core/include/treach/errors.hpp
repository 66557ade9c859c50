#pragma once

#include <stdexcept>
#include <string>

namespace treach {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct UnnormalizedInput : std::invalid_argument {
    explicit UnnormalizedInput(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionViolated : std::logic_error {
    explicit PreconditionViolated(const std::string& what) : std::logic_error(what) {}
};

struct EmptyDisturbance : std::logic_error {
    explicit EmptyDisturbance(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace treach
