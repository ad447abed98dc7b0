#pragma once

#include <stdexcept>
#include <string>

namespace dom1k {

// Thrown when a request would exceed the exact-computation size limits
// (exhaustive solvers are refused above a fixed order instead of running
// unbounded).
class guardrail_error : public std::runtime_error {
public:
    explicit guardrail_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dom1k
