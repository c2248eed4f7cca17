#pragma once

#include <stdexcept>
#include <string>

namespace copos {

// Every failure mode raised by the library derives from std::runtime_error and
// carries a human-readable message naming the offending object.

struct NonPositiveDiagonal : std::runtime_error {
    explicit NonPositiveDiagonal(const std::string& what) : std::runtime_error(what) {}
};

struct NotNonnegative : std::runtime_error {
    explicit NotNonnegative(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionTooLarge : std::runtime_error {
    explicit DimensionTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct NotCopositive : std::runtime_error {
    explicit NotCopositive(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct SupportNotNested : std::runtime_error {
    explicit SupportNotNested(const std::string& what) : std::runtime_error(what) {}
};

struct NotDD : std::runtime_error {
    explicit NotDD(const std::string& what) : std::runtime_error(what) {}
};

struct NotTriangleFree : std::runtime_error {
    explicit NotTriangleFree(const std::string& what) : std::runtime_error(what) {}
};

struct NotInCone : std::runtime_error {
    explicit NotInCone(const std::string& what) : std::runtime_error(what) {}
};

struct WitnessNotFound : std::runtime_error {
    explicit WitnessNotFound(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentFamily : std::runtime_error {
    explicit InconsistentFamily(const std::string& what) : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct StrategyInapplicable : std::runtime_error {
    explicit StrategyInapplicable(const std::string& what) : std::runtime_error(what) {}
};

struct DataCorrupt : std::runtime_error {
    explicit DataCorrupt(const std::string& what) : std::runtime_error(what) {}
};

struct CaseFailed : std::runtime_error {
    explicit CaseFailed(const std::string& what) : std::runtime_error(what) {}
};

struct BadInput : std::runtime_error {
    explicit BadInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace copos
