#pragma once

#include <stdexcept>
#include <string>

namespace pluriharm {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadDirection : std::runtime_error {
    explicit BadDirection(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotNormalized : std::runtime_error {
    explicit NotNormalized(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadSpec : std::runtime_error {
    explicit BadSpec(const std::string& msg) : std::runtime_error(msg) {}
};

struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& msg) : std::runtime_error(msg) {}
};

struct PreconditionFailed : std::runtime_error {
    explicit PreconditionFailed(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateJacobian : std::runtime_error {
    explicit DegenerateJacobian(const std::string& msg) : std::runtime_error(msg) {}
};

struct DilatationCapViolated : std::runtime_error {
    explicit DilatationCapViolated(const std::string& msg) : std::runtime_error(msg) {}
};

struct MembershipRefuted : std::runtime_error {
    explicit MembershipRefuted(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pluriharm
