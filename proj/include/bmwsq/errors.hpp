#pragma once

#include <stdexcept>
#include <string>

namespace bmwsq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct DenominatorVanishes : Error {
    explicit DenominatorVanishes(const std::string& what) : Error(what) {}
};
struct NotInLambda : Error {
    explicit NotInLambda(const std::string& what) : Error(what) {}
};
struct NotInGamma : Error {
    explicit NotInGamma(const std::string& what) : Error(what) {}
};
struct ParityViolation : Error {
    explicit ParityViolation(const std::string& what) : Error(what) {}
};
struct LevelTooSmall : Error {
    explicit LevelTooSmall(const std::string& what) : Error(what) {}
};
struct UnsupportedLevel : Error {
    explicit UnsupportedLevel(const std::string& what) : Error(what) {}
};
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};
struct OrderViolation : Error {
    explicit OrderViolation(const std::string& what) : Error(what) {}
};
struct InvalidOscTableau : Error {
    explicit InvalidOscTableau(const std::string& what) : Error(what) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace bmwsq
