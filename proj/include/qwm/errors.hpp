#pragma once

#include <stdexcept>
#include <string>

namespace qwm {

enum class Errc {
    SelfLoop,
    DuplicatePair,
    Disconnected,
    TooFewVertices,
    VertexOutOfRange,
    BadParameters,
    NumericAngle,
    DivisionByZero,
    NonRegularExactNormalization,
    JOutOfRange,
    ImplementationMismatch,
    NotRegular,
    NotUndirected,
    NotMonic,
    NotIntegerCoefficients,
    NTooLarge,
    NotPrime,
    ParseError,
    InternalCheckFailed,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::DuplicatePair: return "DuplicatePair";
        case Errc::Disconnected: return "Disconnected";
        case Errc::TooFewVertices: return "TooFewVertices";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::BadParameters: return "BadParameters";
        case Errc::NumericAngle: return "NumericAngle";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NonRegularExactNormalization: return "NonRegularExactNormalization";
        case Errc::JOutOfRange: return "JOutOfRange";
        case Errc::ImplementationMismatch: return "ImplementationMismatch";
        case Errc::NotRegular: return "NotRegular";
        case Errc::NotUndirected: return "NotUndirected";
        case Errc::NotMonic: return "NotMonic";
        case Errc::NotIntegerCoefficients: return "NotIntegerCoefficients";
        case Errc::NTooLarge: return "NTooLarge";
        case Errc::NotPrime: return "NotPrime";
        case Errc::ParseError: return "ParseError";
        case Errc::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "Unknown";
}

/// Library error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace qwm
