#pragma once

#include <stdexcept>
#include <string>

namespace aqc {

enum class Errc {
    NotPrime,
    FieldTooLarge,
    NotQuadraticExtension,
    EvenCharacteristic,
    DivisionByZeroPoly,
    LengthMismatch,
    InvalidKindForField,
    CodeTooLarge,
    TrivialCode,
    NotNested,
    EqualCodes,
    AlreadyContained,
    OutOfRange,
    SizeMismatch,
    NotDivisor,
    NotShiftClosed,
    ParseError,
    InvalidOrderElement,
    BadRange,
    NotSelfOrthogonal,
    NoFullWeightWord,
    UnsupportedKindPair,
    InconsistentDims,
    DimMismatch,
    NotInSubfield,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Parse failure carrying the byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : Error(Errc::ParseError, what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace aqc
