#pragma once

#include <stdexcept>
#include <string>

namespace acx {

enum class errc {
    non_integral_length,
    empty_base,
    length_mismatch,
    letter_out_of_range,
    bad_prefix,
    bad_length,
    alphabet_mismatch,
    parse_error,
    not_a_power,
    inconsistent,
    arity_mismatch,
    too_many_variables,
    verification_failed,
    invalid_argument,
};

inline const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::non_integral_length: return "NonIntegralLength";
    case errc::empty_base: return "EmptyBase";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::letter_out_of_range: return "LetterOutOfRange";
    case errc::bad_prefix: return "BadPrefix";
    case errc::bad_length: return "BadLength";
    case errc::alphabet_mismatch: return "AlphabetMismatch";
    case errc::parse_error: return "ParseError";
    case errc::not_a_power: return "NotAPower";
    case errc::inconsistent: return "Inconsistent";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::too_many_variables: return "TooManyVariables";
    case errc::verification_failed: return "VerificationFailed";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Domain error raised by every acx operation. The code identifies the
/// failed precondition; what() carries a human-readable detail.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace acx
