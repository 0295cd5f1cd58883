#pragma once

#include <stdexcept>
#include <string>

namespace gq {

enum class Errc {
    INEXACT_DIVISION,
    DIVISION_BY_ZERO,
    ZERO_POLYNOMIAL,
    BOTH_ZERO,
    NOT_CYCLOTOMIC,
    PARSE_ERROR,
    NOT_SQUARE,
    NOT_A_COMPLEX,
    SHAPE_MISMATCH,
    MISSING_HOMOLOGY_BASIS,
    DEGENERATE_BASIS,
    NOT_TORSION,
    ZERO_INPUT,
    NON_INTEGER,
    NEGATIVE_MU,
    DIVISIBILITY_VIOLATION,
    BOUND_VIOLATION,
    IO_ERROR,
    INVALID_INPUT,
};

const char* errc_name(Errc c);

/// Library-wide exception carrying a machine-readable error code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gq
