#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringrank {

enum class Errc {
    RankDeficient,
    Singular,
    NotContained,
    DimensionMismatch,
    NotMonic,
    MissingIdentity,
    NotClosed,
    InvalidTable,
    ZeroIdeal,
    OwnerMismatch,
    ZeroRing,
    SizeCapExceeded,
    NotPrime,
    NonIntegralLog,
    NoStabilization,
    UnitOrZeroX,
    BadDegree,
    SplitPrime,
    DegreeOne,
    TruncationTooShort,
    Overflow,
    InvalidArgument,
    SchemaError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

    Errc code() const noexcept { return code_; }
    /// The message without the error-name prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

} // namespace ringrank
