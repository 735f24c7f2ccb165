#ifndef AER_ERRORS_HPP
#define AER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aer {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInverse : Error {
    ZeroInverse() : Error("field inverse of zero") {}
};

struct BadDimension : Error {
    explicit BadDimension(int n) : Error("bad matrix dimension " + std::to_string(n)) {}
};

struct DimensionMismatch : Error {
    DimensionMismatch(int a, int b)
        : Error("dimension mismatch " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct BadCandidate : Error {
    explicit BadCandidate(long long c) : Error("bad candidate multiple " + std::to_string(c)) {}
};

struct BadSampleCount : Error {
    BadSampleCount() : Error("sample count must be >= 1") {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(int i) : Error("generator index " + std::to_string(i) + " out of range") {}
};

struct BadParameters : Error {
    explicit BadParameters(const std::string& what) : Error("bad parameters: " + what) {}
};

struct NotAnInverse : Error {
    NotAnInverse() : Error("supplied matrix is not an inverse of the conjugator") {}
};

struct NotInvertible : Error {
    NotInvertible() : Error("matrix is not invertible") {}
};

struct PrivateElementSingular : Error {
    PrivateElementSingular() : Error("private element evaluated to a singular matrix") {}
};

struct KeyInversionFailed : Error {
    KeyInversionFailed() : Error("intermediate key is not invertible") {}
};

// wire layer
struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error("length mismatch: " + what) {}
};

struct BadMagic : Error {
    BadMagic() : Error("frame magic is not AER1") {}
};

struct BadVersion : Error {
    explicit BadVersion(int v) : Error("unsupported frame version " + std::to_string(v)) {}
};

struct BadType : Error {
    explicit BadType(int t) : Error("unknown message type " + std::to_string(t)) {}
};

struct TruncatedFrame : Error {
    TruncatedFrame() : Error("frame truncated") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace aer

#endif
