#pragma once

#include <stdexcept>
#include <string>

namespace tokenlab {

// Error classes surfaced by the CLI as machine-parsable single lines.
enum class ErrorKind {
    Config,   // bad flags, missing paths, invalid sizes
    Data,     // malformed corpora, vocab mismatches, bad file contents
    Numeric,  // non-finite values, degenerate losses
    Io,       // filesystem failures
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Config: return "config";
        case ErrorKind::Data: return "data";
        case ErrorKind::Numeric: return "numeric";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace tokenlab
