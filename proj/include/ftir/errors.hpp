#pragma once

#include <stdexcept>
#include <string>

namespace ftir {

enum class ErrorKind {
    Format,      // malformed file header / magic
    Length,      // truncated or oversized payload
    Data,        // non-finite or otherwise invalid values
    Dimension,   // shape mismatch between arguments
    Config,      // invalid configuration or usage of an API
    Generation,  // synthetic generation could not satisfy its constraints
    Numerical,   // non-finite loss/gradient or failed numerical check
    Io,          // OS-level read/write failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::Format: return "format";
        case ErrorKind::Length: return "length";
        case ErrorKind::Data: return "data";
        case ErrorKind::Dimension: return "dimension";
        case ErrorKind::Config: return "config";
        case ErrorKind::Generation: return "generation";
        case ErrorKind::Numerical: return "numerical";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace ftir
