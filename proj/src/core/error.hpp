#pragma once

#include <stdexcept>
#include <string>

namespace dfl {

enum class ErrorCode {
    InvalidParams,
    InvalidProportion,
    NodeOutOfRange,
    ParseError,
    EmptyInput,
    DimensionMismatch,
    WeightMismatch,
    TooFewUpdates,
    BadMagic,
    CountMismatch,
    TruncatedFile,
    NotEnoughData,
    EmptyShard,
    NoHonestNodes,
    ConfigError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidParams: return "invalid params";
        case ErrorCode::InvalidProportion: return "invalid proportion";
        case ErrorCode::NodeOutOfRange: return "node out of range";
        case ErrorCode::ParseError: return "parse error";
        case ErrorCode::EmptyInput: return "empty input";
        case ErrorCode::DimensionMismatch: return "dimension mismatch";
        case ErrorCode::WeightMismatch: return "weight mismatch";
        case ErrorCode::TooFewUpdates: return "too few updates";
        case ErrorCode::BadMagic: return "bad magic";
        case ErrorCode::CountMismatch: return "count mismatch";
        case ErrorCode::TruncatedFile: return "truncated file";
        case ErrorCode::NotEnoughData: return "not enough data";
        case ErrorCode::EmptyShard: return "empty shard";
        case ErrorCode::NoHonestNodes: return "no honest nodes";
        case ErrorCode::ConfigError: return "config error";
        case ErrorCode::IoError: return "io error";
    }
    return "unknown error";
}

}  // namespace dfl
