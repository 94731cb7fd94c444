#pragma once

#include <stdexcept>
#include <string>

namespace painterly {

enum class ErrorCode {
    FileNotFound,
    UnsupportedFormat,
    DecodeError,
    IoError,
    InvalidArgument,
    InvalidSigma,
    TooSmall,
    WindowTooLarge,
    NotSquare,
    SizeMismatch,
    ImageSmallerThanPatch,
    DimensionMismatch,
    Usage,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace painterly
