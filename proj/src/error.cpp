#include "painterly/error.hpp"

namespace painterly {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidSigma: return "InvalidSigma";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ImageSmallerThanPatch: return "ImageSmallerThanPatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Usage: return "UsageError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

} // namespace painterly
