#pragma once

#include <stdexcept>
#include <string>

namespace mtgan {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error("ConfigError: " + msg) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error("ShapeError: " + msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error("NumericError: " + msg) {}
};

struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& msg) : std::runtime_error("DecodeError: " + msg) {}
};

struct MissingPairError : std::runtime_error {
    explicit MissingPairError(const std::string& id)
        : std::runtime_error("MissingPairError: incomplete triple for id '" + id + "'") {}
};

struct DuplicateIdError : std::runtime_error {
    explicit DuplicateIdError(const std::string& id)
        : std::runtime_error("DuplicateIdError: id '" + id + "' appears more than once") {}
};

struct FoldConfigError : std::runtime_error {
    explicit FoldConfigError(const std::string& msg) : std::runtime_error("FoldConfigError: " + msg) {}
};

struct ChecksumError : std::runtime_error {
    explicit ChecksumError(const std::string& msg) : std::runtime_error("ChecksumError: " + msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error("IoError: " + msg) {}
};

}  // namespace mtgan
