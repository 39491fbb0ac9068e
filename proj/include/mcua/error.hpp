#pragma once

#include <stdexcept>
#include <string>

namespace mcua {

/// Base class for all recoverable mcua errors. CLI maps these to exit 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class EmptyNameError : public Error {
public:
    EmptyNameError() : Error("empty account name") {}
};

class TypeMismatchError : public Error {
public:
    explicit TypeMismatchError(const std::string& msg) : Error(msg) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& msg) : Error(msg) {}
};

class DegenerateLabelsError : public Error {
public:
    explicit DegenerateLabelsError(const std::string& msg) : Error(msg) {}
};

class SchemaViolationError : public Error {
public:
    explicit SchemaViolationError(const std::string& msg) : Error(msg) {}
};

class InsufficientPositivesError : public Error {
public:
    explicit InsufficientPositivesError(const std::string& msg) : Error(msg) {}
};

class TooFewPairsError : public Error {
public:
    explicit TooFewPairsError(const std::string& msg) : Error(msg) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

}  // namespace mcua
