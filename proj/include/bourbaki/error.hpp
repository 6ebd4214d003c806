#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bourbaki {

enum class ErrorKind {
  ArityMismatch,
  FieldMismatch,
  InvalidArgument,
  DivisionByZero,
  NotHomogeneous,
  NotReduced,
  BadCharacteristic,
  NotZeroDimensional,
  InfiniteLocalDimension,
  SaturationCap,
  NotStabilized,
  NotASyzygy,
  NoSyzygyQuotient,
  InconsistentClassification,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Parse, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bourbaki
