#pragma once

#include <stdexcept>
#include <string>

namespace nlcl {

enum class ErrorKind {
  invalid_geometry,
  invalid_kernel,
  invalid_datum,
  registry,
  parse,
  config,
  cfl,
  mesh_condition,
  window_underflow,
  numerical_blowup,
  invariant_violation,
  misuse,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; the kind drives CLI exit codes.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Raised when a step produces a non-finite cell value.
class NumericalBlowup : public Error {
public:
  NumericalBlowup(long step, long cell, double value);

  long step() const noexcept { return step_; }
  long cell() const noexcept { return cell_; }

private:
  long step_;
  long cell_;
};

}  // namespace nlcl
