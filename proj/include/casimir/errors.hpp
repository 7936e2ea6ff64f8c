#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base of every error the library throws. `category()` is a short stable tag
/// used by the CLI for its one-line diagnostics.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* category() const noexcept { return "error"; }
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "domain"; }
};

class InputError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "input"; }
};

class UnsupportedMaterialError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "unsupported-material"; }
};

class PassivityError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "passivity"; }
};

/// Malformed text input; carries the 1-based line number when known (0 otherwise).
class FormatError : public Error {
 public:
  FormatError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }
  const char* category() const noexcept override { return "format"; }

 private:
  int line_;
};

class SingularityError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "singularity"; }
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int xi_nodes, int q_nodes, double rel_err)
      : Error(what), xi_nodes_(xi_nodes), q_nodes_(q_nodes), rel_err_(rel_err) {}
  int xi_nodes() const noexcept { return xi_nodes_; }
  int q_nodes() const noexcept { return q_nodes_; }
  double rel_err_estimate() const noexcept { return rel_err_; }
  const char* category() const noexcept override { return "convergence"; }

 private:
  int xi_nodes_;
  int q_nodes_;
  double rel_err_;
};

class InfeasibleTargetError : public Error {
 public:
  InfeasibleTargetError(const std::string& what, double value_lo, double value_hi)
      : Error(what), value_lo_(value_lo), value_hi_(value_hi) {}
  double value_at_lo() const noexcept { return value_lo_; }
  double value_at_hi() const noexcept { return value_hi_; }
  const char* category() const noexcept override { return "infeasible-target"; }

 private:
  double value_lo_;
  double value_hi_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "config"; }
};

class PlotError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "plot"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "io"; }
};

}  // namespace casimir
