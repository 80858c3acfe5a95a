#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace websurf {

/// Unreadable or malformed input file; the message carries path and row context.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative solver ran out of iterations before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_residual, std::size_t iterations)
      : std::runtime_error(what), last_residual_(last_residual), iterations_(iterations) {}

  double last_residual() const noexcept { return last_residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double last_residual_;
  std::size_t iterations_;
};

class FetchError : public std::runtime_error {
 public:
  explicit FetchError(const std::string& what) : std::runtime_error(what) {}
};

class CrawlError : public std::runtime_error {
 public:
  explicit CrawlError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace websurf
