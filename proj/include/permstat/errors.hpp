#pragma once

#include <stdexcept>
#include <string>

namespace permstat {

/// Thrown when an enumeration or search would exceed its hard guard.
/// The message always contains the exact count (or node total) involved.
class SizeError : public std::runtime_error {
 public:
  SizeError(std::string message, std::string count)
      : std::runtime_error(std::move(message)), count_(std::move(count)) {}

  /// Exact count that tripped the guard, as a decimal string.
  const std::string& count() const { return count_; }

 private:
  std::string count_;
};

}  // namespace permstat
