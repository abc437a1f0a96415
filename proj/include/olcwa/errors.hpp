#ifndef OLCWA_ERRORS_HPP_
#define OLCWA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace olcwa {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct ZeroVector : Error {
  explicit ZeroVector(const std::string& msg) : Error(msg) {}
};

struct SingularSystem : Error {
  explicit SingularSystem(const std::string& msg) : Error(msg) {}
};

struct DegenerateBatch : Error {
  explicit DegenerateBatch(const std::string& msg) : Error(msg) {}
};

struct EmptyBatch : Error {
  explicit EmptyBatch(const std::string& msg) : Error(msg) {}
};

struct OutOfDomain : Error {
  explicit OutOfDomain(const std::string& msg) : Error(msg) {}
};

struct InsufficientHistory : Error {
  explicit InsufficientHistory(const std::string& msg) : Error(msg) {}
};

struct NotDrifting : Error {
  explicit NotDrifting(const std::string& msg) : Error(msg) {}
};

struct EmptyInput : Error {
  explicit EmptyInput(const std::string& msg) : Error(msg) {}
};

struct InvalidSchedule : Error {
  explicit InvalidSchedule(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace olcwa

#endif  // OLCWA_ERRORS_HPP_
