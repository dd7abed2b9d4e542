#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sunitgcd {

// Input violates a documented precondition (pole, zero argument, value
// outside the allowed unit group, ...).  Maps to status/exit code 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed expression text.  `offset` is the byte position of the first
// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_ = 0;
};

// Malformed or inconsistent configuration (CLI flags / config file).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed.  Maps to status/exit code 4.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
[[noreturn]] inline void check_failed(const char* file, int line,
                                      const char* expr,
                                      const std::string& msg) {
  std::string s = std::string(file) + ":" + std::to_string(line) +
                  ": invariant `" + expr + "` failed";
  if (!msg.empty()) s += ": " + msg;
  throw InternalError(s);
}
}  // namespace detail

// Hard internal invariant; throwing (not aborting) so the shared-library
// boundary can translate it into an error status.
#define SGC_CHECK(expr)                                                \
  do {                                                                 \
    if (!(expr))                                                       \
      ::sunitgcd::detail::check_failed(__FILE__, __LINE__, #expr, ""); \
  } while (0)

#define SGC_CHECK_MSG(expr, msg)                                        \
  do {                                                                  \
    if (!(expr))                                                        \
      ::sunitgcd::detail::check_failed(__FILE__, __LINE__, #expr, msg); \
  } while (0)

}  // namespace sunitgcd
