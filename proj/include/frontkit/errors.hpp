#pragma once

#include <stdexcept>
#include <string>

namespace frontkit {

enum class ErrKind {
  Io,           // unreadable/unwritable paths
  Format,       // malformed file content
  Size,         // dimension mismatch / too-small input
  Argument,     // bad parameter value
  Consistency,  // cross-structure contract violation
};

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrKind kind() const noexcept { return kind_; }

private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace frontkit
