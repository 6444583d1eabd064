#pragma once

#include <stdexcept>
#include <string>

namespace ccx {

// Error taxonomy mirrored by the CLI exit codes:
// usage -> 2, everything else -> 1.
class Error : public std::runtime_error {
public:
  enum class Kind { usage, validation, cap, property, internal };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

  Kind kind() const { return kind_; }

  static Error usage(const std::string& m) { return {Kind::usage, m}; }
  static Error validation(const std::string& m) { return {Kind::validation, m}; }
  static Error cap(const std::string& m) { return {Kind::cap, m}; }
  static Error property(const std::string& m) { return {Kind::property, m}; }
  static Error internal(const std::string& m) { return {Kind::internal, m}; }

private:
  Kind kind_;
};

}  // namespace ccx
