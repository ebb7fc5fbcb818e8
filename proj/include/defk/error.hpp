#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace defk {

/// Domain error with a stable machine-readable name (NotAssociative,
/// NotCommutative, ...). The CLI prints the name and exits 1.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

[[noreturn]] inline void raise(std::string name, const std::string& what) {
  throw Error(std::move(name), what);
}

}  // namespace defk
