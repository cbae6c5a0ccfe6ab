#pragma once

#include <stdexcept>
#include <string>

namespace dcpo {

/// A query needs a capability (oracle, decider, hook) the value does not carry.
struct capability_error : std::logic_error {
  explicit capability_error(const std::string& what) : std::logic_error(what) {}
};

/// A documented precondition was violated by the caller.
struct precondition_error : std::logic_error {
  explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

/// Sampled validation of user-supplied data (decider, locator) found a contradiction.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// An element could not be constructed (e.g. no starting approximant found).
struct construction_error : std::runtime_error {
  explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

/// A bounded confirmation did not complete within the given fuel.
struct fuel_exhausted : std::runtime_error {
  explicit fuel_exhausted(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dcpo
