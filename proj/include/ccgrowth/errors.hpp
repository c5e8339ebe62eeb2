#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccgrowth {

// Thrown when an enumeration would exceed its element budget.  Callers that
// want to retry with a larger budget can read the limit that was hit.
class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(std::size_t budget, std::size_t attempted)
      : std::runtime_error("element budget exceeded: needed more than " +
                           std::to_string(budget) + " elements"),
        budget_(budget), attempted_(attempted) {}

  std::size_t budget() const { return budget_; }
  std::size_t attempted() const { return attempted_; }

private:
  std::size_t budget_;
  std::size_t attempted_;
};

// Thrown when the reflection-length search exhausts its radius bound without
// finding a factorisation.
class OracleNotFoundError : public std::runtime_error {
public:
  explicit OracleNotFoundError(const std::string& what)
      : std::runtime_error(what) {}
};

} // namespace ccgrowth
