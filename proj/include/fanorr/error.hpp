#pragma once

#include <stdexcept>
#include <string>

namespace fanorr {

// Raised when an operation is called outside the domain where its result is
// defined (h0 < 2 for a genus, an index != 1 family degree, Csq >= 0, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace fanorr
