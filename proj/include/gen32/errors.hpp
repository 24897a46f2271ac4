#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gen32 {

// A caller broke an operation's precondition (bad parameters, wrong field, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size cap (element enumeration, subgroup census, encoding bound) was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text or data file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// d(G) could not be pinned down within the tuple-test budget.
class Indeterminate : public std::runtime_error {
 public:
  Indeterminate(const std::string& what, std::uint32_t lower, std::uint32_t upper)
      : std::runtime_error(what), lower_(lower), upper_(upper) {}

  std::uint32_t lower() const noexcept { return lower_; }
  // 0 when no generating tuple was found at all.
  std::uint32_t upper() const noexcept { return upper_; }

 private:
  std::uint32_t lower_;
  std::uint32_t upper_;
};

}  // namespace gen32
