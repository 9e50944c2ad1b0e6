#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arithcomp {

/// A value lies outside the domain of the requested function or normalization.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A composition stage raised a DomainError; carries the stage position
/// (0 = outermost stage as written).
class StageError : public DomainError {
 public:
  StageError(const std::string& what, std::size_t stage_index)
      : DomainError(what), stage_index_(stage_index) {}

  std::size_t stage_index() const noexcept { return stage_index_; }

 private:
  std::size_t stage_index_;
};

/// Input exceeds a configured memory or factoring cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A bounded search ran out of budget. This says nothing about existence.
class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace arithcomp
