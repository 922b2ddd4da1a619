#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace knotcalc {

enum class Errc {
  StrandUnderflow,
  PositionOutOfRange,
  NotAKnot,
  InvalidGaussCode,
  UnderlyingMismatch,
  MoveNotApplicable,
  AssignmentMismatch,
  InsufficientRungs,
  InvalidLadder,
  DimensionMismatch,
  AlphabetMismatch,
  InconsistentDescriptor,
  NotCommuting,
  CorpusLoadError,
  FormatError,
};

const char* errc_name(Errc code);

// Domain-level failure. `index` points at the offending event / element when
// the operation walks a sequence.
class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& message,
              std::optional<std::size_t> index = std::nullopt);

  Errc code() const { return code_; }
  std::optional<std::size_t> index() const { return index_; }
  // Message without the code prefix, for rewrapping with extra context.
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
  std::string detail_;
};

}  // namespace knotcalc
