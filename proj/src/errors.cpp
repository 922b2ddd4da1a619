#include "knotcalc/errors.hpp"

namespace knotcalc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::StrandUnderflow: return "StrandUnderflow";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::NotAKnot: return "NotAKnot";
    case Errc::InvalidGaussCode: return "InvalidGaussCode";
    case Errc::UnderlyingMismatch: return "UnderlyingMismatch";
    case Errc::MoveNotApplicable: return "MoveNotApplicable";
    case Errc::AssignmentMismatch: return "AssignmentMismatch";
    case Errc::InsufficientRungs: return "InsufficientRungs";
    case Errc::InvalidLadder: return "InvalidLadder";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::InconsistentDescriptor: return "InconsistentDescriptor";
    case Errc::NotCommuting: return "NotCommuting";
    case Errc::CorpusLoadError: return "CorpusLoadError";
    case Errc::FormatError: return "FormatError";
  }
  return "UnknownErrc";
}

namespace {

std::string compose(Errc code, const std::string& message,
                    std::optional<std::size_t> index) {
  std::string out = errc_name(code);
  out += ": ";
  out += message;
  if (index) {
    out += " (at index ";
    out += std::to_string(*index);
    out += ")";
  }
  return out;
}

}  // namespace

DomainError::DomainError(Errc code, const std::string& message,
                         std::optional<std::size_t> index)
    : std::runtime_error(compose(code, message, index)),
      code_(code),
      index_(index),
      detail_(message) {}

}  // namespace knotcalc
