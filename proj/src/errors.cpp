#include "planepaths/errors.hpp"

#include <utility>

namespace planepaths {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::CollinearTriple: return "CollinearTriple";
    case Errc::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case Errc::Parse: return "ParseError";
    case Errc::Unbalanced: return "Unbalanced";
    case Errc::NotSeparated: return "NotSeparated";
    case Errc::PointOnLine: return "PointOnLine";
    case Errc::OddCardinality: return "OddCardinality";
    case Errc::NoValidChoice: return "NoValidChoice";
    case Errc::InvalidStartSide: return "InvalidStartSide";
    case Errc::SharedVertex: return "SharedVertex";
    case Errc::PointNotOutsideHull: return "PointNotOutsideHull";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::TooFew: return "TooFew";
    case Errc::NotOnHull: return "NotOnHull";
    case Errc::NotAWheel: return "NotAWheel";
    case Errc::UnsupportedN: return "UnsupportedN";
  }
  return "Unknown";
}

Error::Error(Errc code, std::string message, std::vector<Index> indices)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      indices_(std::move(indices)) {}

void fail(Errc code, std::string message, std::vector<Index> indices) {
  throw Error(code, std::move(message), std::move(indices));
}

void internal_failure(const std::string& message) { throw InternalError(message); }

}  // namespace planepaths
