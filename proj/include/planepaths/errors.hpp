#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace planepaths {

using Index = std::size_t;

// Recoverable failures caused by the caller's input. The CLI maps these to
// exit code 2.
enum class Errc {
  DuplicatePoint,
  CollinearTriple,
  CoordinateOutOfRange,
  Parse,
  Unbalanced,
  NotSeparated,
  PointOnLine,
  OddCardinality,
  NoValidChoice,
  InvalidStartSide,
  SharedVertex,
  PointNotOutsideHull,
  PreconditionViolated,
  TooFew,
  NotOnHull,
  NotAWheel,
  UnsupportedN,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::vector<Index> indices = {});

  Errc code() const noexcept { return code_; }
  const std::vector<Index>& indices() const noexcept { return indices_; }

 private:
  Errc code_;
  std::vector<Index> indices_;
};

// A broken invariant inside a construction. Seeing one of these on a valid
// input means the implementation (or the argument it follows) is wrong for
// that instance. The CLI maps these to exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] void fail(Errc code, std::string message, std::vector<Index> indices = {});
[[noreturn]] void internal_failure(const std::string& message);

}  // namespace planepaths
