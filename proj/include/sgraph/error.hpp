#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgraph {

enum class ErrorKind {
  InvalidEntry,
  InvalidShape,
  NonSquare,
  NotSymmetric,
  NonzeroDiagonal,
  InvalidGraph,
  VertexOutOfRange,
  GroundMismatch,
  TooManyEdges,
  Overflow,
  EmptyGraph,
  NotBipartite,
  UnequalParts,
  NoConvergence,
  NotOrthogonal,
  NotAntisymmetric,
  OrderTooLarge,
  NotPrime,
  NotOneModFour,
  EvenInput,
  EntryOverflow,
  DimensionMismatch,
  NonConstantRowWeight,
  NotCommuting,
  PresetPreconditionViolated,
  NotConference,
  BadTriple,
  NotComplete,
  NotRegular,
  DegreeTooSmall,
  NotBipartition,
  PreconditionFailed,
  KTooSmall,
  UnsupportedOrder,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every library failure carries a kind so callers (and the CLI) can report it
// by name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sgraph
