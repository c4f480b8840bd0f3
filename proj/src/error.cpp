#include "sgraph/error.hpp"

namespace sgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidEntry: return "InvalidEntry";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::TooManyEdges: return "TooManyEdges";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::UnequalParts: return "UnequalParts";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotOneModFour: return "NotOneModFour";
    case ErrorKind::EvenInput: return "EvenInput";
    case ErrorKind::EntryOverflow: return "EntryOverflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonConstantRowWeight: return "NonConstantRowWeight";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::PresetPreconditionViolated: return "PresetPreconditionViolated";
    case ErrorKind::NotConference: return "NotConference";
    case ErrorKind::BadTriple: return "BadTriple";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotBipartition: return "NotBipartition";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::KTooSmall: return "KTooSmall";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sgraph
