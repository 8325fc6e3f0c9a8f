#include "drgforge/error.hpp"

namespace drgforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::MixedGroups: return "MixedGroups";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::IdentityInSet: return "IdentityInSet";
    case ErrorCode::NotInverseClosed: return "NotInverseClosed";
    case ErrorCode::BadClosure: return "BadClosure";
    case ErrorCode::ZeroInR: return "ZeroInR";
    case ErrorCode::EmptyConnection: return "EmptyConnection";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotAntipodal: return "NotAntipodal";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::InvalidArray: return "InvalidArray";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::NotASubgroupChain: return "NotASubgroupChain";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::StructuralViolation: return "StructuralViolation";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace drgforge
