#include "bpdkit/common.hpp"

namespace bpdkit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPermutation: return "invalid_permutation";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::NotVexillary: return "not_vexillary";
    case ErrorCode::InvalidTableau: return "invalid_tableau";
    case ErrorCode::NotInnerCorner: return "not_inner_corner";
    case ErrorCode::NoPreimage: return "no_preimage";
    case ErrorCode::InvalidBiword: return "invalid_biword";
    case ErrorCode::InvalidPipeDream: return "invalid_pipe_dream";
    case ErrorCode::InvalidBpd: return "invalid_bpd";
    case ErrorCode::DroopUnavailable: return "droop_unavailable";
    case ErrorCode::UndefinedInsertion: return "undefined_insertion";
    case ErrorCode::NoBlankTiles: return "no_blank_tiles";
    case ErrorCode::GuardFailure: return "guard_failure";
    case ErrorCode::PipesDoNotCross: return "pipes_do_not_cross";
    case ErrorCode::IterationCap: return "iteration_cap";
    case ErrorCode::NoLegalTarget: return "no_legal_target";
    case ErrorCode::NotFound: return "not_found";
  }
  return "unknown";
}

}  // namespace bpdkit
