#include "acymatch/error.hpp"

namespace acym {

const char* errc_name(errc code) {
  switch (code) {
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::negative_input: return "NegativeInput";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::degree_too_high: return "DegreeTooHigh";
    case errc::k_out_of_range: return "KOutOfRange";
    case errc::bad_parameter: return "BadParameter";
    case errc::infeasible: return "Infeasible";
    case errc::too_large: return "TooLarge";
    case errc::missing_k: return "MissingK";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::stale_move: return "StaleMove";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::not_a_matching: return "NotAMatching";
    case errc::not_acyclic: return "NotAcyclic";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IOError";
  }
  return "Error";
}

}  // namespace acym
