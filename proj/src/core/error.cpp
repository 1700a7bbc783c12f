#include "error.hpp"

namespace sigmapair {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "ParseError";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::NonIntegralStep: return "NonIntegralStep";
    case Errc::BelowChainStart: return "BelowChainStart";
    case Errc::PeriodNotFound: return "PeriodNotFound";
    case Errc::NonUnitResidue: return "NonUnitResidue";
    case Errc::CheckpointMismatch: return "CheckpointMismatch";
    case Errc::NotOnKnownChain: return "NotOnKnownChain";
    case Errc::Infeasible: return "Infeasible";
    case Errc::NegativeMultiplier: return "NegativeMultiplier";
    case Errc::Io: return "IoError";
  }
  return "Unknown";
}

}  // namespace sigmapair
