#pragma once

#include <stdexcept>
#include <string>

namespace sigmapair {

enum class Errc {
  InvalidArgument,
  Parse,
  PreconditionViolation,
  NonIntegralStep,
  BelowChainStart,
  PeriodNotFound,
  NonUnitResidue,
  CheckpointMismatch,
  NotOnKnownChain,
  Infeasible,
  NegativeMultiplier,
  Io,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sigmapair
