#pragma once

#include <stdexcept>
#include <string>

namespace etrail {

enum class Errc {
  AllEdgesEmptyInterval,
  TimeOutOfRange,
  UnknownEdgeId,
  CostOverflow,
  DensityViolation,
  StringTooShort,
  LetterNotInAlphabet,
  SizeBudgetExceeded,
  UnknownKmer,
  IntervalOutOfRange,
  InvalidTrail,
  UnequalParallelCosts,
  NoCopyAvailable,
  NotAHamiltonianPath,
  TooFewNodes,
  CapExceeded,
  NoSuchK,
  SolverBudgetExceeded,
  ParseError,
  ProfileInfeasible,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace etrail
