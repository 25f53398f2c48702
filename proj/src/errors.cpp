#include "etrail/errors.hpp"

namespace etrail {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::AllEdgesEmptyInterval: return "AllEdgesEmptyInterval";
    case Errc::TimeOutOfRange: return "TimeOutOfRange";
    case Errc::UnknownEdgeId: return "UnknownEdgeId";
    case Errc::CostOverflow: return "CostOverflow";
    case Errc::DensityViolation: return "DensityViolation";
    case Errc::StringTooShort: return "StringTooShort";
    case Errc::LetterNotInAlphabet: return "LetterNotInAlphabet";
    case Errc::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case Errc::UnknownKmer: return "UnknownKmer";
    case Errc::IntervalOutOfRange: return "IntervalOutOfRange";
    case Errc::InvalidTrail: return "InvalidTrail";
    case Errc::UnequalParallelCosts: return "UnequalParallelCosts";
    case Errc::NoCopyAvailable: return "NoCopyAvailable";
    case Errc::NotAHamiltonianPath: return "NotAHamiltonianPath";
    case Errc::TooFewNodes: return "TooFewNodes";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NoSuchK: return "NoSuchK";
    case Errc::SolverBudgetExceeded: return "SolverBudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::ProfileInfeasible: return "ProfileInfeasible";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace etrail
