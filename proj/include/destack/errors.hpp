#pragma once

#include <stdexcept>
#include <string>

namespace destack {

// Error codes carried by every exception thrown from this library. CLI maps
// them onto exit codes; tests match on them.
enum class Errc {
  RankDeficient,
  InfiniteCokernel,
  GroupMismatch,
  NotCyclic,
  NotSubgroup,
  ConeNotInFan,
  InvalidCenter,
  NotFaceClosed,
  LabelMismatch,
  NotDivisorial,
  MissingDecomposition,
  BudgetExceeded,
  NonAbelian,
  NotFaithful,
  NonMonomial,
  Precondition,
  ParseError,
  InvariantViolation,
};

inline const char* errcName(Errc c) {
  switch (c) {
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::InfiniteCokernel: return "InfiniteCokernel";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotCyclic: return "NotCyclic";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::ConeNotInFan: return "ConeNotInFan";
    case Errc::InvalidCenter: return "InvalidCenter";
    case Errc::NotFaceClosed: return "NotFaceClosed";
    case Errc::LabelMismatch: return "LabelMismatch";
    case Errc::NotDivisorial: return "NotDivisorial";
    case Errc::MissingDecomposition: return "MissingDecomposition";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NonAbelian: return "NonAbelian";
    case Errc::NotFaithful: return "NotFaithful";
    case Errc::NonMonomial: return "NonMonomial";
    case Errc::Precondition: return "Precondition";
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace destack
