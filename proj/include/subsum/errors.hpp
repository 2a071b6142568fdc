#pragma once

#include <stdexcept>
#include <string>

namespace subsum {

enum class Errc {
  MissingBound,
  UnknownEntry,
  LimitExceeded,
  ZeroTermPresent,
  NotOneDimensional,
  UndecidableComparison,
  InsufficientMetadata,
  UnsupportedPattern,
  InsufficientTerms,
  NoDeclaredTags,
  HeuristicGammaRejected,
  YNotApproximable,
  TargetOnBoundary,
  BudgetExhausted,
  HypothesisViolated,
  GapTooSmall,
  SelectionNotPotentiallyConditional,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

  // CLI contract: domain errors exit 2, exhausted budgets exit 3.
  int exit_code() const { return code_ == Errc::BudgetExhausted ? 3 : 2; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace subsum
