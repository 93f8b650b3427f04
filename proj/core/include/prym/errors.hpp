#pragma once

#include <stdexcept>
#include <string>

namespace prym {

enum class Err {
  MismatchedEdge,
  Disconnected,
  NonSimplePolygon,
  NonPositiveDeterminant,
  WrongDivisors,
  NotSelfAdjoint,
  NotEigenform,
  WrongDiscriminant,
  SlitOutOfRange,
  EmptyLocus,
  WrongEndpoints,
  NotPeriodicWithinBudget,
  CollisionDuringMove,
  NotAdmissible,
  ParallelObstruction,
  VectorTooLarge,
  StepFailed,
  AssertionFailed,
  InvalidInput,
  Internal,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool cond, Err c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace prym
