#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace roldarp {

using Time = std::int64_t;
using NodeId = int;
using RequestId = std::int64_t;
using Weight = std::int64_t;

// Revenues are kept as exact rationals so every inequality verdict is exact.
using Revenue = boost::rational<std::int64_t>;

enum class ErrorCode {
  TooFewNodes,
  TimeLimitTooSmall,
  IncompleteGraph,
  InvalidEdge,
  DuplicateEdge,
  UnitFlagMismatch,
  NotVarying,
  InvalidNode,
  SelfRide,
  NegativeRelease,
  DuplicateRequestId,
  NegativeRevenue,
  Disconnected,
  UnknownRequestId,
  DuplicateEntry,
  InfeasibleSchedule,
  TooManyRequests,
  NotUnitGraph,
  IllegalAction,
  NoQualifyingEdge,
  NoQualifyingEdgePair,
  ProfileInfeasible,
  TooLarge,
  ParseError,
  IoError,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Accepts "7", "-3", "2.25" and "p/q". Decimals are converted exactly.
Revenue parse_revenue(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string format_revenue(const Revenue& r);

}  // namespace roldarp
