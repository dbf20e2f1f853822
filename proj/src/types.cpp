#include "roldarp/types.hpp"

#include <charconv>

namespace roldarp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewNodes: return "TooFewNodes";
    case ErrorCode::TimeLimitTooSmall: return "TimeLimitTooSmall";
    case ErrorCode::IncompleteGraph: return "IncompleteGraph";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnitFlagMismatch: return "UnitFlagMismatch";
    case ErrorCode::NotVarying: return "NotVarying";
    case ErrorCode::InvalidNode: return "InvalidNode";
    case ErrorCode::SelfRide: return "SelfRide";
    case ErrorCode::NegativeRelease: return "NegativeRelease";
    case ErrorCode::DuplicateRequestId: return "DuplicateRequestId";
    case ErrorCode::NegativeRevenue: return "NegativeRevenue";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnknownRequestId: return "UnknownRequestId";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::InfeasibleSchedule: return "InfeasibleSchedule";
    case ErrorCode::TooManyRequests: return "TooManyRequests";
    case ErrorCode::NotUnitGraph: return "NotUnitGraph";
    case ErrorCode::IllegalAction: return "IllegalAction";
    case ErrorCode::NoQualifyingEdge: return "NoQualifyingEdge";
    case ErrorCode::NoQualifyingEdgePair: return "NoQualifyingEdgePair";
    case ErrorCode::ProfileInfeasible: return "ProfileInfeasible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "bad revenue '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Revenue parse_revenue(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || text.front() == '-' || text.front() == '+') {
    throw Error(ErrorCode::ParseError, "bad revenue '" + std::string(whole) + "'");
  }

  Revenue value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(text.substr(0, slash), whole);
    std::int64_t den = parse_int(text.substr(slash + 1), whole);
    if (den <= 0) throw Error(ErrorCode::ParseError, "bad denominator in '" + std::string(whole) + "'");
    value = Revenue(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15) {
      throw Error(ErrorCode::ParseError, "too many decimals in '" + std::string(whole) + "'");
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, whole);
    std::int64_t fp = frac_part.empty() ? 0 : parse_int(frac_part, whole);
    value = Revenue(ip * den + fp, den);
  } else {
    value = Revenue(parse_int(text, whole));
  }
  return negative ? -value : value;
}

std::string format_revenue(const Revenue& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace roldarp
