#pragma once

// JSON encoding of library values. Numbers travel as decimal strings so that
// high-precision values survive the round trip.

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "supergroup/numeric.hpp"
#include "supergroup/young.hpp"

namespace supergroup::tools {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "supergroup-report/1";
inline constexpr const char* kToolName = "supergroup";
inline constexpr const char* kToolVersion = "0.1.0";

/// Malformed or inconsistent user input (exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Real& x);
Json to_json(const BigComplex& z);
Json to_json(const BigRational& q);
Json to_json(const GaussianRational& z);
Json to_json(const Partition& p);

/// Accepts "a/b", integers, finite decimals ("-1.25") and JSON integers.
BigRational parse_rational(const Json& j);

/// Accepts a real literal (string or JSON number) or {"re": .., "im": ..}.
BigComplex parse_complex(const Json& j, Bits bits);

std::vector<BigComplex> parse_complex_list(const Json& j, Bits bits);

/// Comma-separated literals from a command-line flag; "1/2,3,-0.5".
std::vector<std::string> split_list(const std::string& text);

}  // namespace supergroup::tools
