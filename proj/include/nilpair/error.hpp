#pragma once
// Domain errors carry a stable machine-readable code (used by the CLI to pick
// exit codes and by tests to assert on the exact failure), plus a human message.

#include <stdexcept>
#include <string>
#include <utility>

namespace nilpair {

class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Validation / geometry
inline DomainError err_empty_diagram(const std::string& m) { return {"EmptyDiagram", m}; }
inline DomainError err_not_one_coset(const std::string& m) { return {"NotOneCoset", m}; }
inline DomainError err_not_connected(const std::string& m) { return {"NotConnected", m}; }
inline DomainError err_skew_closure(const std::string& m) { return {"SkewClosureViolated", m}; }
inline DomainError err_not_a_subset(const std::string& m) { return {"NotASubset", m}; }
inline DomainError err_mixed_coset(const std::string& m) { return {"MixedCoset", m}; }
inline DomainError err_not_centrally_symmetric(const std::string& m) { return {"NotCentrallySymmetric", m}; }
inline DomainError err_negative_shift(const std::string& m) { return {"NegativeShift", m}; }
inline DomainError err_non_integral_shift(const std::string& m) { return {"NonIntegralShift", m}; }
// Datum-level
inline DomainError err_invalid_datum(const std::string& m) { return {"InvalidDatum", m}; }
inline DomainError err_wrong_coset(const std::string& m) { return {"WrongCoset", m}; }
inline DomainError err_cardinality_mismatch(const std::string& m) { return {"CardinalityMismatch", m}; }
inline DomainError err_barycentre_nonzero(const std::string& m) { return {"BarycentreNonzero", m}; }
inline DomainError err_origin_condition(const std::string& m) { return {"OriginConditionViolated", m}; }
inline DomainError err_epsilon_invalid(const std::string& m) { return {"EpsilonInvalid", m}; }
inline DomainError err_rank_too_large(const std::string& m) { return {"RankTooLarge", m}; }
// Linear algebra / consistency
inline DomainError err_dimension_mismatch(const std::string& m) { return {"DimensionMismatch", m}; }
// I/O
inline DomainError err_io(const std::string& m) { return {"IoError", m}; }
inline DomainError err_parse(const std::string& m) { return {"ParseError", m}; }

}  // namespace nilpair
