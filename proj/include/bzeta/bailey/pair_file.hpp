#pragma once

#include <bzeta/bailey/expression.hpp>
#include <bzeta/bailey/verify.hpp>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bzeta::bailey {

/// Malformed pair definition; line and column are 1-based.
class DefinitionError : public std::runtime_error {
 public:
  DefinitionError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Declarative pair description, one `key = value` per line, `#` comments:
///
///   name    = unit
///   kind    = classical            # or zeta
///   a_param = 1, q                 # one monomial, or candidates to search
///   alpha   = delta(n)
///   beta    = 1/(poch(q, q, n)*poch(q, q, n))   # optional
///   s       = 2                    # optional rational value for `s`
///   q       = 1/2                  # optional: evaluate at rational q
///   depth   = 8
///   order   = 30
struct PairDefinition {
  enum class Kind { classical, zeta };

  std::string name;
  Kind kind = Kind::classical;
  std::vector<ExprPtr> a_candidates;
  ExprPtr alpha;
  ExprPtr beta;
  std::optional<Rational> s;
  std::optional<Rational> q;
  std::size_t depth = 0;
  std::size_t order = 0;
};

PairDefinition parse_pair_definition(std::string_view text);
PairDefinition load_pair_definition(const std::filesystem::path& path);

/// Canonical document text; parsing it yields an equivalent definition.
std::string to_text(const PairDefinition& def);
bool equivalent(const PairDefinition& a, const PairDefinition& b);

struct CandidateReport {
  std::string a_param;
  VerificationReport report;
};

/// Verification outcome for every a candidate of a definition.
struct DefinitionOutcome {
  std::string name;
  std::vector<CandidateReport> candidates;

  /// First verified candidate, if any.
  const CandidateReport* validated() const;
  /// Aggregate: verified if some candidate verifies, mismatch if every
  /// candidate mismatches, inconclusive otherwise.
  VerificationReport::Status status() const;
};

/// Verifies the definition at the given depth and truncation order (series
/// mode) or at its rational q.
DefinitionOutcome verify_definition(const PairDefinition& def, std::size_t depth,
                                    std::size_t order);

/// Applies `steps` chain transforms before verifying. Zeta definitions are
/// first mapped to their classical counterpart.
DefinitionOutcome verify_chained_definition(const PairDefinition& def,
                                            const ChainParameters& params, std::size_t steps,
                                            std::size_t depth, std::size_t order);

}  // namespace bzeta::bailey
