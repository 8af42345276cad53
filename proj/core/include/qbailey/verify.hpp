#pragma once

#include <iosfwd>
#include <optional>

#include "qbailey/identity_bank.hpp"

namespace qbailey {

struct VerificationReport {
  std::string id;
  std::string eqTag;
  std::string pair;
  std::vector<std::pair<std::string, std::string>> values;  // rendered exactly
  std::uint64_t seed = 0;
  Exp order = 0;          // requested q-order
  int substExp = 1;       // exponents below are in units of q^(1/substExp)
  std::string status;     // "PASS", "FAIL" or "SKIPPED"
  std::string skipReason;
  std::optional<Exp> mismatchExp;
  std::string lhsCoeff, rhsCoeff;
  int mismatchExprIndex = 0;  // which expression disagreed with expression 0
  std::vector<long> termCounts;  // stored coefficients per expression
  long millis = 0;

  bool passed() const { return status == "PASS"; }
  bool failed() const { return status == "FAIL"; }
};

/// Deterministically draws an admissible specialization for the case: small
/// random rationals for every free parameter (numerators and denominators in
/// [-9,9] without 0), a pair choice from the case's slots, rho parameters
/// when Singh's pair is selected.  Throws after 1000 rejected draws.
Specialization random_spec(const IdentityCase& c, std::uint64_t seed);

/// Builds every expression of the case at order N and compares them all
/// against the first; exact coefficient equality required on the jointly
/// known range, which must reach at least N.
VerificationReport verify(const IdentityCase& c, const Specialization& spec,
                          Exp N);

/// One newline-delimited structured record per report, exact fractions only.
void write_report_line(std::ostream& os, const VerificationReport& r);

}  // namespace qbailey
