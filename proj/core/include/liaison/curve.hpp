#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liaison/errors.hpp"
#include "liaison/finseq.hpp"

namespace liaison {

/// Numerical model of a locally Cohen-Macaulay equidimensional curve in P^3:
/// the pair (Delta^2 H, h^1).  Everything else is derived.
///
/// Two curves are equal iff their (delta2, h1) pairs are equal; deformation
/// with constant cohomology is modelled as this equality.
class CurveInvariants {
 public:
  CurveInvariants(FinSeq delta2, FinSeq h1);

  const FinSeq& delta2() const { return delta2_; }
  const FinSeq& h1() const { return h1_; }
  bool acm() const { return h1_.is_zero(); }

  Int degree() const;                 // d = sum of delta2
  Int hilbert(std::int64_t t) const;  // double partial sum of delta2
  Int genus() const;                  // from H = d t + 1 - g past the stable point
  Int h2(std::int64_t t) const;       // H - P + h1, exact for every t

  std::int64_t e_index() const;  // index of speciality: max { t : h2 != 0 }
  std::int64_t r_a() const;      // min of supp h1 (throws AcmError if ACM)
  std::int64_t r_o() const;      // max of supp h1 (throws AcmError if ACM)
  std::int64_t diam() const;     // r_o - r_a + 1, zero for ACM
  std::int64_t sigma() const;    // least k with delta2(t) = 0 for all t >= k
  std::int64_t alpha() const;    // least t with hilbert(t) < ambient_dim(t,3)

  FinSeq gamma() const;          // postulation character: -diff(delta2)
  std::int64_t s_inv() const;    // first n with gamma(n) >= 0 (checked == alpha)
  std::int64_t t_inv() const;    // first n with gamma(n) > 0

  // Regularity bound on generator degrees: max(e, r_o) + 3 (sigma if ACM).
  std::int64_t numreg() const;

  bool equal_cohomology() const;              // throws AcmError if ACM
  bool equal_in_last(std::int64_t r) const;   // h1 == h2 in the last r places

  bool operator==(const CurveInvariants&) const = default;

 private:
  FinSeq delta2_;
  FinSeq h1_;
};

/// Consistency gate.  Returns the full list of violations, never throws.
std::vector<Violation> validate(const CurveInvariants& c);

/// Throws DataError unless validate(c) is clean.
void require_valid(const CurveInvariants& c);

/// Interval of possible values for the maximal degree of a minimal
/// generator.  omega is not a function of (delta2, h1), so it is carried as
/// a bound pair; `lower` is meaningful only when a construction certified a
/// minimal generator (lower_certified).
struct GeneratorDegreeInterval {
  std::optional<std::int64_t> lower;
  bool lower_certified = false;
  std::int64_t upper = 0;
  bool certified_exact = false;

  static GeneratorDegreeInterval for_curve(const CurveInvariants& c);
};

}  // namespace liaison
