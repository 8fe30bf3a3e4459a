#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liaison/bdl.hpp"
#include "liaison/curve.hpp"

namespace liaison {

/// An even liaison class, given by its minimal curve plus optional
/// Buchsbaum module dimensions and the geometric input t1.
struct ClassData {
  CurveInvariants minimal;
  std::optional<FinSeq> buchsbaum_dims;
  std::optional<std::int64_t> t1;
};

std::vector<Violation> validate_class(const ClassData& cd);
void require_valid_class(const ClassData& cd);

/// Does the class contain a curve with h1 == h2 in the last r places?
/// Holds iff e(C0) <= r_o(C0) and delta2 of the minimal curve is
/// non-decreasing and <= 0 on degrees r_o - r + 3 .. r_o + 2.
bool class_has_eqcoh(const ClassData& cd, std::int64_t r);

struct EqCohConstruction {
  Chain chain;
  CurveInvariants result;
  std::int64_t height = 0;
  bool certified_min_height = false;
};

/// Chain of g=1 links from c0 whose result has h1 == h2 in the last r
/// places, of the minimal possible length -delta2(c0, r_o - r + 3).  Each
/// link degree is derived from the bump-window condition: it must raise
/// exactly the tail entries strictly below the next distinct value.
EqCohConstruction construct_equal_in_last(const CurveInvariants& c0, std::int64_t r);

/// The unique minimal equal-cohomology curve of the class; height equals
/// -delta2(C0, r_a + 2).
EqCohConstruction construct_min_eqcoh(const ClassData& cd);

struct DegreeInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// For an equal-cohomology curve: the surface degrees whose basic double
/// link again yields equal cohomology, exactly [alpha(c), r_a(c) + 3].
/// Both directions are re-checked by direct application.
DegreeInterval admissible_next_degrees(const CurveInvariants& c);

struct EqCohEnumeration {
  std::int64_t min_height = 0;
  std::vector<CurveInvariants> curves;
  std::string note;
};

/// All equal-cohomology curves of the class at the given height over the
/// minimal curve, up to equality of (delta2, h1).  Empty with a note when
/// the shift is below the minimal equal-cohomology height.
EqCohEnumeration enumerate_eqcoh(const ClassData& cd, std::int64_t shift);

/// Number of equal-cohomology curves in shift t of a Buchsbaum class:
/// 2^(t - s), with s the minimal equal-cohomology height.
Int buchsbaum_count(const ClassData& cd, std::int64_t shift);

}  // namespace liaison
