#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "liaison/curve.hpp"

namespace liaison {

/// Basic double link C:(g,f) -> Z, abstracted to the degrees of the two
/// forms.  The surface F of degree f must contain C, i.e. f >= alpha(C).
struct BasicDoubleLink {
  std::int64_t g = 1;
  std::int64_t f = 1;
  bool operator==(const BasicDoubleLink&) const = default;
};

struct Chain {
  CurveInvariants base;
  std::vector<BasicDoubleLink> links;
};

/// Exact transport of (delta2, h1) through one basic double link:
///   dim I_Z(t) = dim I_C(t-g) + dim S_{t-f} - dim S_{t-f-g},
/// with h1 shifted by g.  For g = 1 this reduces to adding 1 on the
/// window 0 <= t <= f-1 of the shifted delta2.
CurveInvariants apply_bdl(const CurveInvariants& c, BasicDoubleLink link);

/// All curves along a chain, base first, final curve last.
std::vector<CurveInvariants> chain_curves(const Chain& chain);
CurveInvariants chain_result(const Chain& chain);

/// Number of links (numbered i = 1..s) whose surface degree satisfies
/// d_i >= t - s + i + 1.  With that index range the chain transport
/// identity below holds for every t >= s.  Requires g = 1 links.
Int delta_count(const Chain& chain, std::int64_t t, std::size_t s);

/// Checks Delta^2 H(C_s, t) = Delta^2 H(C_0, t-s) + delta(chain, t, s) for
/// every stage s and every t in [s, covering bound]; returns the first
/// failing (s, t) or nullopt.
std::optional<std::pair<std::size_t, std::int64_t>> verify_chain_formula(const Chain& chain);

/// Rewrites adjacent link degrees (d_i, d_{i+1}) with d_i < d_{i+1} into
/// (d_{i+1}-1, d_i+1); the final (delta2, h1) is unchanged (checked).
Chain flip(const Chain& chain, std::size_t i);

/// Emits every g=1 chain of length exactly `height` with alpha-feasible
/// surface degrees <= cap, together with the resulting invariants, in
/// lexicographic order of the degree sequence.  With dedup, chains whose
/// resulting (delta2, h1) was already emitted are skipped.  The visitor
/// returns false to stop early.
void enumerate_chains(const CurveInvariants& base, std::int64_t height, std::int64_t cap,
                      bool dedup,
                      const std::function<bool(const Chain&, const CurveInvariants&)>& visit);

std::vector<std::pair<Chain, CurveInvariants>> enumerate_chains(
    const CurveInvariants& base, std::int64_t height, std::int64_t cap, bool dedup);

/// Brute-force search: the lexicographically least g=1 chain of height
/// <= max_height (degrees <= cap) whose result has h1 == h2 in the last r
/// places.  Level-by-level with dedup on the resulting invariants.
std::optional<Chain> find_equal_in_last(const CurveInvariants& base, std::int64_t r,
                                        std::int64_t max_height, std::int64_t cap);

/// Transports a generator-degree interval through one link.  The exact
/// sequence gives omega(I_Z) <= max(omega(I_C) + g, f); `certify` records
/// that F is taken as a minimal generator of I_Z, making f a certified
/// lower bound.  A previously certified floor survives shifted by g unless
/// the link degree equals it (the one case where the mapping cone can
/// cancel the corresponding generator).
GeneratorDegreeInterval track_omega(const GeneratorDegreeInterval& before,
                                    const CurveInvariants& c, BasicDoubleLink link,
                                    bool certify);

}  // namespace liaison
