#include "liaison/curve.hpp"

#include <algorithm>
#include <sstream>

namespace liaison {

namespace {

std::string degree_str(std::int64_t t) {
  return std::to_string(t);
}

}  // namespace

CurveInvariants::CurveInvariants(FinSeq delta2, FinSeq h1)
    : delta2_(std::move(delta2)), h1_(std::move(h1)) {}

Int CurveInvariants::degree() const { return delta2_.sum(); }

Int CurveInvariants::hilbert(std::int64_t t) const {
  // Double partial sum of delta2 with zero boundary below degree 0.
  Int h = 0;
  if (delta2_.is_zero()) return h;
  for (std::int64_t u = delta2_.offset(); u <= std::min(t, delta2_.last_degree()); ++u)
    h += (t - u + 1) * delta2_.at(u);
  return h;
}

Int CurveInvariants::genus() const {
  Int d = degree();
  if (d <= 0) throw DataError("genus: nonpositive degree");
  std::int64_t t = sigma() - 1;
  if (!acm()) t = std::max(t, r_o() + 2);
  Int g = d * t + 1 - hilbert(t);
  if (hilbert(t + 1) - hilbert(t) != d)
    throw DataError("genus: Hilbert function has not stabilised to slope d");
  return g;
}

Int CurveInvariants::h2(std::int64_t t) const {
  Int p = degree() * t + 1 - genus();
  return hilbert(t) - p + h1_.at(t);
}

std::int64_t CurveInvariants::e_index() const {
  // h2 vanishes for t >= max(sigma-2, r_o+1); scan downward from there.
  std::int64_t hi = sigma() - 3;
  if (!acm()) hi = std::max(hi, r_o());
  std::int64_t guard = std::min<std::int64_t>(0, acm() ? 0 : h1_.first_degree()) - 1;
  for (std::int64_t t = hi; t > guard; --t)
    if (h2(t) != 0) return t;
  // Below the guard h2(t) = -P(t) = g - 1 - d t, which vanishes at most once.
  Int d = degree();
  Int g = genus();
  if (g - 1 - d * guard != 0) return guard;
  return guard - 1;
}

std::int64_t CurveInvariants::r_a() const {
  if (acm()) throw AcmError("r_a: ACM curve has no deficiency module");
  return h1_.first_degree();
}

std::int64_t CurveInvariants::r_o() const {
  if (acm()) throw AcmError("r_o: ACM curve has no deficiency module");
  return h1_.last_degree();
}

std::int64_t CurveInvariants::diam() const {
  return acm() ? 0 : r_o() - r_a() + 1;
}

std::int64_t CurveInvariants::sigma() const {
  if (delta2_.is_zero()) throw DataError("sigma: zero delta2");
  return delta2_.last_degree() + 1;
}

std::int64_t CurveInvariants::alpha() const {
  for (std::int64_t t = 0;; ++t) {
    if (hilbert(t) < ambient_dim(t, 3)) return t;
    if (t > sigma() + 2'000'000)
      throw DataError("alpha: no degree with a nonzero ideal component found");
  }
}

FinSeq CurveInvariants::gamma() const { return -diff(delta2_); }

std::int64_t CurveInvariants::s_inv() const {
  FinSeq g = gamma();
  std::int64_t n = 0;
  while (g.at(n) < 0) ++n;
  if (n != alpha())
    throw DataError("s_inv: postulation character disagrees with alpha");
  return n;
}

std::int64_t CurveInvariants::t_inv() const {
  FinSeq g = gamma();
  if (g.is_zero()) throw DataError("t_inv: zero postulation character");
  for (std::int64_t n = 0; n <= g.last_degree(); ++n)
    if (g.at(n) > 0) return n;
  throw DataError("t_inv: no positive entry in the postulation character");
}

std::int64_t CurveInvariants::numreg() const {
  std::int64_t reg = acm() ? sigma() : std::max(e_index(), r_o()) + 3;
  if (sigma() > reg) throw DataError("numreg: sigma exceeds the regularity bound");
  return reg;
}

bool CurveInvariants::equal_cohomology() const {
  if (acm()) throw AcmError("equal_cohomology: undefined for ACM curves");
  return equal_in_last(diam());
}

bool CurveInvariants::equal_in_last(std::int64_t r) const {
  if (acm()) throw AcmError("equal_in_last: undefined for ACM curves");
  if (r < 1 || r > diam())
    throw PreconditionError("equal_in_last: r must satisfy 1 <= r <= diam, got r=" +
                            degree_str(r));
  bool ok = e_index() == r_o();
  for (std::int64_t t = r_o() - r + 1; ok && t <= r_o(); ++t)
    ok = h2(t) == h1_.at(t);
  if (ok && sigma() > r_o() - r + 3)
    throw DataError("equal_in_last: second-difference criterion violated");
  return ok;
}

std::vector<Violation> validate(const CurveInvariants& c) {
  std::vector<Violation> v;
  const FinSeq& d2 = c.delta2();
  const FinSeq& h1 = c.h1();

  if (d2.is_zero()) {
    v.push_back({"delta2-zero", "delta2 is identically zero"});
    return v;
  }
  if (d2.first_degree() < 0) {
    v.push_back({"delta2-below-zero",
                 "delta2 has support below degree 0 (first at " +
                     degree_str(d2.first_degree()) + ")"});
    return v;
  }
  if (d2.at(0) != 1) {
    v.push_back({"h-at-zero", "H(C,0) != 1 (delta2(0) = " + d2.at(0).str() + ")"});
    return v;
  }
  for (const Int& x : h1.values())
    if (x < 0) {
      v.push_back({"h1-negative", "h1 has a negative entry"});
      return v;
    }
  if (d2.sum() < 1) {
    v.push_back({"degree-nonpositive", "sum of delta2 is " + d2.sum().str()});
    return v;
  }

  // dim I_C(t) = ambient - H must be nonnegative; several feasibility
  // arguments (f >= alpha, s = alpha) rest on it.
  for (std::int64_t t = 0; t <= c.sigma(); ++t)
    if (c.hilbert(t) > ambient_dim(t, 3)) {
      v.push_back({"hilbert-exceeds-ambient",
                   "H(C," + degree_str(t) + ") = " + c.hilbert(t).str() +
                       " exceeds dim S_t = " + ambient_dim(t, 3).str()});
      return v;
    }

  Int g;
  try {
    g = c.genus();
  } catch (const DataError& e) {
    v.push_back({"genus-inconsistent", e.what()});
    return v;
  }

  std::int64_t win_lo = std::min<std::int64_t>(0, h1.is_zero() ? 0 : h1.first_degree()) - 3;
  std::int64_t win_hi = c.numreg() + 1;
  for (std::int64_t t = win_lo; t <= win_hi; ++t) {
    Int x = c.h2(t);
    if (x < 0)
      v.push_back({"h2-negative", "h2(" + degree_str(t) + ") = " + x.str()});
  }
  // Below the window h2 equals -P(t) = g - 1 - d t, increasing as t decreases.
  if (g - 1 - c.degree() * (win_lo - 1) < 0)
    v.push_back({"h2-negative-below-window",
                 "-P(t) < 0 at t = " + degree_str(win_lo - 1)});

  // Pointwise identity Delta^2 H = Delta^2 h2 - Delta^2 h1 on a covering window.
  for (std::int64_t t = win_lo; t <= win_hi + 1; ++t) {
    Int d2h2 = c.h2(t) - 2 * c.h2(t - 1) + c.h2(t - 2);
    Int d2h1 = h1.at(t) - 2 * h1.at(t - 1) + h1.at(t - 2);
    if (d2.at(t) != d2h2 - d2h1) {
      v.push_back({"cohomology-identity",
                   "Delta^2 H != Delta^2 h2 - Delta^2 h1 at t = " + degree_str(t)});
      break;
    }
  }
  return v;
}

void require_valid(const CurveInvariants& c) {
  auto v = validate(c);
  if (v.empty()) return;
  std::ostringstream os;
  os << "invalid curve data:";
  for (const auto& x : v) os << " [" << x.code << "] " << x.detail;
  throw DataError(os.str());
}

GeneratorDegreeInterval GeneratorDegreeInterval::for_curve(const CurveInvariants& c) {
  GeneratorDegreeInterval g;
  g.upper = c.numreg();
  return g;
}

}  // namespace liaison
