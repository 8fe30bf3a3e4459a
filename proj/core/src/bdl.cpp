#include "liaison/bdl.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace liaison {

namespace {

// Delta^2 of dim I_Z(t) - dim I_C(t-g) as a function of t, i.e. the exact
// correction term added to the shifted delta2.  Finitely supported: the
// inner expression is a degree-1 polynomial for t >= f+g.
Int bump_term(std::int64_t t, std::int64_t g, std::int64_t f) {
  auto inner = [&](std::int64_t u) {
    return ambient_dim(u, 3) - ambient_dim(u - g, 3) - ambient_dim(u - f, 3) +
           ambient_dim(u - f - g, 3);
  };
  return inner(t) - 2 * inner(t - 1) + inner(t - 2);
}

std::string key_of(const CurveInvariants& c) {
  return c.delta2().str() + "|" + c.h1().str();
}

}  // namespace

CurveInvariants apply_bdl(const CurveInvariants& c, BasicDoubleLink link) {
  if (link.g < 1 || link.f < 1)
    throw PreconditionError("apply_bdl: link degrees must be positive");
  if (link.f < c.alpha())
    throw PreconditionError("apply_bdl: no surface of degree " + std::to_string(link.f) +
                            " contains the curve (alpha = " + std::to_string(c.alpha()) + ")");
  const std::int64_t g = link.g, f = link.f;
  std::int64_t hi = std::max(c.delta2().last_degree() + g, f + g + 1);
  std::vector<Int> vals(static_cast<std::size_t>(hi + 1));
  for (std::int64_t t = 0; t <= hi; ++t)
    vals[static_cast<std::size_t>(t)] = c.delta2().at(t - g) + bump_term(t, g, f);
  return CurveInvariants(FinSeq(0, std::move(vals)), c.h1().shifted(g));
}

std::vector<CurveInvariants> chain_curves(const Chain& chain) {
  std::vector<CurveInvariants> out;
  out.push_back(chain.base);
  for (const auto& link : chain.links) out.push_back(apply_bdl(out.back(), link));
  return out;
}

CurveInvariants chain_result(const Chain& chain) {
  CurveInvariants c = chain.base;
  for (const auto& link : chain.links) c = apply_bdl(c, link);
  return c;
}

Int delta_count(const Chain& chain, std::int64_t t, std::size_t s) {
  if (s > chain.links.size())
    throw PreconditionError("delta_count: stage beyond the chain length");
  Int n = 0;
  for (std::size_t j = 0; j < s; ++j) {
    if (chain.links[j].g != 1)
      throw PreconditionError("delta_count: only g = 1 links are supported");
    // Links numbered i = j+1 = 1..s; count d_i >= t - s + i + 1.
    std::int64_t i = static_cast<std::int64_t>(j) + 1;
    if (chain.links[j].f >= t - static_cast<std::int64_t>(s) + i + 1) ++n;
  }
  return n;
}

std::optional<std::pair<std::size_t, std::int64_t>> verify_chain_formula(const Chain& chain) {
  std::vector<CurveInvariants> curves = chain_curves(chain);
  for (std::size_t s = 0; s <= chain.links.size(); ++s) {
    const FinSeq& d2s = curves[s].delta2();
    std::int64_t ss = static_cast<std::int64_t>(s);
    std::int64_t hi = std::max(d2s.last_degree(), chain.base.delta2().last_degree() + ss) + 2;
    for (std::int64_t t = ss; t <= hi; ++t) {
      Int lhs = d2s.at(t);
      Int rhs = chain.base.delta2().at(t - ss) + delta_count(chain, t, s);
      if (lhs != rhs) return std::make_pair(s, t);
    }
  }
  return std::nullopt;
}

Chain flip(const Chain& chain, std::size_t i) {
  if (i + 1 >= chain.links.size())
    throw PreconditionError("flip: index has no successor link");
  for (const auto& link : chain.links)
    if (link.g != 1) throw PreconditionError("flip: only g = 1 chains are supported");
  std::int64_t a = chain.links[i].f, b = chain.links[i + 1].f;
  if (a >= b)
    throw PreconditionError("flip: requires d_i < d_{i+1}, got " + std::to_string(a) +
                            " >= " + std::to_string(b));
  Chain out = chain;
  out.links[i].f = b - 1;
  out.links[i + 1].f = a + 1;
  CurveInvariants before = chain_result(chain);
  CurveInvariants after = chain_result(out);
  if (!(before == after))
    throw DataError("flip: rewritten chain changed the resulting invariants");
  return out;
}

namespace {

bool enumerate_rec(const CurveInvariants& current, Chain& prefix, std::int64_t remaining,
                   std::int64_t cap, bool dedup, std::map<std::string, bool>& seen,
                   const std::function<bool(const Chain&, const CurveInvariants&)>& visit) {
  if (remaining == 0) {
    if (dedup) {
      auto [it, inserted] = seen.emplace(key_of(current), true);
      if (!inserted) return true;
    }
    return visit(prefix, current);
  }
  for (std::int64_t f = current.alpha(); f <= cap; ++f) {
    prefix.links.push_back({1, f});
    CurveInvariants next = apply_bdl(current, {1, f});
    bool go = enumerate_rec(next, prefix, remaining - 1, cap, dedup, seen, visit);
    prefix.links.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace

void enumerate_chains(const CurveInvariants& base, std::int64_t height, std::int64_t cap,
                      bool dedup,
                      const std::function<bool(const Chain&, const CurveInvariants&)>& visit) {
  if (height < 0) throw PreconditionError("enumerate_chains: negative height");
  if (height > 0 && cap < base.alpha())
    throw PreconditionError("enumerate_chains: cap below alpha of the base");
  Chain prefix{base, {}};
  std::map<std::string, bool> seen;
  enumerate_rec(base, prefix, height, cap, dedup, seen, visit);
}

std::vector<std::pair<Chain, CurveInvariants>> enumerate_chains(const CurveInvariants& base,
                                                                std::int64_t height,
                                                                std::int64_t cap, bool dedup) {
  std::vector<std::pair<Chain, CurveInvariants>> out;
  enumerate_chains(base, height, cap, dedup,
                   [&](const Chain& ch, const CurveInvariants& c) {
                     out.emplace_back(ch, c);
                     return true;
                   });
  return out;
}

std::optional<Chain> find_equal_in_last(const CurveInvariants& base, std::int64_t r,
                                        std::int64_t max_height, std::int64_t cap) {
  if (base.acm()) throw AcmError("find_equal_in_last: ACM base");
  if (r < 1 || r > base.diam())
    throw PreconditionError("find_equal_in_last: r out of range");
  // Level-by-level with dedup on (delta2, h1).  Two sound prunes: a link of
  // degree f >= r_o+5 forces e > r_o on the result, and e - r_o never
  // decreases along g=1 chains, so states with e > r_o are dead.
  std::map<std::string, std::vector<std::int64_t>> level;
  level.emplace(key_of(base), std::vector<std::int64_t>{});
  std::map<std::string, CurveInvariants> curves;
  curves.emplace(key_of(base), base);
  for (std::int64_t h = 0; h <= max_height; ++h) {
    for (const auto& [key, degs] : level) {
      const CurveInvariants& c = curves.at(key);
      if (c.equal_in_last(r)) {
        Chain witness{base, {}};
        for (std::int64_t f : degs) witness.links.push_back({1, f});
        return witness;
      }
    }
    if (h == max_height) break;
    std::map<std::string, std::vector<std::int64_t>> next;
    for (const auto& [key, degs] : level) {
      const CurveInvariants& c = curves.at(key);
      if (c.e_index() > c.r_o()) continue;
      std::int64_t hi = std::min(cap, c.r_o() + 4);
      for (std::int64_t f = c.alpha(); f <= hi; ++f) {
        CurveInvariants z = apply_bdl(c, {1, f});
        std::string zkey = key_of(z);
        if (next.contains(zkey)) continue;
        std::vector<std::int64_t> zdegs = degs;
        zdegs.push_back(f);
        next.emplace(zkey, std::move(zdegs));
        curves.emplace(zkey, std::move(z));
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

GeneratorDegreeInterval track_omega(const GeneratorDegreeInterval& before,
                                    const CurveInvariants& c, BasicDoubleLink link,
                                    bool certify) {
  if (link.f < c.alpha())
    throw PreconditionError("track_omega: link not applicable (f < alpha)");
  GeneratorDegreeInterval after;
  after.upper = std::max(before.upper + link.g, link.f);
  if (certify) {
    after.lower = link.f;
    after.lower_certified = true;
    if (before.lower && before.lower_certified && *before.lower != link.f)
      after.lower = std::max(link.f, *before.lower + link.g);
  } else if (before.lower) {
    if (before.lower_certified) {
      // A certified floor survives unless the link degree hits it, the one
      // case where the cone can cancel the corresponding generator.
      if (*before.lower != link.f) {
        after.lower = *before.lower + link.g;
        after.lower_certified = true;
      }
    } else {
      after.lower = *before.lower + link.g;
    }
  }
  after.certified_exact = after.lower_certified && after.lower && *after.lower == after.upper;
  return after;
}

}  // namespace liaison
