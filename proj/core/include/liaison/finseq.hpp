#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace liaison {

// All stored quantities are dimensions of vector spaces; arithmetic is exact.
using Int = boost::multiprecision::cpp_int;

/// Finitely supported integer sequence indexed by degree.
///
/// Canonical form: the first and last stored entries are nonzero, or the
/// sequence is the empty (identically zero) one.  Entries outside the stored
/// window are zero.
class FinSeq {
 public:
  FinSeq() = default;
  FinSeq(std::int64_t offset, std::vector<Int> values);

  bool is_zero() const { return values_.empty(); }
  std::int64_t offset() const { return offset_; }
  std::int64_t length() const { return static_cast<std::int64_t>(values_.size()); }
  const std::vector<Int>& values() const { return values_; }

  // Degree of the first/last nonzero entry; requires a nonzero sequence.
  std::int64_t first_degree() const;
  std::int64_t last_degree() const;

  Int at(std::int64_t t) const;
  Int sum() const;
  FinSeq shifted(std::int64_t h) const;

  bool operator==(const FinSeq&) const = default;

  std::string str() const;

 private:
  std::int64_t offset_ = 0;
  std::vector<Int> values_;
};

FinSeq operator+(const FinSeq& a, const FinSeq& b);
FinSeq operator-(const FinSeq& a);

/// First difference: result(t) = s(t) - s(t-1).
FinSeq diff(const FinSeq& s);

/// Partial sums f(t) = sum_{u <= t} s(u); zero below the support and
/// constant above it.
class PartialSums {
 public:
  explicit PartialSums(const FinSeq& s);
  Int at(std::int64_t t) const;
  Int limit() const { return total_; }

 private:
  std::int64_t lo_ = 0;
  std::vector<Int> sums_;
  Int total_ = 0;
};

/// dim_k S_t for S = k[x_0..x_n]: C(t+n, n) for t >= 0, zero below.
Int ambient_dim(std::int64_t t, int n);

}  // namespace liaison
