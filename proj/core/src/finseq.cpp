#include "liaison/finseq.hpp"

#include <algorithm>
#include <sstream>

#include "liaison/errors.hpp"

namespace liaison {

FinSeq::FinSeq(std::int64_t offset, std::vector<Int> values)
    : offset_(offset), values_(std::move(values)) {
  std::size_t head = 0;
  while (head < values_.size() && values_[head] == 0) ++head;
  std::size_t tail = values_.size();
  while (tail > head && values_[tail - 1] == 0) --tail;
  if (head == tail) {
    offset_ = 0;
    values_.clear();
    return;
  }
  offset_ += static_cast<std::int64_t>(head);
  values_.assign(values_.begin() + head, values_.begin() + tail);
}

std::int64_t FinSeq::first_degree() const {
  if (is_zero()) throw PreconditionError("first_degree of the zero sequence");
  return offset_;
}

std::int64_t FinSeq::last_degree() const {
  if (is_zero()) throw PreconditionError("last_degree of the zero sequence");
  return offset_ + length() - 1;
}

Int FinSeq::at(std::int64_t t) const {
  if (t < offset_ || t >= offset_ + length()) return 0;
  return values_[static_cast<std::size_t>(t - offset_)];
}

Int FinSeq::sum() const {
  Int s = 0;
  for (const Int& v : values_) s += v;
  return s;
}

FinSeq FinSeq::shifted(std::int64_t h) const {
  FinSeq r = *this;
  if (!r.is_zero()) r.offset_ += h;
  return r;
}

std::string FinSeq::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ",";
    os << values_[i];
  }
  os << ")@" << offset_;
  return os.str();
}

FinSeq operator+(const FinSeq& a, const FinSeq& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t lo = std::min(a.offset(), b.offset());
  std::int64_t hi = std::max(a.offset() + a.length(), b.offset() + b.length());
  std::vector<Int> v(static_cast<std::size_t>(hi - lo));
  for (std::int64_t t = lo; t < hi; ++t)
    v[static_cast<std::size_t>(t - lo)] = a.at(t) + b.at(t);
  return FinSeq(lo, std::move(v));
}

FinSeq operator-(const FinSeq& a) {
  std::vector<Int> v = a.values();
  for (Int& x : v) x = -x;
  return FinSeq(a.offset(), std::move(v));
}

FinSeq diff(const FinSeq& s) {
  if (s.is_zero()) return FinSeq();
  std::int64_t lo = s.offset();
  std::int64_t hi = lo + s.length();  // one past the support gets s.at(hi-1) carried out
  std::vector<Int> v(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t t = lo; t <= hi; ++t)
    v[static_cast<std::size_t>(t - lo)] = s.at(t) - s.at(t - 1);
  return FinSeq(lo, std::move(v));
}

PartialSums::PartialSums(const FinSeq& s) {
  if (s.is_zero()) return;
  lo_ = s.offset();
  sums_.resize(static_cast<std::size_t>(s.length()));
  Int acc = 0;
  for (std::int64_t i = 0; i < s.length(); ++i) {
    acc += s.values()[static_cast<std::size_t>(i)];
    sums_[static_cast<std::size_t>(i)] = acc;
  }
  total_ = acc;
}

Int PartialSums::at(std::int64_t t) const {
  if (sums_.empty() || t < lo_) return 0;
  if (t >= lo_ + static_cast<std::int64_t>(sums_.size())) return total_;
  return sums_[static_cast<std::size_t>(t - lo_)];
}

Int ambient_dim(std::int64_t t, int n) {
  if (n < 1) throw PreconditionError("ambient_dim: n >= 1 required");
  if (t < 0) return 0;
  Int r = 1;
  for (int k = 1; k <= n; ++k) {
    r *= t + k;
    r /= k;
  }
  return r;
}

}  // namespace liaison
