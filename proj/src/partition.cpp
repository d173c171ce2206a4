#include "qzeta/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qzeta {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (auto p : parts_)
    if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::rectangle(std::int64_t part, std::int64_t count) {
  if (part < 0 || count < 0) throw std::invalid_argument("bad rectangle");
  if (part == 0) return Partition();
  Partition r;
  r.parts_.assign((std::size_t)count, part);
  return r;
}

Partition Partition::rectangle_minus_ones(std::int64_t m, std::int64_t n,
                                          std::int64_t r) {
  if (r < 0 || r > n) throw std::invalid_argument("strip size out of range");
  std::vector<std::int64_t> parts;
  parts.insert(parts.end(), (std::size_t)(n - r), m);
  parts.insert(parts.end(), (std::size_t)r, m - 1);
  return Partition(std::move(parts));
}

std::int64_t Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::int64_t Partition::part(std::int64_t i) const {
  return (i >= 0 && i < length()) ? parts_[(std::size_t)i] : 0;
}

Partition Partition::conjugate() const {
  Partition r;
  if (parts_.empty()) return r;
  for (std::int64_t i = 1; i <= parts_[0]; ++i) {
    std::int64_t cnt = 0;
    for (auto p : parts_)
      if (p >= i) ++cnt;
    r.parts_.push_back(cnt);
  }
  return r;
}

Partition Partition::complement_in(std::int64_t m, std::int64_t n) const {
  if (!fits_in_rectangle(m, n))
    throw std::domain_error("partition does not fit in the rectangle");
  std::vector<std::int64_t> parts;
  for (std::int64_t i = 0; i < n; ++i)
    parts.push_back(m - part(n - 1 - i));
  return Partition(std::move(parts));
}

Partition Partition::concat(const Partition& other) const {
  std::vector<std::int64_t> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(parts));
}

Partition Partition::duplicate() const {
  std::vector<std::int64_t> parts;
  for (auto p : parts_) {
    parts.push_back(p);
    parts.push_back(p);
  }
  return Partition(std::move(parts));
}

Partition Partition::half_split() const {
  std::vector<std::int64_t> parts;
  for (auto p : parts_) {
    parts.push_back((p + 1) / 2);
    parts.push_back(p / 2);
  }
  return Partition(std::move(parts));
}

bool Partition::contains(const Partition& mu) const {
  for (std::int64_t i = 0; i < mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

bool Partition::fits_in_rectangle(std::int64_t m, std::int64_t n) const {
  return length() <= n && (parts_.empty() || parts_[0] <= m);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> rec =
      [&](std::int64_t i, std::int64_t bound) {
        out.push_back(Partition(cur));
        if (i >= lambda.length()) return;
        for (std::int64_t v = 1; v <= std::min(bound, lambda.part(i)); ++v) {
          cur.push_back(v);
          rec(i + 1, v);
          cur.pop_back();
        }
      };
  rec(0, lambda.part(0));
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_decreasing_tuple(
    std::int64_t lo, std::int64_t hi, int len,
    const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  if (len <= 0) throw std::invalid_argument("tuple length must be positive");
  std::vector<std::int64_t> tup((std::size_t)len);
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t bound) {
    if (i == len) {
      fn(tup);
      return;
    }
    for (std::int64_t v = lo; v <= bound; ++v) {
      tup[(std::size_t)i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, hi);
}

}  // namespace qzeta
