#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace qzeta {

/// Integer partition: weakly decreasing tuple of positive parts, with
/// implicit trailing zeros.  Types and cotypes of finite modules over a
/// DVR quotient are partitions.
class Partition {
public:
  Partition() = default;
  /// Parts may be given in any order; zeros are dropped, negatives rejected.
  explicit Partition(std::vector<std::int64_t> parts);

  static Partition rectangle(std::int64_t part, std::int64_t count);
  /// (m^n) with the last r parts lowered by one, i.e. the complement of
  /// (1^r) in the m-by-n rectangle.
  static Partition rectangle_minus_ones(std::int64_t m, std::int64_t n,
                                        std::int64_t r);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::int64_t size() const;                     // |lambda|
  std::int64_t length() const { return (std::int64_t)parts_.size(); }
  std::int64_t part(std::int64_t i) const;       // 0-based, 0 beyond length
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// Complement inside the m-by-n rectangle; requires *this to fit.
  Partition complement_in(std::int64_t m, std::int64_t n) const;
  Partition concat(const Partition& other) const;
  Partition duplicate() const;
  /// Each part k becomes ceil(k/2), floor(k/2); result re-sorted.
  Partition half_split() const;

  bool contains(const Partition& mu) const;      // mu_i <= lambda_i for all i
  bool fits_in_rectangle(std::int64_t m, std::int64_t n) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  std::string to_string() const;                 // "(3,2,1)", "()" for empty
  friend std::ostream& operator<<(std::ostream& os, const Partition& lam) {
    return os << lam.to_string();
  }

private:
  std::vector<std::int64_t> parts_;
};

/// All partitions contained in lambda (Young-diagram containment),
/// in lexicographic order.
std::vector<Partition> subpartitions(const Partition& lambda);

/// Visit every weakly decreasing tuple hi >= s_1 >= ... >= s_len >= lo.
void for_each_decreasing_tuple(
    std::int64_t lo, std::int64_t hi, int len,
    const std::function<void(const std::vector<std::int64_t>&)>& fn);

}  // namespace qzeta
