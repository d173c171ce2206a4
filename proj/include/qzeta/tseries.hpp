#pragma once

#include <cstdint>
#include <vector>

#include "qzeta/laurent.hpp"

namespace qzeta {

/// Truncated power series in t with pure-q Laurent coefficients, indexed by
/// t-degree 0..order.  Arithmetic truncates at the smaller operand order.
class TSeries {
public:
  explicit TSeries(std::int64_t order)
      : order_(order), coeffs_((std::size_t)order + 1) {
    if (order < 0) throw std::domain_error("TSeries order must be >= 0");
  }

  std::int64_t order() const { return order_; }
  const Laurent& coeff(std::int64_t j) const { return coeffs_.at((std::size_t)j); }
  void set_coeff(std::int64_t j, Laurent c);

  TSeries truncated(std::int64_t new_order) const;

  friend TSeries operator+(const TSeries& a, const TSeries& b);
  friend TSeries operator-(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend bool operator==(const TSeries& a, const TSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Coefficients 0..d agree exactly (both series must reach degree d).
  bool prefix_equal(const TSeries& other, std::int64_t d) const;

private:
  std::int64_t order_;
  std::vector<Laurent> coeffs_;
};

}  // namespace qzeta
