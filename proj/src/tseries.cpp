#include "qzeta/tseries.hpp"

#include <algorithm>

namespace qzeta {

void TSeries::set_coeff(std::int64_t j, Laurent c) {
  if (!c.is_pure_q())
    throw std::invalid_argument("TSeries coefficients must be pure q-Laurent");
  coeffs_.at((std::size_t)j) = std::move(c);
}

TSeries TSeries::truncated(std::int64_t new_order) const {
  TSeries r(std::min(new_order, order_));
  for (std::int64_t j = 0; j <= r.order_; ++j) r.coeffs_[(std::size_t)j] = coeff(j);
  return r;
}

TSeries operator+(const TSeries& a, const TSeries& b) {
  TSeries r(std::min(a.order_, b.order_));
  for (std::int64_t j = 0; j <= r.order_; ++j)
    r.coeffs_[(std::size_t)j] = a.coeff(j) + b.coeff(j);
  return r;
}

TSeries operator-(const TSeries& a, const TSeries& b) {
  TSeries r(std::min(a.order_, b.order_));
  for (std::int64_t j = 0; j <= r.order_; ++j)
    r.coeffs_[(std::size_t)j] = a.coeff(j) - b.coeff(j);
  return r;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  TSeries r(std::min(a.order_, b.order_));
  for (std::int64_t i = 0; i <= r.order_; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (std::int64_t j = 0; i + j <= r.order_; ++j)
      r.coeffs_[(std::size_t)(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return r;
}

bool TSeries::prefix_equal(const TSeries& other, std::int64_t d) const {
  if (d > order_ || d > other.order_)
    throw std::invalid_argument("prefix degree exceeds series order");
  for (std::int64_t j = 0; j <= d; ++j)
    if (!(coeff(j) == other.coeff(j))) return false;
  return true;
}

}  // namespace qzeta
