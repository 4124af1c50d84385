#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "jacspec/errors.hpp"

namespace jacspec {

/// One term psi_k(lambda) n^{-s_k} of a truncated asymptotic series.
struct ExpansionTerm {
  std::function<double(double)> psi;  // coefficient as a function of lambda
  double exponent;                    // s_k
};

/// Truncated large-n series with the claimed order of the dropped remainder.
/// Exponents are strictly increasing and bounded by remainder_order.
class AsymptoticExpansion {
 public:
  AsymptoticExpansion(std::vector<ExpansionTerm> terms, double remainder_order);

  double evaluate(double lambda, double n) const;
  double coefficient(std::size_t k, double lambda) const;

  const std::vector<ExpansionTerm>& terms() const { return terms_; }
  double remainder_order() const { return remainder_order_; }

 private:
  std::vector<ExpansionTerm> terms_;
  double remainder_order_;
};

}  // namespace jacspec
