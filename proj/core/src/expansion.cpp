#include "jacspec/expansion.hpp"

#include <cmath>
#include <utility>

namespace jacspec {

AsymptoticExpansion::AsymptoticExpansion(std::vector<ExpansionTerm> terms,
                                         double remainder_order)
    : terms_(std::move(terms)), remainder_order_(remainder_order) {
  if (terms_.empty()) {
    throw validation_error("AsymptoticExpansion: no terms");
  }
  for (std::size_t k = 0; k + 1 < terms_.size(); ++k) {
    if (!(terms_[k].exponent < terms_[k + 1].exponent)) {
      throw validation_error(
          "AsymptoticExpansion: exponents must be strictly increasing");
    }
  }
  if (!(terms_.back().exponent <= remainder_order_)) {
    throw validation_error(
        "AsymptoticExpansion: remainder order below the last kept exponent");
  }
}

double AsymptoticExpansion::evaluate(double lambda, double n) const {
  double acc = 0.0;
  for (const auto& t : terms_) {
    acc += t.psi(lambda) * std::pow(n, -t.exponent);
  }
  return acc;
}

double AsymptoticExpansion::coefficient(std::size_t k, double lambda) const {
  if (k >= terms_.size()) {
    throw validation_error("AsymptoticExpansion: term index out of range");
  }
  return terms_[k].psi(lambda);
}

}  // namespace jacspec
