#include "fbweyl/series_tools.hpp"

#include "fbweyl/errors.hpp"

namespace fbweyl {

ExactInteger catalan(unsigned n) {
  // prod (n+k)/k stays integral when accumulated as a rational; the
  // numerator and denominator are kept exact throughout.
  ExactRational c = 1;
  for (unsigned k = 2; k <= n; ++k) c *= ExactRational(n + k, k);
  if (denominator(c) != 1) throw InternalConsistencyError("catalan: non-integral product");
  return numerator(c);
}

ExactRational majorant_product(unsigned l) {
  if (l < 1) throw DomainError("majorant_product: l must be >= 1");
  ExactRational product = 1;
  for (unsigned j = 2; j <= l; ++j) product *= ExactRational(4) - ExactRational(6, j);
  return product;
}

bool recurrence_check(unsigned l) {
  if (l < 2) throw DomainError("recurrence_check: l must be >= 2");
  ExactInteger sum = 0;
  for (unsigned i = 1; i <= l - 1; ++i) sum += catalan(i - 1) * catalan(l - i - 1);
  return sum == catalan(l - 1);
}

}  // namespace fbweyl
