#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fbweyl {

using ExactInteger = boost::multiprecision::cpp_int;
/// Always normalised: positive denominator, lowest terms.
using ExactRational = boost::multiprecision::cpp_rational;

/// n-th Catalan number, computed as prod_{k=2}^{n} (n + k) / k.
ExactInteger catalan(unsigned n);

/// prod_{j=2}^{l} (4 - 6/j); equals catalan(l - 1). Empty product for l = 1.
ExactRational majorant_product(unsigned l);

/// True iff catalan(l-1) == sum_{i=1}^{l-1} catalan(i-1) catalan(l-i-1). Requires l >= 2.
bool recurrence_check(unsigned l);

}  // namespace fbweyl
