#ifndef WFADIS_DETERMINIZATION_HPP_
#define WFADIS_DETERMINIZATION_HPP_

#include <cstddef>

#include "wfadis/wfa.hpp"

namespace wfadis {

// Weighted subset construction over the tropical semiring. Each output state
// is a subset {(p, v)} of input states with residual weights (min v = 0).
// Throws UnsupportedOperation for other semirings and
// NotDeterminizedWithinLimit when more than state_limit subsets are created.
Wfa Determinize(const Wfa &a, std::size_t state_limit = 100000);

}  // namespace wfadis

#endif  // WFADIS_DETERMINIZATION_HPP_
