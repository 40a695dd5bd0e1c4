#ifndef WFADIS_FAMILIES_HPP_
#define WFADIS_FAMILIES_HPP_

#include "wfadis/wfa.hpp"

namespace wfadis::families {

// Unambiguous acyclic automaton over {a, b, c} with O(n^2) states accepting
//   { (a+b)^(k-1) b (a+b)^(n-k) c a^k : 1 <= k <= n }
// with all weights tropical one. Any equivalent deterministic automaton needs
// at least 2^n states. Requires n >= 1.
Wfa ExponentialGap(int n);

}  // namespace wfadis::families

#endif  // WFADIS_FAMILIES_HPP_
