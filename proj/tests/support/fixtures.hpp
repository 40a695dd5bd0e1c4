// Small hand-built automata shared by the tests.
#ifndef WFADIS_TESTS_FIXTURES_HPP_
#define WFADIS_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "wfadis/wfa.hpp"

namespace fixtures {

// 0 -a/1-> 1, 0 -a/2-> 2, 1 -b/3-> 3, 2 -b/3-> 3; lambda(0) = rho(3) = 0.
wfadis::Wfa A0();
// A0 without the transition 2 -b-> 3.
wfadis::Wfa A0WithoutSecondB();
// Siblings 1, 2 reached by a with b-loops of weights 1 and 2 and the common
// future c.
wfadis::Wfa SharedFutureCycles();
// As SharedFutureCycles, but 1 continues with c and 2 with d.
wfadis::Wfa DisjointFutureCycles();
// DisjointFutureCycles plus a loop-free sibling 5 sharing the c future of 1.
wfadis::Wfa MixedFutureCycles();
// 0 -a-> 1 -b-> 2 -> ... a deterministic chain of n transitions.
wfadis::Wfa Chain(int n);
// One state, initial and final with weight 0, self-loop a/1.
wfadis::Wfa SelfLoop();

// Reads tests/data/<name>.
std::string DataPath(const std::string &name);

}  // namespace fixtures

#endif  // WFADIS_TESTS_FIXTURES_HPP_
