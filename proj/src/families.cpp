#include "wfadis/families.hpp"

#include "wfadis/errors.hpp"

namespace wfadis::families {

Wfa ExponentialGap(int n) {
  if (n < 1) throw UsageError("exponential gap family needs n >= 1");
  WfaBuilder b(SemiringKind::kTropical);
  const StateId start = b.AddState();
  b.SetInitial(start, 0);
  // Shared a^k tail: tail[i] reads the remaining n - i a's.
  std::vector<StateId> tail(n + 1);
  for (int i = 0; i <= n; ++i) tail[i] = b.AddState();
  for (int i = 0; i < n; ++i) b.AddTransition(tail[i], "a", 0, tail[i + 1]);
  b.SetFinal(tail[n], 0);
  // Shared prefix chain: prefix[j] has read j symbols of (a+b)^j.
  std::vector<StateId> prefix(n);
  prefix[0] = start;
  for (int j = 1; j < n; ++j) prefix[j] = b.AddState();
  for (int j = 0; j + 1 < n; ++j) {
    b.AddTransition(prefix[j], "a", 0, prefix[j + 1]);
    b.AddTransition(prefix[j], "b", 0, prefix[j + 1]);
  }
  for (int k = 1; k <= n; ++k) {
    // After the marked b, read (a+b)^(n-k), then c, then a^k.
    StateId at = b.AddState();
    b.AddTransition(prefix[k - 1], "b", 0, at);
    for (int j = 0; j < n - k; ++j) {
      StateId next = b.AddState();
      b.AddTransition(at, "a", 0, next);
      b.AddTransition(at, "b", 0, next);
      at = next;
    }
    b.AddTransition(at, "c", 0, tail[n - k]);
  }
  return b.Build();
}

}  // namespace wfadis::families
