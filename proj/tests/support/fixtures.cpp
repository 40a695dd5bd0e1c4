#include "fixtures.hpp"

namespace fixtures {

using wfadis::SemiringKind;
using wfadis::WfaBuilder;

wfadis::Wfa A0() {
  WfaBuilder b(SemiringKind::kTropical);
  b.AddTransition(0, "a", 1, 1);
  b.AddTransition(0, "a", 2, 2);
  b.AddTransition(1, "b", 3, 3);
  b.AddTransition(2, "b", 3, 3);
  b.SetInitial(0, 0);
  b.SetFinal(3, 0);
  return b.Build();
}

wfadis::Wfa A0WithoutSecondB() {
  WfaBuilder b(SemiringKind::kTropical);
  b.AddTransition(0, "a", 1, 1);
  b.AddTransition(0, "a", 2, 2);
  b.AddTransition(1, "b", 3, 3);
  b.SetInitial(0, 0);
  b.SetFinal(3, 0);
  return b.Build();
}

wfadis::Wfa SharedFutureCycles() {
  WfaBuilder b(SemiringKind::kTropical);
  b.AddTransition(0, "a", 0, 1);
  b.AddTransition(0, "a", 0, 2);
  b.AddTransition(1, "b", 1, 1);
  b.AddTransition(2, "b", 2, 2);
  b.AddTransition(1, "c", 0, 3);
  b.AddTransition(2, "c", 0, 3);
  b.SetInitial(0, 0);
  b.SetFinal(3, 0);
  return b.Build();
}

wfadis::Wfa DisjointFutureCycles() {
  WfaBuilder b(SemiringKind::kTropical);
  b.AddTransition(0, "a", 0, 1);
  b.AddTransition(0, "a", 0, 2);
  b.AddTransition(1, "b", 1, 1);
  b.AddTransition(2, "b", 2, 2);
  b.AddTransition(1, "c", 0, 3);
  b.AddTransition(2, "d", 0, 4);
  b.SetInitial(0, 0);
  b.SetFinal(3, 0);
  b.SetFinal(4, 0);
  return b.Build();
}

wfadis::Wfa MixedFutureCycles() {
  WfaBuilder b(SemiringKind::kTropical);
  b.AddTransition(0, "a", 0, 1);
  b.AddTransition(0, "a", 0, 2);
  b.AddTransition(0, "a", 0, 5);
  b.AddTransition(1, "b", 1, 1);
  b.AddTransition(2, "b", 2, 2);
  b.AddTransition(1, "c", 0, 3);
  b.AddTransition(2, "d", 0, 4);
  b.AddTransition(5, "c", 3, 3);
  b.SetInitial(0, 0);
  b.SetFinal(3, 0);
  b.SetFinal(4, 0);
  return b.Build();
}

wfadis::Wfa Chain(int n) {
  WfaBuilder b(SemiringKind::kTropical);
  for (int i = 0; i < n; ++i) {
    b.AddTransition(i, i % 2 == 0 ? "a" : "b", i + 1, i + 1);
  }
  b.SetInitial(0, 0);
  b.SetFinal(n, 0);
  return b.Build();
}

wfadis::Wfa SelfLoop() {
  WfaBuilder b(SemiringKind::kTropical);
  b.AddTransition(0, "a", 1, 0);
  b.SetInitial(0, 0);
  b.SetFinal(0, 0);
  return b.Build();
}

std::string DataPath(const std::string &name) {
  return std::string(WFADIS_TEST_DATA_DIR) + "/" + name;
}

}  // namespace fixtures
