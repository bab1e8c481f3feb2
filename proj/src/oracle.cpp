#include "tiematch/oracle.hpp"

#include <algorithm>

#include "tiematch/error.hpp"

namespace tiematch {

namespace {

class Search {
 public:
  explicit Search(const Instance& inst)
      : inst_(inst),
        wife_(inst.num_men(), kNone),
        husband_(inst.num_women(), kNone),
        last_neighbor_(inst.num_women(), kNone) {
    for (Woman b = 0; b < inst.num_women(); ++b)
      for (const Man a : inst.neighbors(b)) last_neighbor_[b] = std::max(last_neighbor_[b], a);
  }

  Matching solve() {
    branch(0, 0);
    Matching m(inst_.num_men(), inst_.num_women());
    for (Man a = 0; a < inst_.num_men(); ++a)
      if (best_wife_.empty() ? false : best_wife_[a] != kNone) m.add(a, best_wife_[a]);
    return m;
  }

 private:
  // A woman's situation is final once she is matched or every man on her
  // list has been decided.
  bool woman_final(Woman b, Man decided_upto) const {
    return husband_[b] != kNone || last_neighbor_[b] <= decided_upto;
  }

  // Whether some pair among decided men and final women already blocks.
  bool final_block(Man decided_upto) const {
    for (Man h = 0; h <= decided_upto; ++h) {
      for (const Woman w : inst_.list(h)) {
        if (w == wife_[h]) break;
        if (!woman_final(w, decided_upto)) continue;
        const Man husband = husband_[w];
        if (husband == kNone || inst_.woman_prefers(w, h, husband)) return true;
      }
    }
    return false;
  }

  void branch(Man a, int size) {
    const int n = inst_.num_men();
    if (size + (n - a) <= best_size_) return;
    if (a == n) {
      best_size_ = size;
      best_wife_ = wife_;
      return;
    }
    for (const Woman b : inst_.list(a)) {
      if (husband_[b] != kNone) continue;
      wife_[a] = b;
      husband_[b] = a;
      if (!final_block(a)) branch(a + 1, size + 1);
      wife_[a] = kNone;
      husband_[b] = kNone;
    }
    if (!final_block(a)) branch(a + 1, size);
  }

  const Instance& inst_;
  std::vector<Woman> wife_;
  std::vector<Man> husband_;
  std::vector<Man> last_neighbor_;
  std::vector<Woman> best_wife_;
  int best_size_ = -1;
};

}  // namespace

Matching opt_oracle(const Instance& inst, int bound) {
  if (inst.num_men() > bound)
    throw Error(ErrorCode::InstanceTooLarge, "instance has " + std::to_string(inst.num_men()) +
                                                 " men, oracle bound is " + std::to_string(bound));
  return Search(inst).solve();
}

}  // namespace tiematch
