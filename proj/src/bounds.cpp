#include "semiflow/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace semiflow {

Int sperner_bound(int places) {
  if (places < 1) throw std::invalid_argument("place count must be positive");
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(places),
               static_cast<unsigned long>(places / 2));
  return out;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

PlacePartition merge_classes(const PetriNet& net) {
  const int d = net.place_count();
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);

  for (int t = 0; t < net.transition_count(); ++t) {
    int in_place = -1, out_place = -1, ins = 0, outs = 0;
    for (int p = 0; p < d; ++p) {
      if (net.pre[p][t] > 0) ++ins, in_place = p;
      if (net.post[p][t] > 0) ++outs, out_place = p;
    }
    // one input and one output: the flow equation ties the two places'
    // coordinates, so any support holds both or neither
    if (ins == 1 && outs == 1)
      parent[find_root(parent, in_place)] = find_root(parent, out_place);
  }

  PlacePartition part;
  part.class_of.assign(d, -1);
  for (int p = 0; p < d; ++p) {
    const int r = find_root(parent, p);
    if (part.class_of[r] < 0) {
      part.class_of[r] = static_cast<int>(part.classes.size());
      part.classes.emplace_back();
    }
    part.class_of[p] = part.class_of[r];
    part.classes[part.class_of[p]].push_back(p);
  }
  return part;
}

Int refined_bound(const PetriNet& net) {
  return sperner_bound(merge_classes(net).count());
}

}  // namespace semiflow
