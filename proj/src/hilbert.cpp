#include "semiflow/hilbert.hpp"

#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <utility>

#include "semiflow/vec.hpp"

namespace semiflow {

namespace {

// Frontier node: candidate vector and its defect x^T (Post - Pre), kept
// incrementally so each extension costs one vector add.
struct Node {
  IntVec x;
  IntVec defect;
};

bool dominated(const IntVec& x, const std::vector<Semiflow>& sols) {
  for (const auto& m : sols)
    if (leq(m, x)) return true;  // m <= x and m != x: weights differ
  return false;
}

HilbertBasis run_completion(const PetriNet& net, const HilbertOptions& opts,
                            bool parallel) {
  const int d = net.place_count();

  std::vector<IntVec> unit_defect(d);
  for (int p = 0; p < d; ++p) unit_defect[p] = net.incidence_row(p);

  std::vector<Semiflow> sols;
  std::vector<Node> frontier;
  for (int p = 0; p < d; ++p) {
    Node n;
    n.x.assign(d, Int(0));
    n.x[p] = 1;
    n.defect = unit_defect[p];
    frontier.push_back(std::move(n));
  }
  std::sort(frontier.begin(), frontier.end(),
            [](const Node& a, const Node& b) { return lex_less(a.x, b.x); });

  while (!frontier.empty()) {
    // Solutions first: same-weight vectors cannot dominate each other, so
    // every zero-defect vector in this level is a new minimal member.
    std::vector<const Node*> active;
    for (const auto& n : frontier) {
      if (is_zero(n.defect))
        sols.push_back(n.x);
      else
        active.push_back(&n);
    }

    const int na = static_cast<int>(active.size());
    std::vector<std::vector<Node>> chunks(na);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (int i = 0; i < na; ++i) {
      const Node& n = *active[i];
      for (int p = 0; p < d; ++p) {
        if (dot(n.defect, unit_defect[p]) >= 0) continue;
        Node child;
        child.x = n.x;
        child.x[p] += 1;
        if (dominated(child.x, sols)) continue;
        child.defect = add(n.defect, unit_defect[p]);
        chunks[i].push_back(std::move(child));
      }
    }

    std::vector<Node> next;
    for (auto& c : chunks)
      for (auto& n : c) next.push_back(std::move(n));
    std::sort(next.begin(), next.end(),
              [](const Node& a, const Node& b) { return lex_less(a.x, b.x); });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Node& a, const Node& b) {
                             return a.x == b.x;
                           }),
               next.end());
    if (opts.frontier_cap && next.size() > opts.frontier_cap)
      throw resource_error("frontier cap exceeded during completion search");
    frontier = std::move(next);
  }

  std::sort(sols.begin(), sols.end(), lex_less);
  HilbertBasis hb;
  hb.members = std::move(sols);
  return hb;
}

}  // namespace

bool HilbertBasis::contains(const Semiflow& f) const {
  return std::binary_search(members.begin(), members.end(), f, lex_less);
}

HilbertBasis minimal_semiflows(const PetriNet& net,
                               const HilbertOptions& opts) {
  return run_completion(net, opts, opts.parallel);
}

HilbertBasis minimal_semiflows_serial(const PetriNet& net,
                                      const HilbertOptions& opts) {
  return run_completion(net, opts, false);
}

}  // namespace semiflow
