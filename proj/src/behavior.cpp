#include "semiflow/behavior.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

#include "semiflow/farkas.hpp"
#include "semiflow/vec.hpp"

namespace semiflow {

InvariantSystem invariant_report(const PetriNet& net, const Marking& m0,
                                 const std::vector<Semiflow>& gens) {
  if (static_cast<int>(m0.size()) != net.place_count())
    throw std::invalid_argument("marking length does not match net");
  InvariantSystem sys;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != net.place_count())
      throw std::invalid_argument("generator length does not match net");
    sys.rhs.push_back(dot(g, m0));
    sys.generators.push_back(g);
  }
  return sys;
}

bool satisfies(const InvariantSystem& sys, const Marking& m) {
  for (std::size_t i = 0; i < sys.generators.size(); ++i)
    if (dot(sys.generators[i], m) != sys.rhs[i]) return false;
  return true;
}

namespace {

struct MarkingSearch {
  const InvariantSystem& sys;
  const std::vector<Int>& bound;       // per-place coordinate bound
  std::vector<std::vector<Int>> maxrest;  // constraint x place suffix max
  std::vector<Int> sums;               // running constraint sums
  Marking m;
  std::vector<Marking>* out;

  void rec(int p) {
    const int d = static_cast<int>(m.size());
    if (p == d) {
      for (std::size_t i = 0; i < sums.size(); ++i)
        if (sums[i] != sys.rhs[i]) return;
      out->push_back(m);
      return;
    }
    for (Int val(0); val <= bound[p]; ++val) {
      m[p] = val;
      bool ok = true;
      for (std::size_t i = 0; i < sums.size() && ok; ++i) {
        Int s = sums[i] + val * sys.generators[i][p];
        if (s > sys.rhs[i] || s + maxrest[i][p + 1] < sys.rhs[i]) ok = false;
      }
      if (ok) {
        for (std::size_t i = 0; i < sums.size(); ++i)
          sums[i] += val * sys.generators[i][p];
        rec(p + 1);
        for (std::size_t i = 0; i < sums.size(); ++i)
          sums[i] -= val * sys.generators[i][p];
      }
    }
    m[p] = 0;
  }
};

}  // namespace

std::vector<Marking> consistent_markings(const PetriNet& net,
                                         const InvariantSystem& sys) {
  const int d = net.place_count();
  const std::size_t n = sys.generators.size();
  for (const auto& g : sys.generators)
    if (static_cast<int>(g.size()) != d)
      throw std::invalid_argument("generator length does not match net");

  for (const auto& r : sys.rhs)
    if (r < 0) return {};

  std::vector<Int> bound(d, Int(-1));
  std::string uncovered;
  for (int p = 0; p < d; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      if (sys.generators[i][p] <= 0) continue;
      Int b = sys.rhs[i] / sys.generators[i][p];
      if (bound[p] < 0 || b < bound[p]) bound[p] = b;
    }
    if (bound[p] < 0) {
      if (!uncovered.empty()) uncovered += ", ";
      uncovered += net.places[p];
    }
  }
  if (!uncovered.empty())
    throw std::invalid_argument("enumeration unbounded: no generator covers " +
                                uncovered);

  MarkingSearch search{sys,
                       bound,
                       std::vector<std::vector<Int>>(n),
                       std::vector<Int>(n, Int(0)),
                       Marking(d, Int(0)),
                       nullptr};
  for (std::size_t i = 0; i < n; ++i) {
    search.maxrest[i].assign(d + 1, Int(0));
    for (int p = d - 1; p >= 0; --p)
      search.maxrest[i][p] =
          search.maxrest[i][p + 1] + bound[p] * sys.generators[i][p];
  }
  std::vector<Marking> out;
  search.out = &out;
  search.rec(0);
  return out;
}

namespace {

struct MarkingLess {
  bool operator()(const Marking& a, const Marking& b) const {
    return lex_less(a, b);
  }
};

// components numbered in reverse topological order: every edge goes from a
// higher component id to an equal or lower one
std::vector<int> scc_of(const std::vector<std::vector<int>>& adj, int n,
                        int& comp_count) {
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stk;
  std::vector<char> onstk(n, 0);
  int next = 0;
  comp_count = 0;

  for (int s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> frames{{s, 0}};
    index[s] = low[s] = next++;
    stk.push_back(s);
    onstk[s] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adj[v].size()) {
        const int w = adj[v][pos++];
        if (index[w] < 0) {
          index[w] = low[w] = next++;
          stk.push_back(w);
          onstk[w] = 1;
          frames.emplace_back(w, 0);
        } else if (onstk[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          int w;
          do {
            w = stk.back();
            stk.pop_back();
            onstk[w] = 0;
            comp[w] = comp_count;
          } while (w != v);
          ++comp_count;
        }
        const int done = v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().first] =
              std::min(low[frames.back().first], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace

ReachabilityReport reach_report(const PetriNet& net, const Marking& initial,
                                const ReachOptions& opts) {
  if (opts.state_cap < 1)
    throw std::invalid_argument("state cap must be positive");
  if (static_cast<int>(initial.size()) != net.place_count())
    throw std::invalid_argument("marking length does not match net");

  ReachabilityReport rep;
  std::map<Marking, int, MarkingLess> id_of;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> fired;  // transitions enabled per state

  rep.states.push_back(initial);
  id_of[initial] = 0;
  adj.emplace_back();
  fired.emplace_back();

  const int nt = net.transition_count();
  std::deque<int> queue{0};
  while (!queue.empty() && !rep.bound_hit) {
    const int v = queue.front();
    queue.pop_front();
    const Marking m = rep.states[v];
    for (int t = 0; t < nt && !rep.bound_hit; ++t) {
      if (!is_enabled(net, m, t)) continue;
      fired[v].push_back(t);
      Marking next = fire(net, m, t);
      auto it = id_of.find(next);
      int w;
      if (it != id_of.end()) {
        w = it->second;
      } else if (rep.states.size() < opts.state_cap) {
        w = static_cast<int>(rep.states.size());
        id_of[next] = w;
        rep.states.push_back(std::move(next));
        adj.emplace_back();
        fired.emplace_back();
        queue.push_back(w);
      } else {
        rep.bound_hit = true;
        break;
      }
      adj[v].push_back(w);
    }
  }

  const int n = static_cast<int>(rep.states.size());

  std::vector<char> seen(nt, 0);
  for (int v = 0; v < n; ++v)
    for (int t : fired[v]) seen[t] = 1;
  for (int t = 0; t < nt; ++t)
    if (!seen[t]) rep.dead_transitions.push_back(t);

  if (opts.check_invariants) {
    const auto fs = fundamental_set(net);
    const auto sys = invariant_report(net, initial, fs.members);
    for (const auto& m : rep.states)
      if (!satisfies(sys, m)) {
        rep.invariants_hold = false;
        break;
      }
  }

  if (rep.bound_hit) return rep;  // verdicts stay unknown

  int ncomp = 0;
  const auto comp = scc_of(adj, n, ncomp);

  std::vector<char> bottom(ncomp, 1);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v])
      if (comp[w] != comp[v]) bottom[comp[v]] = 0;

  int bottoms = 0;
  for (int c = 0; c < ncomp; ++c) bottoms += bottom[c];
  rep.is_home_state = (bottoms == 1) && bottom[comp[0]];

  bool live = true;
  for (int c = 0; c < ncomp && live; ++c) {
    if (!bottom[c]) continue;
    std::vector<char> can(nt, 0);
    for (int v = 0; v < n; ++v)
      if (comp[v] == c)
        for (int t : fired[v]) can[t] = 1;
    for (int t = 0; t < nt; ++t)
      if (!can[t]) live = false;
  }
  rep.is_live = live;
  return rep;
}

}  // namespace semiflow
