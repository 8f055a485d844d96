#include "semiflow/farkas.hpp"

#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <utility>

#include "semiflow/vec.hpp"

namespace semiflow {

namespace {

// Tableau row [b | a]: a = b^T (Post - Pre) holds throughout elimination.
struct Row {
  IntVec b;  // place coefficients, length d
  IntVec a;  // remaining transition sums, length |T|
};

bool row_equal(const Row& x, const Row& y) { return x.b == y.b && x.a == y.a; }

void gcd_reduce(Row& r) {
  Int g(0);
  for (const auto& x : r.b) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  for (const auto& x : r.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g <= 1) return;
  for (auto& x : r.b) x /= g;
  for (auto& x : r.a) x /= g;
}

Row combine(const Row& pos, const Row& neg, int col) {
  const Int& p = pos.a[col];
  Int n = -neg.a[col];
  Row out;
  out.b.resize(pos.b.size());
  out.a.resize(pos.a.size());
  for (std::size_t i = 0; i < out.b.size(); ++i)
    out.b[i] = n * pos.b[i] + p * neg.b[i];
  for (std::size_t i = 0; i < out.a.size(); ++i)
    out.a[i] = n * pos.a[i] + p * neg.a[i];
  gcd_reduce(out);
  return out;
}

// Keep rows that are not duplicates of an earlier row and whose support is
// not a strict superset of any other row's support. The predicate depends
// only on the row multiset, so evaluation order cannot change the outcome.
std::vector<char> mark_killed(const std::vector<Row>& rows,
                              const std::vector<Support>& supp,
                              bool parallel) {
  const int n = static_cast<int>(rows.size());
  std::vector<char> killed(n, 0);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n && !killed[i]; ++k) {
      if (k == i) continue;
      if (supp[k].strict_subset_of(supp[i]))
        killed[i] = 1;
      else if (k < i && row_equal(rows[k], rows[i]))
        killed[i] = 1;
    }
  }
  return killed;
}

void prune(std::vector<Row>& rows, bool parallel) {
  std::vector<Support> supp;
  supp.reserve(rows.size());
  for (const auto& r : rows) supp.push_back(Support::of(r.b));
  auto killed = mark_killed(rows, supp, parallel);
  std::vector<Row> kept;
  kept.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!killed[i]) kept.push_back(std::move(rows[i]));
  rows = std::move(kept);
}

int pick_column(const std::vector<Row>& rows, const std::vector<char>& done,
                int t, bool heuristic) {
  if (!heuristic) {
    for (int j = 0; j < t; ++j)
      if (!done[j]) return j;
    return -1;
  }
  int best = -1;
  std::size_t best_cost = 0;
  for (int j = 0; j < t; ++j) {
    if (done[j]) continue;
    std::size_t pos = 0, neg = 0;
    for (const auto& r : rows) {
      if (r.a[j] > 0) ++pos;
      if (r.a[j] < 0) ++neg;
    }
    std::size_t cost = pos * neg;
    if (best < 0 || cost < best_cost) best = j, best_cost = cost;
  }
  return best;
}

FundamentalSet run_farkas(const PetriNet& net, const FarkasOptions& opts,
                          bool parallel) {
  const int d = net.place_count();
  const int t = net.transition_count();

  std::vector<Row> rows(d);
  for (int p = 0; p < d; ++p) {
    rows[p].b.assign(d, Int(0));
    rows[p].b[p] = 1;
    rows[p].a = net.incidence_row(p);
  }

  std::vector<char> done(t, 0);
  for (int step = 0; step < t; ++step) {
    const int col = pick_column(rows, done, t, opts.pair_heuristic);
    done[col] = 1;

    std::vector<int> pos, neg, zero;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      const auto sgn = mpz_sgn(rows[i].a[col].get_mpz_t());
      if (sgn > 0)
        pos.push_back(i);
      else if (sgn < 0)
        neg.push_back(i);
      else
        zero.push_back(i);
    }

    const std::size_t pairs = pos.size() * neg.size();
    if (opts.max_rows && zero.size() + pairs > opts.max_rows)
      throw resource_error("tableau row cap exceeded during elimination");

    std::vector<Row> next(zero.size() + pairs);
    for (std::size_t i = 0; i < zero.size(); ++i)
      next[i] = std::move(rows[zero[i]]);

    const auto base = zero.size();
    const auto nneg = neg.size();
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(pairs); ++k) {
      const auto i = static_cast<std::size_t>(k) / nneg;
      const auto j = static_cast<std::size_t>(k) % nneg;
      next[base + k] = combine(rows[pos[i]], rows[neg[j]], col);
    }

    rows = std::move(next);
    prune(rows, parallel);
  }

  FundamentalSet fs;
  fs.members.reserve(rows.size());
  for (auto& r : rows) fs.members.push_back(std::move(r.b));
  std::sort(fs.members.begin(), fs.members.end(), lex_less);
  fs.supports.reserve(fs.members.size());
  for (const auto& m : fs.members) fs.supports.push_back(Support::of(m));
  return fs;
}

}  // namespace

FundamentalSet fundamental_set(const PetriNet& net, const FarkasOptions& opts) {
  return run_farkas(net, opts, opts.parallel);
}

FundamentalSet fundamental_set_serial(const PetriNet& net,
                                      const FarkasOptions& opts) {
  return run_farkas(net, opts, false);
}

std::vector<Support> minimal_supports(const PetriNet& net,
                                      const FarkasOptions& opts) {
  auto fs = fundamental_set(net, opts);
  std::sort(fs.supports.begin(), fs.supports.end());
  return std::move(fs.supports);
}

}  // namespace semiflow
