#include "semiflow/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "semiflow/vec.hpp"

namespace semiflow {

namespace {

void check_box(const PetriNet& net, unsigned bound,
               const OracleOptions& opts) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  Int cells;
  mpz_ui_pow_ui(cells.get_mpz_t(), bound + 1, net.place_count());
  if (cells > Int(static_cast<unsigned long>(opts.box_cap)))
    throw resource_error("enumeration box too large");
}

// Enumerates coordinates p..d-1 with the defect of the fixed prefix in
// `defect`; leaves are emitted in lexicographic order.
void scan(const PetriNet& net, const std::vector<IntVec>& unit_defect,
          unsigned bound, int p, IntVec& v, IntVec& defect,
          std::vector<Semiflow>& out) {
  const int d = net.place_count();
  if (p == d) {
    if (is_zero(defect) && !is_zero(v)) out.push_back(v);
    return;
  }
  for (unsigned val = 0; val <= bound; ++val) {
    scan(net, unit_defect, bound, p + 1, v, defect, out);
    v[p] += 1;
    for (std::size_t t = 0; t < defect.size(); ++t)
      defect[t] += unit_defect[p][t];
  }
  // undo the bound+1 increments so the caller's prefix is intact
  v[p] = 0;
  for (std::size_t t = 0; t < defect.size(); ++t)
    defect[t] -= Int(bound + 1) * unit_defect[p][t];
}

bool touches_boundary(const std::vector<Semiflow>& members, unsigned bound) {
  const Int b(bound);
  for (const auto& m : members)
    for (const auto& x : m)
      if (x == b) return true;
  return false;
}

SemiflowList run_scan(const PetriNet& net, unsigned bound,
                      const OracleOptions& opts, bool parallel) {
  check_box(net, bound, opts);
  const int d = net.place_count();
  std::vector<IntVec> unit_defect(d);
  for (int p = 0; p < d; ++p) unit_defect[p] = net.incidence_row(p);

  // Split on the first coordinate; concatenation in slice order keeps the
  // overall lexicographic order identical to a single serial scan.
  std::vector<std::vector<Semiflow>> slices(bound + 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int top = 0; top <= static_cast<int>(bound); ++top) {
    IntVec v(d, Int(0));
    v[0] = top;
    IntVec defect(net.transition_count(), Int(0));
    for (std::size_t t = 0; t < defect.size(); ++t)
      defect[t] = Int(top) * unit_defect[0][t];
    if (d == 1) {
      if (is_zero(defect) && !is_zero(v)) slices[top].push_back(v);
    } else {
      scan(net, unit_defect, bound, 1, v, defect, slices[top]);
    }
  }

  SemiflowList out;
  for (auto& s : slices)
    for (auto& m : s) out.members.push_back(std::move(m));
  out.clipped = touches_boundary(out.members, bound);
  return out;
}

}  // namespace

SemiflowList brute_semiflows(const PetriNet& net, unsigned bound,
                             const OracleOptions& opts) {
  return run_scan(net, bound, opts, opts.parallel);
}

SemiflowList brute_semiflows_serial(const PetriNet& net, unsigned bound,
                                    const OracleOptions& opts) {
  return run_scan(net, bound, opts, false);
}

SemiflowList brute_minimal_semiflows(const PetriNet& net, unsigned bound,
                                     const OracleOptions& opts) {
  auto all = brute_semiflows(net, bound, opts);
  const int n = static_cast<int>(all.members.size());
  std::vector<char> keep(n, 1);
#pragma omp parallel for schedule(dynamic, 16) if (opts.parallel)
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      // any dominator of an in-box vector is itself in the box, so this
      // filter is exact: kept members are minimal among ALL semiflows
      if (leq(all.members[k], all.members[i])) {
        keep[i] = 0;
        break;
      }
    }
  }
  SemiflowList out;
  for (int i = 0; i < n; ++i)
    if (keep[i]) out.members.push_back(std::move(all.members[i]));
  out.clipped = touches_boundary(out.members, bound);
  return out;
}

SupportList brute_minimal_supports(const PetriNet& net, unsigned bound,
                                   const OracleOptions& opts) {
  auto all = brute_semiflows(net, bound, opts);
  std::vector<Support> supps;
  for (const auto& m : all.members) supps.push_back(Support::of(m));
  std::sort(supps.begin(), supps.end());
  supps.erase(std::unique(supps.begin(), supps.end()), supps.end());

  SupportList out;
  for (const auto& s : supps) {
    bool minimal = true;
    for (const auto& other : supps)
      if (other.strict_subset_of(s)) {
        minimal = false;
        break;
      }
    if (minimal) out.supports.push_back(s);
  }
  out.clipped = all.clipped;
  return out;
}

}  // namespace semiflow
