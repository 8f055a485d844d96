#include "semiflow/rational.hpp"

#include <algorithm>
#include <stdexcept>

#include "semiflow/vec.hpp"

namespace semiflow {

namespace {

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

bool rat_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::vector<int> extract_q_basis_indices(const std::vector<Semiflow>& gens) {
  std::vector<int> selected;
  std::vector<RatVec> echelon;   // rows normalized to pivot 1
  std::vector<int> pivot;        // pivot column per echelon row

  for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
    RatVec r = to_rat(gens[gi]);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const Rat c = r[pivot[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * echelon[k][j];
    }
    if (rat_zero(r)) continue;
    std::size_t pc = 0;
    while (r[pc] == 0) ++pc;
    const Rat inv = r[pc];
    for (auto& x : r) x /= inv;
    echelon.push_back(std::move(r));
    pivot.push_back(static_cast<int>(pc));
    selected.push_back(gi);
  }
  return selected;
}

std::vector<Semiflow> extract_q_basis(const std::vector<Semiflow>& gens) {
  std::vector<Semiflow> out;
  for (int i : extract_q_basis_indices(gens)) out.push_back(gens[i]);
  return out;
}

int q_rank(const std::vector<Semiflow>& gens) {
  return static_cast<int>(extract_q_basis_indices(gens).size());
}

std::optional<RatVec> solve_q(const Semiflow& target,
                              const std::vector<Semiflow>& gens) {
  const std::size_t d = target.size();
  const std::size_t n = gens.size();
  for (const auto& g : gens)
    if (g.size() != d) throw std::invalid_argument("vector lengths differ");

  // augmented system: columns are the generators, last column the target
  std::vector<RatVec> m(d, RatVec(n + 1));
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t i = 0; i < n; ++i) m[p][i] = Rat(gens[i][p]);
    m[p][n] = Rat(target[p]);
  }

  std::vector<int> pivot_col;  // per pivot row, in order
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < d; ++col) {
    std::size_t pr = rank;
    while (pr < d && m[pr][col] == 0) ++pr;
    if (pr == d) continue;
    std::swap(m[rank], m[pr]);
    const Rat inv = m[rank][col];
    for (auto& x : m[rank]) x /= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rat c = m[r][col];
      for (std::size_t j = col; j <= n; ++j) m[r][j] -= c * m[rank][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }

  for (std::size_t r = rank; r < d; ++r)
    if (m[r][n] != 0) return std::nullopt;

  RatVec x(n, Rat(0));  // free variables stay zero
  for (std::size_t k = 0; k < rank; ++k) x[pivot_col[k]] = m[k][n];
  return x;
}

std::optional<RatVec> in_cone(const Semiflow& target,
                              const std::vector<Semiflow>& gens) {
  const std::size_t d = target.size();
  const std::size_t n = gens.size();
  for (const auto& g : gens)
    if (g.size() != d) throw std::invalid_argument("vector lengths differ");

  if (n == 0) {
    if (is_zero(target)) return RatVec{};
    return std::nullopt;
  }

  // phase-1 simplex: minimize the sum of one artificial variable per row.
  // columns 0..n-1 structural, n..n+d-1 artificial, last column rhs.
  const std::size_t cols = n + d + 1;
  std::vector<RatVec> tab(d, RatVec(cols, Rat(0)));
  std::vector<int> basis(d);
  for (std::size_t p = 0; p < d; ++p) {
    const bool flip = target[p] < 0;
    for (std::size_t i = 0; i < n; ++i) {
      tab[p][i] = Rat(gens[i][p]);
      if (flip) tab[p][i] = -tab[p][i];
    }
    tab[p][n + p] = 1;
    tab[p][cols - 1] = flip ? Rat(-target[p]) : Rat(target[p]);
    basis[p] = static_cast<int>(n + p);
  }

  // objective row holds reduced costs; artificial columns start basic
  RatVec z(cols, Rat(0));
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t j = 0; j < cols; ++j)
      if (j < n || j == cols - 1) z[j] -= tab[p][j];

  std::vector<char> dead(n + d, 0);  // artificials never re-enter
  while (true) {
    int enter = -1;  // Bland: lowest eligible index
    for (std::size_t j = 0; j < n + d; ++j) {
      if (dead[j]) continue;
      if (z[j] < 0) {
        enter = static_cast<int>(j);
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Rat best;
    for (std::size_t r = 0; r < d; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rat ratio = tab[r][cols - 1] / tab[r][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        leave = static_cast<int>(r);
        best = ratio;
      }
    }
    if (leave < 0) return std::nullopt;  // unbounded cannot happen here

    const int leaving_var = basis[leave];
    const Rat piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (std::size_t r = 0; r < d; ++r) {
      if (static_cast<int>(r) == leave || tab[r][enter] == 0) continue;
      const Rat c = tab[r][enter];
      for (std::size_t j = 0; j < cols; ++j) tab[r][j] -= c * tab[leave][j];
    }
    if (z[enter] != 0) {
      const Rat c = z[enter];
      for (std::size_t j = 0; j < cols; ++j) z[j] -= c * tab[leave][j];
    }
    basis[leave] = enter;
    if (leaving_var >= static_cast<int>(n)) dead[leaving_var] = 1;
  }

  // optimum of the artificial objective: -z value lives in the rhs cell
  if (z[cols - 1] != 0) return std::nullopt;

  RatVec x(n, Rat(0));
  for (std::size_t r = 0; r < d; ++r)
    if (basis[r] < static_cast<int>(n)) x[basis[r]] = tab[r][cols - 1];
  return x;
}

std::optional<SupportCoverDecomposition> support_cover_decompose(
    const Semiflow& target, const std::vector<Semiflow>& gens,
    const std::vector<Support>& gen_supports) {
  if (gens.size() != gen_supports.size())
    throw std::invalid_argument("generator and support lists differ in size");
  const Support tsupp = Support::of(target);

  SupportCoverDecomposition out;
  std::vector<Semiflow> chosen;
  Support covered(tsupp.dim());
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    if (!gen_supports[i].subset_of(tsupp)) continue;
    out.selected.push_back(i);
    chosen.push_back(gens[i]);
    covered = covered.union_with(gen_supports[i]);
  }
  auto coeffs = in_cone(target, chosen);
  if (!coeffs) return std::nullopt;
  out.coeffs = std::move(*coeffs);
  out.union_covers = covered == tsupp;
  return out;
}

}  // namespace semiflow
