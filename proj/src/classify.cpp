#include "semiflow/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "semiflow/natdec.hpp"
#include "semiflow/rational.hpp"

namespace semiflow {

Domain parse_domain(const std::string& name) {
  if (name == "nat") return Domain::nat;
  if (name == "qplus") return Domain::qpos;
  if (name == "q") return Domain::q;
  throw std::invalid_argument("unknown domain: " + name);
}

std::string domain_name(Domain d) {
  switch (d) {
    case Domain::nat: return "nat";
    case Domain::qpos: return "qplus";
    case Domain::q: return "q";
  }
  return "?";
}

AnalysisContext::AnalysisContext(PetriNet net) : net_(std::move(net)) {}

const FundamentalSet& AnalysisContext::fundamental() const {
  std::call_once(fs_once_, [this] { fs_ = fundamental_set(net_); });
  return *fs_;
}

const HilbertBasis& AnalysisContext::hilbert() const {
  std::call_once(hb_once_, [this] { hb_ = minimal_semiflows(net_); });
  return *hb_;
}

int AnalysisContext::rank() const {
  std::call_once(rank_once_, [this] { rank_ = q_rank(fundamental().members); });
  return rank_;
}

bool is_canonical(const Semiflow& f) { return canonicalize(f).gcd == 1; }

namespace {

void require_semiflow(const AnalysisContext& ctx, const Semiflow& f) {
  if (!is_semiflow(ctx.net(), f))
    throw std::invalid_argument("not a semiflow: " + to_string(f));
  if (is_zero(f)) throw std::invalid_argument("zero vector");
}

}  // namespace

bool is_minimal(const AnalysisContext& ctx, const Semiflow& f) {
  require_semiflow(ctx, f);
  return ctx.hilbert().contains(f);
}

bool has_minimal_support(const AnalysisContext& ctx, const Semiflow& f) {
  require_semiflow(ctx, f);
  const Support s = Support::of(f);
  const auto& supports = ctx.fundamental().supports;
  return std::find(supports.begin(), supports.end(), s) != supports.end();
}

namespace {

// Membership test per domain: does `gens` generate every semiflow?
// Returns the first uncovered certificate member when it does not.
std::optional<Semiflow> generation_gap(const AnalysisContext& ctx,
                                       const std::vector<Semiflow>& gens,
                                       Domain domain) {
  switch (domain) {
    case Domain::nat:
      for (const auto& h : ctx.hilbert().members)
        if (!nat_decomposable(h, gens)) return h;
      return std::nullopt;
    case Domain::qpos:
      for (const auto& m : ctx.fundamental().members)
        if (!in_cone(m, gens)) return m;
      return std::nullopt;
    case Domain::q:
      for (const auto& m : ctx.fundamental().members)
        if (!solve_q(m, gens)) return m;
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Semiflow> erase_at(const std::vector<Semiflow>& gens, int idx) {
  std::vector<Semiflow> out;
  out.reserve(gens.size() - 1);
  for (int i = 0; i < static_cast<int>(gens.size()); ++i)
    if (i != idx) out.push_back(gens[i]);
  return out;
}

}  // namespace

GeneratingSetReport classify_generating_set(const AnalysisContext& ctx,
                                            const std::vector<Semiflow>& gens,
                                            Domain domain,
                                            const ClassifyOptions& opts) {
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    if (!is_semiflow(ctx.net(), gens[i]))
      throw std::invalid_argument("member " + std::to_string(i) +
                                  " is not a semiflow");
    if (is_zero(gens[i]))
      throw std::invalid_argument("member " + std::to_string(i) +
                                  " is the zero vector");
  }

  GeneratingSetReport rep;
  rep.domain = domain;

  // verdicts treat the input as a set: duplicates are trivially redundant
  std::vector<Semiflow> distinct;
  std::optional<int> duplicate;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    if (std::find(distinct.begin(), distinct.end(), gens[i]) !=
        distinct.end()) {
      if (!duplicate) duplicate = i;
      continue;
    }
    distinct.push_back(gens[i]);
  }

  rep.not_generated = generation_gap(ctx, distinct, domain);
  rep.is_generating = !rep.not_generated.has_value();

  if (rep.is_generating) {
    bool cardinality_minimal = false;
    switch (domain) {
      case Domain::nat: {
        // the set of minimal semiflows is the unique minimal generating set
        auto sorted = distinct;
        std::sort(sorted.begin(), sorted.end(), lex_less);
        cardinality_minimal = sorted == ctx.hilbert().members;
        break;
      }
      case Domain::qpos:
        cardinality_minimal =
            distinct.size() == ctx.fundamental().members.size();
        break;
      case Domain::q:
        cardinality_minimal = static_cast<int>(distinct.size()) == ctx.rank();
        break;
    }
    rep.is_minimal_gs = cardinality_minimal && !duplicate;
    rep.is_least_gs = rep.is_minimal_gs;

    if (!rep.is_minimal_gs) {
      if (duplicate) {
        rep.removable = duplicate;
      } else {
        for (int i = 0; i < static_cast<int>(gens.size()) && !rep.removable;
             ++i) {
          switch (domain) {
            case Domain::nat:
              if (!ctx.hilbert().contains(gens[i])) rep.removable = i;
              break;
            case Domain::qpos:
              if (in_cone(gens[i], erase_at(gens, i))) rep.removable = i;
              break;
            case Domain::q:
              if (solve_q(gens[i], erase_at(gens, i))) rep.removable = i;
              break;
          }
        }
      }
    }
  }

  if (opts.paranoid) {
    // definitional cross-check: minimal means no member is removable
    bool minimal_def = rep.is_generating;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
      if (!rep.is_generating) break;
      if (!generation_gap(ctx, erase_at(gens, i), domain)) {
        rep.redundant.push_back(i);
        minimal_def = false;
      }
    }
    if (rep.is_generating && minimal_def != rep.is_minimal_gs)
      rep.paranoid_disagreement = true;
  }

  return rep;
}

std::vector<Semiflow> canonical_witnesses(const AnalysisContext& ctx,
                                          const Support& I, int count) {
  if (count <= 0) return {};
  const auto& fs = ctx.fundamental();

  std::vector<int> inside;
  for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
    if (fs.supports[i] == I) return {fs.members[i]};  // unique on minimal
    if (fs.supports[i].subset_of(I)) inside.push_back(i);
  }

  // a set is a semiflow support exactly when the minimal supports inside
  // it cover it; their sum is then a semiflow with that support
  const int d = ctx.net().place_count();
  Semiflow f(d, Int(0));
  Support covered(d);
  for (int i : inside) {
    f = add(f, fs.members[i]);
    covered = covered.union_with(fs.supports[i]);
  }
  if (inside.empty() || covered != I)
    throw std::invalid_argument("not a semiflow support");

  const Semiflow& e = fs.members[inside.front()];
  std::vector<Semiflow> out;
  Semiflow shifted = f;
  while (static_cast<int>(out.size()) < count) {
    out.push_back(canonicalize(shifted).vec);
    shifted = add(shifted, e);
  }
  return out;
}

}  // namespace semiflow
