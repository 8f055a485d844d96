#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "semiflow/farkas.hpp"
#include "semiflow/hilbert.hpp"
#include "semiflow/net.hpp"
#include "semiflow/support.hpp"
#include "semiflow/vec.hpp"

namespace semiflow {

enum class Domain { nat, qpos, q };

Domain parse_domain(const std::string& name);  // "nat" | "qplus" | "q"
std::string domain_name(Domain d);

// Caches the expensive per-net computations so the classifiers share them.
// Immutable after construction; safe to share across threads.
class AnalysisContext {
 public:
  explicit AnalysisContext(PetriNet net);

  const PetriNet& net() const { return net_; }
  const FundamentalSet& fundamental() const;
  const HilbertBasis& hilbert() const;
  int rank() const;  // dimension of the span of all semiflows

 private:
  PetriNet net_;
  mutable std::once_flag fs_once_, hb_once_, rank_once_;
  mutable std::optional<FundamentalSet> fs_;
  mutable std::optional<HilbertBasis> hb_;
  mutable int rank_ = -1;
};

// gcd of the nonzero coordinates is 1. Throws on the zero vector.
bool is_canonical(const Semiflow& f);

// No other nonzero semiflow lies componentwise below f.
// Throws when f is not a semiflow of the context's net.
bool is_minimal(const AnalysisContext& ctx, const Semiflow& f);

// The support of f is inclusion-minimal among semiflow supports.
bool has_minimal_support(const AnalysisContext& ctx, const Semiflow& f);

struct ClassifyOptions {
  // Cross-check minimality by the definitional remove-one test and
  // report any disagreement with the cardinality-based verdict.
  bool paranoid = false;
};

// Verdict on a candidate generating set over one coefficient domain.
// least mirrors minimal: the two notions coincide for semiflow sets.
struct GeneratingSetReport {
  Domain domain = Domain::nat;
  bool is_generating = false;
  bool is_minimal_gs = false;
  bool is_least_gs = false;
  std::optional<Semiflow> not_generated;  // witness when not generating
  std::optional<int> removable;  // a redundant member when not minimal
  std::vector<int> redundant;    // paranoid: every removable member
  bool paranoid_disagreement = false;
};

GeneratingSetReport classify_generating_set(const AnalysisContext& ctx,
                                            const std::vector<Semiflow>& gens,
                                            Domain domain,
                                            const ClassifyOptions& opts = {});

// Distinct canonical semiflows with support exactly I, at most `count` of
// them. A minimal support carries exactly one; any larger semiflow support
// carries infinitely many, generated as canonicalize(f + k*e) with f a
// semiflow of support I and e a fundamental member with support inside I.
// Throws when I is not the support of any semiflow.
std::vector<Semiflow> canonical_witnesses(const AnalysisContext& ctx,
                                          const Support& I, int count);

}  // namespace semiflow
