#include "semiflow/vec.hpp"

#include <stdexcept>

namespace semiflow {

bool is_semiflow(const PetriNet& net, const IntVec& v) {
  if (static_cast<int>(v.size()) != net.place_count())
    throw std::invalid_argument("vector length does not match net");
  for (const auto& x : v)
    if (x < 0) throw std::invalid_argument("negative entry in vector");
  for (int t = 0; t < net.transition_count(); ++t) {
    Int lhs(0), rhs(0);
    for (int p = 0; p < net.place_count(); ++p) {
      lhs += v[p] * net.post[p][t];
      rhs += v[p] * net.pre[p][t];
    }
    if (lhs != rhs) return false;
  }
  return true;
}

Support support(const IntVec& v) { return Support::of(v); }

Canonical canonicalize(const Semiflow& f) {
  Int g(0);
  for (const auto& x : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0)
    throw std::invalid_argument("cannot canonicalize the zero vector");
  Canonical out{f, g};
  if (g != 1)
    for (auto& x : out.vec) x /= g;
  return out;
}

bool leq(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("vector lengths differ");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

Int dot(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("vector lengths differ");
  Int s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

IntVec add(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("vector lengths differ");
  IntVec out(u);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] += v[i];
  return out;
}

IntVec sub(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("vector lengths differ");
  IntVec out(u);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= v[i];
  return out;
}

IntVec scale(const Int& k, const IntVec& v) {
  IntVec out(v);
  for (auto& x : out) x *= k;
  return out;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool lex_less(const IntVec& u, const IntVec& v) {
  for (std::size_t i = 0; i < u.size() && i < v.size(); ++i) {
    if (u[i] != v[i]) return u[i] < v[i];
  }
  return u.size() < v.size();
}

}  // namespace semiflow
