#pragma once

// Slow reference implementations used only by the tests. They read the
// ring tables and the sigma/delta image vectors and nothing else.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oreqb/expr.hpp"
#include "oreqb/maps.hpp"
#include "oreqb/ore_poly.hpp"
#include "oreqb/registry.hpp"
#include "oreqb/ring.hpp"

namespace oracle {

using oreqb::ContextPtr;
using oreqb::Elem;
using oreqb::FiniteRing;
using oreqb::OrePoly;

using Coeffs = std::vector<Elem>;

inline Coeffs trim(const FiniteRing& R, Coeffs c) {
  while (!c.empty() && R.is_zero(c.back())) c.pop_back();
  return c;
}

inline Coeffs add(const FiniteRing& R, const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), R.zero());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = R.add(out[k], a[k]);
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = R.add(out[k], b[k]);
  return trim(R, out);
}

// x * (sum c_k x^k), moving x past each coefficient once.
inline Coeffs times_x(const oreqb::OreContext& ctx, const Coeffs& c) {
  const FiniteRing& R = ctx.ring();
  Coeffs out(c.size() + 1, R.zero());
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k + 1] = R.add(out[k + 1], ctx.sigma()(c[k]));
    out[k] = R.add(out[k], ctx.delta()(c[k]));
  }
  return trim(R, out);
}

// p*q by expanding a_i x^i b_j x^j = a_i (x^i b_j) x^j, with x^i b_j
// computed one x-move at a time.
inline Coeffs naive_mul(const oreqb::OreContext& ctx, const Coeffs& p, const Coeffs& q) {
  const FiniteRing& R = ctx.ring();
  Coeffs acc;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (R.is_zero(p[i])) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (R.is_zero(q[j])) continue;
      Coeffs moved{q[j]};
      for (std::size_t s = 0; s < i; ++s) moved = times_x(ctx, moved);
      Coeffs term(moved.size() + j, R.zero());
      for (std::size_t k = 0; k < moved.size(); ++k) term[k + j] = R.mul(p[i], moved[k]);
      acc = add(R, acc, term);
    }
  }
  return trim(R, acc);
}

inline Coeffs random_coeffs(const FiniteRing& R, std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_int_distribution<std::uint64_t> pick(0, R.order() - 1);
  Coeffs c(deg(rng) + 1);
  for (auto& e : c) e = R.element(pick(rng));
  return c;
}

using Set = std::set<std::uint32_t>;

inline Set whole(const FiniteRing& R) {
  Set s;
  for (Elem e : R.elements()) s.insert(e.index);
  return s;
}

// Smallest right ideal containing `gens`: close under + and right
// multiplication by every ring element.
inline Set right_ideal(const FiniteRing& R, const Set& gens) {
  Set s = gens;
  s.insert(R.zero().index);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::uint32_t> cur(s.begin(), s.end());
    for (auto a : cur) {
      for (auto b : cur) grew |= s.insert(R.add(Elem{a}, Elem{b}).index).second;
      for (Elem r : R.elements()) grew |= s.insert(R.mul(Elem{a}, r).index).second;
    }
  }
  return s;
}

inline Set two_sided_ideal(const FiniteRing& R, const Set& gens) {
  Set s = gens;
  s.insert(R.zero().index);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::uint32_t> cur(s.begin(), s.end());
    for (auto a : cur) {
      for (auto b : cur) grew |= s.insert(R.add(Elem{a}, Elem{b}).index).second;
      for (Elem r : R.elements()) {
        grew |= s.insert(R.mul(Elem{a}, r).index).second;
        grew |= s.insert(R.mul(r, Elem{a}).index).second;
      }
    }
  }
  return s;
}

inline Set right_annihilator(const FiniteRing& R, const Set& x) {
  Set out;
  for (Elem r : R.elements()) {
    bool kills = true;
    for (auto a : x) kills = kills && R.is_zero(R.mul(Elem{a}, r));
    if (kills) out.insert(r.index);
  }
  return out;
}

inline Set left_multiple(const FiniteRing& R, Elem e) {  // Re
  Set s;
  for (Elem r : R.elements()) s.insert(R.mul(r, e).index);
  return s;
}

inline Set right_multiple(const FiniteRing& R, Elem e) {  // eR
  Set s;
  for (Elem r : R.elements()) s.insert(R.mul(e, r).index);
  return s;
}

inline bool idempotent_generated(const FiniteRing& R, const Set& s) {
  for (Elem e : R.elements())
    if (R.mul(e, e) == e && right_multiple(R, e) == s) return true;
  return false;
}

// Every right ideal, found by joining principal right ideals breadth-first.
inline std::vector<Set> all_right_ideals(const FiniteRing& R) {
  std::set<Set> found{Set{R.zero().index}};
  std::vector<Set> queue{Set{R.zero().index}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elem a : R.elements()) {
      if (queue[i].count(a.index)) continue;
      Set gens = queue[i];
      gens.insert(a.index);
      Set next = right_ideal(R, gens);
      if (found.insert(next).second) queue.push_back(next);
    }
  }
  return {found.begin(), found.end()};
}

// Quasi-Baer by definition: r(I) = eR, e idempotent, for every right ideal I.
inline bool quasi_baer(const FiniteRing& R) {
  for (const auto& I : all_right_ideals(R))
    if (!idempotent_generated(R, right_annihilator(R, I))) return false;
  return true;
}

// Baer by definition: r(X) = eR for every nonempty subset X (order <= 16).
inline bool baer(const FiniteRing& R) {
  const std::size_t n = R.order();
  std::set<Set> annihilators;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Set x;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) x.insert(static_cast<std::uint32_t>(k));
    annihilators.insert(right_annihilator(R, x));
  }
  for (const auto& a : annihilators)
    if (!idempotent_generated(R, a)) return false;
  return true;
}

inline bool reduced(const FiniteRing& R) {
  for (Elem a : R.elements())
    if (!R.is_zero(a) && R.is_zero(R.mul(a, a))) return false;
  return true;
}

inline bool rigid(const oreqb::OreContext& ctx) {
  const FiniteRing& R = ctx.ring();
  for (Elem a : R.elements())
    if (!R.is_zero(a) && R.is_zero(R.mul(a, ctx.sigma()(a)))) return false;
  return true;
}

inline bool compatible(const oreqb::OreContext& ctx) {
  const FiniteRing& R = ctx.ring();
  for (Elem a : R.elements())
    for (Elem b : R.elements()) {
      const bool z = R.is_zero(R.mul(a, b));
      if (z != R.is_zero(R.mul(a, ctx.sigma()(b)))) return false;
      if (z && !R.is_zero(R.mul(a, ctx.delta()(b)))) return false;
    }
  return true;
}

inline bool semiprime(const FiniteRing& R) {
  for (Elem a : R.elements()) {
    if (R.is_zero(a)) continue;
    bool some = false;
    for (Elem r : R.elements()) some = some || !R.is_zero(R.mul(R.mul(a, r), a));
    if (!some) return false;
  }
  return true;
}

/// Example ids with a finite context.
inline std::vector<std::string> active_examples() {
  std::vector<std::string> ids;
  for (const auto& r : oreqb::Registry::builtin().examples())
    if (!r.skipped()) ids.push_back(r.id);
  return ids;
}

inline ContextPtr context(const std::string& id) { return oreqb::Registry::builtin().instantiate(id); }

/// Registry contexts plus a few plain rings with sigma = id, delta = 0.
inline std::vector<std::pair<std::string, ContextPtr>> panel() {
  std::vector<std::pair<std::string, ContextPtr>> out;
  for (const auto& id : active_examples()) out.emplace_back(id, context(id));
  using oreqb::RingDescriptor;
  const std::vector<std::pair<std::string, RingDescriptor>> extra{
      {"Z6", RingDescriptor::modular(6)},
      {"Z4", RingDescriptor::modular(4)},
      {"M2(Z2)", RingDescriptor::full_matrix(RingDescriptor::modular(2), 2)},
      {"UT(Z2)", RingDescriptor::upper_triangular(RingDescriptor::modular(2))},
      {"Z2xZ2", RingDescriptor::product(RingDescriptor::modular(2), RingDescriptor::modular(2))},
  };
  for (const auto& [name, d] : extra) {
    oreqb::MapRule zero;
    zero.kind = oreqb::MapRule::Kind::Zero;
    out.emplace_back(name, oreqb::make_context(oreqb::construct_ring(d), oreqb::MapRule{}, zero));
  }
  return out;
}

}  // namespace oracle
