#pragma once

// Additive subgroups of the degree-bounded polynomials R[x]_{<=D}, kept in
// echelon form: level n holds strong generators of degree exactly n, and the
// leading coefficients of the level form a subgroup L_n of (R,+) with one
// representative polynomial per member. Every member of the subgroup is
// rep_D[l_D] + ... + rep_0[l_0] for unique l_n in L_n.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "oreqb/ore_poly.hpp"

namespace oreqb {

using CoeffVec = std::vector<Elem>;

class PolySubgroup {
 public:
  PolySubgroup(RingPtr ring, std::size_t max_degree);

  std::size_t max_degree() const noexcept { return levels_.size() - 1; }
  const FiniteRing& ring() const noexcept { return *ring_; }

  /// Adds f (at most max_degree+1 coefficients) and closes the structure.
  /// Returns the strong generators appended by this call.
  std::vector<CoeffVec> insert(std::span<const Elem> f);
  bool contains(std::span<const Elem> f) const;

  /// Strong generators of every level, highest degree first.
  std::vector<CoeffVec> strong_generators() const;
  /// Leading-coefficient subgroup of level n as a membership vector.
  RingSubset leading_coefficients(std::size_t n) const;
  /// Union of all leading-coefficient subgroups (0 included).
  RingSubset all_leading_coefficients() const;
  /// Product of the level sizes.
  long double size() const;

 private:
  struct Level {
    std::vector<CoeffVec> gens;
    std::vector<std::int32_t> rep_of;  // by lead index, -1 if absent
    std::vector<CoeffVec> reps;
  };

  CoeffVec pad(std::span<const Elem> f) const;
  /// Reduces f in place; returns the level of the first unmatched leading
  /// coefficient, or -1 when f reduces to zero.
  std::int64_t sift(CoeffVec& f) const;
  void rebuild(std::size_t n, std::vector<CoeffVec>& pending);

  RingPtr ring_;
  std::vector<Level> levels_;
};

/// The two-sided ideal of R[x;sigma,delta] generated by `gens`, truncated to
/// degree <= max_degree: closure of the generators under left and right
/// multiplication by monomials r*x^k (r over additive generators of R),
/// keeping products that fit the bound. A lower approximation of I.
PolySubgroup ideal_slice(const ContextPtr& ctx, std::span<const OrePoly> gens,
                         std::size_t max_degree);

/// Visits every lambda of degree <= max_degree with g*lambda = 0 for all
/// constraints g, by backtracking from the top coefficient down. The
/// coefficient of g*lambda at degree deg(g)+k depends only on b_j, j >= k.
/// Returns the number of solutions; `visit` returning false stops early.
/// Throws BudgetExceeded when the number of explored nodes passes `budget`.
std::uint64_t enumerate_right_annihilator(const ContextPtr& ctx,
                                          std::span<const CoeffVec> constraints,
                                          std::size_t max_degree,
                                          const std::function<bool(const CoeffVec&)>& visit,
                                          std::uint64_t budget = 200'000'000);

}  // namespace oreqb
