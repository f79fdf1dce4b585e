#include "oreqb/poly_subgroup.hpp"

#include <deque>

#include "oreqb/error.hpp"

namespace oreqb {

namespace {

std::int64_t top(const FiniteRing& R, std::span<const Elem> f) {
  for (std::size_t k = f.size(); k-- > 0;)
    if (!R.is_zero(f[k])) return static_cast<std::int64_t>(k);
  return -1;
}

void add_into(const FiniteRing& R, CoeffVec& acc, std::span<const Elem> f) {
  for (std::size_t k = 0; k < f.size(); ++k) acc[k] = R.add(acc[k], f[k]);
}

void sub_into(const FiniteRing& R, CoeffVec& acc, std::span<const Elem> f) {
  for (std::size_t k = 0; k < f.size(); ++k) acc[k] = R.sub(acc[k], f[k]);
}

}  // namespace

PolySubgroup::PolySubgroup(RingPtr ring, std::size_t max_degree) : ring_(std::move(ring)) {
  levels_.resize(max_degree + 1);
  for (auto& lv : levels_) {
    lv.rep_of.assign(ring_->order(), -1);
    lv.rep_of[ring_->zero().index] = 0;
    lv.reps.push_back(CoeffVec(max_degree + 1, ring_->zero()));
  }
}

CoeffVec PolySubgroup::pad(std::span<const Elem> f) const {
  const FiniteRing& R = *ring_;
  CoeffVec out(levels_.size(), R.zero());
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k >= out.size()) {
      if (!R.is_zero(f[k])) throw Error("polynomial exceeds the subgroup degree bound");
      continue;
    }
    out[k] = f[k];
  }
  return out;
}

std::int64_t PolySubgroup::sift(CoeffVec& f) const {
  const FiniteRing& R = *ring_;
  for (std::size_t n = levels_.size(); n-- > 0;) {
    if (R.is_zero(f[n])) continue;
    const std::int32_t r = levels_[n].rep_of[f[n].index];
    if (r < 0) return static_cast<std::int64_t>(n);
    sub_into(R, f, levels_[n].reps[static_cast<std::size_t>(r)]);
  }
  return -1;
}

void PolySubgroup::rebuild(std::size_t n, std::vector<CoeffVec>& pending) {
  const FiniteRing& R = *ring_;
  Level& lv = levels_[n];
  lv.rep_of.assign(R.order(), -1);
  CoeffVec zero(levels_.size(), R.zero());
  lv.reps.assign(1, zero);
  lv.rep_of[R.zero().index] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& g : lv.gens) {
      CoeffVec cand = lv.reps[cur];
      add_into(R, cand, g);
      const Elem lead = cand[n];
      const std::int32_t existing = lv.rep_of[lead.index];
      if (existing < 0) {
        lv.rep_of[lead.index] = static_cast<std::int32_t>(lv.reps.size());
        lv.reps.push_back(std::move(cand));
        queue.push_back(lv.reps.size() - 1);
      } else {
        sub_into(R, cand, lv.reps[static_cast<std::size_t>(existing)]);
        if (top(R, cand) >= 0) pending.push_back(std::move(cand));
      }
    }
  }
}

std::vector<CoeffVec> PolySubgroup::insert(std::span<const Elem> f) {
  std::vector<CoeffVec> added;
  std::vector<CoeffVec> pending{pad(f)};
  while (!pending.empty()) {
    CoeffVec g = std::move(pending.back());
    pending.pop_back();
    const std::int64_t level = sift(g);
    if (level < 0) continue;
    const auto n = static_cast<std::size_t>(level);
    levels_[n].gens.push_back(g);
    added.push_back(std::move(g));
    rebuild(n, pending);
  }
  return added;
}

bool PolySubgroup::contains(std::span<const Elem> f) const {
  CoeffVec g = pad(f);
  return sift(g) < 0;
}

std::vector<CoeffVec> PolySubgroup::strong_generators() const {
  std::vector<CoeffVec> out;
  for (std::size_t n = levels_.size(); n-- > 0;)
    out.insert(out.end(), levels_[n].gens.begin(), levels_[n].gens.end());
  return out;
}

RingSubset PolySubgroup::leading_coefficients(std::size_t n) const {
  std::vector<bool> members(ring_->order(), false);
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = levels_.at(n).rep_of[i] >= 0;
  return RingSubset(ring_, std::move(members));
}

RingSubset PolySubgroup::all_leading_coefficients() const {
  std::vector<bool> members(ring_->order(), false);
  for (const auto& lv : levels_)
    for (std::size_t i = 0; i < members.size(); ++i)
      if (lv.rep_of[i] >= 0) members[i] = true;
  return RingSubset(ring_, std::move(members));
}

long double PolySubgroup::size() const {
  long double s = 1;
  for (const auto& lv : levels_) s *= static_cast<long double>(lv.reps.size());
  return s;
}

PolySubgroup ideal_slice(const ContextPtr& ctx, std::span<const OrePoly> gens,
                         std::size_t max_degree) {
  PolySubgroup slice(ctx->ring_ptr(), max_degree);
  std::deque<CoeffVec> work;
  for (const auto& g : gens) {
    if (g.context() != ctx) throw ContextMismatch();
    if (!g.is_zero() && g.degree().value() > max_degree)
      throw Error("ideal generator exceeds the degree bound");
    for (auto& s : slice.insert(g.coeffs())) work.push_back(std::move(s));
  }
  std::vector<OrePoly> monomials;
  for (Elem r : additive_generators(ctx->ring_ptr()))
    for (std::size_t k = 0; k <= max_degree; ++k)
      monomials.push_back(OrePoly::monomial(ctx, r, k));

  while (!work.empty()) {
    const OrePoly g(ctx, std::move(work.front()));
    work.pop_front();
    for (const auto& m : monomials) {
      for (const OrePoly& prod : {ore_mul(m, g), ore_mul(g, m)}) {
        if (prod.is_zero() || prod.degree().value() > max_degree) continue;
        for (auto& s : slice.insert(prod.coeffs())) work.push_back(std::move(s));
      }
    }
  }
  return slice;
}

std::uint64_t enumerate_right_annihilator(const ContextPtr& ctx,
                                          std::span<const CoeffVec> constraints,
                                          std::size_t max_degree,
                                          const std::function<bool(const CoeffVec&)>& visit,
                                          std::uint64_t budget) {
  const FiniteRing& R = ctx->ring();
  struct Constraint {
    CoeffVec a;
    std::size_t deg;
  };
  std::vector<Constraint> cons;
  std::size_t max_g = 0;
  for (const auto& g : constraints) {
    const std::int64_t d = top(R, g);
    if (d < 0) continue;
    cons.push_back({CoeffVec(g.begin(), g.begin() + d + 1), static_cast<std::size_t>(d)});
    max_g = std::max(max_g, static_cast<std::size_t>(d));
  }
  const auto table = ctx->word_table(max_g);
  const std::size_t D = max_degree;
  CoeffVec b(D + 1, R.zero());

  // Coefficient of x^m in g*b.
  auto coefficient = [&](const Constraint& c, std::size_t m) {
    Elem acc = R.zero();
    for (std::size_t i = 0; i <= c.deg; ++i) {
      const Elem ai = c.a[i];
      if (R.is_zero(ai)) continue;
      for (std::size_t k = 0; k <= i && k <= m; ++k) {
        const std::size_t j = m - k;
        if (j > D) continue;
        acc = R.add(acc, R.mul(ai, table.f(k, i)[b[j].index]));
      }
    }
    return acc;
  };

  std::uint64_t nodes = 0;
  std::uint64_t count = 0;
  bool stop = false;
  const auto n = static_cast<std::uint32_t>(R.order());

  std::function<void(std::size_t)> descend = [&](std::size_t t) {
    for (std::uint32_t v = 0; v < n && !stop; ++v) {
      if (++nodes > budget)
        throw BudgetExceeded(static_cast<long double>(nodes), budget);
      b[t] = Elem{v};
      bool ok = true;
      for (const auto& c : cons) {
        if (!R.is_zero(coefficient(c, c.deg + t))) {
          ok = false;
          break;
        }
        if (t == 0) {
          for (std::size_t m = 0; m < c.deg && ok; ++m)
            if (!R.is_zero(coefficient(c, m))) ok = false;
          if (!ok) break;
        }
      }
      if (!ok) continue;
      if (t == 0) {
        ++count;
        if (!visit(b)) stop = true;
      } else {
        descend(t - 1);
      }
    }
    b[t] = R.zero();
  };
  descend(D);
  return count;
}

}  // namespace oreqb
