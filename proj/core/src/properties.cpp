#include "oreqb/properties.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>

#include "oreqb/error.hpp"
#include "oreqb/random.hpp"

namespace oreqb {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class T>
const T& lookup(const std::vector<std::pair<std::string, T>>& v, std::string_view role) {
  for (const auto& [k, val] : v)
    if (k == role) return val;
  throw Error("witness has no entry '" + std::string(role) + "'");
}

PropertyVerdict fails(std::string property, Witness w) {
  PropertyVerdict v;
  v.property = std::move(property);
  v.status = Status::Fails;
  v.witness = std::move(w);
  return v;
}

PropertyVerdict holds(std::string property, std::string detail) {
  PropertyVerdict v;
  v.property = std::move(property);
  v.status = Status::Holds;
  v.detail = std::move(detail);
  return v;
}

std::string count_pairs(std::size_t n) {
  return std::to_string(static_cast<std::uint64_t>(n) * n) + " pairs";
}

// Minimal additive generating set of a subgroup, greedy in index order.
std::vector<Elem> subgroup_generators(const RingSubset& s) {
  const RingPtr& R = s.ring_ptr();
  std::vector<Elem> gens;
  RingSubset span = RingSubset::of(R, std::vector<Elem>{R->zero()});
  for (Elem x : s.elements()) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = additive_closure(R, gens);
  }
  return gens;
}

// Lowest idempotent generating `target` as eR, preferring left semicentral.
std::optional<Elem> idempotent_generator(const RingPtr& R, const RingSubset& target) {
  std::optional<Elem> any;
  const std::size_t size = target.size();
  for (Elem e : target.elements()) {
    if (!is_idempotent(*R, e)) continue;
    if (principal_right_ideal(R, e).size() != size) continue;
    if (is_left_semicentral(*R, e)) return e;
    if (!any) any = e;
  }
  return any;
}

std::optional<std::pair<std::size_t, std::size_t>> coefficient_violation(
    const FiniteRing& R, const WordTableView& table, std::span<const Elem> a,
    std::span<const Elem> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (R.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (R.is_zero(b[j])) continue;
      for (std::size_t k = 0; k <= i; ++k)
        if (!R.is_zero(R.mul(a[i], table.f(k, i)[b[j].index]))) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

Witness armendariz_witness(const ContextPtr& ctx, const CoeffVec& p, const CoeffVec& q,
                           std::size_t i, std::size_t j) {
  const OrePoly mi = OrePoly::monomial(ctx, p[i], i);
  const OrePoly mj = OrePoly::monomial(ctx, q[j], j);
  const OrePoly prod = ore_mul(mi, mj);
  Witness w;
  w.add("p", OrePoly(ctx, p).coeffs())
      .add("q", OrePoly(ctx, q).coeffs())
      .add("i", static_cast<std::int64_t>(i))
      .add("j", static_cast<std::int64_t>(j))
      .add("monomial_product", prod.coeffs());
  w.note = "pq = 0 but a_i x^i * b_j x^j = " + pretty_poly(prod) + " != 0";
  return w;
}

struct FamilyMember {
  RingSubset set;
  std::vector<Elem> gens;
};

PropertyVerdict annihilator_family_check(const RingPtr& R, bool two_sided_family) {
  const auto start = Clock::now();
  const std::string property = two_sided_family ? "quasi-baer" : "baer";
  std::vector<FamilyMember> family;
  std::map<std::vector<bool>, std::size_t> seen;
  auto push = [&](RingSubset s, std::vector<Elem> gens) {
    if (seen.count(s.members())) return;
    seen.emplace(s.members(), family.size());
    family.push_back({std::move(s), std::move(gens)});
  };
  for (Elem a : R->elements()) {
    const RingSubset x = two_sided_family ? principal_right_ideal(R, a)
                                          : RingSubset::of(R, std::vector<Elem>{a});
    push(right_annihilator(x), {a});
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      RingSubset inter = family[i].set.intersect(family[j].set);
      if (seen.count(inter.members())) continue;
      std::vector<Elem> gens = family[j].gens;
      gens.insert(gens.end(), family[i].gens.begin(), family[i].gens.end());
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      push(std::move(inter), std::move(gens));
    }
  }
  std::size_t left_semicentral = 0;
  for (const auto& m : family) {
    const auto e = idempotent_generator(R, m.set);
    if (!e) {
      Witness w;
      w.add_set("annihilator", m.set.elements());
      w.add_set("generators", m.gens);
      w.note = two_sided_family ? "right annihilator of the right ideal generated by the "
                                  "generators is not eR for any idempotent e"
                                : "right annihilator of the generator set is not eR for any "
                                  "idempotent e";
      auto v = fails(property, std::move(w));
      v.elapsed_ms = ms_since(start);
      return v;
    }
    if (is_left_semicentral(*R, *e)) ++left_semicentral;
  }
  if (two_sided_family && left_semicentral != family.size())
    throw Error("annihilator of a right ideal generated by a non-left-semicentral idempotent");
  auto v = holds(property, std::to_string(family.size()) +
                               " annihilators in the intersection-closed family, each eR; " +
                               std::to_string(left_semicentral) + " with e left semicentral");
  v.elapsed_ms = ms_since(start);
  return v;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::CertifiedUpToBound: return "certified_up_to_bound";
  }
  return "?";
}

std::string_view mode_name(SearchMode::Kind k) {
  return k == SearchMode::Kind::Exhaustive ? "exhaustive" : "randomized";
}

std::string_view basic_name(BasicProperty p) {
  switch (p) {
    case BasicProperty::Reduced: return "reduced";
    case BasicProperty::Abelian: return "abelian";
    case BasicProperty::Semiprime: return "semiprime";
  }
  return "?";
}

Witness& Witness::add(std::string role, Elem e) {
  elements.emplace_back(std::move(role), e);
  return *this;
}
Witness& Witness::add(std::string role, CoeffVec p) {
  polys.emplace_back(std::move(role), std::move(p));
  return *this;
}
Witness& Witness::add_set(std::string role, std::vector<Elem> s) {
  sets.emplace_back(std::move(role), std::move(s));
  return *this;
}
Witness& Witness::add(std::string role, std::int64_t v) {
  integers.emplace_back(std::move(role), v);
  return *this;
}
Elem Witness::element(std::string_view role) const { return lookup(elements, role); }
const CoeffVec& Witness::poly(std::string_view role) const { return lookup(polys, role); }
const std::vector<Elem>& Witness::set(std::string_view role) const { return lookup(sets, role); }
std::int64_t Witness::integer(std::string_view role) const { return lookup(integers, role); }

PropertyVerdict check_basic(const FiniteRing& R, BasicProperty which) {
  const auto start = Clock::now();
  const std::string name(basic_name(which));
  const auto elems = R.elements();
  PropertyVerdict v;
  switch (which) {
    case BasicProperty::Reduced: {
      v = holds(name, "no nonzero a with a^2 = 0 among " + std::to_string(R.order()) +
                          " elements");
      for (Elem a : elems) {
        if (!R.is_zero(a) && R.is_zero(R.mul(a, a))) {
          v = fails(name, Witness{}.add("a", a));
          v.witness->note = "a^2 = 0";
          break;
        }
      }
      break;
    }
    case BasicProperty::Abelian: {
      v = holds(name, "every idempotent is central");
      for (const auto& c : idempotent_set(R)) {
        if (c.is_central) continue;
        for (Elem x : elems) {
          if (R.mul(c.element, x) != R.mul(x, c.element)) {
            v = fails(name, Witness{}.add("e", c.element).add("x", x));
            v.witness->note = "idempotent e with ex != xe";
            break;
          }
        }
        break;
      }
      break;
    }
    case BasicProperty::Semiprime: {
      v = holds(name, "aRa != 0 for every nonzero a");
      for (Elem a : elems) {
        if (R.is_zero(a)) continue;
        const bool killed = std::all_of(elems.begin(), elems.end(), [&](Elem r) {
          return R.is_zero(R.mul(R.mul(a, r), a));
        });
        if (killed) {
          v = fails(name, Witness{}.add("a", a));
          v.witness->note = "aRa = 0";
          break;
        }
      }
      break;
    }
  }
  v.elapsed_ms = ms_since(start);
  return v;
}

PropertyVerdict check_rigid(const RingMorphism& sigma) {
  const auto start = Clock::now();
  const FiniteRing& R = sigma.ring();
  PropertyVerdict v = holds("rigid", "a sigma(a) != 0 for every nonzero a");
  for (Elem a : R.elements()) {
    if (!R.is_zero(a) && R.is_zero(R.mul(a, sigma(a)))) {
      v = fails("rigid", Witness{}.add("a", a));
      v.witness->note = "a sigma(a) = 0 with a != 0";
      break;
    }
  }
  v.elapsed_ms = ms_since(start);
  return v;
}

PropertyVerdict check_compatible(const OreContext& ctx,
                                 std::span<const std::pair<Elem, Elem>> hints) {
  const auto start = Clock::now();
  const FiniteRing& R = ctx.ring();
  const auto& sigma = ctx.sigma();
  const auto& delta = ctx.delta();
  const bool check_delta = !ctx.delta_is_zero();
  auto failure = [&](Elem a, Elem b) -> std::optional<std::string> {
    const bool z = R.is_zero(R.mul(a, b));
    const bool zs = R.is_zero(R.mul(a, sigma(b)));
    if (z && !zs) return "ab = 0 but a sigma(b) != 0";
    if (!z && zs) return "a sigma(b) = 0 but ab != 0";
    if (check_delta && z && !R.is_zero(R.mul(a, delta(b)))) return "ab = 0 but a delta(b) != 0";
    return std::nullopt;
  };
  auto make = [&](Elem a, Elem b, std::string note) {
    auto v = fails("compatible", Witness{}.add("a", a).add("b", b));
    v.witness->note = std::move(note);
    v.elapsed_ms = ms_since(start);
    return v;
  };
  for (const auto& [a, b] : hints)
    if (auto f = failure(a, b)) return make(a, b, *f);
  const auto elems = R.elements();
  for (Elem a : elems)
    for (Elem b : elems)
      if (auto f = failure(a, b)) return make(a, b, *f);
  auto v = holds("compatible", "both directions checked over " + count_pairs(R.order()));
  v.elapsed_ms = ms_since(start);
  return v;
}

PropertyVerdict check_stability(const OreContext& ctx, Elem e) {
  const auto start = Clock::now();
  const FiniteRing& R = ctx.ring();
  if (!is_idempotent(R, e)) throw NotIdempotent(e.index);
  const RingSubset Re = principal_left_ideal(ctx.ring_ptr(), e);
  for (Elem r : R.elements()) {
    const Elem x = R.mul(r, e);
    for (int which = 0; which < 2; ++which) {
      const Elem image = which == 0 ? ctx.sigma()(x) : ctx.delta()(x);
      if (!Re.contains(image)) {
        auto v = fails("stable", Witness{}.add("e", e).add("r", r).add("escaped", image));
        v.witness->note = std::string(which == 0 ? "sigma" : "delta") + "(re) is not in Re";
        v.elapsed_ms = ms_since(start);
        return v;
      }
    }
  }
  auto v = holds("stable", "sigma(Re) and delta(Re) lie in Re (|Re| = " +
                               std::to_string(Re.size()) + ")");
  v.elapsed_ms = ms_since(start);
  return v;
}

PropertyVerdict check_stability_left_semicentral(const OreContext& ctx) {
  const auto start = Clock::now();
  std::size_t count = 0;
  for (const auto& c : idempotent_set(ctx.ring())) {
    if (!c.is_left_semicentral) continue;
    ++count;
    auto v = check_stability(ctx, c.element);
    if (v.status == Status::Fails) {
      v.property = "stable-left-semicentral";
      v.elapsed_ms = ms_since(start);
      return v;
    }
  }
  auto v = holds("stable-left-semicentral",
                 "Re is (sigma,delta)-stable for all " + std::to_string(count) +
                     " left semicentral idempotents");
  v.elapsed_ms = ms_since(start);
  return v;
}

PropertyVerdict check_quasi_baer(const RingPtr& ring) { return annihilator_family_check(ring, true); }

PropertyVerdict check_baer(const RingPtr& ring) { return annihilator_family_check(ring, false); }

std::optional<std::pair<std::size_t, std::size_t>> armendariz_violation(const OreContext& ctx,
                                                                        const OrePoly& p,
                                                                        const OrePoly& q) {
  if (!ore_mul(p, q).is_zero()) return std::nullopt;
  if (p.is_zero()) return std::nullopt;
  const auto table = ctx.word_table(p.coeffs().size() - 1);
  return coefficient_violation(ctx.ring(), table, p.coeffs(), q.coeffs());
}

PropertyVerdict check_skew_armendariz(const ContextPtr& ctx, const ArmendarizOptions& opts) {
  const auto start = Clock::now();
  using Mode = ArmendarizOptions::Mode;
  const bool sigma_variant = opts.variant == ArmendarizOptions::Variant::Sigma;
  const std::string property = sigma_variant ? "sigma-skew-armendariz" : "skew-armendariz";
  if (sigma_variant && !ctx->delta_is_zero())
    throw HypothesisViolated("delta = 0", "the sigma variant is defined only without a derivation");

  const FiniteRing& R = ctx->ring();
  const std::size_t dp = opts.deg_p, dq = opts.deg_q;
  const long double total = search_size(R.order(), dp + dq + 2);
  const bool fits = total <= static_cast<long double>(opts.budget);
  if (opts.mode == Mode::Exhaustive && !fits) throw BudgetExceeded(total, opts.budget);
  const bool exhaustive = opts.mode == Mode::Exhaustive || (opts.mode == Mode::Auto && fits);

  PropertyVerdict v;
  v.property = property;
  v.mode.kind = exhaustive ? SearchMode::Kind::Exhaustive : SearchMode::Kind::Randomized;
  if (!exhaustive) {
    v.mode.seed = opts.seed;
    v.mode.trials = opts.trials;
  }

  for (const auto& [p, q] : opts.hints) {
    const OrePoly pp(ctx, p), qq(ctx, q);
    if (auto ij = armendariz_violation(*ctx, pp, qq)) {
      v.status = Status::Fails;
      v.witness = armendariz_witness(ctx, pp.coeffs(), qq.coeffs(), ij->first, ij->second);
      v.detail = "candidate pair supplied with the example";
      v.elapsed_ms = ms_since(start);
      return v;
    }
  }

  const auto table = ctx->word_table(dp);
  std::optional<Witness> found;
  auto examine = [&](const CoeffVec& p) {
    const std::vector<CoeffVec> cons{p};
    enumerate_right_annihilator(
        ctx, cons, dq,
        [&](const CoeffVec& q) {
          if (auto ij = coefficient_violation(R, table, p, q)) {
            found = armendariz_witness(ctx, p, q, ij->first, ij->second);
            return false;
          }
          return true;
        },
        std::numeric_limits<std::uint64_t>::max());
  };

  const auto n = static_cast<std::uint32_t>(R.order());
  CoeffVec p(dp + 1, R.zero());
  if (exhaustive) {
    while (!found) {
      std::size_t pos = 0;
      while (pos <= dp && p[pos].index + 1 == n) p[pos++] = Elem{0};
      if (pos > dp) break;
      p[pos] = Elem{p[pos].index + 1};
      examine(p);
    }
  } else {
    Rng rng(opts.seed);
    for (std::uint64_t t = 0; t < opts.trials && !found; ++t) {
      for (auto& c : p) c = Elem{static_cast<std::uint32_t>(rng.below(n))};
      examine(p);
    }
  }

  v.bound = SearchBound{dp, dq,
                        exhaustive ? total
                                   : static_cast<long double>(opts.trials) *
                                         search_size(R.order(), dq + 1)};
  if (found) {
    v.status = Status::Fails;
    v.witness = std::move(found);
  } else {
    v.status = Status::CertifiedUpToBound;
    v.detail = exhaustive ? "no counterexample with deg p <= " + std::to_string(dp) +
                                ", deg q <= " + std::to_string(dq)
                          : "no counterexample found in " + std::to_string(opts.trials) +
                                " random p (all annihilating q enumerated for each)";
  }
  v.elapsed_ms = ms_since(start);
  return v;
}

bool AnnihilatorWitnessReport::hypotheses_met() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const SubCheck& c) { return c.passed; });
}

bool AnnihilatorWitnessReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.passed; });
}

AnnihilatorWitnessReport annihilator_idempotent_witness(const ContextPtr& ctx,
                                                        std::span<const OrePoly> ideal_gens,
                                                        std::size_t max_degree,
                                                        bool enforce_hypotheses,
                                                        std::uint64_t budget) {
  const RingPtr& Rp = ctx->ring_ptr();
  const FiniteRing& R = *Rp;
  const bool nonzero = std::any_of(ideal_gens.begin(), ideal_gens.end(),
                                   [](const OrePoly& g) { return !g.is_zero(); });
  if (!nonzero)
    throw HypothesisViolated("I != 0",
                             "the generated ideal is zero, so I0 = {0}; the construction "
                             "assumes a nonzero ideal");

  AnnihilatorWitnessReport rep;
  {
    const bool automorphism = ctx->sigma().is_automorphism();
    rep.hypotheses.push_back({"sigma_automorphism", automorphism,
                              automorphism ? "sigma is bijective" : "sigma is not bijective"});
    const auto qb = check_quasi_baer(Rp);
    rep.hypotheses.push_back({"ring_quasi_baer", qb.status == Status::Holds,
                              qb.status == Status::Holds ? qb.detail
                                                         : "the coefficient ring is not quasi-Baer"});
    const auto st = check_stability_left_semicentral(*ctx);
    rep.hypotheses.push_back(
        {"left_semicentral_stable", st.status == Status::Holds,
         st.status == Status::Holds
             ? st.detail
             : "R e is not stable for e = " + R.name(st.witness->element("e")) + ": " +
                   st.witness->note + " (r = " + R.name(st.witness->element("r")) +
                   ", image " + R.name(st.witness->element("escaped")) + ")"});
    if (enforce_hypotheses) {
      for (const auto& h : rep.hypotheses)
        if (!h.passed) throw HypothesisViolated(h.name, h.detail);
    }
  }

  for (const auto& g : ideal_gens) rep.generators.push_back(g.coeffs());

  const PolySubgroup slice = ideal_slice(ctx, ideal_gens, max_degree);
  rep.strong_generators = slice.strong_generators();
  rep.slice_size = slice.size();
  rep.checks.push_back({"ideal_slice", true,
                        std::to_string(rep.strong_generators.size()) +
                            " strong generators, slice size " +
                            std::to_string(static_cast<double>(rep.slice_size))});

  const RingSubset i0 = slice.all_leading_coefficients();
  rep.i0 = i0.elements();
  const bool two_sided = i0.size() > 1 && scan_additive_subgroup(i0) && scan_left_ideal(i0) &&
                         scan_right_ideal(i0);
  rep.checks.push_back({"i0_two_sided", two_sided,
                        "I0 has " + std::to_string(i0.size()) + " elements"});

  const RingSubset ann = right_annihilator(i0);
  rep.e = idempotent_generator(Rp, ann);
  rep.checks.push_back(
      {"annihilator_idempotent", rep.e.has_value(),
       rep.e ? "r_R(I0) = eR with e = " + R.name(*rep.e) +
                   (is_left_semicentral(R, *rep.e) ? " (left semicentral)" : "")
             : "r_R(I0) is not generated by an idempotent"});
  if (!rep.e) return rep;
  const Elem e = *rep.e;

  bool kills = true;
  const OrePoly ep = OrePoly::constant(ctx, e);
  for (const auto& g : rep.strong_generators) {
    if (!ore_mul(OrePoly(ctx, g), ep).is_zero()) {
      kills = false;
      break;
    }
  }
  rep.checks.push_back({"slice_times_e_zero", kills,
                        kills ? "f e = 0 for every slice member (checked on generators)"
                              : "some slice member f has f e != 0"});

  // sigma^(+-n)(e) and u_n with sigma^n(e) = u_n e, for every generator degree n.
  const auto& sigma = ctx->sigma();
  // n -> (sigma^-n(e), sigma^n(e)); the first is absent unless sigma is bijective.
  std::map<std::size_t, std::pair<std::optional<Elem>, Elem>> powers;
  std::map<std::size_t, std::optional<Elem>> eue;
  for (const auto& g : rep.strong_generators) {
    std::size_t n = g.size();
    while (n > 0 && R.is_zero(g[n - 1])) --n;
    if (n == 0) continue;
    const std::size_t deg = n - 1;
    if (powers.count(deg)) continue;
    const auto k = static_cast<std::int64_t>(deg);
    const Elem plus = sigma.power(k)[e.index];
    std::optional<Elem> minus;
    if (sigma.is_automorphism()) minus = sigma.power(-k)[e.index];
    powers[deg] = {minus, plus};
    std::optional<Elem> u;
    for (Elem cand : R.elements()) {
      if (R.mul(cand, e) == plus) {
        u = R.mul(R.mul(e, cand), e);
        break;
      }
    }
    eue[deg] = u;
  }

  bool in_eS = true, eue_ok = true, minus_ok = true, plus_ok = true;
  auto fixed_by = [&](Elem left, const CoeffVec& lam) {
    return std::all_of(lam.begin(), lam.end(), [&](Elem b) { return R.mul(left, b) == b; });
  };
  const std::uint64_t count = enumerate_right_annihilator(
      ctx, rep.strong_generators, max_degree,
      [&](const CoeffVec& lam) {
        if (!fixed_by(e, lam)) in_eS = false;
        for (const auto& [deg, pm] : powers) {
          if (!pm.first || !fixed_by(*pm.first, lam)) minus_ok = false;
          if (!fixed_by(pm.second, lam)) plus_ok = false;
          const auto& u = eue.at(deg);
          if (!u || !fixed_by(*u, lam)) eue_ok = false;
        }
        return true;
      },
      budget);
  rep.annihilator_count = count;
  rep.expected_count =
      search_size(principal_right_ideal(Rp, e).size(), max_degree + 1);
  rep.sigma_minus_n_form = minus_ok;
  rep.sigma_plus_n_form = plus_ok;
  rep.checks.push_back({"annihilator_in_eS", in_eS,
                        std::to_string(count) +
                            " polynomials of degree <= " + std::to_string(max_degree) +
                            " annihilate the slice; each checked for lambda = e lambda"});
  rep.checks.push_back({"lambda_eue_form", eue_ok,
                        "lambda = e u e lambda with sigma^n(e) = u e for every generator "
                        "degree n"});
  rep.checks.push_back(
      {"annihilator_count", static_cast<long double>(count) == rep.expected_count,
       "|annihilator slice| = " + std::to_string(count) + ", |eR|^(D+1) = " +
           std::to_string(static_cast<double>(rep.expected_count))});
  return rep;
}

ConstantExtractionReport constant_term_extraction(const ContextPtr& ctx, Elem a,
                                                  std::span<const OrePoly> idempotents,
                                                  std::size_t slice_degree) {
  const RingPtr& Rp = ctx->ring_ptr();
  ConstantExtractionReport rep;
  rep.generator = a;
  const RingSubset I = ideal_closure(Rp, std::vector<Elem>{a});
  const RingSubset rI = right_annihilator(I);
  rep.ideal = I.elements();
  rep.annihilator = rI.elements();

  const auto igens = subgroup_generators(I);
  std::vector<OrePoly> monomials;
  for (Elem r : additive_generators(Rp))
    for (std::size_t k = 0; k <= slice_degree; ++k)
      monomials.push_back(OrePoly::monomial(ctx, r, k));
  std::vector<OrePoly> left_factors;
  for (Elem i : igens)
    for (const auto& m : monomials) left_factors.push_back(ore_mul(OrePoly::constant(ctx, i), m));

  for (const auto& e : idempotents) {
    const bool kills = std::all_of(left_factors.begin(), left_factors.end(), [&](const OrePoly& f) {
      return ore_mul(f, e).is_zero();
    });
    if (!kills) continue;
    const bool contains = std::all_of(rep.annihilator.begin(), rep.annihilator.end(), [&](Elem c) {
      const OrePoly cp = OrePoly::constant(ctx, c);
      return ore_mul(e, cp) == cp;
    });
    if (!contains) continue;
    rep.e = e.coeffs();
    rep.e_constant = e.is_constant();
    const Elem e0 = e.coeff(0);
    rep.annihilator_is_e0R = principal_right_ideal(Rp, e0) == rI;
    rep.detail = "generator " + pretty_poly(e) + "; r_R(I) has " +
                 std::to_string(rI.size()) + " elements, e0 R has " +
                 std::to_string(principal_right_ideal(Rp, e0).size());
    return rep;
  }
  rep.detail = "no idempotent among " + std::to_string(idempotents.size()) +
               " candidates generates the annihilator slice of IS";
  return rep;
}

}  // namespace oreqb
