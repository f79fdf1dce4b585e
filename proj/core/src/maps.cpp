#include "oreqb/maps.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>

#include "oreqb/error.hpp"
#include "oreqb/expr.hpp"

namespace oreqb {

namespace {

constexpr std::array<std::pair<MapRule::Kind, std::string_view>, 12> kRuleNames{{
    {MapRule::Kind::Identity, "identity"},
    {MapRule::Kind::Zero, "zero"},
    {MapRule::Kind::Image, "image"},
    {MapRule::Kind::NegateCorner, "negate_corner"},
    {MapRule::Kind::ScaleCorner, "scale_corner"},
    {MapRule::Kind::EvaluateAtZero, "evaluate_at_zero"},
    {MapRule::Kind::Substitute, "substitute"},
    {MapRule::Kind::Conjugate, "conjugate"},
    {MapRule::Kind::ConjugateBy, "conjugate_by"},
    {MapRule::Kind::Inner, "inner"},
    {MapRule::Kind::IdentityMinusSigma, "identity_minus_sigma"},
    {MapRule::Kind::FormalDerivative, "formal_derivative"},
}};

std::string pair_text(const FiniteRing& R, Elem a, Elem b) {
  return "(" + R.name(a) + ", " + R.name(b) + ")";
}

void check_image(const FiniteRing& R, std::span<const Elem> image) {
  if (image.size() != R.order())
    throw MapViolation(MapViolation::Kind::Length, 0, 0,
                       "map image has " + std::to_string(image.size()) +
                           " entries, ring has order " + std::to_string(R.order()));
  for (Elem e : image)
    if (e.index >= R.order())
      throw MapViolation(MapViolation::Kind::Length, e.index, 0, "map image index out of range");
}

// Applies a map defined on a structured ring, threading through subring
// embeddings.
std::vector<Elem> map_structural(const RingPtr& ring,
                                 const std::function<Elem(const FiniteRing&, Elem)>& f) {
  std::vector<Elem> out(ring->order());
  if (const auto* sub = std::get_if<SubringShape>(&ring->shape())) {
    for (Elem e : ring->elements()) {
      const Elem img = f(*sub->ambient, sub->lift(e));
      auto low = sub->lower(img);
      if (!low)
        throw DescriptorError("map sends " + ring->name(e) + " to " + sub->ambient->name(img) +
                              ", outside the subring");
      out[e.index] = *low;
    }
    return out;
  }
  for (Elem e : ring->elements()) out[e.index] = f(*ring, e);
  return out;
}

const MatrixShape& triangular_shape(const FiniteRing& R) {
  const auto* m = std::get_if<MatrixShape>(&R.shape());
  if (m == nullptr || m->size != 2)
    throw DescriptorError("corner rules need an upper-triangular 2x2 matrix ring (or a subring of one)");
  return *m;
}

const QuotientShape& quotient_shape(const FiniteRing& R) {
  const auto* q = std::get_if<QuotientShape>(&R.shape());
  if (q == nullptr) throw DescriptorError("this rule needs a quotient ring base[t]/(p)");
  return *q;
}

std::vector<Elem> substitute(const RingPtr& ring, const std::string& value) {
  return map_structural(ring, [&](const FiniteRing& Q, Elem e) {
    const auto& q = quotient_shape(Q);
    const Elem s = parse_element(Q, value);
    const FiniteRing& B = *q.base;
    std::vector<Elem> c(q.degree(), B.zero());
    Elem acc = Q.zero();
    Elem power = Q.one();
    for (Elem coeff : q.coefficients(e)) {
      c[0] = coeff;
      acc = Q.add(acc, Q.mul(q.encode(c), power));
      power = Q.mul(power, s);
    }
    return acc;
  });
}

}  // namespace

std::string_view rule_name(MapRule::Kind kind) {
  for (const auto& [k, name] : kRuleNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<MapRule::Kind> rule_from_name(std::string_view name) {
  for (const auto& [k, n] : kRuleNames)
    if (n == name) return k;
  return std::nullopt;
}

bool RingMorphism::is_identity() const {
  for (std::uint32_t i = 0; i < image_.size(); ++i)
    if (image_[i].index != i) return false;
  return true;
}

std::vector<Elem> RingMorphism::power(std::int64_t k) const {
  const std::vector<Elem>* base = &image_;
  if (k < 0) {
    if (!inverse_) throw Error("negative power of a non-invertible endomorphism");
    base = &*inverse_;
    k = -k;
  }
  std::vector<Elem> out = ring_->elements();
  for (std::int64_t s = 0; s < k; ++s)
    for (auto& e : out) e = (*base)[e.index];
  return out;
}

RingMorphism validate_morphism(RingPtr ring, std::vector<Elem> image, bool require_automorphism) {
  const FiniteRing& R = *ring;
  check_image(R, image);
  if (image[R.one().index] != R.one())
    throw MapViolation(MapViolation::Kind::NotUnital, R.one().index, 0,
                       "sigma(1) = " + R.name(image[R.one().index]) + " is not 1");
  for (Elem a : R.elements()) {
    for (Elem b : R.elements()) {
      if (image[R.add(a, b).index] != R.add(image[a.index], image[b.index]))
        throw MapViolation(MapViolation::Kind::Additivity, a.index, b.index,
                           "sigma is not additive at " + pair_text(R, a, b));
    }
  }
  for (Elem a : R.elements()) {
    for (Elem b : R.elements()) {
      if (image[R.mul(a, b).index] != R.mul(image[a.index], image[b.index]))
        throw MapViolation(MapViolation::Kind::Multiplicativity, a.index, b.index,
                           "sigma is not multiplicative at " + pair_text(R, a, b));
    }
  }
  std::vector<std::int64_t> preimage(R.order(), -1);
  std::optional<std::pair<std::uint32_t, std::uint32_t>> collision;
  for (Elem a : R.elements()) {
    auto& slot = preimage[image[a.index].index];
    if (slot >= 0 && !collision) collision = {static_cast<std::uint32_t>(slot), a.index};
    if (slot < 0) slot = a.index;
  }
  std::optional<std::vector<Elem>> inverse;
  if (!collision) {
    inverse.emplace(R.order());
    for (std::uint32_t i = 0; i < R.order(); ++i)
      (*inverse)[i] = Elem{static_cast<std::uint32_t>(preimage[i])};
  } else if (require_automorphism) {
    throw MapViolation(MapViolation::Kind::NotBijective, collision->first, collision->second,
                       "sigma is not bijective: " +
                           pair_text(R, Elem{collision->first}, Elem{collision->second}) +
                           " share an image");
  }
  return RingMorphism(std::move(ring), std::move(image), std::move(inverse));
}

bool SigmaDerivation::is_zero() const {
  for (Elem e : image_)
    if (e != ring_->zero()) return false;
  return true;
}

SigmaDerivation validate_derivation(RingPtr ring, MorphismPtr sigma, std::vector<Elem> image) {
  const FiniteRing& R = *ring;
  if (!sigma || sigma->ring_ptr() != ring) throw ContextMismatch();
  check_image(R, image);
  for (Elem a : R.elements()) {
    for (Elem b : R.elements()) {
      if (image[R.add(a, b).index] != R.add(image[a.index], image[b.index]))
        throw MapViolation(MapViolation::Kind::Additivity, a.index, b.index,
                           "delta is not additive at " + pair_text(R, a, b));
    }
  }
  const RingMorphism& s = *sigma;
  for (Elem a : R.elements()) {
    for (Elem b : R.elements()) {
      const Elem lhs = image[R.mul(a, b).index];
      const Elem rhs = R.add(R.mul(s(a), image[b.index]), R.mul(image[a.index], b));
      if (lhs != rhs)
        throw MapViolation(MapViolation::Kind::Leibniz, a.index, b.index,
                           "delta violates delta(ab) = sigma(a)delta(b) + delta(a)b at " +
                               pair_text(R, a, b));
    }
  }
  if (image[R.one().index] != R.zero())
    throw MapViolation(MapViolation::Kind::Leibniz, R.one().index, R.one().index,
                       "delta(1) is not 0");
  return SigmaDerivation(std::move(ring), std::move(sigma), std::move(image));
}

std::vector<Elem> expand_sigma_rule(const RingPtr& ring, const MapRule& rule) {
  const FiniteRing& R = *ring;
  switch (rule.kind) {
    case MapRule::Kind::Identity:
      return R.elements();
    case MapRule::Kind::Image: {
      if (rule.image.size() != R.order())
        throw DescriptorError("image rule needs one entry per element (" +
                              std::to_string(R.order()) + ")");
      std::vector<Elem> out;
      for (const auto& lit : rule.image) out.push_back(parse_element(R, lit));
      return out;
    }
    case MapRule::Kind::NegateCorner:
    case MapRule::Kind::ScaleCorner: {
      const std::int64_t k = rule.kind == MapRule::Kind::NegateCorner ? -1 : rule.factor;
      return map_structural(ring, [k](const FiniteRing& M, Elem e) {
        const auto& shape = triangular_shape(M);
        const FiniteRing& B = *shape.base;
        auto ent = shape.entries(e);
        if (!shape.upper_triangular && !B.is_zero(ent[2]))
          throw DescriptorError("corner rules need upper-triangular elements");
        ent[1] = B.mul(B.from_int(k), ent[1]);
        return shape.encode(ent);
      });
    }
    case MapRule::Kind::EvaluateAtZero:
      return substitute(ring, "0");
    case MapRule::Kind::Substitute:
      return substitute(ring, rule.element);
    case MapRule::Kind::Conjugate: {
      const RingPtr& target = std::holds_alternative<SubringShape>(R.shape())
                                  ? std::get<SubringShape>(R.shape()).ambient
                                  : ring;
      return substitute(ring, "-" + quotient_shape(*target).var);
    }
    case MapRule::Kind::ConjugateBy: {
      const Elem u = parse_element(R, rule.element);
      std::optional<Elem> inv;
      for (Elem v : R.elements()) {
        if (R.mul(u, v) == R.one() && R.mul(v, u) == R.one()) {
          inv = v;
          break;
        }
      }
      if (!inv) throw DescriptorError("conjugate_by needs a unit, got " + R.name(u));
      std::vector<Elem> out(R.order());
      for (Elem a : R.elements()) out[a.index] = R.mul(R.mul(u, a), *inv);
      return out;
    }
    default:
      throw DescriptorError("rule '" + std::string(rule_name(rule.kind)) +
                            "' does not describe an endomorphism");
  }
}

std::vector<Elem> expand_delta_rule(const RingPtr& ring, const RingMorphism& sigma,
                                    const MapRule& rule) {
  const FiniteRing& R = *ring;
  switch (rule.kind) {
    case MapRule::Kind::Zero:
      return std::vector<Elem>(R.order(), R.zero());
    case MapRule::Kind::Image: {
      if (rule.image.size() != R.order())
        throw DescriptorError("image rule needs one entry per element (" +
                              std::to_string(R.order()) + ")");
      std::vector<Elem> out;
      for (const auto& lit : rule.image) out.push_back(parse_element(R, lit));
      return out;
    }
    case MapRule::Kind::Inner:
    case MapRule::Kind::IdentityMinusSigma: {
      const Elem w = rule.kind == MapRule::Kind::Inner ? parse_element(R, rule.element) : R.one();
      std::vector<Elem> out(R.order());
      for (Elem a : R.elements()) out[a.index] = R.sub(R.mul(w, a), R.mul(sigma(a), w));
      return out;
    }
    case MapRule::Kind::FormalDerivative:
      return map_structural(ring, [](const FiniteRing& Q, Elem e) {
        const auto& q = quotient_shape(Q);
        const FiniteRing& B = *q.base;
        const auto c = q.coefficients(e);
        std::vector<Elem> d(c.size(), B.zero());
        for (std::size_t k = 1; k < c.size(); ++k)
          d[k - 1] = B.mul(B.from_int(static_cast<std::int64_t>(k)), c[k]);
        return q.encode(d);
      });
    default:
      throw DescriptorError("rule '" + std::string(rule_name(rule.kind)) +
                            "' does not describe a sigma-derivation");
  }
}

OreContext::OreContext(MorphismPtr sigma, DerivationPtr delta)
    : ring_(sigma->ring_ptr()), sigma_(std::move(sigma)), delta_(std::move(delta)) {
  delta_zero_ = delta_->is_zero();
}

std::shared_ptr<const OreContext> OreContext::create(MorphismPtr sigma, DerivationPtr delta) {
  if (!sigma || !delta) throw Error("Ore context needs both sigma and delta");
  if (delta->ring().order() != sigma->ring().order() ||
      &delta->ring() != &sigma->ring())
    throw ContextMismatch();
  if (delta->sigma_ptr() != sigma &&
      !std::equal(delta->sigma().image().begin(), delta->sigma().image().end(),
                  sigma->image().begin()))
    throw ContextMismatch();
  return std::shared_ptr<const OreContext>(new OreContext(std::move(sigma), std::move(delta)));
}

WordTableView OreContext::word_table(std::size_t max_j) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const FiniteRing& R = *ring_;
  const std::size_t n = R.order();
  if (levels_ == 0) {
    rows_.emplace_back(R.elements());
    levels_ = 1;
  }
  while (levels_ <= max_j) {
    const std::size_t j = levels_;
    const std::size_t prev = (j - 1) * j / 2;
    for (std::size_t i = 0; i <= j; ++i) {
      std::vector<Elem> row(n, R.zero());
      for (std::uint32_t r = 0; r < n; ++r) {
        Elem acc = R.zero();
        if (i >= 1) acc = R.add(acc, (*sigma_)(rows_[prev + i - 1][r]));
        if (i <= j - 1) acc = R.add(acc, (*delta_)(rows_[prev + i][r]));
        row[r] = acc;
      }
      rows_.push_back(std::move(row));
    }
    ++levels_;
  }
  WordTableView view;
  view.max_j_ = max_j;
  const std::size_t count = (max_j + 1) * (max_j + 2) / 2;
  view.rows_.reserve(count);
  for (std::size_t k = 0; k < count; ++k) view.rows_.push_back(rows_[k].data());
  return view;
}

ContextPtr make_context(const RingPtr& ring, const MapRule& sigma_rule, const MapRule& delta_rule,
                        bool require_automorphism) {
  auto sigma = std::make_shared<const RingMorphism>(
      validate_morphism(ring, expand_sigma_rule(ring, sigma_rule), require_automorphism));
  auto delta = std::make_shared<const SigmaDerivation>(
      validate_derivation(ring, sigma, expand_delta_rule(ring, *sigma, delta_rule)));
  auto ctx = OreContext::create(std::move(sigma), std::move(delta));
  cross_check_word_operators(*ctx, 4);
  return ctx;
}

AdditiveMap f_word_operator(const OreContext& ctx, std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0 || i > j)
    throw IndexOutOfRange("f_i^j needs 0 <= i <= j, got i=" + std::to_string(i) +
                          ", j=" + std::to_string(j));
  const auto view = ctx.word_table(static_cast<std::size_t>(j));
  const Elem* row = view.f(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return AdditiveMap{ctx.ring_ptr(), std::vector<Elem>(row, row + ctx.ring().order())};
}

AdditiveMap f_word_sum_explicit(const OreContext& ctx, std::size_t i, std::size_t j) {
  if (i > j || j >= 31) throw IndexOutOfRange("explicit word sum needs i <= j < 31");
  const FiniteRing& R = ctx.ring();
  std::vector<Elem> total(R.order(), R.zero());
  for (std::uint32_t mask = 0; mask < (1u << j); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != i) continue;
    for (Elem r : R.elements()) {
      // Letter k of the word is sigma when bit k is set; the rightmost
      // letter (k = 0) is applied first.
      Elem v = r;
      for (std::size_t k = 0; k < j; ++k) v = (mask >> k & 1u) ? ctx.sigma()(v) : ctx.delta()(v);
      total[r.index] = R.add(total[r.index], v);
    }
  }
  return AdditiveMap{ctx.ring_ptr(), std::move(total)};
}

void cross_check_word_operators(const OreContext& ctx, std::size_t max_j) {
  for (std::size_t j = 0; j <= max_j; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      const auto rec = f_word_operator(ctx, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
      const auto direct = f_word_sum_explicit(ctx, i, j);
      if (!(rec == direct))
        throw Error("f_" + std::to_string(i) + "^" + std::to_string(j) +
                    " recursion disagrees with the explicit word sum");
    }
  }
}

}  // namespace oreqb
