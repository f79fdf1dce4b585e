#pragma once

// Endomorphisms, sigma-derivations and the word operators f_i^j.
//
// Maps are stored as full image vectors over the element indices, so
// validation is a quadratic table scan and application is a lookup.

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oreqb/ring.hpp"

namespace oreqb {

/// Declarative description of sigma or delta, expanded against a ring.
struct MapRule {
  enum class Kind {
    Identity,           // sigma
    Zero,               // delta
    Image,              // full image list, one literal per element index
    NegateCorner,       // [a,b;0,c] -> [a,-b;0,c]
    ScaleCorner,        // [a,b;0,c] -> [a,k*b;0,c]
    EvaluateAtZero,     // f(t) -> f(0)
    Substitute,         // f(t) -> f(value)
    Conjugate,          // f(u) -> f(-u)
    ConjugateBy,        // a -> u a u^-1 for a unit u
    Inner,              // delta(a) = w*a - sigma(a)*w
    IdentityMinusSigma, // delta(a) = a - sigma(a)
    FormalDerivative,   // delta(sum c_k t^k) = sum k*c_k t^(k-1)
  };

  Kind kind = Kind::Identity;
  std::int64_t factor = 1;
  std::string element;
  std::vector<std::string> image;

  friend bool operator==(const MapRule&, const MapRule&) = default;
};

std::string_view rule_name(MapRule::Kind kind);
std::optional<MapRule::Kind> rule_from_name(std::string_view name);

class RingMorphism {
 public:
  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }

  Elem operator()(Elem a) const { return image_[a.index]; }
  std::span<const Elem> image() const noexcept { return image_; }

  bool is_automorphism() const noexcept { return inverse_.has_value(); }
  bool is_identity() const;

  /// Inverse image vector; present exactly when the map is bijective.
  const std::optional<std::vector<Elem>>& inverse_image() const noexcept { return inverse_; }

  /// sigma^k as an image vector; k < 0 requires an automorphism.
  std::vector<Elem> power(std::int64_t k) const;

 private:
  friend RingMorphism validate_morphism(RingPtr, std::vector<Elem>, bool);
  RingMorphism(RingPtr ring, std::vector<Elem> image, std::optional<std::vector<Elem>> inverse)
      : ring_(std::move(ring)), image_(std::move(image)), inverse_(std::move(inverse)) {}

  RingPtr ring_;
  std::vector<Elem> image_;
  std::optional<std::vector<Elem>> inverse_;
};

using MorphismPtr = std::shared_ptr<const RingMorphism>;

/// Exhaustive check of additivity, multiplicativity and unitality; throws
/// MapViolation carrying the lowest witness pair.
RingMorphism validate_morphism(RingPtr ring, std::vector<Elem> image,
                               bool require_automorphism = false);

class SigmaDerivation {
 public:
  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingMorphism& sigma() const noexcept { return *sigma_; }
  const MorphismPtr& sigma_ptr() const noexcept { return sigma_; }

  Elem operator()(Elem a) const { return image_[a.index]; }
  std::span<const Elem> image() const noexcept { return image_; }
  bool is_zero() const;

 private:
  friend SigmaDerivation validate_derivation(RingPtr, MorphismPtr, std::vector<Elem>);
  SigmaDerivation(RingPtr ring, MorphismPtr sigma, std::vector<Elem> image)
      : ring_(std::move(ring)), sigma_(std::move(sigma)), image_(std::move(image)) {}

  RingPtr ring_;
  MorphismPtr sigma_;
  std::vector<Elem> image_;
};

using DerivationPtr = std::shared_ptr<const SigmaDerivation>;

/// Additivity and the twisted Leibniz rule delta(ab) = sigma(a)delta(b) + delta(a)b,
/// both exhaustive.
SigmaDerivation validate_derivation(RingPtr ring, MorphismPtr sigma, std::vector<Elem> image);

std::vector<Elem> expand_sigma_rule(const RingPtr& ring, const MapRule& rule);
std::vector<Elem> expand_delta_rule(const RingPtr& ring, const RingMorphism& sigma,
                                    const MapRule& rule);

/// An additive self-map of a ring, stored by image.
struct AdditiveMap {
  RingPtr ring;
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image[a.index]; }
  friend bool operator==(const AdditiveMap& a, const AdditiveMap& b) {
    return a.ring == b.ring && a.image == b.image;
  }
};

/// Read-only snapshot of f_i^j for all j <= max_j.
class WordTableView {
 public:
  const Elem* f(std::size_t i, std::size_t j) const { return rows_[j * (j + 1) / 2 + i]; }
  std::size_t max_j() const noexcept { return max_j_; }

 private:
  friend class OreContext;
  std::vector<const Elem*> rows_;
  std::size_t max_j_ = 0;
};

/// Validated (R, sigma, delta). f_i^j is built lazily by
///   f_i^j = sigma o f_{i-1}^{j-1} + delta o f_i^{j-1},  f_0^0 = id,
/// and memoized; the cache only ever grows, so snapshots stay valid.
class OreContext {
 public:
  static std::shared_ptr<const OreContext> create(MorphismPtr sigma, DerivationPtr delta);

  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const RingMorphism& sigma() const noexcept { return *sigma_; }
  const SigmaDerivation& delta() const noexcept { return *delta_; }
  const MorphismPtr& sigma_ptr() const noexcept { return sigma_; }
  const DerivationPtr& delta_ptr() const noexcept { return delta_; }
  bool delta_is_zero() const noexcept { return delta_zero_; }

  WordTableView word_table(std::size_t max_j) const;

 private:
  OreContext(MorphismPtr sigma, DerivationPtr delta);

  RingPtr ring_;
  MorphismPtr sigma_;
  DerivationPtr delta_;
  bool delta_zero_ = false;

  mutable std::mutex mutex_;
  mutable std::deque<std::vector<Elem>> rows_;  // row (i,j) at j(j+1)/2 + i
  mutable std::size_t levels_ = 0;              // number of complete j levels
};

using ContextPtr = std::shared_ptr<const OreContext>;

/// Builds and validates a context from rules; delta defaults to zero.
ContextPtr make_context(const RingPtr& ring, const MapRule& sigma, const MapRule& delta,
                        bool require_automorphism = false);

/// f_i^j; throws IndexOutOfRange unless 0 <= i <= j.
AdditiveMap f_word_operator(const OreContext& ctx, std::int64_t i, std::int64_t j);

/// The defining sum over all C(j,i) words with i letters sigma and j-i
/// letters delta. Exponential in j; used to cross-check the recursion.
AdditiveMap f_word_sum_explicit(const OreContext& ctx, std::size_t i, std::size_t j);

/// Compares recursion and explicit word sums for every i <= j <= max_j;
/// throws Error on the first disagreement.
void cross_check_word_operators(const OreContext& ctx, std::size_t max_j = 4);

}  // namespace oreqb
