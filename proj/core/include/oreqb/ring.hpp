#pragma once

// Table-based finite rings with unity.
//
// Every ring, whatever recipe it was built from, is compiled down to full
// addition and multiplication tables over the indices 0..n-1. Downstream
// algorithms only ever see the tables; the structural "shape" is retained so
// that literals such as "[[1,2],[0,3]]" or "1+t" can be parsed and printed.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oreqb {

/// An element of a FiniteRing, identified by its table index.
struct Elem {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

/// Raw Cayley tables, used by the "table" descriptor kind.
struct RawTables {
  std::uint32_t order = 0;
  std::vector<std::vector<std::uint32_t>> add;
  std::vector<std::vector<std::uint32_t>> mul;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::vector<std::string> names;  // optional; defaults to "e<i>"

  friend bool operator==(const RawTables&, const RawTables&) = default;
};

/// Construction recipe for a finite ring.
struct RingDescriptor {
  enum class Kind { Modular, Quotient, UpperTriangular, FullMatrix, Product, Subring, Table };

  Kind kind = Kind::Modular;
  std::uint32_t modulus = 0;             // Modular: Z/nZ
  std::vector<std::string> poly;         // Quotient: monic modulus, low-to-high, base-ring literals
  std::string var = "t";                 // Quotient: name of the adjoined variable
  std::uint32_t matrix_size = 2;         // FullMatrix: k
  std::vector<std::string> generators;   // Subring: generator literals in the base ring
  std::vector<RingDescriptor> parts;     // base ring(s); two for Product
  std::optional<RawTables> tables;       // Table

  static RingDescriptor modular(std::uint32_t n);
  static RingDescriptor quotient(RingDescriptor base, std::vector<std::string> monic,
                                 std::string var = "t");
  static RingDescriptor upper_triangular(RingDescriptor base);
  static RingDescriptor full_matrix(RingDescriptor base, std::uint32_t k);
  static RingDescriptor product(RingDescriptor left, RingDescriptor right);
  static RingDescriptor subring(RingDescriptor base, std::vector<std::string> generators);
  static RingDescriptor table(RawTables tables);

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

std::string_view kind_name(RingDescriptor::Kind kind);

struct RingLimits {
  std::uint64_t max_order = 4096;
  std::uint32_t exhaustive_axiom_order = 512;
  std::uint64_t sampled_triples = 1'000'000;
  std::uint64_t sample_seed = 0x5eedull;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct ModularShape {
  std::uint32_t n = 0;
};

/// base[var]/(modulus); elements are coefficient vectors of length deg(modulus).
struct QuotientShape {
  RingPtr base;
  std::vector<Elem> modulus;  // low-to-high, leading coefficient is one
  std::string var;

  std::size_t degree() const { return modulus.size() - 1; }
  std::vector<Elem> coefficients(Elem e) const;
  Elem encode(std::span<const Elem> coeffs) const;
};

/// k x k matrices over base (or the upper-triangular 2x2 subring).
struct MatrixShape {
  RingPtr base;
  std::uint32_t size = 2;
  bool upper_triangular = false;

  /// Row-major entries, always size*size of them (lower-left zero if triangular).
  std::vector<Elem> entries(Elem e) const;
  Elem encode(std::span<const Elem> entries) const;
};

struct ProductShape {
  RingPtr left;
  RingPtr right;

  std::pair<Elem, Elem> split(Elem e) const;
  Elem encode(Elem l, Elem r) const;
};

/// Subring of an ambient ring; indices ordered by ambient index.
struct SubringShape {
  RingPtr ambient;
  std::vector<Elem> to_ambient;
  std::vector<std::int64_t> from_ambient;  // -1 when not a member

  Elem lift(Elem e) const { return to_ambient[e.index]; }
  std::optional<Elem> lower(Elem ambient_elem) const;
};

struct TableShape {};

using Shape = std::variant<ModularShape, QuotientShape, MatrixShape, ProductShape, SubringShape,
                           TableShape>;

class FiniteRing {
 public:
  FiniteRing(std::uint32_t order, std::vector<std::uint16_t> add, std::vector<std::uint16_t> mul,
             Elem zero, Elem one, std::vector<std::string> names, RingDescriptor descriptor,
             Shape shape);

  std::size_t order() const noexcept { return order_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const noexcept { return Elem{add_[a.index * order_ + b.index]}; }
  Elem mul(Elem a, Elem b) const noexcept { return Elem{mul_[a.index * order_ + b.index]}; }
  Elem neg(Elem a) const noexcept { return Elem{neg_[a.index]}; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  bool is_zero(Elem a) const noexcept { return a == zero_; }

  /// k * 1, for any integer k.
  Elem from_int(std::int64_t k) const;

  /// Checked conversion from a raw index.
  Elem element(std::uint64_t index) const;

  const std::string& name(Elem e) const { return names_.at(e.index); }
  std::optional<Elem> find(std::string_view name) const;

  const RingDescriptor& descriptor() const noexcept { return descriptor_; }
  const Shape& shape() const noexcept { return shape_; }

  bool is_commutative() const;

  /// All elements in index order.
  std::vector<Elem> elements() const;

  /// Additive order of the unity (the characteristic).
  std::uint32_t characteristic() const;

 private:
  std::uint32_t order_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  Elem zero_;
  Elem one_;
  std::vector<std::string> names_;
  RingDescriptor descriptor_;
  Shape shape_;
};

/// Compiles a descriptor into tables and verifies the ring axioms
/// (exhaustively up to limits.exhaustive_axiom_order, sampled above).
RingPtr construct_ring(const RingDescriptor& descriptor, const RingLimits& limits = {});

/// Scans the tables of an already-built ring; throws RingAxiomViolation.
void verify_ring_axioms(const FiniteRing& ring, const RingLimits& limits = {});

/// Membership vector over one ring. Closure flags are only ever set by
/// RingSubset::with_verified_flags, which checks them by table scan.
class RingSubset {
 public:
  RingSubset(RingPtr ring, std::vector<bool> members);

  static RingSubset empty(RingPtr ring);
  static RingSubset whole(RingPtr ring);
  static RingSubset of(RingPtr ring, std::span<const Elem> elems);

  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }

  bool contains(Elem e) const { return members_.at(e.index); }
  std::size_t size() const;
  bool empty_set() const { return size() == 0; }
  std::vector<Elem> elements() const;
  const std::vector<bool>& members() const noexcept { return members_; }

  bool is_additive_subgroup() const noexcept { return additive_subgroup_; }
  bool is_right_ideal() const noexcept { return right_ideal_; }
  bool is_left_ideal() const noexcept { return left_ideal_; }
  bool is_ideal() const noexcept { return right_ideal_ && left_ideal_; }

  RingSubset with_verified_flags() const;
  RingSubset intersect(const RingSubset& other) const;
  bool subset_of(const RingSubset& other) const;

  /// Same ring object and same members; flags are derived data and ignored.
  friend bool operator==(const RingSubset& a, const RingSubset& b);

 private:
  RingPtr ring_;
  std::vector<bool> members_;
  bool additive_subgroup_ = false;
  bool right_ideal_ = false;
  bool left_ideal_ = false;
};

struct IdempotentClass {
  Elem element;
  bool is_central = false;
  bool is_left_semicentral = false;
  bool is_right_semicentral = false;
};

bool scan_additive_subgroup(const RingSubset& s);
bool scan_right_ideal(const RingSubset& s);
bool scan_left_ideal(const RingSubset& s);

/// {a | x a = 0 for all x in X}
RingSubset right_annihilator(const RingSubset& x);
/// {a | a x = 0 for all x in X}
RingSubset left_annihilator(const RingSubset& x);

RingSubset additive_closure(const RingPtr& ring, std::span<const Elem> gens);
RingSubset right_ideal_closure(const RingPtr& ring, std::span<const Elem> gens);
RingSubset left_ideal_closure(const RingPtr& ring, std::span<const Elem> gens);
RingSubset ideal_closure(const RingPtr& ring, std::span<const Elem> gens);

/// eR = {e r | r in R}.
RingSubset principal_right_ideal(const RingPtr& ring, Elem e);
/// Re = {r e | r in R}.
RingSubset principal_left_ideal(const RingPtr& ring, Elem e);

bool is_idempotent(const FiniteRing& ring, Elem e);
bool is_left_semicentral(const FiniteRing& ring, Elem e);
bool is_right_semicentral(const FiniteRing& ring, Elem e);
bool is_central(const FiniteRing& ring, Elem e);

/// All idempotents in index order, classified by exhaustive scan.
std::vector<IdempotentClass> idempotent_set(const FiniteRing& ring);

/// Smallest family containing the input and closed under pairwise
/// intersection; duplicates removed, input order first, then discovery order.
std::vector<RingSubset> intersection_closure(const std::vector<RingSubset>& family);

/// A small generating set of (R,+), chosen greedily in index order.
std::vector<Elem> additive_generators(const RingPtr& ring);

}  // namespace oreqb
