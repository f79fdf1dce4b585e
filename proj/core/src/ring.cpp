#include "oreqb/ring.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>

#include "oreqb/error.hpp"
#include "oreqb/expr.hpp"

namespace oreqb {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) throw OrderLimitExceeded(limit + 1, limit);
    r *= base;
  }
  return r;
}

void require_order(std::uint64_t order, const RingLimits& limits) {
  if (order == 0) throw DescriptorError("ring order must be positive");
  if (order > limits.max_order) throw OrderLimitExceeded(order, limits.max_order);
  if (order > 65536) throw OrderLimitExceeded(order, 65536);
}

bool needs_parens(const std::string& s) {
  return s.find_first_of("+-* ") != std::string::npos;
}

std::string quotient_name(const FiniteRing& base, std::span<const Elem> coeffs,
                          const std::string& var) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (base.is_zero(coeffs[k])) continue;
    const std::string& c = base.name(coeffs[k]);
    std::string term;
    if (k == 0) {
      term = c;
    } else {
      std::string mono = var;
      if (k > 1) mono += "^" + std::to_string(k);
      if (coeffs[k] == base.one()) {
        term = mono;
      } else {
        term = (needs_parens(c) ? "(" + c + ")" : c) + "*" + mono;
      }
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

struct TableBuilder {
  std::uint32_t n;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;

  explicit TableBuilder(std::uint32_t order)
      : n(order), add(std::size_t{order} * order), mul(std::size_t{order} * order) {}

  void set(std::uint32_t a, std::uint32_t b, std::uint32_t sum, std::uint32_t prod) {
    add[std::size_t{a} * n + b] = static_cast<std::uint16_t>(sum);
    mul[std::size_t{a} * n + b] = static_cast<std::uint16_t>(prod);
  }
};

RingPtr build(const RingDescriptor& d, const RingLimits& limits);

RingPtr build_modular(const RingDescriptor& d, const RingLimits& limits) {
  const std::uint32_t n = d.modulus;
  require_order(n, limits);
  TableBuilder t(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      t.set(a, b, (a + b) % n, static_cast<std::uint32_t>((std::uint64_t{a} * b) % n));
  std::vector<std::string> names(n);
  for (std::uint32_t a = 0; a < n; ++a) names[a] = std::to_string(a);
  return std::make_shared<FiniteRing>(n, std::move(t.add), std::move(t.mul), Elem{0},
                                      Elem{n == 1 ? 0u : 1u}, std::move(names), d,
                                      ModularShape{n});
}

RingPtr build_quotient(const RingDescriptor& d, const RingLimits& limits) {
  if (d.parts.size() != 1) throw DescriptorError("quotient needs exactly one base ring");
  if (d.poly.size() < 2) throw DescriptorError("quotient modulus must have degree >= 1");
  if (d.var.empty()) throw DescriptorError("quotient variable name must be non-empty");
  RingPtr base = build(d.parts[0], limits);
  const FiniteRing& B = *base;

  std::vector<Elem> modulus;
  for (const auto& lit : d.poly) modulus.push_back(parse_element(B, lit));
  if (modulus.back() != B.one())
    throw DescriptorError("quotient modulus must be monic (leading coefficient " +
                          B.name(modulus.back()) + ")");
  for (Elem c : modulus) {
    for (Elem x : B.elements()) {
      if (B.mul(c, x) != B.mul(x, c))
        throw DescriptorError("quotient modulus coefficient " + B.name(c) + " is not central");
    }
  }

  const std::size_t deg = modulus.size() - 1;
  const std::uint32_t m = static_cast<std::uint32_t>(B.order());
  const std::uint64_t order = checked_pow(m, deg, limits.max_order);
  require_order(order, limits);
  const auto n = static_cast<std::uint32_t>(order);

  QuotientShape shape{base, modulus, d.var};
  std::vector<std::vector<Elem>> coeffs(n);
  for (std::uint32_t i = 0; i < n; ++i) coeffs[i] = shape.coefficients(Elem{i});

  TableBuilder t(n);
  std::vector<Elem> sum(deg);
  std::vector<Elem> prod(2 * deg - 1);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto& ca = coeffs[a];
      const auto& cb = coeffs[b];
      for (std::size_t k = 0; k < deg; ++k) sum[k] = B.add(ca[k], cb[k]);
      std::fill(prod.begin(), prod.end(), B.zero());
      for (std::size_t i = 0; i < deg; ++i) {
        if (B.is_zero(ca[i])) continue;
        for (std::size_t j = 0; j < deg; ++j) prod[i + j] = B.add(prod[i + j], B.mul(ca[i], cb[j]));
      }
      // t^deg = -(m_0 + ... + m_{deg-1} t^{deg-1})
      for (std::size_t k = prod.size(); k-- > deg;) {
        const Elem c = prod[k];
        if (B.is_zero(c)) continue;
        for (std::size_t i = 0; i < deg; ++i)
          prod[k - deg + i] = B.sub(prod[k - deg + i], B.mul(c, modulus[i]));
        prod[k] = B.zero();
      }
      t.set(a, b, shape.encode(sum).index,
            shape.encode(std::span<const Elem>(prod.data(), deg)).index);
    }
  }
  std::vector<std::string> names(n);
  for (std::uint32_t i = 0; i < n; ++i) names[i] = quotient_name(B, coeffs[i], d.var);
  std::vector<Elem> one_c(deg, B.zero());
  one_c[0] = B.one();
  const Elem one = shape.encode(one_c);
  return std::make_shared<FiniteRing>(n, std::move(t.add), std::move(t.mul), Elem{0}, one,
                                      std::move(names), d, std::move(shape));
}

std::string matrix_name(const FiniteRing& B, std::span<const Elem> entries, std::uint32_t k) {
  std::string out = "[";
  for (std::uint32_t r = 0; r < k; ++r) {
    if (r) out += ",";
    out += "[";
    for (std::uint32_t c = 0; c < k; ++c) {
      if (c) out += ",";
      out += B.name(entries[r * k + c]);
    }
    out += "]";
  }
  return out + "]";
}

RingPtr build_matrix(const RingDescriptor& d, const RingLimits& limits, bool triangular) {
  if (d.parts.size() != 1) throw DescriptorError("matrix ring needs exactly one base ring");
  const std::uint32_t k = triangular ? 2 : d.matrix_size;
  if (k < 1 || k > 2) throw DescriptorError("full_matrix supports k = 1 or k = 2");
  RingPtr base = build(d.parts[0], limits);
  const FiniteRing& B = *base;
  const std::uint32_t m = static_cast<std::uint32_t>(B.order());
  const std::uint64_t free_entries = triangular ? 3 : std::uint64_t{k} * k;
  const std::uint64_t order = checked_pow(m, free_entries, limits.max_order);
  require_order(order, limits);
  const auto n = static_cast<std::uint32_t>(order);

  MatrixShape shape{base, k, triangular};
  std::vector<std::vector<Elem>> ent(n);
  for (std::uint32_t i = 0; i < n; ++i) ent[i] = shape.entries(Elem{i});

  TableBuilder t(n);
  std::vector<Elem> s(k * k), p(k * k);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto& x = ent[a];
      const auto& y = ent[b];
      for (std::uint32_t i = 0; i < k * k; ++i) s[i] = B.add(x[i], y[i]);
      for (std::uint32_t r = 0; r < k; ++r) {
        for (std::uint32_t c = 0; c < k; ++c) {
          Elem acc = B.zero();
          for (std::uint32_t l = 0; l < k; ++l) acc = B.add(acc, B.mul(x[r * k + l], y[l * k + c]));
          p[r * k + c] = acc;
        }
      }
      t.set(a, b, shape.encode(s).index, shape.encode(p).index);
    }
  }
  std::vector<std::string> names(n);
  for (std::uint32_t i = 0; i < n; ++i) names[i] = matrix_name(B, ent[i], k);
  std::vector<Elem> id(k * k, B.zero());
  for (std::uint32_t i = 0; i < k; ++i) id[i * k + i] = B.one();
  const Elem one = shape.encode(id);
  return std::make_shared<FiniteRing>(n, std::move(t.add), std::move(t.mul), Elem{0}, one,
                                      std::move(names), d, std::move(shape));
}

RingPtr build_product(const RingDescriptor& d, const RingLimits& limits) {
  if (d.parts.size() != 2) throw DescriptorError("product needs exactly two factor rings");
  RingPtr l = build(d.parts[0], limits);
  RingPtr r = build(d.parts[1], limits);
  const std::uint64_t order = std::uint64_t{l->order()} * r->order();
  require_order(order, limits);
  const auto n = static_cast<std::uint32_t>(order);
  ProductShape shape{l, r};
  TableBuilder t(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    const auto [a1, a2] = shape.split(Elem{a});
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto [b1, b2] = shape.split(Elem{b});
      t.set(a, b, shape.encode(l->add(a1, b1), r->add(a2, b2)).index,
            shape.encode(l->mul(a1, b1), r->mul(a2, b2)).index);
    }
  }
  std::vector<std::string> names(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    const auto [a1, a2] = shape.split(Elem{a});
    names[a] = "(" + l->name(a1) + "," + r->name(a2) + ")";
  }
  const Elem one = shape.encode(l->one(), r->one());
  const Elem zero = shape.encode(l->zero(), r->zero());
  return std::make_shared<FiniteRing>(n, std::move(t.add), std::move(t.mul), zero, one,
                                      std::move(names), d, std::move(shape));
}

RingPtr build_subring(const RingDescriptor& d, const RingLimits& limits) {
  if (d.parts.size() != 1) throw DescriptorError("subring needs exactly one ambient ring");
  RingPtr amb = build(d.parts[0], limits);
  const FiniteRing& A = *amb;

  std::vector<bool> in(A.order(), false);
  std::vector<Elem> list;
  std::deque<Elem> queue;
  auto push = [&](Elem e) {
    if (!in[e.index]) {
      in[e.index] = true;
      list.push_back(e);
      queue.push_back(e);
    }
  };
  push(A.zero());
  push(A.one());
  for (const auto& g : d.generators) push(parse_element(A, g));
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    push(A.neg(x));
    const std::size_t count = list.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Elem y = list[i];
      push(A.add(x, y));
      push(A.mul(x, y));
      push(A.mul(y, x));
    }
  }
  std::sort(list.begin(), list.end());
  const auto n = static_cast<std::uint32_t>(list.size());
  require_order(n, limits);

  SubringShape shape{amb, list, std::vector<std::int64_t>(A.order(), -1)};
  for (std::uint32_t i = 0; i < n; ++i) shape.from_ambient[list[i].index] = i;
  TableBuilder t(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      t.set(a, b, static_cast<std::uint32_t>(shape.from_ambient[A.add(list[a], list[b]).index]),
            static_cast<std::uint32_t>(shape.from_ambient[A.mul(list[a], list[b]).index]));
    }
  }
  std::vector<std::string> names(n);
  for (std::uint32_t i = 0; i < n; ++i) names[i] = A.name(list[i]);
  const Elem zero{static_cast<std::uint32_t>(shape.from_ambient[A.zero().index])};
  const Elem one{static_cast<std::uint32_t>(shape.from_ambient[A.one().index])};
  return std::make_shared<FiniteRing>(n, std::move(t.add), std::move(t.mul), zero, one,
                                      std::move(names), d, std::move(shape));
}

RingPtr build_table(const RingDescriptor& d, const RingLimits& limits) {
  if (!d.tables) throw DescriptorError("table descriptor without tables");
  const RawTables& raw = *d.tables;
  const std::uint32_t n = raw.order;
  require_order(n, limits);
  auto check_square = [&](const std::vector<std::vector<std::uint32_t>>& tab, const char* what) {
    if (tab.size() != n) throw DescriptorError(std::string(what) + " table has wrong row count");
    for (const auto& row : tab) {
      if (row.size() != n) throw DescriptorError(std::string(what) + " table has a ragged row");
      for (auto v : row)
        if (v >= n) throw DescriptorError(std::string(what) + " table entry out of range");
    }
  };
  check_square(raw.add, "addition");
  check_square(raw.mul, "multiplication");
  if (raw.zero >= n || raw.one >= n) throw DescriptorError("zero/one index out of range");
  if (!raw.names.empty() && raw.names.size() != n)
    throw DescriptorError("names list must have one entry per element");
  TableBuilder t(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t.set(a, b, raw.add[a][b], raw.mul[a][b]);
  std::vector<std::string> names = raw.names;
  if (names.empty()) {
    names.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
  }
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DescriptorError("element names must be distinct");
  }
  return std::make_shared<FiniteRing>(n, std::move(t.add), std::move(t.mul), Elem{raw.zero},
                                      Elem{raw.one}, std::move(names), d, TableShape{});
}

RingPtr build(const RingDescriptor& d, const RingLimits& limits) {
  RingPtr ring;
  switch (d.kind) {
    case RingDescriptor::Kind::Modular: ring = build_modular(d, limits); break;
    case RingDescriptor::Kind::Quotient: ring = build_quotient(d, limits); break;
    case RingDescriptor::Kind::UpperTriangular: ring = build_matrix(d, limits, true); break;
    case RingDescriptor::Kind::FullMatrix: ring = build_matrix(d, limits, false); break;
    case RingDescriptor::Kind::Product: ring = build_product(d, limits); break;
    case RingDescriptor::Kind::Subring: ring = build_subring(d, limits); break;
    case RingDescriptor::Kind::Table: ring = build_table(d, limits); break;
  }
  verify_ring_axioms(*ring, limits);
  return ring;
}

// Adds the cyclic subgroup generated by t to the subgroup held in
// (member, list). Returns false when t was already a member.
bool extend_subgroup(const FiniteRing& R, std::vector<bool>& member, std::vector<Elem>& list,
                     Elem t) {
  if (member[t.index]) return false;
  std::vector<Elem> frontier = list;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier) {
      const Elem y = R.add(x, t);
      if (!member[y.index]) {
        member[y.index] = true;
        list.push_back(y);
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return true;
}

}  // namespace

RingDescriptor RingDescriptor::modular(std::uint32_t n) {
  RingDescriptor d;
  d.kind = Kind::Modular;
  d.modulus = n;
  return d;
}

RingDescriptor RingDescriptor::quotient(RingDescriptor base, std::vector<std::string> monic,
                                        std::string var) {
  RingDescriptor d;
  d.kind = Kind::Quotient;
  d.poly = std::move(monic);
  d.var = std::move(var);
  d.parts.push_back(std::move(base));
  return d;
}

RingDescriptor RingDescriptor::upper_triangular(RingDescriptor base) {
  RingDescriptor d;
  d.kind = Kind::UpperTriangular;
  d.parts.push_back(std::move(base));
  return d;
}

RingDescriptor RingDescriptor::full_matrix(RingDescriptor base, std::uint32_t k) {
  RingDescriptor d;
  d.kind = Kind::FullMatrix;
  d.matrix_size = k;
  d.parts.push_back(std::move(base));
  return d;
}

RingDescriptor RingDescriptor::product(RingDescriptor left, RingDescriptor right) {
  RingDescriptor d;
  d.kind = Kind::Product;
  d.parts.push_back(std::move(left));
  d.parts.push_back(std::move(right));
  return d;
}

RingDescriptor RingDescriptor::subring(RingDescriptor base, std::vector<std::string> generators) {
  RingDescriptor d;
  d.kind = Kind::Subring;
  d.generators = std::move(generators);
  d.parts.push_back(std::move(base));
  return d;
}

RingDescriptor RingDescriptor::table(RawTables tables) {
  RingDescriptor d;
  d.kind = Kind::Table;
  d.tables = std::move(tables);
  return d;
}

std::string_view kind_name(RingDescriptor::Kind kind) {
  switch (kind) {
    case RingDescriptor::Kind::Modular: return "modular";
    case RingDescriptor::Kind::Quotient: return "quotient";
    case RingDescriptor::Kind::UpperTriangular: return "upper_triangular_2x2";
    case RingDescriptor::Kind::FullMatrix: return "full_matrix";
    case RingDescriptor::Kind::Product: return "product";
    case RingDescriptor::Kind::Subring: return "subring";
    case RingDescriptor::Kind::Table: return "table";
  }
  return "unknown";
}

std::vector<Elem> QuotientShape::coefficients(Elem e) const {
  const std::size_t m = base->order();
  std::vector<Elem> c(degree());
  std::uint32_t v = e.index;
  for (auto& x : c) {
    x = Elem{static_cast<std::uint32_t>(v % m)};
    v /= static_cast<std::uint32_t>(m);
  }
  return c;
}

Elem QuotientShape::encode(std::span<const Elem> coeffs) const {
  const std::size_t m = base->order();
  std::uint64_t v = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * m + coeffs[k].index;
  return Elem{static_cast<std::uint32_t>(v)};
}

std::vector<Elem> MatrixShape::entries(Elem e) const {
  const std::uint32_t m = static_cast<std::uint32_t>(base->order());
  std::uint32_t v = e.index;
  auto next = [&] {
    const Elem x{v % m};
    v /= m;
    return x;
  };
  if (upper_triangular) {
    const Elem a = next(), b = next(), c = next();
    return {a, b, base->zero(), c};
  }
  std::vector<Elem> out(std::size_t{size} * size);
  for (auto& x : out) x = next();
  return out;
}

Elem MatrixShape::encode(std::span<const Elem> entries) const {
  const std::uint64_t m = base->order();
  if (upper_triangular) {
    return Elem{static_cast<std::uint32_t>(entries[0].index + m * entries[1].index +
                                           m * m * entries[3].index)};
  }
  std::uint64_t v = 0;
  for (std::size_t k = entries.size(); k-- > 0;) v = v * m + entries[k].index;
  return Elem{static_cast<std::uint32_t>(v)};
}

std::pair<Elem, Elem> ProductShape::split(Elem e) const {
  const auto m = static_cast<std::uint32_t>(left->order());
  return {Elem{e.index % m}, Elem{e.index / m}};
}

Elem ProductShape::encode(Elem l, Elem r) const {
  return Elem{static_cast<std::uint32_t>(l.index + left->order() * r.index)};
}

std::optional<Elem> SubringShape::lower(Elem ambient_elem) const {
  const std::int64_t i = from_ambient.at(ambient_elem.index);
  if (i < 0) return std::nullopt;
  return Elem{static_cast<std::uint32_t>(i)};
}

FiniteRing::FiniteRing(std::uint32_t order, std::vector<std::uint16_t> add,
                       std::vector<std::uint16_t> mul, Elem zero, Elem one,
                       std::vector<std::string> names, RingDescriptor descriptor, Shape shape)
    : order_(order),
      add_(std::move(add)),
      mul_(std::move(mul)),
      neg_(order),
      zero_(zero),
      one_(one),
      names_(std::move(names)),
      descriptor_(std::move(descriptor)),
      shape_(std::move(shape)) {
  for (std::uint32_t a = 0; a < order_; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < order_; ++b) {
      if (add_[std::size_t{a} * order_ + b] == zero_.index) {
        neg_[a] = static_cast<std::uint16_t>(b);
        found = true;
        break;
      }
    }
    if (!found) throw RingAxiomViolation("additive inverse", a, 0, 0);
  }
}

Elem FiniteRing::from_int(std::int64_t k) const {
  const std::int64_t c = characteristic();
  std::int64_t r = k % c;
  if (r < 0) r += c;
  Elem acc = zero_;
  for (std::int64_t i = 0; i < r; ++i) acc = add(acc, one_);
  return acc;
}

Elem FiniteRing::element(std::uint64_t index) const {
  if (index >= order_)
    throw IndexOutOfRange("element index " + std::to_string(index) + " outside ring of order " +
                          std::to_string(order_));
  return Elem{static_cast<std::uint32_t>(index)};
}

std::optional<Elem> FiniteRing::find(std::string_view name) const {
  for (std::uint32_t i = 0; i < order_; ++i)
    if (names_[i] == name) return Elem{i};
  return std::nullopt;
}

bool FiniteRing::is_commutative() const {
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = a + 1; b < order_; ++b)
      if (mul(Elem{a}, Elem{b}) != mul(Elem{b}, Elem{a})) return false;
  return true;
}

std::vector<Elem> FiniteRing::elements() const {
  std::vector<Elem> out(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out[i] = Elem{i};
  return out;
}

std::uint32_t FiniteRing::characteristic() const {
  std::uint32_t k = 1;
  Elem acc = one_;
  while (acc != zero_) {
    acc = add(acc, one_);
    ++k;
  }
  return k;
}

void verify_ring_axioms(const FiniteRing& R, const RingLimits& limits) {
  const auto n = static_cast<std::uint32_t>(R.order());
  const Elem z = R.zero(), u = R.one();
  for (std::uint32_t i = 0; i < n; ++i) {
    const Elem a{i};
    if (R.add(z, a) != a || R.add(a, z) != a) throw RingAxiomViolation("additive identity", i, 0, 0);
    if (R.add(a, R.neg(a)) != z) throw RingAxiomViolation("additive inverse", i, 0, 0);
    if (R.mul(u, a) != a || R.mul(a, u) != a)
      throw RingAxiomViolation("multiplicative identity", i, 0, 0);
    for (std::uint32_t j = 0; j < n; ++j) {
      const Elem b{j};
      if (R.add(a, b) != R.add(b, a)) throw RingAxiomViolation("additive commutativity", i, j, 0);
    }
  }
  auto triple = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    const Elem a{i}, b{j}, c{k};
    if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
      throw RingAxiomViolation("additive associativity", i, j, k);
    if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
      throw RingAxiomViolation("multiplicative associativity", i, j, k);
    if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
      throw RingAxiomViolation("left distributivity", i, j, k);
    if (R.mul(R.add(a, b), c) != R.add(R.mul(a, c), R.mul(b, c)))
      throw RingAxiomViolation("right distributivity", i, j, k);
  };
  if (n <= limits.exhaustive_axiom_order) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t k = 0; k < n; ++k) triple(i, j, k);
  } else {
    std::mt19937_64 rng(limits.sample_seed);
    for (std::uint64_t s = 0; s < limits.sampled_triples; ++s) {
      const auto i = static_cast<std::uint32_t>(rng() % n);
      const auto j = static_cast<std::uint32_t>(rng() % n);
      const auto k = static_cast<std::uint32_t>(rng() % n);
      triple(i, j, k);
    }
  }
}

RingPtr construct_ring(const RingDescriptor& descriptor, const RingLimits& limits) {
  return build(descriptor, limits);
}

// ---------------------------------------------------------------------------
// Subsets

RingSubset::RingSubset(RingPtr ring, std::vector<bool> members)
    : ring_(std::move(ring)), members_(std::move(members)) {
  if (!ring_) throw Error("subset without a ring");
  if (members_.size() != ring_->order()) throw Error("membership vector has the wrong length");
}

RingSubset RingSubset::empty(RingPtr ring) {
  const std::size_t n = ring->order();
  return RingSubset(std::move(ring), std::vector<bool>(n, false));
}

RingSubset RingSubset::whole(RingPtr ring) {
  const std::size_t n = ring->order();
  return RingSubset(std::move(ring), std::vector<bool>(n, true)).with_verified_flags();
}

RingSubset RingSubset::of(RingPtr ring, std::span<const Elem> elems) {
  std::vector<bool> m(ring->order(), false);
  for (Elem e : elems) m.at(e.index) = true;
  return RingSubset(std::move(ring), std::move(m));
}

std::size_t RingSubset::size() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<Elem> RingSubset::elements() const {
  std::vector<Elem> out;
  for (std::uint32_t i = 0; i < members_.size(); ++i)
    if (members_[i]) out.push_back(Elem{i});
  return out;
}

RingSubset RingSubset::with_verified_flags() const {
  RingSubset s = *this;
  s.additive_subgroup_ = scan_additive_subgroup(s);
  s.right_ideal_ = s.additive_subgroup_ && scan_right_ideal(s);
  s.left_ideal_ = s.additive_subgroup_ && scan_left_ideal(s);
  return s;
}

RingSubset RingSubset::intersect(const RingSubset& other) const {
  if (ring_ != other.ring_) throw ContextMismatch();
  std::vector<bool> m(members_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = members_[i] && other.members_[i];
  return RingSubset(ring_, std::move(m));
}

bool RingSubset::subset_of(const RingSubset& other) const {
  if (ring_ != other.ring_) throw ContextMismatch();
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] && !other.members_[i]) return false;
  return true;
}

bool operator==(const RingSubset& a, const RingSubset& b) {
  return a.ring_ == b.ring_ && a.members_ == b.members_;
}

bool scan_additive_subgroup(const RingSubset& s) {
  const FiniteRing& R = s.ring();
  if (!s.contains(R.zero())) return false;
  const auto elems = s.elements();
  for (Elem a : elems) {
    if (!s.contains(R.neg(a))) return false;
    for (Elem b : elems)
      if (!s.contains(R.add(a, b))) return false;
  }
  return true;
}

bool scan_right_ideal(const RingSubset& s) {
  const FiniteRing& R = s.ring();
  for (Elem a : s.elements())
    for (Elem r : R.elements())
      if (!s.contains(R.mul(a, r))) return false;
  return true;
}

bool scan_left_ideal(const RingSubset& s) {
  const FiniteRing& R = s.ring();
  for (Elem a : s.elements())
    for (Elem r : R.elements())
      if (!s.contains(R.mul(r, a))) return false;
  return true;
}

RingSubset right_annihilator(const RingSubset& x) {
  const FiniteRing& R = x.ring();
  const auto xs = x.elements();
  std::vector<bool> m(R.order(), false);
  for (Elem a : R.elements()) {
    bool ok = true;
    for (Elem y : xs) {
      if (!R.is_zero(R.mul(y, a))) {
        ok = false;
        break;
      }
    }
    m[a.index] = ok;
  }
  return RingSubset(x.ring_ptr(), std::move(m)).with_verified_flags();
}

RingSubset left_annihilator(const RingSubset& x) {
  const FiniteRing& R = x.ring();
  const auto xs = x.elements();
  std::vector<bool> m(R.order(), false);
  for (Elem a : R.elements()) {
    bool ok = true;
    for (Elem y : xs) {
      if (!R.is_zero(R.mul(a, y))) {
        ok = false;
        break;
      }
    }
    m[a.index] = ok;
  }
  return RingSubset(x.ring_ptr(), std::move(m)).with_verified_flags();
}

RingSubset additive_closure(const RingPtr& ring, std::span<const Elem> gens) {
  std::vector<bool> member(ring->order(), false);
  std::vector<Elem> list{ring->zero()};
  member[ring->zero().index] = true;
  for (Elem g : gens) extend_subgroup(*ring, member, list, g);
  return RingSubset(ring, std::move(member)).with_verified_flags();
}

namespace {

struct GrownSubgroup {
  std::vector<bool> member;
  std::vector<Elem> list;
  std::vector<Elem> generators;
};

GrownSubgroup grow(const RingPtr& ring, std::span<const Elem> gens, bool right, bool left,
                   GrownSubgroup start) {
  const FiniteRing& R = *ring;
  for (Elem g : gens) {
    for (Elem r : R.elements()) {
      if (right && extend_subgroup(R, start.member, start.list, R.mul(g, r)))
        start.generators.push_back(R.mul(g, r));
      if (left && extend_subgroup(R, start.member, start.list, R.mul(r, g)))
        start.generators.push_back(R.mul(r, g));
    }
  }
  return start;
}

GrownSubgroup trivial_subgroup(const FiniteRing& R) {
  GrownSubgroup s;
  s.member.assign(R.order(), false);
  s.member[R.zero().index] = true;
  s.list.push_back(R.zero());
  return s;
}

}  // namespace

RingSubset right_ideal_closure(const RingPtr& ring, std::span<const Elem> gens) {
  auto g = grow(ring, gens, true, false, trivial_subgroup(*ring));
  return RingSubset(ring, std::move(g.member)).with_verified_flags();
}

RingSubset left_ideal_closure(const RingPtr& ring, std::span<const Elem> gens) {
  auto g = grow(ring, gens, false, true, trivial_subgroup(*ring));
  return RingSubset(ring, std::move(g.member)).with_verified_flags();
}

RingSubset ideal_closure(const RingPtr& ring, std::span<const Elem> gens) {
  auto right = grow(ring, gens, true, false, trivial_subgroup(*ring));
  const std::vector<Elem> additive_gens = right.generators;
  auto both = grow(ring, additive_gens, false, true, std::move(right));
  return RingSubset(ring, std::move(both.member)).with_verified_flags();
}

RingSubset principal_right_ideal(const RingPtr& ring, Elem e) {
  std::vector<bool> m(ring->order(), false);
  for (Elem r : ring->elements()) m[ring->mul(e, r).index] = true;
  return RingSubset(ring, std::move(m));
}

RingSubset principal_left_ideal(const RingPtr& ring, Elem e) {
  std::vector<bool> m(ring->order(), false);
  for (Elem r : ring->elements()) m[ring->mul(r, e).index] = true;
  return RingSubset(ring, std::move(m));
}

bool is_idempotent(const FiniteRing& R, Elem e) { return R.mul(e, e) == e; }

bool is_left_semicentral(const FiniteRing& R, Elem e) {
  for (Elem x : R.elements())
    if (R.mul(R.mul(e, x), e) != R.mul(x, e)) return false;
  return true;
}

bool is_right_semicentral(const FiniteRing& R, Elem e) {
  for (Elem x : R.elements())
    if (R.mul(R.mul(e, x), e) != R.mul(e, x)) return false;
  return true;
}

bool is_central(const FiniteRing& R, Elem e) {
  for (Elem x : R.elements())
    if (R.mul(e, x) != R.mul(x, e)) return false;
  return true;
}

std::vector<IdempotentClass> idempotent_set(const FiniteRing& R) {
  std::vector<IdempotentClass> out;
  for (Elem e : R.elements()) {
    if (!is_idempotent(R, e)) continue;
    IdempotentClass c;
    c.element = e;
    c.is_left_semicentral = is_left_semicentral(R, e);
    c.is_right_semicentral = is_right_semicentral(R, e);
    c.is_central = is_central(R, e);
    out.push_back(c);
  }
  return out;
}

std::vector<RingSubset> intersection_closure(const std::vector<RingSubset>& family) {
  std::vector<RingSubset> out;
  std::unordered_map<std::vector<bool>, std::size_t> seen;
  auto add = [&](const RingSubset& s) {
    if (!out.empty() && s.ring_ptr() != out.front().ring_ptr()) throw ContextMismatch();
    if (seen.emplace(s.members(), out.size()).second) out.push_back(s);
  };
  for (const auto& s : family) add(s);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      RingSubset meet = out[j].intersect(out[k]);
      if (!seen.contains(meet.members())) add(meet.with_verified_flags());
    }
  }
  return out;
}

std::vector<Elem> additive_generators(const RingPtr& ring) {
  std::vector<bool> member(ring->order(), false);
  std::vector<Elem> list{ring->zero()};
  member[ring->zero().index] = true;
  std::vector<Elem> gens;
  for (Elem e : ring->elements())
    if (extend_subgroup(*ring, member, list, e)) gens.push_back(e);
  return gens;
}

}  // namespace oreqb
