#include "oreqb/ore_poly.hpp"

#include <algorithm>
#include <cmath>

#include "oreqb/error.hpp"
#include "oreqb/expr.hpp"

namespace oreqb {

namespace {

void normalize(const FiniteRing& R, std::vector<Elem>& c) {
  while (!c.empty() && R.is_zero(c.back())) c.pop_back();
}

void require_same(const OrePoly& p, const OrePoly& q) {
  if (p.context() != q.context()) throw ContextMismatch();
}

}  // namespace

std::size_t Degree::value() const {
  if (!value_) throw Error("degree of the zero polynomial is -inf");
  return *value_;
}

std::string Degree::to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

OrePoly::OrePoly(ContextPtr ctx, std::vector<Elem> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (!ctx_) throw Error("polynomial without an Ore context");
  for (Elem e : coeffs_)
    if (e.index >= ctx_->ring().order()) throw IndexOutOfRange("coefficient outside the ring");
  normalize(ctx_->ring(), coeffs_);
}

OrePoly OrePoly::zero(ContextPtr ctx) { return OrePoly(std::move(ctx), {}); }

OrePoly OrePoly::constant(ContextPtr ctx, Elem a) { return OrePoly(std::move(ctx), {a}); }

OrePoly OrePoly::monomial(ContextPtr ctx, Elem a, std::size_t k) {
  std::vector<Elem> c(k + 1, ctx->ring().zero());
  c[k] = a;
  return OrePoly(std::move(ctx), std::move(c));
}

Elem OrePoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : ctx_->ring().zero();
}

Degree OrePoly::degree() const {
  return coeffs_.empty() ? Degree::neg_inf() : Degree(coeffs_.size() - 1);
}

Elem OrePoly::leading() const {
  if (coeffs_.empty()) throw Error("the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

OrePoly ore_add(const OrePoly& p, const OrePoly& q) {
  require_same(p, q);
  const FiniteRing& R = p.context()->ring();
  std::vector<Elem> c(std::max(p.coeffs().size(), q.coeffs().size()), R.zero());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = R.add(p.coeff(k), q.coeff(k));
  return OrePoly(p.context(), std::move(c));
}

OrePoly ore_neg(const OrePoly& p) {
  const FiniteRing& R = p.context()->ring();
  std::vector<Elem> c = p.coeffs();
  for (auto& e : c) e = R.neg(e);
  return OrePoly(p.context(), std::move(c));
}

OrePoly ore_sub(const OrePoly& p, const OrePoly& q) { return ore_add(p, ore_neg(q)); }

void mul_coefficients(const FiniteRing& R, const WordTableView& table, std::span<const Elem> a,
                      std::span<const Elem> b, std::vector<Elem>& out) {
  out.clear();
  if (a.empty() || b.empty()) return;
  out.assign(a.size() + b.size() - 1, R.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Elem ai = a[i];
    if (R.is_zero(ai)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Elem bj = b[j];
      if (R.is_zero(bj)) continue;
      for (std::size_t k = 0; k <= i; ++k) {
        const Elem shifted = table.f(k, i)[bj.index];
        if (R.is_zero(shifted)) continue;
        out[k + j] = R.add(out[k + j], R.mul(ai, shifted));
      }
    }
  }
}

OrePoly ore_mul(const OrePoly& p, const OrePoly& q) {
  require_same(p, q);
  if (p.is_zero() || q.is_zero()) return OrePoly::zero(p.context());
  const auto& ctx = *p.context();
  const auto table = ctx.word_table(p.coeffs().size() - 1);
  std::vector<Elem> out;
  mul_coefficients(ctx.ring(), table, p.coeffs(), q.coeffs(), out);
  return OrePoly(p.context(), std::move(out));
}

bool ore_eq(const OrePoly& p, const OrePoly& q) {
  require_same(p, q);
  return p.coeffs() == q.coeffs();
}

OrePoly operator+(const OrePoly& a, const OrePoly& b) { return ore_add(a, b); }
OrePoly operator-(const OrePoly& a, const OrePoly& b) { return ore_sub(a, b); }
OrePoly operator-(const OrePoly& a) { return ore_neg(a); }
OrePoly operator*(const OrePoly& a, const OrePoly& b) { return ore_mul(a, b); }
bool operator==(const OrePoly& a, const OrePoly& b) { return ore_eq(a, b); }

OrePoly monomial_shift(const ContextPtr& ctx, std::size_t n, Elem r) {
  const auto table = ctx->word_table(n);
  std::vector<Elem> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = table.f(i, n)[r.index];
  return OrePoly(ctx, std::move(c));
}

long double search_size(std::size_t ring_order, std::size_t k) {
  return std::pow(static_cast<long double>(ring_order), static_cast<long double>(k));
}

std::vector<OrePoly> idempotent_search(const ContextPtr& ctx, std::size_t max_degree,
                                       std::uint64_t budget) {
  const FiniteRing& R = ctx->ring();
  const std::size_t len = max_degree + 1;
  const long double required = search_size(R.order(), len);
  if (required > static_cast<long double>(budget)) throw BudgetExceeded(required, budget);

  const auto table = ctx->word_table(max_degree);
  const auto n = static_cast<std::uint32_t>(R.order());
  std::vector<Elem> e(len, R.zero());
  std::vector<Elem> sq;
  std::vector<OrePoly> found;
  while (true) {
    mul_coefficients(R, table, e, e, sq);
    bool idem = true;
    for (std::size_t k = 0; k < sq.size(); ++k) {
      const Elem want = k < len ? e[k] : R.zero();
      if (sq[k] != want) {
        idem = false;
        break;
      }
    }
    if (idem) found.emplace_back(ctx, e);
    std::size_t pos = 0;
    while (pos < len && e[pos].index + 1 == n) e[pos++] = Elem{0};
    if (pos == len) break;
    e[pos] = Elem{e[pos].index + 1};
  }
  return found;
}

OrePoly parse_poly(const ContextPtr& ctx, std::string_view text) {
  return OrePoly(ctx, parse_coefficient_list(ctx->ring(), text));
}

std::string format_poly(const OrePoly& p) {
  return format_coefficient_list(p.context()->ring(), p.coeffs());
}

std::string pretty_poly(const OrePoly& p) {
  const FiniteRing& R = p.context()->ring();
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Elem c = p.coeffs()[k];
    if (R.is_zero(c)) continue;
    std::string term;
    const std::string& name = R.name(c);
    if (k == 0) {
      term = name;
    } else {
      const std::string mono = k == 1 ? "x" : "x^" + std::to_string(k);
      if (c == R.one()) {
        term = mono;
      } else if (name.find_first_of("+-* ") != std::string::npos) {
        term = "(" + name + ")*" + mono;
      } else {
        term = name + "*" + mono;
      }
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace oreqb
