#include "sumrank/skew.hpp"

#include <algorithm>
#include <set>

namespace sumrank {

namespace {

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void require_top(const std::vector<Elem>& c) {
  for (const auto& e : c)
    if (e.level != Level::top) throw Error(ErrorCode::level_mismatch, "skew polynomial coefficients live in L");
}

// Σ_j f_j · scalar_j · θ^{j mod r}, where scalar_j is what X^j contributes.
template <typename ScalarOf>
ThetaPoly fold_theta(const FieldTower& t, const SkewPoly& f, ScalarOf scalar_of) {
  ThetaPoly out;
  out.coeffs.assign(t.r(), t.zero());
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
    if (f.coeffs[j].is_zero()) continue;
    auto& slot = out.coeffs[j % t.r()];
    slot = t.add(slot, t.mul(f.coeffs[j], scalar_of(j)));
  }
  return out;
}

// X ↦ βθ, so X^j ↦ β θ(β) ⋯ θ^{j−1}(β) θ^j.
ThetaPoly evaluate_at_point(const FieldTower& t, const SkewPoly& f, Elem beta) {
  std::vector<Elem> prefix{t.one()};
  for (std::size_t j = 1; j < f.coeffs.size(); ++j) prefix.push_back(t.mul(prefix.back(), t.frobenius(beta, long(j) - 1)));
  return fold_theta(t, f, [&](std::size_t j) { return prefix[j]; });
}

}  // namespace

SkewPoly::SkewPoly(std::vector<Elem> c) : coeffs(std::move(c)) {
  require_top(coeffs);
  trim(coeffs);
}

SkewPoly SkewPoly::monomial(Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, Elem{0, Level::top});
  v[degree] = c;
  return SkewPoly(std::move(v));
}

SkewPoly skew_add(const FieldTower& f, const SkewPoly& a, const SkewPoly& b) {
  std::vector<Elem> c(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return SkewPoly(std::move(c));
}

SkewPoly skew_sub(const FieldTower& f, const SkewPoly& a, const SkewPoly& b) {
  std::vector<Elem> c(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return SkewPoly(std::move(c));
}

SkewPoly skew_scale(const FieldTower& f, Elem s, const SkewPoly& a) {
  std::vector<Elem> c(a.coeffs.size(), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.mul(s, a.coeffs[i]);
  return SkewPoly(std::move(c));
}

SkewPoly skew_mul(const FieldTower& f, const SkewPoly& a, const SkewPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> c(a.coeffs.size() + b.coeffs.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j].is_zero()) continue;
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs[i], f.frobenius(b.coeffs[j], long(i))));
    }
  }
  return SkewPoly(std::move(c));
}

SkewPoly build_h_lambda(const FieldTower& f, const std::vector<Elem>& lambdas) {
  SkewPoly h(std::vector<Elem>{f.one()});
  for (const auto& lambda : lambdas) {
    std::vector<Elem> factor(f.r() + 1, f.zero());
    factor[0] = f.neg(f.embed(lambda, Level::top));
    factor[f.r()] = f.one();
    h = skew_mul(f, h, SkewPoly(std::move(factor)));
  }
  return h;
}

QuotientCtx QuotientCtx::subgroup(std::shared_ptr<const FieldTower> tower, unsigned ell) {
  auto lambdas = tower->subgroup_lambda(ell);
  return QuotientCtx(std::move(tower), std::move(lambdas));
}

QuotientCtx::QuotientCtx(std::shared_ptr<const FieldTower> tower, std::vector<Elem> lambdas)
    : tower_(std::move(tower)), lambdas_(std::move(lambdas)) {
  if (!tower_) throw Error(ErrorCode::bad_tower, "null tower");
  if (lambdas_.empty()) throw Error(ErrorCode::bad_params, "Λ must be non-empty");
  if (lambdas_.size() % tower_->p() == 0) throw Error(ErrorCode::bad_params, "ℓ must be invertible mod p");
  std::set<std::uint32_t> seen;
  for (auto& l : lambdas_) {
    l = tower_->restrict(l, Level::mid);
    if (l.is_zero()) throw Error(ErrorCode::bad_params, "λ must be nonzero");
    if (!seen.insert(l.code).second) throw Error(ErrorCode::bad_params, "λ's must be distinct");
    alphas_.push_back(tower_->norm_preimage(l));
  }
  h_lambda_ = build_h_lambda(*tower_, lambdas_);
}

SkewPoly reduce(const SkewPoly& input, const QuotientCtx& ctx) {
  const FieldTower& f = ctx.tower();
  const auto& h = ctx.h_lambda();
  const long d = h.degree();
  SkewPoly rem = input;
  while (rem.degree() >= d) {
    const Elem lead = rem.coeffs.back();
    const auto shift = static_cast<std::size_t>(rem.degree() - d);
    rem = skew_sub(f, rem, skew_mul(f, SkewPoly::monomial(lead, shift), h));
  }
  return rem;
}

ThetaPoly theta_identity(const FieldTower& f) {
  ThetaPoly t;
  t.coeffs.assign(f.r(), f.zero());
  t.coeffs[0] = f.one();
  return t;
}

Elem theta_apply(const FieldTower& f, const ThetaPoly& t, Elem x) {
  Elem acc = f.zero();
  for (std::size_t j = 0; j < t.coeffs.size(); ++j) acc = f.add(acc, f.mul(t.coeffs[j], f.frobenius(x, long(j))));
  return acc;
}

ThetaPoly theta_compose(const FieldTower& f, const ThetaPoly& a, const ThetaPoly& b) {
  const unsigned r = f.r();
  ThetaPoly out;
  out.coeffs.assign(r, f.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      auto& slot = out.coeffs[(i + j) % r];
      slot = f.add(slot, f.mul(a.coeffs[i], f.frobenius(b.coeffs[j], long(i))));
    }
  return out;
}

Mat theta_matrix(const FieldTower& f, const ThetaPoly& t) {
  const unsigned r = f.r();
  Mat m(r, r, Level::mid);
  Elem basis = f.one();
  for (unsigned col = 0; col < r; ++col) {
    const auto c = f.coords(theta_apply(f, t, basis));
    for (unsigned row = 0; row < r; ++row) m(row, col) = Elem{c[row], Level::mid};
    basis = f.mul(basis, f.top_root());
  }
  return m;
}

std::size_t theta_rank(const FieldTower& f, const ThetaPoly& t) { return rank(f, theta_matrix(f, t)); }

ThetaPoly evaluate(const SkewPoly& poly, const QuotientCtx& ctx, std::size_t block, EvalRule rule) {
  if (block >= ctx.ell()) throw Error(ErrorCode::block_out_of_range, "block " + std::to_string(block));
  const FieldTower& f = ctx.tower();
  if (rule == EvalRule::norm_preimage) return evaluate_at_point(f, poly, ctx.alphas()[block]);
  const Elem lambda = f.embed(ctx.lambdas()[block], Level::top);
  return fold_theta(f, poly, [&](std::size_t j) { return f.pow(lambda, static_cast<long long>(j)); });
}

SumRankVector eval_map(const SkewPoly& poly, const QuotientCtx& ctx, EvalRule rule) {
  const SkewPoly reduced = reduce(poly, ctx);
  SumRankVector v;
  for (std::size_t i = 0; i < ctx.ell(); ++i) v.parts.push_back(evaluate(reduced, ctx, i, rule));
  return v;
}

std::size_t sum_rank_weight(const FieldTower& f, const SumRankVector& v) {
  std::size_t w = 0;
  for (const auto& part : v.parts) w += theta_rank(f, part);
  return w;
}

std::vector<Elem> to_k_coords(const SkewPoly& poly, const QuotientCtx& ctx) {
  const FieldTower& f = ctx.tower();
  const SkewPoly reduced = reduce(poly, ctx);
  std::vector<Elem> out;
  out.reserve(ctx.k_dimension());
  for (std::size_t i = 0; i < ctx.modulus_degree(); ++i)
    for (auto c : f.coords(reduced.coeff(i))) out.push_back({c, Level::mid});
  return out;
}

SkewPoly from_k_coords(const std::vector<Elem>& coords, const QuotientCtx& ctx) {
  const FieldTower& f = ctx.tower();
  const unsigned r = f.r();
  if (coords.size() != ctx.k_dimension()) throw Error(ErrorCode::length_mismatch, "coordinate vector length");
  std::vector<Elem> c;
  std::vector<std::uint32_t> buf(r);
  for (std::size_t i = 0; i < ctx.modulus_degree(); ++i) {
    for (unsigned t = 0; t < r; ++t) buf[t] = f.restrict(coords[i * r + t], Level::mid).code;
    c.push_back(f.from_coords(buf, Level::top));
  }
  return SkewPoly(std::move(c));
}

std::vector<Elem> to_k_coords(const SumRankVector& v, const FieldTower& f) {
  std::vector<Elem> out;
  for (const auto& part : v.parts)
    for (const auto& c : part.coeffs)
      for (auto d : f.coords(c)) out.push_back({d, Level::mid});
  return out;
}

namespace experimental {

Elem evaluation_side_form(const SkewPoly& a, const SkewPoly& b, const QuotientCtx& ctx) {
  const FieldTower& f = ctx.tower();
  const SkewPoly ra = reduce(a, ctx), rb = reduce(b, ctx);
  Elem acc = f.zero(Level::mid);
  for (std::size_t i = 0; i < ctx.ell(); ++i) {
    const ThetaPoly left = evaluate_at_point(f, ra, ctx.alphas()[i]);
    const ThetaPoly right = evaluate_at_point(f, rb, f.inv(ctx.alphas()[i]));
    const Mat m = theta_matrix(f, theta_compose(f, left, right));
    for (unsigned t = 0; t < f.r(); ++t) acc = f.add(acc, m(t, t));
  }
  return f.div(acc, f.from_int(ctx.ell(), Level::mid));
}

}  // namespace experimental

}  // namespace sumrank
