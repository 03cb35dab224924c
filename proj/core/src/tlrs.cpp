#include "sumrank/tlrs.hpp"

namespace sumrank::tlrs {

void validate(const TlrsParams& p) {
  const auto& ctx = p.ctx;
  const std::size_t ell_r = ctx.modulus_degree();
  if (p.k < 1 || p.k + 1 > ell_r)
    throw Error(ErrorCode::bad_params, "k must satisfy 1 <= k <= ell*r - 1 (k=" + std::to_string(p.k) + ")");
  if (p.h >= ctx.r()) throw Error(ErrorCode::bad_params, "h must satisfy 0 <= h <= r - 1");
  if (p.eta.level != Level::top || p.eta.is_zero()) throw Error(ErrorCode::bad_params, "eta must be a nonzero element of L");
}

TlrsCode build_code(const TlrsParams& params) {
  validate(params);
  const FieldTower& f = params.ctx.tower();
  TlrsCode code{params, {}, {}};
  Elem beta = f.one();
  for (unsigned t = 0; t < f.r(); ++t) {
    code.k_basis_of_L.push_back(beta);
    beta = f.mul(beta, f.top_root());
  }
  for (unsigned j = 1; j < params.k; ++j)
    for (const auto& b : code.k_basis_of_L) code.basis_polys.push_back(SkewPoly::monomial(b, j));
  for (const auto& b : code.k_basis_of_L) {
    std::vector<Elem> c(params.k + 1, f.zero());
    c[0] = b;
    c[params.k] = f.mul(params.eta, f.frobenius(b, params.h));
    code.basis_polys.emplace_back(std::move(c));
  }
  return code;
}

Elem lambda_form(const SkewPoly& a, const SkewPoly& b, const QuotientCtx& ctx) {
  const FieldTower& f = ctx.tower();
  const SkewPoly ra = reduce(a, ctx), rb = reduce(b, ctx);
  Elem acc = f.zero();
  const std::size_t n = std::min(ra.coeffs.size(), rb.coeffs.size());
  for (std::size_t i = 0; i < n; ++i) acc = f.add(acc, f.mul(ra.coeffs[i], rb.coeffs[i]));
  return f.trace(acc);
}

Mat gram_entrywise(const TlrsCode& code) {
  const std::size_t n = code.basis_polys.size();
  Mat g(n, n, Level::mid);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = lambda_form(code.basis_polys[i], code.basis_polys[j], code.params.ctx);
  return g;
}

GramBlocks gram_blocks(const TlrsCode& code) {
  const auto& p = code.params;
  const FieldTower& f = p.ctx.tower();
  const unsigned r = f.r();
  const auto& beta = code.k_basis_of_L;

  GramBlocks out;
  out.alpha = f.frobenius(f.add(f.one(), f.mul(p.eta, p.eta)), -static_cast<long long>(p.h));
  out.m_block = Mat(r, r, Level::mid);
  out.b_block = Mat(r, r, Level::mid);
  for (unsigned t = 0; t < r; ++t)
    for (unsigned u = 0; u < r; ++u) {
      const Elem prod = f.mul(beta[t], beta[u]);
      out.m_block(t, u) = f.trace(prod);
      out.b_block(t, u) = f.trace(f.mul(out.alpha, prod));
    }

  const std::size_t n = std::size_t(p.k) * r;
  out.assembled = Mat(n, n, Level::mid);
  for (unsigned blk = 0; blk + 1 < p.k; ++blk)
    for (unsigned t = 0; t < r; ++t)
      for (unsigned u = 0; u < r; ++u) out.assembled(blk * r + t, blk * r + u) = out.m_block(t, u);
  const std::size_t off = std::size_t(p.k - 1) * r;
  for (unsigned t = 0; t < r; ++t)
    for (unsigned u = 0; u < r; ++u) out.assembled(off + t, off + u) = out.b_block(t, u);

  out.det_formula = f.mul(f.pow(det(f, out.m_block), p.k - 1), det(f, out.b_block));
  return out;
}

bool lcd_criterion(const TlrsParams& params) {
  const FieldTower& f = params.ctx.tower();
  return !f.add(f.one(), f.mul(params.eta, params.eta)).is_zero();
}

Mat form_matrix(const QuotientCtx& ctx) {
  const FieldTower& f = ctx.tower();
  const unsigned r = f.r();
  const std::size_t n = ctx.k_dimension();
  Mat tr(r, r, Level::mid);
  Elem bt = f.one();
  for (unsigned t = 0; t < r; ++t) {
    Elem bu = f.one();
    for (unsigned u = 0; u < r; ++u) {
      tr(t, u) = f.trace(f.mul(bt, bu));
      bu = f.mul(bu, f.top_root());
    }
    bt = f.mul(bt, f.top_root());
  }
  Mat q(n, n, Level::mid);
  for (std::size_t i = 0; i < ctx.modulus_degree(); ++i)
    for (unsigned t = 0; t < r; ++t)
      for (unsigned u = 0; u < r; ++u) q(i * r + t, i * r + u) = tr(t, u);
  return q;
}

Subspace dual(const QuotientCtx& ctx, const Subspace& s) {
  const FieldTower& f = ctx.tower();
  if (s.ambient_dim() != ctx.k_dimension()) throw Error(ErrorCode::ambient_mismatch, "subspace is not in R_Λ");
  if (s.dim() == 0) return Subspace::whole(ctx.k_dimension(), Level::mid);
  return rank_kernel(f, mul(f, s.basis(), form_matrix(ctx))).kernel;
}

Subspace code_subspace(const TlrsCode& code) {
  Mat rows(0, code.params.ctx.k_dimension(), Level::mid);
  for (const auto& b : code.basis_polys) rows.append_row(to_k_coords(b, code.params.ctx));
  return Subspace::span(code.params.ctx.tower(), rows);
}

Subspace dual_basis(const TlrsCode& code) { return dual(code.params.ctx, code_subspace(code)); }

std::size_t hull_oracle(const TlrsCode& code) {
  const Subspace c = code_subspace(code);
  return intersect(code.params.ctx.tower(), c, dual(code.params.ctx, c)).dim();
}

GramReport gram(const TlrsCode& code, bool run_oracle) {
  const auto& p = code.params;
  const FieldTower& f = p.ctx.tower();
  GramReport rep;
  rep.gram = gram_entrywise(code);
  rep.det_value = det(f, rep.gram);
  auto blocks = gram_blocks(code);
  rep.m_block = blocks.m_block;
  rep.b_block = blocks.b_block;
  rep.alpha_value = blocks.alpha;
  rep.det_formula = blocks.det_formula;
  rep.blocks_match = blocks.assembled == rep.gram;
  rep.lcd_by_criterion = lcd_criterion(p);
  rep.ambient_dim = p.ctx.k_dimension();
  rep.literature_dual_dim = static_cast<long long>(p.ctx.modulus_degree()) - static_cast<long long>(p.k * f.r());
  if (run_oracle) {
    const Subspace c = code_subspace(code);
    const Subspace d = dual(p.ctx, c);
    rep.dual_dim = d.dim();
    rep.hull_dim = intersect(f, c, d).dim();
    rep.lcd_by_oracle = *rep.hull_dim == 0;
  }
  return rep;
}

std::size_t min_sum_rank_distance(const TlrsCode& code, std::uint64_t guard, EvalRule rule) {
  const auto& ctx = code.params.ctx;
  const FieldTower& f = ctx.tower();
  const std::size_t dim = code.basis_polys.size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    count *= f.q();
    if (count > guard) throw Error(ErrorCode::too_large, "q^(kr) exceeds the enumeration guard " + std::to_string(guard));
  }
  // Φ is K-linear, so enumerate K-combinations of the images of the basis.
  std::vector<std::vector<Elem>> images;
  for (const auto& b : code.basis_polys) {
    std::vector<Elem> flat;
    for (const auto& part : eval_map(b, ctx, rule).parts) flat.insert(flat.end(), part.coeffs.begin(), part.coeffs.end());
    images.push_back(std::move(flat));
  }
  const std::size_t width = images.empty() ? 0 : images.front().size();
  const unsigned r = f.r();
  std::vector<std::uint32_t> digits(dim, 0);
  std::vector<Elem> word(width, f.zero());
  std::size_t best = ctx.modulus_degree() + 1;
  for (std::uint64_t n = 1; n < count; ++n) {
    // Odometer step: bumping a digit adds its basis image once; a wrap q−1 → 0 also adds it once.
    for (std::size_t d = 0; d < dim; ++d) {
      for (std::size_t j = 0; j < width; ++j) word[j] = f.add(word[j], images[d][j]);
      if (++digits[d] < f.q()) break;
      digits[d] = 0;
    }
    SumRankVector v;
    for (std::size_t i = 0; i < ctx.ell(); ++i)
      v.parts.push_back(ThetaPoly{{word.begin() + static_cast<std::ptrdiff_t>(i * r),
                                   word.begin() + static_cast<std::ptrdiff_t>((i + 1) * r)}});
    best = std::min(best, sum_rank_weight(f, v));
  }
  return best;
}

}  // namespace sumrank::tlrs
