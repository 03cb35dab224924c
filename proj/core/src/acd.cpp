#include "sumrank/acd.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sumrank::acd {

namespace {

Elem up(const FieldTower& f, Elem x) { return f.embed(x, Level::top); }
Elem down(const FieldTower& f, Elem x) { return f.restrict(x, Level::mid); }

// Position of each basis element: 0 → 1, [1, k) → X^i, [k, 2k−1) → αX^i, 2k−1 → γX^k.
enum class Kind { one, plain, skew, twist };

struct Slot {
  Kind kind;
  unsigned exponent;
};

Slot slot_of(unsigned k, std::size_t idx) {
  if (idx == 0) return {Kind::one, 0};
  if (idx < k) return {Kind::plain, static_cast<unsigned>(idx)};
  if (idx + 1 < 2 * std::size_t(k)) return {Kind::skew, static_cast<unsigned>(idx - k + 1)};
  return {Kind::twist, k};
}

}  // namespace

void validate(const AcdParams& p) {
  if (!p.tower) throw Error(ErrorCode::bad_tower, "null tower");
  const FieldTower& f = *p.tower;
  if (f.r() != 2) throw Error(ErrorCode::bad_params, "additive TRS codes need r = 2");
  if (f.q() < 5 || f.q() % 4 != 1) throw Error(ErrorCode::bad_params, "q must satisfy q = 1 mod 4 and q >= 5");
  if (p.k < 1 || p.k + 1 > p.ell()) throw Error(ErrorCode::bad_params, "k must satisfy 1 <= k <= ell - 1");
  std::set<std::uint32_t> seen;
  for (const auto& l : p.lambda_set) {
    if (l.level != Level::mid || l.code >= f.q()) throw Error(ErrorCode::bad_params, "λ must lie in F_q");
    if (l.is_zero()) throw Error(ErrorCode::bad_params, "λ must be nonzero");
    if (!seen.insert(l.code).second) throw Error(ErrorCode::bad_params, "λ's must be distinct");
  }
  if (p.twist_scalar.level != Level::top || p.twist_scalar.is_zero())
    throw Error(ErrorCode::bad_params, "γ must be a nonzero element of F_{q^2}");
  if (p.skew_unit.level != Level::top || p.skew_unit.is_zero() ||
      f.frobenius(p.skew_unit, 1) != f.neg(p.skew_unit))
    throw Error(ErrorCode::bad_params, "α must satisfy α^q = -α");
}

AcdParams make_params(std::shared_ptr<const FieldTower> tower, unsigned k, std::vector<Elem> lambda_set, Elem gamma) {
  if (!tower) throw Error(ErrorCode::bad_tower, "null tower");
  if (tower->r() != 2) throw Error(ErrorCode::bad_params, "additive TRS codes need r = 2");
  const Elem alpha = tower->skew_unit();
  AcdParams p{std::move(tower), k, std::move(lambda_set), gamma, alpha};
  validate(p);
  return p;
}

std::vector<LPoly> code_basis(const AcdParams& p) {
  validate(p);
  const FieldTower& f = *p.tower;
  std::vector<LPoly> out;
  auto mono = [&](Elem c, unsigned e) {
    LPoly poly(e + 1, f.zero());
    poly[e] = c;
    return poly;
  };
  out.push_back(mono(f.one(), 0));
  for (unsigned i = 1; i < p.k; ++i) out.push_back(mono(f.one(), i));
  for (unsigned i = 1; i < p.k; ++i) out.push_back(mono(p.skew_unit, i));
  out.push_back(mono(p.twist_scalar, p.k));
  return out;
}

Elem evaluate(const FieldTower& f, const LPoly& poly, Elem x) {
  Elem acc = f.zero(x.level);
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

Mat generator_matrix(const AcdParams& p) {
  const FieldTower& f = *p.tower;
  const auto basis = code_basis(p);
  Mat g(basis.size(), p.ell(), Level::top);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t j = 0; j < p.ell(); ++j) g(r, j) = evaluate(f, basis[r], up(f, p.lambda_set[j]));
  return g;
}

std::vector<Elem> encode(const AcdParams& p, const std::vector<Elem>& message) {
  const FieldTower& f = *p.tower;
  const Mat g = generator_matrix(p);
  if (message.size() != g.rows()) throw Error(ErrorCode::length_mismatch, "message must have 2k entries");
  std::vector<Elem> word(p.ell(), f.zero());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const Elem m = up(f, down(f, message[r]));
    if (m.is_zero()) continue;
    for (std::size_t j = 0; j < p.ell(); ++j) word[j] = f.add(word[j], f.mul(m, g(r, j)));
  }
  return word;
}

Elem trace_hermitian(const FieldTower& f, const std::vector<Elem>& u, const std::vector<Elem>& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::length_mismatch, "vectors differ in length");
  Elem acc = f.zero();
  for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], f.frobenius(v[i], 1)));
  return f.trace(acc);
}

std::vector<Elem> power_sums(const FieldTower& f, const std::vector<Elem>& lambdas, unsigned max_e) {
  std::vector<Elem> out;
  out.push_back(f.from_int(static_cast<long long>(lambdas.size()), Level::mid));
  for (unsigned e = 1; e <= max_e; ++e) {
    Elem acc = f.zero(Level::mid);
    for (const auto& l : lambdas) acc = f.add(acc, f.pow(l, e));
    out.push_back(acc);
  }
  return out;
}

Elem geometric_power_sum(const FieldTower& f, Elem g, unsigned ell, unsigned e) {
  const Elem ell_mod_p = f.from_int(ell, g.level);
  if (e == 0) return ell_mod_p;
  const Elem ge = f.pow(g, e);
  if (ge == f.one(g.level)) return ell_mod_p;
  return f.div(f.sub(f.pow(g, static_cast<long long>(e) * ell), f.one(g.level)), f.sub(ge, f.one(g.level)));
}

Mat gram_hermitian(const AcdParams& p) {
  const FieldTower& f = *p.tower;
  const Mat g = generator_matrix(p);
  Mat out(g.rows(), g.rows(), Level::top);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t s = 0; s < g.rows(); ++s) {
      Elem acc = f.zero();
      for (std::size_t j = 0; j < g.cols(); ++j) acc = f.add(acc, f.mul(g(r, j), f.frobenius(g(s, j), 1)));
      out(r, s) = acc;
    }
  return out;
}

Mat t_matrix(const AcdParams& p) {
  const FieldTower& f = *p.tower;
  const Mat g = generator_matrix(p);
  Mat out(g.rows(), g.rows(), Level::mid);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t s = 0; s < g.rows(); ++s) out(r, s) = trace_hermitian(f, g.row(r), g.row(s));
  return out;
}

Mat closed_form_gram_hermitian(const AcdParams& p) {
  validate(p);
  const FieldTower& f = *p.tower;
  const unsigned k = p.k;
  const auto ps = power_sums(f, p.lambda_set, 2 * k);
  auto P = [&](unsigned e) { return up(f, ps[e]); };
  const Elem a = p.skew_unit, g = p.twist_scalar;
  const Elem gq = f.frobenius(g, 1);
  const Elem a2 = f.mul(a, a);
  const std::size_t n = 2 * std::size_t(k);
  Mat out(n, n, Level::top);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      const Slot x = slot_of(k, r), y = slot_of(k, s);
      const unsigned e = x.exponent + y.exponent;
      Elem v;
      using K = Kind;
      if (x.kind == K::one && y.kind == K::one) v = up(f, ps[0]);                      // ℓ
      else if ((x.kind == K::one || x.kind == K::plain) && (y.kind == K::one || y.kind == K::plain))
        v = P(e);                                                                       // p_i, p_{i+j}
      else if (x.kind == K::skew && y.kind == K::skew) v = f.neg(f.mul(a2, P(e)));     // −α² p_{i+j}
      else if ((x.kind == K::one || x.kind == K::plain) && y.kind == K::twist) v = f.mul(gq, P(e));  // γ^q p
      else if (x.kind == K::twist && (y.kind == K::one || y.kind == K::plain)) v = f.mul(g, P(e));   // γ p
      else if (x.kind == K::skew && y.kind == K::twist) v = f.mul(f.mul(a, gq), P(e));  // α γ^q p_{i+k}
      else if (x.kind == K::twist && y.kind == K::skew) v = f.neg(f.mul(f.mul(g, a), P(e)));  // −γα p_{k+i}
      else if (x.kind == K::twist && y.kind == K::twist) v = f.mul(f.pow(g, f.q() + 1), P(e));        // γ^{q+1} p_{2k}
      // Pairs between {1, X^i} and αX^j are not tabulated; derived: −α p (left plain) and α p (left skew).
      else if (y.kind == K::skew) v = f.neg(f.mul(a, P(e)));
      else v = f.mul(a, P(e));
      out(r, s) = v;
    }
  return out;
}

Mat closed_form_t_matrix(const AcdParams& p) {
  validate(p);
  const FieldTower& f = *p.tower;
  const unsigned k = p.k;
  const auto ps = power_sums(f, p.lambda_set, 2 * k);
  const Elem two = f.from_int(2, Level::mid);
  const Elem a = p.skew_unit, g = p.twist_scalar;
  const Elem a2 = down(f, f.mul(a, a));
  const Elem tr_g = f.trace(g);
  const Elem tr_a = f.trace(a);
  const Elem tr_ag = f.trace(f.mul(a, g));
  const Elem g_norm = down(f, f.pow(g, f.q() + 1));
  const std::size_t n = 2 * std::size_t(k);
  Mat out(n, n, Level::mid);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      const Slot x = slot_of(k, r), y = slot_of(k, s);
      const Elem pe = ps[x.exponent + y.exponent];
      using K = Kind;
      const bool x_plain = x.kind == K::one || x.kind == K::plain;
      const bool y_plain = y.kind == K::one || y.kind == K::plain;
      Elem v;
      if (x_plain && y_plain) v = f.mul(two, pe);                                      // 2ℓ, 2p_i, 2p_{i+j}
      else if (x.kind == K::skew && y.kind == K::skew) v = f.neg(f.mul(f.mul(two, a2), pe));  // −2α² p_{i+j}
      else if ((x_plain && y.kind == K::twist) || (x.kind == K::twist && y_plain)) v = f.mul(pe, tr_g);  // p Tr(γ)
      else if ((x.kind == K::skew && y.kind == K::twist) || (x.kind == K::twist && y.kind == K::skew))
        v = f.neg(f.mul(pe, tr_ag));                                                    // −p_{i+k} Tr(αγ)
      else if (x.kind == K::twist && y.kind == K::twist) v = f.mul(f.mul(two, g_norm), pe);  // 2γ^{q+1} p_{2k}
      else if (y.kind == K::skew) v = f.neg(f.mul(pe, tr_a));                           // −p Tr(α)
      else v = f.mul(pe, tr_a);                                                         // p Tr(α)
      out(r, s) = v;
    }
  return out;
}

StructuredBlocks structured_blocks(const AcdParams& p) {
  validate(p);
  const FieldTower& f = *p.tower;
  const unsigned k = p.k;
  const auto ps = power_sums(f, p.lambda_set, 2 * k);
  StructuredBlocks b;
  b.g0 = Mat(k, k, Level::mid);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) b.g0(i, j) = ps[i + j];
  b.m = Mat(k - 1, k - 1, Level::mid);
  for (unsigned i = 1; i < k; ++i)
    for (unsigned j = 1; j < k; ++j) b.m(i - 1, j - 1) = ps[i + j];
  for (unsigned i = 1; i < k; ++i) {
    b.v.push_back(ps[i]);
    b.w.push_back(ps[k + i]);
  }
  b.p2k = ps[2 * k];
  b.h = Mat(k, k, Level::mid);
  for (unsigned i = 1; i <= k; ++i)
    for (unsigned j = 1; j <= k; ++j) b.h(i - 1, j - 1) = ps[i + j];
  return b;
}

namespace {

// wᵀ M⁻¹ w; M must be invertible.
Elem quadratic_form_inverse(const FieldTower& f, const Mat& m, const std::vector<Elem>& w) {
  if (w.empty()) return f.zero(Level::mid);
  const auto z = solve(f, m, w);
  Elem acc = f.zero(Level::mid);
  for (std::size_t i = 0; i < w.size(); ++i) acc = f.add(acc, f.mul(w[i], z[i]));
  return acc;
}

}  // namespace

Elem structured_delta(const AcdParams& p) {
  const FieldTower& f = *p.tower;
  const auto b = structured_blocks(p);
  if (det(f, b.m).is_zero()) throw Error(ErrorCode::singular_m, "Hankel block M is singular");
  const Elem two = f.from_int(2, Level::mid);
  const Elem g_norm = down(f, f.pow(p.twist_scalar, f.q() + 1));
  const Elem a2 = down(f, f.mul(p.skew_unit, p.skew_unit));
  const Elem tr_ag = f.trace(f.mul(p.skew_unit, p.twist_scalar));
  const Elem first = f.mul(f.mul(two, g_norm), b.p2k);
  const Elem coef = f.div(f.mul(tr_ag, tr_ag), f.mul(two, a2));
  return f.add(first, f.mul(coef, quadratic_form_inverse(f, b.m, b.w)));
}

AcdCheck acd_check(const AcdParams& p) {
  const FieldTower& f = *p.tower;
  AcdCheck out;
  out.det_t = det(f, t_matrix(p));
  out.by_matrix = !out.det_t.is_zero();
  if (!f.trace(p.twist_scalar).is_zero()) {
    out.structure_note = "Tr(gamma) != 0: block decomposition does not apply";
    return out;
  }
  const auto b = structured_blocks(p);
  if (det(f, b.m).is_zero()) {
    out.structure_note = "M singular";
    return out;
  }
  out.det_g0 = det(f, b.g0);
  out.delta = structured_delta(p);
  out.by_structure = !out.det_g0->is_zero() && !out.delta->is_zero();
  return out;
}

namespace {

// F_q coordinates of x in the basis {1, α}.
std::pair<Elem, Elem> split(const FieldTower& f, const Mat& to_power_basis_inv, Elem x) {
  const auto c = f.coords(x);
  const Elem c0{c[0], Level::mid}, c1{c[1], Level::mid};
  return {f.add(f.mul(to_power_basis_inv(0, 0), c0), f.mul(to_power_basis_inv(0, 1), c1)),
          f.add(f.mul(to_power_basis_inv(1, 0), c0), f.mul(to_power_basis_inv(1, 1), c1))};
}

// Inverse of the 2×2 matrix whose columns are the power-basis coordinates of 1 and α.
Mat change_of_basis(const FieldTower& f, Elem alpha) {
  const auto a = f.coords(alpha);
  // [[1, a0], [0, a1]]⁻¹ = [[1, −a0/a1], [0, 1/a1]]
  const Elem a0{a[0], Level::mid}, a1{a[1], Level::mid};
  Mat inv(2, 2, Level::mid);
  inv(0, 0) = f.one(Level::mid);
  inv(0, 1) = f.neg(f.div(a0, a1));
  inv(1, 1) = f.inv(a1);
  return inv;
}

}  // namespace

Subspace expanded_code(const AcdParams& p) {
  const FieldTower& f = *p.tower;
  const Mat g = generator_matrix(p);
  const Mat cb = change_of_basis(f, p.skew_unit);
  Mat rows(0, 2 * p.ell(), Level::mid);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    std::vector<Elem> v;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      auto [x, y] = split(f, cb, g(r, j));
      v.push_back(x);
      v.push_back(y);
    }
    rows.append_row(v);
  }
  return Subspace::span(f, rows);
}

Subspace expanded_dual(const AcdParams& p) {
  const FieldTower& f = *p.tower;
  const Mat g = generator_matrix(p);
  const std::size_t n = 2 * p.ell();
  Mat pairing(g.rows(), n, Level::mid);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const auto row = g.row(r);
    for (std::size_t j = 0; j < p.ell(); ++j)
      for (unsigned s = 0; s < 2; ++s) {
        std::vector<Elem> e(p.ell(), f.zero());
        e[j] = s == 0 ? f.one() : p.skew_unit;
        pairing(r, 2 * j + s) = trace_hermitian(f, row, e);
      }
  }
  return rank_kernel(f, pairing).kernel;
}

std::size_t acd_oracle(const AcdParams& p) {
  return intersect(*p.tower, expanded_code(p), expanded_dual(p)).dim();
}

bool mds_criterion(const AcdParams& p) {
  const FieldTower& f = *p.tower;
  return !f.is_square(down(f, f.pow(p.twist_scalar, f.q() + 1)));
}

std::size_t min_distance_oracle(const AcdParams& p, std::uint64_t guard) {
  const FieldTower& f = *p.tower;
  const Mat g = generator_matrix(p);
  const std::size_t dim = g.rows(), n = g.cols();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    count *= f.q();
    if (count > guard) throw Error(ErrorCode::too_large, "q^(2k) exceeds the enumeration guard " + std::to_string(guard));
  }
  std::vector<std::vector<Elem>> rows;
  for (std::size_t r = 0; r < dim; ++r) rows.push_back(g.row(r));
  std::vector<std::uint32_t> digits(dim, 0);
  std::vector<Elem> word(n, f.zero());
  std::size_t best = n + 1;
  for (std::uint64_t step = 1; step < count; ++step) {
    for (std::size_t d = 0; d < dim; ++d) {
      for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], rows[d][j]);
      if (++digits[d] < f.q()) break;
      digits[d] = 0;
    }
    std::size_t w = 0;
    for (const auto& x : word) w += x.is_zero() ? 0 : 1;
    best = std::min(best, w);
  }
  return best;
}

RootProduct root_product_check(const AcdParams& p, const std::vector<Elem>& roots, Elem a_k) {
  validate(p);
  const FieldTower& f = *p.tower;
  if (roots.size() != p.k) throw Error(ErrorCode::bad_roots, "need exactly k roots");
  std::set<std::uint32_t> seen;
  for (const auto& r : roots) {
    if (r.level != Level::mid) throw Error(ErrorCode::bad_roots, "roots must lie in F_q");
    if (std::find(p.lambda_set.begin(), p.lambda_set.end(), r) == p.lambda_set.end())
      throw Error(ErrorCode::bad_roots, "root not in Λ");
    if (!seen.insert(r.code).second) throw Error(ErrorCode::bad_roots, "roots must be distinct");
  }
  if (a_k.level != Level::mid || a_k.is_zero()) throw Error(ErrorCode::bad_roots, "a_k must be a nonzero element of F_q");

  const Elem g = p.twist_scalar;
  const Elem gak = f.mul(g, up(f, a_k));
  RootProduct out;
  Elem prod = f.one();
  for (const auto& r : roots) prod = f.mul(prod, up(f, r));
  out.forced_a0 = f.mul(p.k % 2 ? f.neg(gak) : gak, prod);

  // Lagrange interpolation of P(λ) = −γ a_k λ^k, P of degree ≤ k−1.
  const std::size_t k = roots.size();
  LPoly interp(k, f.zero());
  for (std::size_t j = 0; j < k; ++j) {
    const Elem lj = up(f, roots[j]);
    const Elem yj = f.neg(f.mul(gak, f.pow(lj, static_cast<long long>(k))));
    LPoly basis{f.one()};
    Elem denom = f.one();
    for (std::size_t m = 0; m < k; ++m) {
      if (m == j) continue;
      const Elem lm = up(f, roots[m]);
      LPoly next(basis.size() + 1, f.zero());
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] = f.add(next[t + 1], basis[t]);
        next[t] = f.sub(next[t], f.mul(lm, basis[t]));
      }
      basis = std::move(next);
      denom = f.mul(denom, f.sub(lj, lm));
    }
    const Elem scale = f.div(yj, denom);
    for (std::size_t t = 0; t < basis.size(); ++t) interp[t] = f.add(interp[t], f.mul(scale, basis[t]));
  }
  out.interpolated_a0 = interp[0];
  out.member_exists = f.lies_in(out.forced_a0, Level::mid);
  out.polynomial = interp;
  out.polynomial.push_back(gak);
  out.vanishes_on_roots = std::all_of(roots.begin(), roots.end(),
                                      [&](Elem r) { return evaluate(f, out.polynomial, up(f, r)).is_zero(); });
  return out;
}

namespace {

std::optional<AcdParams> try_lambda(const std::shared_ptr<const FieldTower>& tower, unsigned k,
                                    std::vector<Elem> lambdas, Elem alpha) {
  AcdParams p{tower, k, std::move(lambdas), alpha, alpha};
  validate(p);
  return p;
}

}  // namespace

SearchOutcome lambda_search(std::shared_ptr<const FieldTower> tower, unsigned k, unsigned ell, SearchStrategy strategy) {
  if (!tower) throw Error(ErrorCode::bad_tower, "null tower");
  const FieldTower& f = *tower;
  if (f.r() != 2 || f.q() < 5 || f.q() % 4 != 1) throw Error(ErrorCode::bad_params, "need r = 2, q = 1 mod 4, q >= 5");
  if (k < 1 || 2 * k > ell || ell + 2 > f.q()) throw Error(ErrorCode::bad_params, "need 1 <= k, 2k <= ell <= q - 2");
  const Elem alpha = f.skew_unit();
  SearchOutcome out;

  if (strategy == SearchStrategy::geometric || strategy == SearchStrategy::automatic) {
    std::map<std::string, std::uint64_t> failures;
    out.used = SearchStrategy::geometric;
    for (std::uint32_t c = 1; c < f.q(); ++c) {
      const Elem g{c, Level::mid};
      if (f.multiplicative_order(g) != f.q() - 1) continue;
      ++out.scanned;
      std::vector<Elem> lambdas;
      for (unsigned i = 0; i < ell; ++i) lambdas.push_back(f.pow(g, i));
      auto p = try_lambda(tower, k, lambdas, alpha);
      const auto b = structured_blocks(*p);
      if (det(f, b.g0).is_zero()) { ++failures["det G0"]; continue; }
      if (det(f, b.m).is_zero()) { ++failures["det M"]; continue; }
      if (det(f, b.h).is_zero()) { ++failures["det H"]; continue; }
      if (!acd_check(*p).by_matrix || !mds_criterion(*p)) { ++failures["certificate"]; continue; }
      out.params = std::move(p);
      out.generator = g;
      return out;
    }
    std::string note = "geometric: no primitive g passed";
    for (const auto& [what, n] : failures) note += "; " + what + " = 0 for " + std::to_string(n);
    out.note = note;
    if (strategy == SearchStrategy::geometric) return out;
  }

  out.used = SearchStrategy::exhaustive;
  const std::uint64_t before = out.scanned;
  const std::uint32_t units = f.q() - 1;
  std::vector<std::uint32_t> idx(ell);
  for (unsigned i = 0; i < ell; ++i) idx[i] = i;
  while (true) {
    ++out.scanned;
    std::vector<Elem> lambdas;
    for (auto i : idx) lambdas.push_back({i + 1, Level::mid});
    auto p = try_lambda(tower, k, lambdas, alpha);
    const auto check = acd_check(*p);
    if (check.by_matrix && mds_criterion(*p)) {
      out.params = std::move(p);
      return out;
    }
    // Next ℓ-subset in lexicographic order.
    int pos = static_cast<int>(ell) - 1;
    while (pos >= 0 && idx[pos] == units - ell + static_cast<unsigned>(pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned j = static_cast<unsigned>(pos) + 1; j < ell; ++j) idx[j] = idx[j - 1] + 1;
  }
  out.note += (out.note.empty() ? "" : "; ") + std::string("exhaustive: det T = 0 for all " + std::to_string(out.scanned - before) + " subsets");
  return out;
}

bool delta_identity_check(const AcdParams& p) {
  const FieldTower& f = *p.tower;
  if (p.twist_scalar != p.skew_unit) throw Error(ErrorCode::bad_params, "identity holds for gamma = alpha");
  const auto b = structured_blocks(p);
  const Elem det_m = det(f, b.m);
  if (det_m.is_zero()) throw Error(ErrorCode::singular_m, "Hankel block M is singular");
  const Elem a2 = down(f, f.mul(p.skew_unit, p.skew_unit));
  const Elem minus_two_a2 = f.neg(f.mul(f.from_int(2, Level::mid), a2));
  const Elem rhs = f.mul(minus_two_a2, f.div(det(f, b.h), det_m));
  return structured_delta(p) == rhs;
}

}  // namespace sumrank::acd
