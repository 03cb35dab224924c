#pragma once

// Skew polynomials L[X;θ] with Xa = θ(a)X, the central modulus
// H_Λ = Π (X^r − λ_i), the quotient R_Λ, and evaluation into θ-polynomials.

#include <memory>
#include <vector>

#include "sumrank/fields.hpp"
#include "sumrank/linalg.hpp"

namespace sumrank {

/// Coefficient i multiplies X^i on the right. Canonical form has no trailing zeros.
struct SkewPoly {
  std::vector<Elem> coeffs;

  SkewPoly() = default;
  explicit SkewPoly(std::vector<Elem> c);
  static SkewPoly monomial(Elem c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs.empty(); }
  /// −1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : Elem{0, Level::top}; }

  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;
};

SkewPoly skew_add(const FieldTower& f, const SkewPoly& a, const SkewPoly& b);
SkewPoly skew_sub(const FieldTower& f, const SkewPoly& a, const SkewPoly& b);
SkewPoly skew_scale(const FieldTower& f, Elem c, const SkewPoly& a);
/// (ab)_n = Σ_{i+j=n} a_i θ^i(b_j).
SkewPoly skew_mul(const FieldTower& f, const SkewPoly& a, const SkewPoly& b);

/// Π_i (X^r − λ_i), multiplied in the given order.
SkewPoly build_h_lambda(const FieldTower& f, const std::vector<Elem>& lambdas);

/// How X^j acts at the i-th evaluation point.
enum class EvalRule {
  /// X^j ↦ N_j(α_i) θ^j with N_j(α) = α θ(α) ⋯ θ^{j−1}(α); X^r ↦ λ_i.
  norm_preimage,
  /// X^j ↦ λ_i^j θ^{j mod r}, ignoring α_i.
  literal_lambda,
};

class QuotientCtx {
 public:
  /// Λ is the order-ℓ subgroup of F_q^*.
  static QuotientCtx subgroup(std::shared_ptr<const FieldTower> tower, unsigned ell);
  /// Arbitrary distinct nonzero λ's in F_q (mid level).
  QuotientCtx(std::shared_ptr<const FieldTower> tower, std::vector<Elem> lambdas);

  const FieldTower& tower() const noexcept { return *tower_; }
  const std::shared_ptr<const FieldTower>& tower_ptr() const noexcept { return tower_; }
  unsigned ell() const noexcept { return static_cast<unsigned>(lambdas_.size()); }
  unsigned r() const noexcept { return tower_->r(); }
  /// ℓ·r, the degree of H_Λ.
  std::size_t modulus_degree() const noexcept { return std::size_t(ell()) * r(); }
  /// ℓ·r², the K-dimension of R_Λ.
  std::size_t k_dimension() const noexcept { return modulus_degree() * r(); }
  const std::vector<Elem>& lambdas() const noexcept { return lambdas_; }
  const std::vector<Elem>& alphas() const noexcept { return alphas_; }
  const SkewPoly& h_lambda() const noexcept { return h_lambda_; }

 private:
  std::shared_ptr<const FieldTower> tower_;
  std::vector<Elem> lambdas_;  // mid level
  std::vector<Elem> alphas_;   // top level, N(α_i) = λ_i
  SkewPoly h_lambda_;
};

/// Representative of degree < ℓr, by long division by the monic central H_Λ.
SkewPoly reduce(const SkewPoly& f, const QuotientCtx& ctx);

/// Σ_j c_j θ^j acting on L; exactly r coefficients.
struct ThetaPoly {
  std::vector<Elem> coeffs;
  friend bool operator==(const ThetaPoly&, const ThetaPoly&) = default;
};

ThetaPoly theta_identity(const FieldTower& f);
Elem theta_apply(const FieldTower& f, const ThetaPoly& t, Elem x);
/// a ∘ b.
ThetaPoly theta_compose(const FieldTower& f, const ThetaPoly& a, const ThetaPoly& b);
/// r×r matrix over K in the power basis {1, u, …}: column t holds the coordinates of t(u^t).
Mat theta_matrix(const FieldTower& f, const ThetaPoly& t);
std::size_t theta_rank(const FieldTower& f, const ThetaPoly& t);

struct SumRankVector {
  std::vector<ThetaPoly> parts;
  friend bool operator==(const SumRankVector&, const SumRankVector&) = default;
};

/// F(α_i), block index zero-based.
ThetaPoly evaluate(const SkewPoly& f, const QuotientCtx& ctx, std::size_t block,
                   EvalRule rule = EvalRule::norm_preimage);
/// Φ_α(F) = (F(α_1), …, F(α_ℓ)) on the reduced representative.
SumRankVector eval_map(const SkewPoly& f, const QuotientCtx& ctx, EvalRule rule = EvalRule::norm_preimage);
std::size_t sum_rank_weight(const FieldTower& f, const SumRankVector& v);

/// K-coordinates of a reduced representative in the basis {u^t X^i}, index i·r + t.
std::vector<Elem> to_k_coords(const SkewPoly& f, const QuotientCtx& ctx);
SkewPoly from_k_coords(const std::vector<Elem>& coords, const QuotientCtx& ctx);
/// K-coordinates of a SumRankVector: block, then θ-power, then u-power.
std::vector<Elem> to_k_coords(const SumRankVector& v, const FieldTower& f);

namespace experimental {

/// ℓ⁻¹ Σ_i tr(F(α_i) ∘ G(α_i⁻¹)), tr being the trace of the K-linear map and
/// evaluation at a point β acting as X ↦ βθ. Not claimed to equal the
/// coefficient-side form.
Elem evaluation_side_form(const SkewPoly& f, const SkewPoly& g, const QuotientCtx& ctx);

}  // namespace experimental

}  // namespace sumrank
