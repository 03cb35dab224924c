#pragma once

// Twisted linearized Reed–Solomon codes with a constant-term twist:
//   C = { f_0 + f_1 X + … + f_{k−1} X^{k−1} + η θ^h(f_0) X^k : f_i ∈ L } ⊆ R_Λ,
// their Gram matrices under ⟨F, G⟩_Λ = Tr(Σ f_i g_i), and the LCD test.

#include <cstdint>
#include <optional>
#include <vector>

#include "sumrank/linalg.hpp"
#include "sumrank/skew.hpp"

namespace sumrank::tlrs {

struct TlrsParams {
  QuotientCtx ctx;
  unsigned k = 1;
  unsigned h = 0;
  Elem eta;
};

/// Throws bad_params unless 1 ≤ k ≤ ℓr−1, 0 ≤ h ≤ r−1, η ∈ L^*.
void validate(const TlrsParams& params);

struct TlrsCode {
  TlrsParams params;
  /// kr polynomials: β_t X^j for j = 1..k−1 (outer j, inner t), then β_t + η θ^h(β_t) X^k.
  std::vector<SkewPoly> basis_polys;
  /// Power basis β_t = u^t of L over K.
  std::vector<Elem> k_basis_of_L;
};

TlrsCode build_code(const TlrsParams& params);

/// ⟨F, G⟩_Λ on reduced representatives; result in F_q.
Elem lambda_form(const SkewPoly& a, const SkewPoly& b, const QuotientCtx& ctx);

/// Gram matrix computed pairwise with lambda_form.
Mat gram_entrywise(const TlrsCode& code);

struct GramBlocks {
  Mat m_block;      // Tr(β_t β_u)
  Mat b_block;      // Tr(α β_t β_u)
  Elem alpha;       // θ^{−h}(1 + η²)
  Mat assembled;    // diag(I_{k−1} ⊗ M, B)
  Elem det_formula; // det(M)^{k−1} · det(B)
};

/// Closed-form block assembly, independent of lambda_form.
GramBlocks gram_blocks(const TlrsCode& code);

struct GramReport {
  Mat gram;
  Elem det_value;
  Mat m_block;
  Mat b_block;
  Elem alpha_value;
  Elem det_formula;
  bool blocks_match = false;
  bool lcd_by_criterion = false;
  std::optional<bool> lcd_by_oracle;
  std::optional<std::size_t> hull_dim;
  std::optional<std::size_t> dual_dim;
  std::size_t ambient_dim = 0;
  /// Dimension of C⊥ as stated in the source literature (ℓr − kr), reported next to the measured one.
  long long literature_dual_dim = 0;
};

GramReport gram(const TlrsCode& code, bool run_oracle = true);

/// 1 + η² ≠ 0 in L.
bool lcd_criterion(const TlrsParams& params);

/// ℓr² × ℓr² matrix Q over K with ⟨x, y⟩_Λ = x Q yᵀ in K-coordinates.
Mat form_matrix(const QuotientCtx& ctx);
/// Dual of a K-subspace of R_Λ (in K-coordinates).
Subspace dual(const QuotientCtx& ctx, const Subspace& s);

Subspace code_subspace(const TlrsCode& code);
Subspace dual_basis(const TlrsCode& code);
/// dim_K(C ∩ C⊥).
std::size_t hull_oracle(const TlrsCode& code);

constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

/// Minimum sum-rank weight over the q^{kr} − 1 nonzero codewords; throws too_large above the guard.
std::size_t min_sum_rank_distance(const TlrsCode& code, std::uint64_t guard = kDefaultEnumerationGuard,
                                  EvalRule rule = EvalRule::norm_preimage);

}  // namespace sumrank::tlrs
