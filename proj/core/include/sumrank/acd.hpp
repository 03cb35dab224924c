#pragma once

// Additive twisted Reed–Solomon codes over L = F_{q²}:
//   D_k(γ) = { a_0 + Σ_{i=1}^{k−1} a_i X^i + γ a_k X^k : a_0, a_k ∈ F_q, a_i ∈ F_{q²} },
//   C_k(γ) = ev_Λ(D_k(γ)) ⊆ F_{q²}^ℓ,
// with duality taken under the trace-Hermitian form Tr(Σ u_i v_i^q).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sumrank/linalg.hpp"

namespace sumrank::acd {

/// Ordinary (commutative) polynomial over L, little-endian.
using LPoly = std::vector<Elem>;

struct AcdParams {
  std::shared_ptr<const FieldTower> tower;
  unsigned k = 1;
  std::vector<Elem> lambda_set;  // mid level, distinct, nonzero
  Elem twist_scalar;             // γ
  Elem skew_unit;                // α with α^q = −α

  std::size_t ell() const noexcept { return lambda_set.size(); }
};

/// Builds params with α = tower->skew_unit() and validates them.
AcdParams make_params(std::shared_ptr<const FieldTower> tower, unsigned k, std::vector<Elem> lambda_set, Elem gamma);

/// Throws bad_params unless r = 2, q ≡ 1 mod 4, q ≥ 5, 1 ≤ k ≤ ℓ−1, Λ distinct nonzero in F_q, γ ≠ 0.
void validate(const AcdParams& p);

/// {1, X, …, X^{k−1}, αX, …, αX^{k−1}, γX^k}.
std::vector<LPoly> code_basis(const AcdParams& p);
Elem evaluate(const FieldTower& f, const LPoly& poly, Elem x);
/// 2k × ℓ matrix over L; row r is ev_Λ of basis element r.
Mat generator_matrix(const AcdParams& p);
/// message: 2k elements of F_q (mid level).
std::vector<Elem> encode(const AcdParams& p, const std::vector<Elem>& message);

Elem trace_hermitian(const FieldTower& f, const std::vector<Elem>& u, const std::vector<Elem>& v);

/// p_0 … p_max with p_e = Σ λ^e and p_0 = ℓ mod p (mid level).
std::vector<Elem> power_sums(const FieldTower& f, const std::vector<Elem>& lambdas, unsigned max_e);
/// (g^{eℓ} − 1)/(g^e − 1), or ℓ when g^e = 1 (and for e = 0).
Elem geometric_power_sum(const FieldTower& f, Elem g, unsigned ell, unsigned e);

/// G·G† with (G†)_{ij} = G_{ji}^q, over L.
Mat gram_hermitian(const AcdParams& p);
/// Entrywise trace of G·G†, over F_q.
Mat t_matrix(const AcdParams& p);

/// Closed forms per basis pair from the power sums (the table of GG† entries
/// and their traces); pairs the table leaves out are filled in as derived.
Mat closed_form_gram_hermitian(const AcdParams& p);
Mat closed_form_t_matrix(const AcdParams& p);

struct StructuredBlocks {
  Mat g0;                 // k × k: [[ℓ, vᵀ], [v, M]]
  Mat m;                  // (k−1) × (k−1) Hankel (p_{i+j})
  std::vector<Elem> v;    // p_1 … p_{k−1}
  std::vector<Elem> w;    // p_{k+1} … p_{2k−1}
  Elem p2k;
  Mat h;                  // k × k: [[M, w], [wᵀ, p_{2k}]]
};

StructuredBlocks structured_blocks(const AcdParams& p);

/// Δ = 2γ^{q+1} p_{2k} + Tr(αγ)²/(2α²) · wᵀM⁻¹w; throws singular_m when M is singular.
Elem structured_delta(const AcdParams& p);

struct AcdCheck {
  Elem det_t;
  bool by_matrix = false;
  std::optional<bool> by_structure;
  std::optional<Elem> det_g0;
  std::optional<Elem> delta;
  /// Why by_structure is absent.
  std::string structure_note;
};

AcdCheck acd_check(const AcdParams& p);

/// dim_{F_q}(C ∩ C⊥) computed in F_q^{2ℓ} coordinates over the basis {1, α}.
std::size_t acd_oracle(const AcdParams& p);
/// C and C⊥ as F_q-subspaces of F_q^{2ℓ}; exposed for tests.
Subspace expanded_code(const AcdParams& p);
Subspace expanded_dual(const AcdParams& p);

/// γ^{q+1} is a nonsquare in F_q.
bool mds_criterion(const AcdParams& p);

constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

/// Minimum Hamming weight over the q^{2k} − 1 nonzero codewords.
std::size_t min_distance_oracle(const AcdParams& p, std::uint64_t guard = kDefaultEnumerationGuard);

struct RootProduct {
  Elem forced_a0;         // (−1)^k γ a_k Π λ
  Elem interpolated_a0;   // P(0) from Lagrange interpolation of −γ a_k λ^k
  bool member_exists = false;  // forced a_0 ∈ F_q
  LPoly polynomial;       // P(X) + γ a_k X^k
  bool vanishes_on_roots = false;
};

/// roots: k distinct elements of Λ; a_k ∈ F_q^*.
RootProduct root_product_check(const AcdParams& p, const std::vector<Elem>& roots, Elem a_k);

enum class SearchStrategy { geometric, exhaustive, automatic };

struct SearchOutcome {
  std::optional<AcdParams> params;
  SearchStrategy used = SearchStrategy::geometric;
  std::uint64_t scanned = 0;
  /// For NotFound, which determinant vanished most often.
  std::string note;
  /// Primitive element behind a geometric Λ.
  std::optional<Elem> generator;
};

/// γ is fixed to α. Requires 2k ≤ ℓ ≤ q − 2.
SearchOutcome lambda_search(std::shared_ptr<const FieldTower> tower, unsigned k, unsigned ell, SearchStrategy strategy);

/// Δ == −2α² det(H)/det(M) for γ = α; throws singular_m when M is singular.
bool delta_identity_check(const AcdParams& p);

}  // namespace sumrank::acd
