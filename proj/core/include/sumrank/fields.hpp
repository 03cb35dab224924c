#pragma once

// Finite field tower F_p ⊂ F_q = F_{p^m} ⊂ L = F_{q^r}.
//
// Every element is stored as an integer code. A mid-level element is the
// little-endian base-p packing of its coordinates in the power basis of the
// base modulus root; a top-level element is the little-endian base-q packing
// of its coordinates (mid codes) in the power basis of the top modulus root u.
// With this packing F_p and F_q sit inside L as the codes below p and q, so a
// single log/antilog table for L serves all three levels.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumrank/error.hpp"

namespace sumrank {

enum class Level : std::uint8_t { prime, mid, top };

std::string_view to_string(Level level);

struct Elem {
  std::uint32_t code = 0;
  Level level = Level::top;

  bool is_zero() const noexcept { return code == 0; }
  friend bool operator==(const Elem&, const Elem&) = default;
};

enum class ArithOp { add, sub, mul, div };

/// Constructor inputs. Moduli are monic, little-endian, leading 1 included;
/// base coefficients are residues mod p, top coefficients are mid codes.
struct TowerSpec {
  unsigned p = 0;
  unsigned m = 1;
  unsigned r = 1;
  std::vector<std::uint32_t> base_modulus;
  std::vector<std::uint32_t> top_modulus;
};

class FieldTower {
 public:
  /// Fills in missing moduli with the library defaults and validates.
  explicit FieldTower(TowerSpec spec);

  static FieldTower make(unsigned p, unsigned m, unsigned r);

  unsigned p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  unsigned r() const noexcept { return r_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t size(Level level) const noexcept;
  const TowerSpec& spec() const noexcept { return spec_; }

  Elem zero(Level level = Level::top) const noexcept { return {0, level}; }
  Elem one(Level level = Level::top) const noexcept { return {1, level}; }
  /// Integer n reduced mod p, placed at the requested level.
  Elem from_int(long long n, Level level) const;
  Elem from_code(std::uint32_t code, Level level) const;
  /// Coordinates over the next-lower level (prime elements have none).
  std::vector<std::uint32_t> coords(Elem x) const;
  Elem from_coords(std::span<const std::uint32_t> coords, Level level) const;

  /// Distinguished root u of the top modulus.
  Elem top_root() const noexcept { return {r_ > 1 ? q_ : 0, Level::top}; }
  /// Primitive element of F_q^* with the smallest code.
  Elem generator_of_units() const noexcept { return {mid_generator_, Level::mid}; }
  /// Primitive element of L^* used for the log tables.
  Elem top_primitive() const noexcept { return {exp_[1], Level::top}; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem div(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long e) const;
  Elem arithmetic(Elem a, Elem b, ArithOp op) const;

  /// Moves x up the tower.
  Elem embed(Elem x, Level level) const;
  /// Moves x down the tower; throws level_mismatch if x is not in that subfield.
  Elem restrict(Elem x, Level level) const;
  bool lies_in(Elem x, Level level) const noexcept { return x.code < size(level); }

  /// θ^h(x) = x^{q^h}, h taken mod r (negative h allowed).
  Elem frobenius(Elem x, long long h = 1) const;
  Elem trace(Elem x) const;
  Elem norm(Elem x) const;
  std::pair<Elem, Elem> trace_and_norm(Elem x) const { return {trace(x), norm(x)}; }

  /// Lexicographically least α ∈ L with N(α) = λ.
  Elem norm_preimage(Elem lambda) const;
  /// Euler criterion in F_q.
  bool is_square(Elem x) const;
  /// For r = 2, q odd: lexicographically least α with α^q = −α.
  Elem skew_unit() const;
  /// {1, g, …, g^{ℓ−1}} for the order-ℓ generator g = generator_of_units()^{(q−1)/ℓ}.
  std::vector<Elem> subgroup_lambda(unsigned ell) const;

  std::uint64_t multiplicative_order(Elem x) const;

  /// Top-level codes listed in lexicographic order of their little-endian
  /// base-p digit strings (first digit most significant).
  std::vector<std::uint32_t> lex_order(Level level) const;

  std::string format(Elem x) const;
  Elem parse(std::string_view text, Level level) const;

 private:
  void build_tables();
  void check_level(Elem a, Elem b) const;
  void check_code(Elem x) const;
  std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t mul_codes(std::uint32_t a, std::uint32_t b) const noexcept;

  TowerSpec spec_;
  unsigned p_ = 0, m_ = 1, r_ = 1;
  std::uint32_t q_ = 0;
  std::uint32_t n_ = 0;  // |L|
  unsigned digits_ = 0;  // m·r base-p digits per top code
  std::uint32_t mid_generator_ = 0;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i < n−1
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_table_;  // n×n when small
};

/// Monic irreducible polynomials used as defaults (little-endian, monic).
std::vector<std::uint32_t> default_base_modulus(unsigned p, unsigned m);

}  // namespace sumrank
