#pragma once

// Test-side oracles. Nothing here calls back into the table-driven field
// code: arithmetic is schoolbook polynomial arithmetic over F_p on the
// moduli the tower reports, and determinants use permutation expansion.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "sumrank/acd.hpp"
#include "sumrank/fields.hpp"
#include "sumrank/linalg.hpp"
#include "sumrank/skew.hpp"

namespace testing {

using namespace sumrank;

inline std::shared_ptr<const FieldTower> tower(unsigned p, unsigned m, unsigned r) {
  return std::make_shared<const FieldTower>(FieldTower::make(p, m, r));
}

inline std::shared_ptr<const FieldTower> f25() {
  static const auto t = tower(5, 1, 2);
  return t;
}

inline Elem top(const FieldTower& f, const char* s) { return f.parse(s, Level::top); }
inline Elem mid(std::uint32_t v) { return {v, Level::mid}; }

/// Schoolbook arithmetic in F_p ⊂ F_q ⊂ F_{q^r} on coefficient vectors.
class NaiveTower {
 public:
  using Poly = std::vector<std::int64_t>;  // little-endian

  explicit NaiveTower(const FieldTower& f) : p_(f.p()), m_(f.m()), r_(f.r()), q_(f.q()) {
    for (auto c : f.spec().base_modulus) base_.push_back(c);
    for (auto c : f.spec().top_modulus) top_.push_back(unpack_mid(c));
  }

  // Mid elements as length-m vectors over F_p.
  Poly unpack_mid(std::uint32_t code) const {
    Poly out(m_);
    for (unsigned i = 0; i < m_; ++i, code /= p_) out[i] = code % p_;
    return out;
  }
  std::uint32_t pack_mid(const Poly& a) const {
    std::uint32_t c = 0;
    for (unsigned i = m_; i-- > 0;) c = c * p_ + static_cast<std::uint32_t>(a[i]);
    return c;
  }

  Poly mid_add(const Poly& a, const Poly& b) const {
    Poly out(m_);
    for (unsigned i = 0; i < m_; ++i) out[i] = (a[i] + b[i]) % p_;
    return out;
  }

  Poly mid_mul(const Poly& a, const Poly& b) const {
    Poly prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    // base_ is monic of degree m.
    for (unsigned d = 2 * m_ - 1; d >= m_; --d) {
      const std::int64_t c = prod[d];
      if (c == 0) continue;
      for (unsigned t = 0; t <= m_; ++t) prod[d - m_ + t] = ((prod[d - m_ + t] - c * base_[t]) % p_ + p_) % p_;
    }
    prod.resize(m_);
    return prod;
  }

  // Top elements: vectors of r mid codes.
  std::vector<std::uint32_t> unpack_top(std::uint32_t code) const {
    std::vector<std::uint32_t> out(r_);
    for (unsigned i = 0; i < r_; ++i, code /= q_) out[i] = code % q_;
    return out;
  }
  std::uint32_t pack_top(const std::vector<std::uint32_t>& a) const {
    std::uint32_t c = 0;
    for (unsigned i = r_; i-- > 0;) c = c * q_ + a[i];
    return c;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = unpack_top(a), y = unpack_top(b);
    for (unsigned i = 0; i < r_; ++i) x[i] = pack_mid(mid_add(unpack_mid(x[i]), unpack_mid(y[i])));
    return pack_top(x);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = unpack_top(a), y = unpack_top(b);
    std::vector<Poly> prod(2 * r_, Poly(m_, 0));
    for (unsigned i = 0; i < r_; ++i)
      for (unsigned j = 0; j < r_; ++j)
        prod[i + j] = mid_add(prod[i + j], mid_mul(unpack_mid(x[i]), unpack_mid(y[j])));
    for (unsigned d = 2 * r_ - 1; d >= r_; --d) {
      const Poly c = prod[d];
      for (unsigned t = 0; t <= r_; ++t) {
        // prod[d−r+t] −= c · top_[t]
        Poly term = mid_mul(c, top_[t]);
        for (auto& v : term) v = (p_ - v) % p_;
        prod[d - r_ + t] = mid_add(prod[d - r_ + t], term);
      }
    }
    std::vector<std::uint32_t> out(r_);
    for (unsigned i = 0; i < r_; ++i) out[i] = pack_mid(prod[i]);
    return pack_top(out);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t acc = 1;
    for (std::uint64_t i = 0; i < e; ++i) acc = mul(acc, a);
    return acc;
  }

 private:
  unsigned p_, m_, r_;
  std::uint32_t q_;
  Poly base_;
  std::vector<Poly> top_;
};

/// Permutation-expansion determinant of a square matrix of top-level codes,
/// using only the naive tower.
inline std::uint32_t leibniz_det(const NaiveTower& nt, const FieldTower& f, const Mat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t acc = 0;
  const std::uint32_t minus_one = f.embed(f.from_int(-1, Level::mid), Level::top).code;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    std::uint32_t term = inversions % 2 ? minus_one : 1;
    for (std::size_t i = 0; i < n; ++i) term = nt.mul(term, m(i, perm[i]).code);
    acc = nt.add(acc, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

/// Rank over F_p of an integer matrix (rows of residues), by plain elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, b = x % p, e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] % p == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t s = inv(((a[rank][c] % p) + p) % p);
    for (auto& v : a[rank]) v = ((v * s) % p + p) % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] % p == 0) continue;
      const std::int64_t t = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - t * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline Elem random_elem(const FieldTower& f, Level level, std::mt19937_64& rng, bool nonzero = false) {
  const std::uint32_t n = f.size(level);
  std::uniform_int_distribution<std::uint32_t> d(nonzero ? 1 : 0, n - 1);
  return {d(rng), level};
}

inline Mat random_mat(const FieldTower& f, std::size_t r, std::size_t c, Level level, std::mt19937_64& rng) {
  Mat m(r, c, level);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_elem(f, level, rng);
  return m;
}

inline SkewPoly random_skew(const FieldTower& f, std::size_t len, std::mt19937_64& rng) {
  std::vector<Elem> c;
  for (std::size_t i = 0; i < len; ++i) c.push_back(random_elem(f, Level::top, rng));
  return SkewPoly(std::move(c));
}

}  // namespace testing
