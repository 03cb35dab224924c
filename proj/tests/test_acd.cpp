#include <doctest.h>

#include "support.hpp"

using namespace sumrank;
using namespace sumrank::acd;
using testing::f25;
using testing::mid;
using testing::top;

namespace {

std::vector<Elem> lambdas(std::initializer_list<std::uint32_t> codes) {
  std::vector<Elem> out;
  for (auto c : codes) out.push_back(mid(c));
  return out;
}

AcdParams q5(unsigned k, std::initializer_list<std::uint32_t> l, const char* gamma = "u") {
  const auto tw = f25();
  return make_params(tw, k, lambdas(l), top(*tw, gamma));
}

// Random admissible parameters over the given tower; half have Tr(γ) = 0.
AcdParams random_params(const std::shared_ptr<const FieldTower>& tw, std::mt19937_64& rng, unsigned max_k, bool trace_zero) {
  const FieldTower& f = *tw;
  const unsigned units = f.q() - 1;
  const unsigned ell = 2 + static_cast<unsigned>(rng() % std::min(units - 1, 9u));
  const unsigned k = 1 + static_cast<unsigned>(rng() % std::min(ell - 1, max_k));
  std::vector<std::uint32_t> pool(units);
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Elem> l;
  for (unsigned i = 0; i < ell; ++i) l.push_back(mid(pool[i]));
  Elem gamma = trace_zero ? f.mul(f.embed(testing::random_elem(f, Level::mid, rng, true), Level::top), f.skew_unit())
                          : testing::random_elem(f, Level::top, rng, true);
  return make_params(tw, k, l, gamma);
}

// Σ_λ P(λ) Q(λ)^q, from the polynomials directly.
Elem hermitian_sum(const FieldTower& f, const LPoly& a, const LPoly& b, const std::vector<Elem>& l) {
  Elem acc = f.zero();
  for (const auto& x : l) {
    const Elem lx = f.embed(x, Level::top);
    acc = f.add(acc, f.mul(evaluate(f, a, lx), f.pow(evaluate(f, b, lx), f.q())));
  }
  return acc;
}

}  // namespace

TEST_SUITE("acd") {

TEST_CASE("basis") {
  const auto p1 = q5(1, {1, 2, 3});
  const auto& f = *p1.tower;
  const auto b1 = code_basis(p1);
  REQUIRE(b1.size() == 2);
  CHECK(b1[0] == LPoly{f.one()});
  CHECK(b1[1] == LPoly{f.zero(), f.top_root()});
  const auto b2 = code_basis(q5(2, {1, 2, 3}));
  REQUIRE(b2.size() == 4);
  CHECK(b2[1] == LPoly{f.zero(), f.one()});
  CHECK(b2[2] == LPoly{f.zero(), f.skew_unit()});
  CHECK(b2[3] == LPoly{f.zero(), f.zero(), f.top_root()});
}

TEST_CASE("validation") {
  const auto tw = f25();
  CHECK_THROWS_AS(make_params(tw, 2, lambdas({1, 2}), tw->top_root()), Error);
  CHECK_THROWS_AS(make_params(tw, 1, lambdas({1, 1}), tw->top_root()), Error);
  CHECK_THROWS_AS(make_params(tw, 1, lambdas({0, 1}), tw->top_root()), Error);
  CHECK_THROWS_AS(make_params(tw, 1, lambdas({1, 2}), tw->zero()), Error);
  const auto t7 = testing::tower(7, 1, 2);
  CHECK_THROWS_AS(make_params(t7, 1, lambdas({1, 2}), t7->top_root()), Error);  // q ≡ 3 mod 4
  CHECK_THROWS_AS(make_params(testing::tower(5, 1, 3), 1, lambdas({1, 2}), top(*f25(), "u")), Error);
}

TEST_CASE("encoding") {
  const auto p = q5(1, {1, 2, 3});
  const auto& f = *p.tower;
  CHECK(encode(p, {mid(0), mid(0)}) == std::vector<Elem>(3, f.zero()));
  CHECK(encode(p, {mid(1), mid(0)}) == std::vector<Elem>(3, f.one()));
  CHECK(encode(p, {mid(1), mid(1)}) == std::vector<Elem>{top(f, "1+1u"), top(f, "1+2u"), top(f, "1+3u")});
  try {
    encode(p, {mid(1)});
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::length_mismatch);
  }
}

TEST_CASE("the F_q-span is the twisted space and has dimension 2k") {
  std::mt19937_64 rng(61);
  const auto tw = testing::tower(13, 1, 2);
  const auto& f = *tw;
  for (int it = 0; it < 20; ++it) {
    const auto p = random_params(tw, rng, 3, it % 2 == 0);
    const auto c = expanded_code(p);
    CHECK(c.dim() == 2 * p.k);
    // a_0 + Σ a_i X^i + γ a_k X^k, evaluated and expanded, lies in C.
    LPoly poly(p.k + 1, f.zero());
    poly[0] = f.embed(testing::random_elem(f, Level::mid, rng), Level::top);
    for (unsigned i = 1; i < p.k; ++i) poly[i] = testing::random_elem(f, Level::top, rng);
    poly[p.k] = f.mul(p.twist_scalar, f.embed(testing::random_elem(f, Level::mid, rng), Level::top));
    std::vector<Elem> v;
    const Elem a = p.skew_unit;
    const auto ac = f.coords(a);
    for (const auto& l : p.lambda_set) {
      const auto cc = f.coords(evaluate(f, poly, f.embed(l, Level::top)));
      // x·1 + y·α: y = c1 / a1, x = c0 − y a0.
      const Elem y = f.div(mid(cc[1]), mid(ac[1]));
      v.push_back(f.sub(mid(cc[0]), f.mul(y, mid(ac[0]))));
      v.push_back(y);
    }
    CHECK(c.contains(f, v));
  }
}

TEST_CASE("trace-Hermitian form") {
  const auto& f = *f25();
  CHECK(trace_hermitian(f, {f.one()}, {f.one()}) == mid(2));
  CHECK(trace_hermitian(f, {f.top_root()}, {f.top_root()}) == mid(1));
  std::mt19937_64 rng(67);
  for (int it = 0; it < 100; ++it) {
    std::vector<Elem> x, y;
    for (int i = 0; i < 4; ++i) {
      x.push_back(testing::random_elem(f, Level::top, rng));
      y.push_back(testing::random_elem(f, Level::top, rng));
    }
    CHECK(trace_hermitian(f, x, y) == trace_hermitian(f, y, x));
  }
  CHECK_THROWS_AS(trace_hermitian(f, {f.one()}, {}), Error);
}

TEST_CASE("T matrix entries") {
  const auto p = q5(1, {2, 3});
  const auto& f = *p.tower;
  CHECK(t_matrix(p) == Mat::from_codes(2, 2, {4, 0, 0, 3}, Level::mid));
  // (1,1) = 2ℓ; (αX^i, αX^j) = −2α² p_{i+j}; (γX^k, γX^k) = 2γ^{q+1} p_{2k}.
  std::mt19937_64 rng(71);
  const auto tw = testing::tower(13, 1, 2);
  for (int it = 0; it < 30; ++it) {
    const auto r = random_params(tw, rng, 3, true);
    const auto& g = *r.tower;
    const Mat t = t_matrix(r);
    const auto ps = power_sums(g, r.lambda_set, 2 * r.k);
    const Elem two = mid(2);
    CHECK(t(0, 0) == g.mul(two, g.from_int(r.ell(), Level::mid)));
    const Elem a2 = g.restrict(g.mul(r.skew_unit, r.skew_unit), Level::mid);
    for (unsigned i = 1; i < r.k; ++i)
      for (unsigned j = 1; j < r.k; ++j)
        CHECK(t(r.k + i - 1, r.k + j - 1) == g.neg(g.mul(g.mul(two, a2), ps[i + j])));
    const std::size_t last = 2 * r.k - 1;
    CHECK(t(last, last) == g.mul(g.mul(two, g.restrict(g.pow(r.twist_scalar, g.q() + 1), Level::mid)), ps[2 * r.k]));
  }
  (void)f;
}

TEST_CASE("closed forms of GG† and T match direct sums") {
  std::mt19937_64 rng(73);
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{5, 1}, {13, 1}, {3, 2}, {17, 1}}) {
    const auto tw = testing::tower(p, m, 2);
    for (int it = 0; it < 25; ++it) {
      const auto r = random_params(tw, rng, 3, true);
      const auto& f = *r.tower;
      const auto basis = code_basis(r);
      const Mat g = gram_hermitian(r);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) CHECK(g(i, j) == hermitian_sum(f, basis[i], basis[j], r.lambda_set));
      CHECK(closed_form_gram_hermitian(r) == g);
      CHECK(closed_form_t_matrix(r) == t_matrix(r));
    }
  }
}

TEST_CASE("power sums") {
  const auto& f = *f25();
  const auto ps = power_sums(f, lambdas({1, 2, 3}), 4);
  CHECK(ps[0] == mid(3));
  CHECK(ps[1] == mid(1));
  CHECK(ps[2] == mid(4));
  const auto tw = testing::tower(13, 1, 2);
  for (std::uint32_t g = 2; g < 13; ++g)
    for (unsigned ell = 1; ell <= 11; ++ell) {
      std::vector<Elem> l;
      for (unsigned i = 0; i < ell; ++i) l.push_back(tw->pow(mid(g), i));
      const auto direct = power_sums(*tw, l, 8);
      for (unsigned e = 0; e <= 8; ++e) CHECK(geometric_power_sum(*tw, mid(g), ell, e) == direct[e]);
    }
  CHECK(geometric_power_sum(*tw, mid(5), 14, 0) == mid(1));
}

TEST_CASE("ACD check examples") {
  const auto good = q5(1, {2, 3});
  auto chk = acd_check(good);
  CHECK(chk.by_matrix);
  REQUIRE(chk.by_structure.has_value());
  CHECK(*chk.by_structure);
  CHECK(acd_oracle(good) == 0);

  const auto bad = q5(1, {1, 2});
  chk = acd_check(bad);
  CHECK_FALSE(chk.by_matrix);
  CHECK(acd_oracle(bad) >= 1);

  // k = 1: Δ = 2γ^{q+1} p_2.
  const auto& f = *good.tower;
  const auto b = structured_blocks(good);
  CHECK(b.m.rows() == 0);
  CHECK(b.w.empty());
  CHECK(b.v.empty());
  CHECK(structured_delta(good) == f.mul(f.mul(mid(2), f.restrict(f.pow(good.twist_scalar, 6), Level::mid)), b.p2k));

  // Tr(γ) ≠ 0 leaves only the matrix verdict.
  const auto off = q5(1, {2, 3}, "1+u");
  chk = acd_check(off);
  CHECK_FALSE(chk.by_structure.has_value());
  CHECK(chk.by_matrix == (acd_oracle(off) == 0));
}

TEST_CASE("matrix verdict agrees with the hull oracle") {
  std::mt19937_64 rng(79);
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{5, 1}, {13, 1}, {3, 2}}) {
    const auto tw = testing::tower(p, m, 2);
    for (int it = 0; it < 60; ++it) {
      const auto r = random_params(tw, rng, 3, it % 2 == 0);
      const auto c = expanded_code(r), d = expanded_dual(r);
      CHECK(c.dim() + d.dim() == 2 * r.ell());
      const auto chk = acd_check(r);
      CHECK(chk.by_matrix == (acd_oracle(r) == 0));
      if (chk.by_structure) CHECK(*chk.by_structure == chk.by_matrix);
    }
  }
}

TEST_CASE("self-orthogonal vectors land in the hull") {
  const auto bad = q5(1, {1, 2});
  const auto& f = *bad.tower;
  const auto c = expanded_code(bad), d = expanded_dual(bad);
  const auto hull = intersect(f, c, d);
  REQUIRE(hull.dim() >= 1);
  for (std::size_t i = 0; i < hull.dim(); ++i) {
    CHECK(c.contains(f, hull.basis().row(i)));
    CHECK(d.contains(f, hull.basis().row(i)));
  }
}

TEST_CASE("MDS criterion") {
  CHECK(mds_criterion(q5(1, {1, 2, 3}, "u")));
  CHECK_FALSE(mds_criterion(q5(1, {1, 2, 3}, "1")));
  for (std::uint32_t c = 1; c < 5; ++c) {
    const std::string g = std::to_string(c);
    CHECK_FALSE(mds_criterion(q5(1, {1, 2, 3}, g.c_str())));
  }
}

TEST_CASE("minimum distance") {
  CHECK(min_distance_oracle(q5(1, {1, 2, 3})) == 3);
  CHECK(min_distance_oracle(q5(1, {2, 3})) == 2);
  const auto square = q5(1, {1, 2, 3}, "1");
  CHECK(min_distance_oracle(square) <= 3);
  CHECK(min_distance_oracle(square) >= 1);
  try {
    min_distance_oracle(q5(2, {1, 2, 3, 4}), 100);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
}

TEST_CASE("Singleton bound, and equality under the MDS criterion") {
  std::mt19937_64 rng(83);
  const auto tw = testing::tower(13, 1, 2);
  for (int it = 0; it < 20; ++it) {
    const auto r = random_params(tw, rng, 2, it % 2 == 0);
    const std::size_t d = min_distance_oracle(r);
    CHECK(d <= r.ell() - r.k + 1);
    if (mds_criterion(r)) CHECK(d == r.ell() - r.k + 1);
  }
}

TEST_CASE("root product") {
  const auto& f = *f25();
  // k = 1: a_0 = −γ a_k λ, in F_q iff γ ∈ F_q.
  for (std::uint32_t l = 1; l < 5; ++l) {
    const auto in_q = root_product_check(q5(1, {1, 2, 3, 4}, "3"), {mid(l)}, mid(2));
    CHECK(in_q.member_exists);
    CHECK(in_q.vanishes_on_roots);
    CHECK(in_q.forced_a0 == f.neg(f.mul(f.mul(top(f, "3"), top(f, "2")), f.embed(mid(l), Level::top))));
    CHECK(in_q.interpolated_a0 == in_q.forced_a0);
    const auto skew = root_product_check(q5(1, {1, 2, 3, 4}, "u"), {mid(l)}, mid(2));
    CHECK_FALSE(skew.member_exists);
  }
  // γ = u: no root set of size k admits a member, for every a_k.
  const auto p = q5(2, {1, 2, 3, 4}, "u");
  for (std::uint32_t a = 1; a < 4; ++a)
    for (std::uint32_t b = a + 1; b <= 4; ++b)
      for (std::uint32_t ak = 1; ak < 5; ++ak) CHECK_FALSE(root_product_check(p, {mid(a), mid(b)}, mid(ak)).member_exists);
  // γ ∈ F_q, k = 2: the member vanishes at both roots.
  const auto rp = root_product_check(q5(2, {1, 2, 3, 4}, "2"), {mid(1), mid(3)}, mid(4));
  CHECK(rp.member_exists);
  CHECK(rp.vanishes_on_roots);
  CHECK(rp.interpolated_a0 == rp.forced_a0);
  CHECK(evaluate(f, rp.polynomial, top(f, "1")).is_zero());
  CHECK(evaluate(f, rp.polynomial, top(f, "3")).is_zero());

  CHECK_THROWS_AS(root_product_check(p, {mid(1)}, mid(1)), Error);
  CHECK_THROWS_AS(root_product_check(p, {mid(1), mid(1)}, mid(1)), Error);
  CHECK_THROWS_AS(root_product_check(q5(2, {1, 2, 3}), {mid(1), mid(4)}, mid(1)), Error);
  CHECK_THROWS_AS(root_product_check(p, {mid(1), mid(2)}, mid(0)), Error);
}

TEST_CASE("lambda search") {
  const auto tw = f25();
  const auto ex = lambda_search(tw, 1, 3, SearchStrategy::exhaustive);
  REQUIRE(ex.params);
  CHECK(ex.params->lambda_set == lambdas({1, 2, 3}));
  CHECK(acd_oracle(*ex.params) == 0);
  CHECK(min_distance_oracle(*ex.params) == 3);

  const auto geo = lambda_search(tw, 1, 2, SearchStrategy::geometric);
  CHECK_FALSE(geo.params);
  CHECK(geo.scanned == 2);
  CHECK(geo.note.find("det H") != std::string::npos);

  const auto fallback = lambda_search(tw, 1, 2, SearchStrategy::automatic);
  REQUIRE(fallback.params);
  CHECK(fallback.used == SearchStrategy::exhaustive);
  CHECK(acd_check(*fallback.params).by_matrix);
  CHECK(acd_oracle(*fallback.params) == 0);
  CHECK(mds_criterion(*fallback.params));
  // {2,3} passes as well.
  CHECK(acd_check(make_params(tw, 1, lambdas({2, 3}), tw->skew_unit())).by_matrix);

  CHECK_THROWS_AS(lambda_search(tw, 2, 3, SearchStrategy::automatic), Error);
  CHECK_THROWS_AS(lambda_search(tw, 1, 4, SearchStrategy::automatic), Error);
}

TEST_CASE("delta identity") {
  const auto tw = f25();
  const auto p = make_params(tw, 1, lambdas({1, 2, 3}), tw->skew_unit());
  CHECK(delta_identity_check(p));
  CHECK_THROWS_AS(delta_identity_check(q5(1, {1, 2, 3}, "2u")), Error);

  const auto t13 = testing::tower(13, 1, 2);
  const auto found = lambda_search(t13, 2, 4, SearchStrategy::geometric);
  REQUIRE(found.params);
  CHECK(delta_identity_check(*found.params));

  std::mt19937_64 rng(89);
  int checked = 0;
  for (int it = 0; it < 200; ++it) {
    auto r = random_params(t13, rng, 4, true);
    r.twist_scalar = r.skew_unit;
    const auto b = structured_blocks(r);
    if (det(*r.tower, b.m).is_zero()) {
      try {
        delta_identity_check(r);
        FAIL("expected SingularM");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::singular_m);
      }
      continue;
    }
    CHECK(delta_identity_check(r));
    ++checked;
  }
  CHECK(checked > 50);
}

}  // TEST_SUITE

TEST_SUITE("acd") {

TEST_CASE("no Lambda exists when k exceeds the size of the complement") {
  const auto tw = testing::tower(13, 1, 2);
  const auto s = lambda_search(tw, 2, 11, SearchStrategy::automatic);
  CHECK_FALSE(s.params);
  CHECK(s.used == SearchStrategy::exhaustive);
  CHECK(s.note.find("all 12 subsets") != std::string::npos);
  // The power sums of Λ are minus those of its one-element complement {c}, so T has rank below 2k.
  for (std::uint32_t c = 1; c <= 12; ++c) {
    std::vector<Elem> l;
    for (std::uint32_t x = 1; x <= 12; ++x)
      if (x != c) l.push_back(mid(x));
    const auto p = make_params(tw, 2, l, tw->skew_unit());
    CHECK(det(*tw, t_matrix(p)).is_zero());
    CHECK(acd_oracle(p) > 0);
  }
  CHECK(lambda_search(tw, 2, 10, SearchStrategy::automatic).params);
}

}  // TEST_SUITE
