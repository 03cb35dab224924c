#include "sumrank/fields.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sumrank {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::level_mismatch: return "LevelMismatch";
    case ErrorCode::zero_input: return "ZeroInput";
    case ErrorCode::bad_tower: return "BadTower";
    case ErrorCode::not_a_divisor: return "NotADivisor";
    case ErrorCode::not_square: return "NotSquare";
    case ErrorCode::singular_leading_block: return "SingularLeadingBlock";
    case ErrorCode::ambient_mismatch: return "AmbientMismatch";
    case ErrorCode::block_out_of_range: return "BlockOutOfRange";
    case ErrorCode::bad_params: return "BadParams";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::singular_m: return "SingularM";
    case ErrorCode::bad_roots: return "BadRoots";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(Level level) {
  switch (level) {
    case Level::prime: return "prime";
    case Level::mid: return "mid";
    case Level::top: return "top";
  }
  return "?";
}

namespace {

constexpr std::uint32_t kMaxTopSize = 1u << 20;
constexpr std::uint32_t kMaxMidSize = 1024;
constexpr std::uint32_t kAddTableLimit = 1024;

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Small field given by full tables; used only while bootstrapping the tower.
struct TableField {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> add, mul, neg, inv;

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * n + b]; }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
};

TableField prime_field(unsigned p) {
  TableField f;
  f.n = p;
  f.add.resize(p * p);
  f.mul.resize(p * p);
  f.neg.resize(p);
  f.inv.assign(p, 0);
  for (unsigned a = 0; a < p; ++a) {
    f.neg[a] = (p - a) % p;
    for (unsigned b = 0; b < p; ++b) {
      f.add[a * p + b] = (a + b) % p;
      f.mul[a * p + b] = (a * b) % p;
      if ((a * b) % p == 1) f.inv[a] = b;
    }
  }
  return f;
}

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g.
Poly poly_mod(const TableField& k, Poly f, const Poly& g) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = k.plus(f[shift + i], k.neg[k.times(lead, g[i])]);
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const TableField& k, const Poly& a, const Poly& b, const Poly& g) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = k.plus(prod[i + j], k.times(a[i], b[j]));
  }
  return poly_mod(k, std::move(prod), g);
}

Poly poly_from_code(std::uint64_t code, std::uint32_t base, unsigned len) {
  Poly f(len);
  for (unsigned i = 0; i < len; ++i) {
    f[i] = static_cast<std::uint32_t>(code % base);
    code /= base;
  }
  return f;
}

std::uint32_t to_code(const Poly& f, std::uint32_t base) {
  std::uint64_t code = 0;
  for (std::size_t i = f.size(); i-- > 0;) code = code * base + f[i];
  return static_cast<std::uint32_t>(code);
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const TableField& k, const Poly& f) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= k.n;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = poly_from_code(c, k.n, static_cast<unsigned>(d));
      g.push_back(1);
      if (poly_mod(k, f, g).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(const TableField& k, unsigned deg) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < deg; ++i) count *= k.n;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f = poly_from_code(c, k.n, deg);
    f.push_back(1);
    if (is_irreducible(k, f)) return f;
  }
  throw Error(ErrorCode::bad_tower, "no irreducible polynomial found");
}

void validate_modulus(const TableField& k, const Poly& f, unsigned deg, const char* which) {
  if (f.size() != deg + 1 || f.back() != 1)
    throw Error(ErrorCode::bad_tower, std::string(which) + " modulus must be monic of degree " + std::to_string(deg));
  for (auto c : f)
    if (c >= k.n) throw Error(ErrorCode::bad_tower, std::string(which) + " modulus coefficient out of range");
  if (!is_irreducible(k, f)) throw Error(ErrorCode::bad_tower, std::string(which) + " modulus is reducible");
}

}  // namespace

std::vector<std::uint32_t> default_base_modulus(unsigned p, unsigned m) {
  if (m == 1) return {0, 1};
  return smallest_irreducible(prime_field(p), m);
}

FieldTower::FieldTower(TowerSpec spec) : spec_(std::move(spec)) {
  p_ = spec_.p;
  m_ = spec_.m;
  r_ = spec_.r;
  if (!is_prime(p_)) throw Error(ErrorCode::bad_tower, "characteristic must be prime");
  if (m_ == 0 || r_ == 0) throw Error(ErrorCode::bad_tower, "extension degrees must be positive");
  std::uint64_t q = 1, n = 1;
  for (unsigned i = 0; i < m_; ++i) q *= p_;
  if (q > kMaxMidSize) throw Error(ErrorCode::bad_tower, "base field too large for table arithmetic");
  for (unsigned i = 0; i < r_; ++i) n *= q;
  if (n > kMaxTopSize) throw Error(ErrorCode::bad_tower, "top field too large for table arithmetic");
  q_ = static_cast<std::uint32_t>(q);
  n_ = static_cast<std::uint32_t>(n);
  digits_ = m_ * r_;
  build_tables();
}

FieldTower FieldTower::make(unsigned p, unsigned m, unsigned r) { return FieldTower(TowerSpec{p, m, r, {}, {}}); }

void FieldTower::build_tables() {
  const TableField fp = prime_field(p_);
  if (spec_.base_modulus.empty()) spec_.base_modulus = default_base_modulus(p_, m_);
  validate_modulus(fp, spec_.base_modulus, m_, "base");

  // F_q as F_p[x]/(base_modulus).
  TableField fq;
  fq.n = q_;
  fq.add.resize(std::size_t(q_) * q_);
  fq.mul.resize(std::size_t(q_) * q_);
  fq.neg.resize(q_);
  fq.inv.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const Poly pa = poly_from_code(a, p_, m_);
    Poly na(m_);
    for (unsigned i = 0; i < m_; ++i) na[i] = fp.neg[pa[i]];
    fq.neg[a] = to_code(na, p_);
    for (std::uint32_t b = 0; b < q_; ++b) {
      const Poly pb = poly_from_code(b, p_, m_);
      Poly s(m_);
      for (unsigned i = 0; i < m_; ++i) s[i] = fp.plus(pa[i], pb[i]);
      fq.add[a * q_ + b] = to_code(s, p_);
      Poly prod = poly_mulmod(fp, pa, pb, spec_.base_modulus);
      prod.resize(m_, 0);
      fq.mul[a * q_ + b] = to_code(prod, p_);
      if (fq.mul[a * q_ + b] == 1) fq.inv[a] = b;
    }
  }

  if (spec_.top_modulus.empty()) {
    if (r_ == 1) {
      spec_.top_modulus = {0, 1};
    } else if (r_ == 2 && p_ != 2) {
      std::vector<bool> square(q_, false);
      for (std::uint32_t a = 1; a < q_; ++a) square[fq.times(a, a)] = true;
      std::uint32_t c = 1;
      while (square[c]) ++c;
      spec_.top_modulus = {fq.neg[c], 0, 1};
    } else {
      spec_.top_modulus = smallest_irreducible(fq, r_);
    }
  }
  validate_modulus(fq, spec_.top_modulus, r_, "top");

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    Poly prod = poly_mulmod(fq, poly_from_code(a, q_, r_), poly_from_code(b, q_, r_), spec_.top_modulus);
    prod.resize(r_, 0);
    return to_code(prod, q_);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t result = 1;
    while (e) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  };

  const auto factors = prime_factors(n_ - 1);
  std::uint32_t g = 0;
  for (std::uint32_t c = 1; c < n_ && g == 0; ++c) {
    if (n_ == 2) {
      g = 1;
      break;
    }
    bool primitive = true;
    for (auto f : factors) {
      if (slow_pow(c, (n_ - 1) / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) g = c;
  }

  exp_.assign(n_ - 1, 0);
  log_.assign(n_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < n_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, g);
  }

  neg_.resize(n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    std::uint32_t code = a, out = 0, scale = 1;
    for (unsigned j = 0; j < r_; ++j) {
      out += fq.neg[code % q_] * scale;
      code /= q_;
      scale *= q_;
    }
    neg_[a] = out;
  }
  // Mid addition table doubles as the top addition kernel.
  add_table_ = std::move(fq.add);
  if (n_ <= kAddTableLimit && r_ > 1) {
    std::vector<std::uint32_t> mid_add = std::move(add_table_);
    add_table_.assign(std::size_t(n_) * n_, 0);
    for (std::uint32_t a = 0; a < n_; ++a) {
      for (std::uint32_t b = 0; b < n_; ++b) {
        std::uint32_t ca = a, cb = b, out = 0, scale = 1;
        for (unsigned j = 0; j < r_; ++j) {
          out += mid_add[(ca % q_) * q_ + (cb % q_)] * scale;
          ca /= q_;
          cb /= q_;
          scale *= q_;
        }
        add_table_[std::size_t(a) * n_ + b] = out;
      }
    }
  }

  for (std::uint32_t c = 1; c < q_; ++c) {
    if (multiplicative_order({c, Level::mid}) == q_ - 1) {
      mid_generator_ = c;
      break;
    }
  }
}

std::uint32_t FieldTower::size(Level level) const noexcept {
  switch (level) {
    case Level::prime: return p_;
    case Level::mid: return q_;
    case Level::top: return n_;
  }
  return 0;
}

std::uint32_t FieldTower::add_codes(std::uint32_t a, std::uint32_t b) const noexcept {
  if (add_table_.size() == std::size_t(n_) * n_) return add_table_[std::size_t(a) * n_ + b];
  // add_table_ holds the q×q mid table here.
  std::uint32_t out = 0, scale = 1;
  for (unsigned j = 0; j < r_; ++j) {
    out += add_table_[(a % q_) * q_ + (b % q_)] * scale;
    a /= q_;
    b /= q_;
    scale *= q_;
  }
  return out;
}

std::uint32_t FieldTower::mul_codes(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
  if (e >= n_ - 1) e -= n_ - 1;
  return exp_[e];
}

void FieldTower::check_code(Elem x) const {
  if (x.code >= size(x.level))
    throw Error(ErrorCode::level_mismatch, "code " + std::to_string(x.code) + " outside level " + std::string(to_string(x.level)));
}

void FieldTower::check_level(Elem a, Elem b) const {
  if (a.level != b.level)
    throw Error(ErrorCode::level_mismatch,
                std::string(to_string(a.level)) + " vs " + std::string(to_string(b.level)));
}

Elem FieldTower::from_int(long long n, Level level) const {
  long long v = n % static_cast<long long>(p_);
  if (v < 0) v += p_;
  return {static_cast<std::uint32_t>(v), level};
}

Elem FieldTower::from_code(std::uint32_t code, Level level) const {
  Elem x{code, level};
  check_code(x);
  return x;
}

std::vector<std::uint32_t> FieldTower::coords(Elem x) const {
  check_code(x);
  switch (x.level) {
    case Level::prime: return {};
    case Level::mid: return poly_from_code(x.code, p_, m_);
    case Level::top: return poly_from_code(x.code, q_, r_);
  }
  return {};
}

Elem FieldTower::from_coords(std::span<const std::uint32_t> c, Level level) const {
  const std::uint32_t base = level == Level::top ? q_ : p_;
  const unsigned len = level == Level::top ? r_ : (level == Level::mid ? m_ : 1);
  if (c.size() > len) throw Error(ErrorCode::length_mismatch, "too many coordinates");
  Poly f(c.begin(), c.end());
  for (auto v : f)
    if (v >= base) throw Error(ErrorCode::level_mismatch, "coordinate out of range");
  return {to_code(f, base), level};
}

Elem FieldTower::add(Elem a, Elem b) const {
  check_level(a, b);
  return {add_codes(a.code, b.code), a.level};
}

Elem FieldTower::sub(Elem a, Elem b) const {
  check_level(a, b);
  return {add_codes(a.code, neg_[b.code]), a.level};
}

Elem FieldTower::mul(Elem a, Elem b) const {
  check_level(a, b);
  return {mul_codes(a.code, b.code), a.level};
}

Elem FieldTower::div(Elem a, Elem b) const {
  check_level(a, b);
  return mul(a, inv(b));
}

Elem FieldTower::neg(Elem a) const { return {neg_[a.code], a.level}; }

Elem FieldTower::inv(Elem a) const {
  if (a.code == 0) throw Error(ErrorCode::division_by_zero, "inverse of zero");
  const std::uint32_t e = log_[a.code] == 0 ? 0 : (n_ - 1) - log_[a.code];
  return {exp_[e], a.level};
}

Elem FieldTower::pow(Elem a, long long e) const {
  if (a.code == 0) {
    if (e < 0) throw Error(ErrorCode::division_by_zero, "negative power of zero");
    return {e == 0 ? 1u : 0u, a.level};
  }
  const long long order = n_ - 1;
  long long k = e % order;
  if (k < 0) k += order;
  const std::uint64_t idx = (std::uint64_t(log_[a.code]) * std::uint64_t(k)) % std::uint64_t(order);
  return {exp_[idx], a.level};
}

Elem FieldTower::arithmetic(Elem a, Elem b, ArithOp op) const {
  switch (op) {
    case ArithOp::add: return add(a, b);
    case ArithOp::sub: return sub(a, b);
    case ArithOp::mul: return mul(a, b);
    case ArithOp::div: return div(a, b);
  }
  return a;
}

Elem FieldTower::embed(Elem x, Level level) const {
  check_code(x);
  if (static_cast<int>(level) < static_cast<int>(x.level))
    throw Error(ErrorCode::level_mismatch, "embed cannot move down the tower");
  return {x.code, level};
}

Elem FieldTower::restrict(Elem x, Level level) const {
  check_code(x);
  if (x.code >= size(level))
    throw Error(ErrorCode::level_mismatch, "element does not lie in the " + std::string(to_string(level)) + " field");
  return {x.code, level};
}

Elem FieldTower::frobenius(Elem x, long long h) const {
  if (x.level != Level::top) throw Error(ErrorCode::level_mismatch, "frobenius expects a top-level element");
  check_code(x);
  long long hh = h % static_cast<long long>(r_);
  if (hh < 0) hh += r_;
  if (x.code == 0 || hh == 0) return x;
  std::uint64_t qh = 1;
  for (long long i = 0; i < hh; ++i) qh *= q_;
  return pow(x, static_cast<long long>(qh % (n_ - 1)));
}

Elem FieldTower::trace(Elem x) const {
  if (x.level != Level::top) throw Error(ErrorCode::level_mismatch, "trace expects a top-level element");
  Elem acc = zero();
  for (unsigned i = 0; i < r_; ++i) acc = add(acc, frobenius(x, i));
  return restrict(acc, Level::mid);
}

Elem FieldTower::norm(Elem x) const {
  if (x.level != Level::top) throw Error(ErrorCode::level_mismatch, "norm expects a top-level element");
  Elem acc = one();
  for (unsigned i = 0; i < r_; ++i) acc = mul(acc, frobenius(x, i));
  return restrict(acc, Level::mid);
}

std::uint64_t FieldTower::multiplicative_order(Elem x) const {
  if (x.code == 0) throw Error(ErrorCode::zero_input, "order of zero");
  check_code(x);
  const std::uint64_t order = n_ - 1;
  return order / std::gcd(order, std::uint64_t(log_[x.code]));
}

std::vector<std::uint32_t> FieldTower::lex_order(Level level) const {
  const unsigned len = level == Level::top ? digits_ : (level == Level::mid ? m_ : 1);
  const std::uint32_t count = size(level);
  std::vector<std::uint32_t> out(count);
  for (std::uint32_t t = 0; t < count; ++t) {
    std::uint32_t v = t, code = 0;
    for (unsigned i = 0; i < len; ++i) {
      code = code * p_ + v % p_;
      v /= p_;
    }
    out[t] = code;
  }
  return out;
}

Elem FieldTower::norm_preimage(Elem lambda) const {
  const Elem target = restrict(lambda, Level::mid);
  if (target.code == 0) throw Error(ErrorCode::zero_input, "norm preimage of zero");
  for (auto code : lex_order(Level::top)) {
    if (code == 0) continue;
    const Elem a{code, Level::top};
    if (norm(a) == target) return a;
  }
  throw Error(ErrorCode::bad_tower, "norm is not surjective");  // unreachable for a field
}

bool FieldTower::is_square(Elem x) const {
  if (x.level != Level::mid) throw Error(ErrorCode::level_mismatch, "is_square expects an element of F_q");
  check_code(x);
  if (x.code == 0) throw Error(ErrorCode::zero_input, "is_square of zero");
  if (p_ == 2) return true;
  return pow(x, (q_ - 1) / 2).code == 1;
}

Elem FieldTower::skew_unit() const {
  if (r_ != 2 || p_ == 2) throw Error(ErrorCode::bad_tower, "skew unit needs r = 2 and odd q");
  for (auto code : lex_order(Level::top)) {
    if (code == 0) continue;
    const Elem a{code, Level::top};
    if (frobenius(a, 1) == neg(a)) return a;
  }
  throw Error(ErrorCode::bad_tower, "no skew unit");  // unreachable
}

std::vector<Elem> FieldTower::subgroup_lambda(unsigned ell) const {
  if (ell == 0 || (q_ - 1) % ell != 0)
    throw Error(ErrorCode::not_a_divisor, std::to_string(ell) + " does not divide q-1 = " + std::to_string(q_ - 1));
  if (ell % p_ == 0) throw Error(ErrorCode::bad_params, "ell must be invertible mod p");
  const Elem g = pow(generator_of_units(), (q_ - 1) / ell);
  std::vector<Elem> out;
  Elem x = one(Level::mid);
  for (unsigned i = 0; i < ell; ++i) {
    out.push_back(x);
    x = mul(x, g);
  }
  return out;
}

std::string FieldTower::format(Elem x) const {
  check_code(x);
  if (x.level != Level::top || r_ == 1) return std::to_string(x.code);
  const auto c = coords(x);
  std::ostringstream os;
  for (unsigned j = 0; j < r_; ++j) {
    if (j) os << '+';
    os << c[j];
    if (j >= 1) os << 'u';
    if (j >= 2) os << '^' << j;
  }
  return os.str();
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

long long parse_int(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::parse_error, "empty number");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse_error, "bad number '" + s + "'");
  }
  if (pos != s.size()) throw Error(ErrorCode::parse_error, "bad number '" + s + "'");
  return v;
}

}  // namespace

Elem FieldTower::parse(std::string_view text, Level level) const {
  const std::string s = strip(text);
  if (s.empty()) throw Error(ErrorCode::parse_error, "empty element");
  const std::uint32_t base = level == Level::top ? q_ : p_;
  const unsigned len = level == Level::top ? r_ : (level == Level::mid ? m_ : 1);

  auto coefficient = [&](long long v) -> std::uint32_t {
    if (v < 0) {
      if (-v >= static_cast<long long>(base)) throw Error(ErrorCode::parse_error, "coefficient out of range");
      return neg_[static_cast<std::uint32_t>(-v)];
    }
    if (v >= static_cast<long long>(base)) throw Error(ErrorCode::parse_error, "coefficient out of range");
    return static_cast<std::uint32_t>(v);
  };

  Poly c(len, 0);
  if (s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorCode::parse_error, "unterminated '['");
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string item;
    unsigned j = 0;
    while (std::getline(ss, item, ',')) {
      if (j >= len) throw Error(ErrorCode::parse_error, "too many coordinates");
      c[j++] = coefficient(parse_int(item));
    }
    return {to_code(c, base), level};
  }

  if (level != Level::top || r_ == 1) {
    const long long v = parse_int(s);
    if (v < 0 || static_cast<std::uint64_t>(v) >= size(level)) {
      if (v < 0 && -v < static_cast<long long>(size(level))) return neg({static_cast<std::uint32_t>(-v), level});
      throw Error(ErrorCode::parse_error, "code out of range");
    }
    return {static_cast<std::uint32_t>(v), level};
  }

  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    if (term.empty()) throw Error(ErrorCode::parse_error, "empty term in '" + s + "'");
    const auto upos = term.find('u');
    if (upos == std::string::npos) {
      c[0] = add_codes(c[0], coefficient(parse_int(term)));
      continue;
    }
    std::string head = term.substr(0, upos);
    if (!head.empty() && head.back() == '*') head.pop_back();
    long long coef = 1;
    if (head == "-") coef = -1;
    else if (!head.empty()) coef = parse_int(head);
    unsigned deg = 1;
    const std::string tail = term.substr(upos + 1);
    if (!tail.empty()) {
      if (tail.front() != '^') throw Error(ErrorCode::parse_error, "bad term '" + term + "'");
      deg = static_cast<unsigned>(parse_int(tail.substr(1)));
    }
    if (deg >= len) throw Error(ErrorCode::parse_error, "power of u must be below r");
    // Coordinates are mid codes, which add inside L as elements of F_q.
    c[deg] = add_codes(c[deg], coefficient(coef));
  }
  return {to_code(c, base), level};
}

}  // namespace sumrank
