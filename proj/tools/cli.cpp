#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumrank/tlrs.hpp"

namespace sumrank::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names{
      {"tlrs-build", Command::tlrs_build},   {"tlrs-sweep", Command::tlrs_sweep},
      {"acd-build", Command::acd_build},     {"acd-search", Command::acd_search},
      {"acd-sweep", Command::acd_sweep},     {"verify-paper-examples", Command::verify_paper_examples}};
  return names;
}

// ---- serialization -------------------------------------------------------

json elem_json(const FieldTower& f, Elem x) {
  if (x.level == Level::top) return f.format(x);
  return x.code;
}

json elems_json(const FieldTower& f, const std::vector<Elem>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(elem_json(f, x));
  return out;
}

json mat_json(const FieldTower& f, const Mat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(elems_json(f, m.row(i)));
  return out;
}

json tower_json(const FieldTower& f) {
  return json{{"p", f.p()},
              {"m", f.m()},
              {"r", f.r()},
              {"q", f.q()},
              {"base_modulus", f.spec().base_modulus},
              {"top_modulus", f.spec().top_modulus}};
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_field(const json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  return quoted + "\"";
}

// One record in the requested format. CSV writes the header only when asked.
std::string render(const json& rec, Format fmt, bool csv_header) {
  std::ostringstream os;
  switch (fmt) {
    case Format::json:
      os << rec.dump() << '\n';
      break;
    case Format::text:
      for (const auto& [key, value] : rec.items()) os << key << ": " << scalar_text(value) << '\n';
      os << '\n';
      break;
    case Format::csv: {
      if (csv_header) {
        bool first = true;
        for (const auto& [key, value] : rec.items()) {
          os << (first ? "" : ",") << key;
          first = false;
        }
        os << '\n';
      }
      bool first = true;
      for (const auto& [key, value] : rec.items()) {
        os << (first ? "" : ",") << csv_field(value);
        first = false;
      }
      os << '\n';
      break;
    }
  }
  return os.str();
}

// ---- ordered worker pool -------------------------------------------------

// Runs produce(i) for i < n on `jobs` threads and hands the results to
// consume in index order, as soon as each prefix is complete.
template <typename Result>
void ordered_pool(std::size_t n, unsigned jobs, const std::function<Result(std::size_t)>& produce,
                  const std::function<void(std::size_t, Result&)>& consume) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      Result r = produce(i);
      consume(i, r);
    }
    return;
  }
  std::vector<std::optional<Result>> slots(n);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (std::size_t i; !stop && (i = next.fetch_add(1)) < n;) {
      try {
        Result r = produce(i);
        std::lock_guard lock(mu);
        slots[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
      cv.notify_all();
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

  for (std::size_t i = 0; i < n; ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return slots[i].has_value() || failure; });
    if (!slots[i]) break;
    Result r = std::move(*slots[i]);
    slots[i].reset();
    lock.unlock();
    consume(i, r);
  }
  stop = true;
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

// ---- shared setup --------------------------------------------------------

std::shared_ptr<const FieldTower> make_tower(const RunConfig& c) {
  return std::make_shared<const FieldTower>(TowerSpec{c.p, c.m, c.r, c.base_modulus, c.top_modulus});
}

std::vector<Elem> parse_lambdas(const FieldTower& f, const RunConfig& c) {
  if (!c.lambda.empty()) {
    std::vector<Elem> out;
    for (const auto& s : c.lambda) out.push_back(f.parse(s, Level::mid));
    if (c.ell != 0 && c.ell != out.size())
      throw Error(ErrorCode::bad_params, "--ell disagrees with the number of --lambda entries");
    return out;
  }
  if (c.ell == 0) throw Error(ErrorCode::bad_params, "give --ell or --lambda");
  return f.subgroup_lambda(c.ell);
}

unsigned require_k(const RunConfig& c) {
  if (!c.k) throw Error(ErrorCode::bad_params, "--k is required");
  return *c.k;
}

struct Sink {
  std::ostream& out;
  Format format;
  bool header_done = false;

  void write(const json& rec) {
    out << render(rec, format, !header_done);
    header_done = true;
  }
};

// ---- TLRS ----------------------------------------------------------------

struct TlrsOutcome {
  json record;
  bool agree = true;
  bool guard_hit = false;
};

TlrsOutcome tlrs_report(const tlrs::TlrsParams& params, const RunConfig& c, bool with_distance) {
  const FieldTower& f = params.ctx.tower();
  const auto code = tlrs::build_code(params);
  const auto rep = tlrs::gram(code, true);
  const bool lcd_gram = !rep.det_value.is_zero();
  const Elem eta2 = f.mul(params.eta, params.eta);

  TlrsOutcome o;
  json& j = o.record;
  j["schema"] = kSchema;
  j["command"] = "tlrs-build";
  j["tower"] = tower_json(f);
  j["ell"] = params.ctx.ell();
  j["lambda"] = elems_json(f, params.ctx.lambdas());
  j["k"] = params.k;
  j["h"] = params.h;
  j["eta"] = elem_json(f, params.eta);
  j["eta_squared"] = elem_json(f, eta2);
  j["one_plus_eta_squared"] = elem_json(f, f.add(f.one(), eta2));
  j["alpha"] = elem_json(f, rep.alpha_value);
  j["gram"] = mat_json(f, rep.gram);
  j["det"] = elem_json(f, rep.det_value);
  j["m_block"] = mat_json(f, rep.m_block);
  j["b_block"] = mat_json(f, rep.b_block);
  j["det_formula"] = elem_json(f, rep.det_formula);
  j["blocks_match"] = rep.blocks_match;
  j["lcd_by_criterion"] = rep.lcd_by_criterion;
  j["lcd_by_gram"] = lcd_gram;
  j["lcd_by_oracle"] = *rep.lcd_by_oracle;
  j["hull_dim"] = *rep.hull_dim;
  j["code_dim"] = code.basis_polys.size();
  j["dual_dim"] = *rep.dual_dim;
  j["ambient_dim"] = rep.ambient_dim;
  j["literature_dual_dim"] = rep.literature_dual_dim;
  j["singleton_bound"] = params.ctx.modulus_degree() - params.k + 1;
  j["min_sum_rank_distance"] = nullptr;
  if (with_distance) {
    try {
      j["min_sum_rank_distance"] = tlrs::min_sum_rank_distance(code, c.guard);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::too_large) throw;
      j["distance_note"] = e.what();
      o.guard_hit = true;
    }
  }
  o.agree = rep.blocks_match && rep.det_value == rep.det_formula && rep.lcd_by_criterion == lcd_gram &&
            lcd_gram == *rep.lcd_by_oracle;
  j["agree"] = o.agree;
  return o;
}

tlrs::TlrsParams tlrs_params(const RunConfig& c, std::shared_ptr<const FieldTower> tower) {
  const auto lambdas = parse_lambdas(*tower, c);
  QuotientCtx ctx(tower, lambdas);
  if (c.eta.empty()) throw Error(ErrorCode::bad_params, "--eta is required");
  const Elem eta = tower->parse(c.eta, Level::top);
  tlrs::TlrsParams params{std::move(ctx), require_k(c), c.h.value_or(0), eta};
  tlrs::validate(params);
  return params;
}

int cmd_tlrs_build(const RunConfig& c, std::ostream& out) {
  const auto params = tlrs_params(c, make_tower(c));
  const auto o = tlrs_report(params, c, true);
  Sink{out, c.format}.write(o.record);
  if (o.guard_hit && c.require_distance) return exit_guard_exceeded;
  return o.agree ? exit_ok : exit_mismatch;
}

struct TlrsTuple {
  std::size_t ctx_index;
  unsigned k, h;
  Elem eta;
};

int cmd_tlrs_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto tower = make_tower(c);
  const FieldTower& f = *tower;
  std::vector<QuotientCtx> ctxs;
  if (c.ell != 0 || !c.lambda.empty()) {
    ctxs.emplace_back(tower, parse_lambdas(f, c));
  } else {
    for (unsigned ell = 1; ell < f.q(); ++ell)
      if ((f.q() - 1) % ell == 0 && std::size_t(ell) * f.r() * f.r() <= 16) ctxs.push_back(QuotientCtx::subgroup(tower, ell));
  }
  std::vector<Elem> etas;
  if (!c.eta.empty()) {
    etas.push_back(f.parse(c.eta, Level::top));
  } else {
    for (std::uint32_t code = 1; code < f.size(Level::top); ++code) etas.push_back({code, Level::top});
  }

  std::vector<TlrsTuple> tuples;
  for (std::size_t ci = 0; ci < ctxs.size(); ++ci) {
    const unsigned top_k = static_cast<unsigned>(ctxs[ci].modulus_degree()) - 1;
    for (unsigned k = 1; k <= top_k; ++k) {
      if (c.k && *c.k != k) continue;
      for (unsigned h = 0; h < f.r(); ++h) {
        if (c.h && *c.h != h) continue;
        for (const auto& eta : etas) tuples.push_back({ci, k, h, eta});
      }
    }
  }

  Sink sink{out, c.format};
  std::size_t disagreements = 0;
  ordered_pool<TlrsOutcome>(
      tuples.size(), c.jobs,
      [&](std::size_t i) {
        const auto& t = tuples[i];
        tlrs::TlrsParams params{ctxs[t.ctx_index], t.k, t.h, t.eta};
        const auto code = tlrs::build_code(params);
        const auto rep = tlrs::gram(code, true);
        const bool lcd_gram = !rep.det_value.is_zero();
        TlrsOutcome o;
        o.agree = rep.blocks_match && rep.det_value == rep.det_formula && rep.lcd_by_criterion == lcd_gram &&
                  lcd_gram == *rep.lcd_by_oracle;
        o.record = json{{"q", f.q()},
                        {"r", f.r()},
                        {"ell", params.ctx.ell()},
                        {"k", t.k},
                        {"h", t.h},
                        {"eta", f.format(t.eta)},
                        {"one_plus_eta_squared", f.format(f.add(f.one(), f.mul(t.eta, t.eta)))},
                        {"det", elem_json(f, rep.det_value)},
                        {"lcd_by_criterion", rep.lcd_by_criterion},
                        {"lcd_by_gram", lcd_gram},
                        {"hull_dim", *rep.hull_dim},
                        {"lcd_by_oracle", *rep.lcd_by_oracle},
                        {"blocks_match", rep.blocks_match},
                        {"agree", o.agree}};
        return o;
      },
      [&](std::size_t, TlrsOutcome& o) {
        if (!o.agree) ++disagreements;
        sink.write(o.record);
      });
  err << "tlrs-sweep: " << tuples.size() << " tuples, " << disagreements << " disagreements\n";
  return disagreements == 0 ? exit_ok : exit_mismatch;
}

// ---- ACD -----------------------------------------------------------------

struct AcdOutcome {
  json record;
  bool agree = true;
  bool guard_hit = false;
};

AcdOutcome acd_report(const acd::AcdParams& p, const RunConfig& c, const char* command, bool with_distance) {
  const FieldTower& f = *p.tower;
  const auto check = acd::acd_check(p);
  const auto blocks = acd::structured_blocks(p);
  const std::size_t hull = acd::acd_oracle(p);
  const bool mds = acd::mds_criterion(p);
  const std::size_t singleton = p.ell() - p.k + 1;

  AcdOutcome o;
  json& j = o.record;
  j["schema"] = kSchema;
  j["command"] = command;
  j["tower"] = tower_json(f);
  j["q"] = f.q();
  j["k"] = p.k;
  j["ell"] = p.ell();
  j["lambda"] = elems_json(f, p.lambda_set);
  j["gamma"] = elem_json(f, p.twist_scalar);
  j["alpha"] = elem_json(f, p.skew_unit);
  j["trace_gamma"] = elem_json(f, f.trace(p.twist_scalar));
  j["generator"] = mat_json(f, acd::generator_matrix(p));
  j["t_matrix"] = mat_json(f, acd::t_matrix(p));
  j["det_t"] = elem_json(f, check.det_t);
  j["g0"] = mat_json(f, blocks.g0);
  j["m"] = mat_json(f, blocks.m);
  j["w"] = elems_json(f, blocks.w);
  j["p2k"] = elem_json(f, blocks.p2k);
  j["det_g0"] = check.det_g0 ? elem_json(f, *check.det_g0) : json(nullptr);
  j["delta"] = check.delta ? elem_json(f, *check.delta) : json(nullptr);
  j["structure_note"] = check.structure_note;
  j["acd_by_matrix"] = check.by_matrix;
  j["acd_by_structure"] = check.by_structure ? json(*check.by_structure) : json(nullptr);
  j["acd_by_oracle"] = hull == 0;
  j["hull_dim"] = hull;
  j["mds_by_criterion"] = mds;
  j["singleton_bound"] = singleton;
  j["min_distance"] = nullptr;

  bool agree = check.by_matrix == (hull == 0);
  if (check.by_structure) agree = agree && *check.by_structure == check.by_matrix;
  if (with_distance) {
    try {
      const std::size_t d = acd::min_distance_oracle(p, c.guard);
      j["min_distance"] = d;
      agree = agree && d <= singleton && (!mds || d == singleton);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::too_large) throw;
      j["distance_note"] = e.what();
      o.guard_hit = true;
    }
  }
  o.agree = agree;
  j["agree"] = agree;
  return o;
}

Elem parse_gamma(const FieldTower& f, const RunConfig& c) {
  return c.gamma.empty() ? f.skew_unit() : f.parse(c.gamma, Level::top);
}

int cmd_acd_build(const RunConfig& c, std::ostream& out) {
  const auto tower = make_tower(c);
  const auto p = acd::make_params(tower, require_k(c), parse_lambdas(*tower, c), parse_gamma(*tower, c));
  const auto o = acd_report(p, c, "acd-build", true);
  Sink{out, c.format}.write(o.record);
  if (o.guard_hit && c.require_distance) return exit_guard_exceeded;
  return o.agree ? exit_ok : exit_mismatch;
}

std::string_view strategy_name(acd::SearchStrategy s) {
  switch (s) {
    case acd::SearchStrategy::geometric: return "geometric";
    case acd::SearchStrategy::exhaustive: return "exhaustive";
    case acd::SearchStrategy::automatic: return "automatic";
  }
  return "?";
}

int cmd_acd_search(const RunConfig& c, std::ostream& out) {
  const auto tower = make_tower(c);
  if (c.ell == 0) throw Error(ErrorCode::bad_params, "--ell is required");
  const auto res = acd::lambda_search(tower, require_k(c), c.ell, c.strategy);
  Sink sink{out, c.format};
  if (!res.params) {
    json j{{"schema", kSchema},        {"command", "acd-search"}, {"tower", tower_json(*tower)},
           {"k", require_k(c)},        {"ell", c.ell},            {"found", false},
           {"strategy", strategy_name(c.strategy)}, {"scanned", res.scanned}, {"note", res.note}};
    sink.write(j);
    return exit_mismatch;
  }
  auto o = acd_report(*res.params, c, "acd-search", true);
  json head{{"found", true},
            {"strategy", strategy_name(c.strategy)},
            {"strategy_used", strategy_name(res.used)},
            {"scanned", res.scanned},
            {"generator_g", res.generator ? elem_json(*tower, *res.generator) : json(nullptr)},
            {"search_note", res.note}};
  json merged;
  for (const auto& [key, value] : o.record.items()) {
    merged[key] = value;
    if (key == "command")
      for (const auto& [hk, hv] : head.items()) merged[hk] = hv;
  }
  sink.write(merged);
  if (o.guard_hit && c.require_distance) return exit_guard_exceeded;
  return o.agree ? exit_ok : exit_mismatch;
}

int cmd_acd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto tower = make_tower(c);
  const FieldTower& f = *tower;
  if (f.r() != 2) throw Error(ErrorCode::bad_params, "acd-sweep needs r = 2");
  const Elem alpha = f.skew_unit();
  const unsigned units = f.q() - 1;
  const unsigned max_ell = std::min(units, 32u);

  // All sampling happens up front so the output does not depend on --jobs.
  std::mt19937_64 rng(c.seed);
  auto uniform = [&](unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); };
  std::vector<acd::AcdParams> samples;
  for (unsigned s = 0; s < c.samples; ++s) {
    const unsigned ell = c.ell ? c.ell : uniform(2, max_ell);
    const unsigned k = c.k ? *c.k : uniform(1, std::min(ell - 1, 3u));
    std::vector<std::uint32_t> pool(units);
    for (unsigned i = 0; i < units; ++i) pool[i] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Elem> lambdas;
    for (unsigned i = 0; i < ell; ++i) lambdas.push_back({pool[i], Level::mid});
    Elem gamma;
    if (!c.gamma.empty()) {
      gamma = f.parse(c.gamma, Level::top);
    } else if (s % 2 == 0) {
      gamma = f.mul(f.embed({uniform(1, units), Level::mid}, Level::top), alpha);
    } else {
      gamma = {uniform(1, f.size(Level::top) - 1), Level::top};
    }
    samples.push_back(acd::make_params(tower, k, std::move(lambdas), gamma));
  }

  Sink sink{out, c.format};
  std::size_t disagreements = 0;
  ordered_pool<AcdOutcome>(
      samples.size(), c.jobs,
      [&](std::size_t i) {
        const auto& p = samples[i];
        const auto check = acd::acd_check(p);
        const std::size_t hull = acd::acd_oracle(p);
        AcdOutcome o;
        o.agree = check.by_matrix == (hull == 0) && (!check.by_structure || *check.by_structure == check.by_matrix);
        std::string lambdas;
        for (const auto& l : p.lambda_set) lambdas += (lambdas.empty() ? "" : " ") + std::to_string(l.code);
        o.record = json{{"index", i},
                        {"q", f.q()},
                        {"k", p.k},
                        {"ell", p.ell()},
                        {"lambda", lambdas},
                        {"gamma", f.format(p.twist_scalar)},
                        {"trace_gamma", elem_json(f, f.trace(p.twist_scalar))},
                        {"det_t", elem_json(f, check.det_t)},
                        {"acd_by_matrix", check.by_matrix},
                        {"hull_dim", hull},
                        {"acd_by_oracle", hull == 0},
                        {"acd_by_structure", check.by_structure ? json(*check.by_structure) : json(nullptr)},
                        {"structure_note", check.structure_note},
                        {"mds_by_criterion", acd::mds_criterion(p)},
                        {"agree", o.agree}};
        return o;
      },
      [&](std::size_t, AcdOutcome& o) {
        if (!o.agree) ++disagreements;
        sink.write(o.record);
      });
  err << "acd-sweep: " << samples.size() << " samples, " << disagreements << " disagreements\n";
  return disagreements == 0 ? exit_ok : exit_mismatch;
}

// ---- worked examples -----------------------------------------------------

struct Checker {
  Sink& sink;
  std::size_t failures = 0;

  void check(const std::string& name, const json& expected, const json& got) {
    const bool ok = expected == got;
    if (!ok) ++failures;
    sink.write(json{{"check", name}, {"expected", expected}, {"got", got}, {"ok", ok}});
  }
};

int cmd_verify(const RunConfig& c, std::ostream& out) {
  auto tower = std::make_shared<const FieldTower>(FieldTower::make(5, 1, 2));
  const FieldTower& f = *tower;
  Sink sink{out, c.format};
  Checker ck{sink};
  const Elem u = f.top_root();
  auto top = [&](const char* s) { return f.parse(s, Level::top); };
  auto mid = [&](std::uint32_t v) { return Elem{v, Level::mid}; };

  ck.check("F25: u*u", "2+0u", f.format(f.mul(u, u)));
  ck.check("F25: (2+u)^2", "1+4u", f.format(f.mul(top("2+1u"), top("2+1u"))));
  ck.check("F25: theta(u)", "0+4u", f.format(f.frobenius(u, 1)));
  ck.check("F25: Tr(1), Tr(u)", json::array({2, 0}), json::array({f.trace(f.one()).code, f.trace(u).code}));
  ck.check("F5: subgroup of order 2", json::array({1, 4}), elems_json(f, f.subgroup_lambda(2)));

  auto tlrs_case = [&](const char* eta) {
    tlrs::TlrsParams params{QuotientCtx::subgroup(tower, 2), 1, 0, top(eta)};
    return tlrs::gram(tlrs::build_code(params), true);
  };
  const auto lcd = tlrs_case("2+1u");
  ck.check("TLRS eta=2+u: Gram", json::array({json::array({4, 1}), json::array({1, 3})}), mat_json(f, lcd.gram));
  ck.check("TLRS eta=2+u: det", 1, lcd.det_value.code);
  ck.check("TLRS eta=2+u: LCD (criterion, Gram, oracle)", json::array({true, true, true}),
           json::array({lcd.lcd_by_criterion, !lcd.det_value.is_zero(), *lcd.lcd_by_oracle}));
  ck.check("TLRS eta=2+u: hull dim", 0, *lcd.hull_dim);
  const auto self = tlrs_case("2");
  ck.check("TLRS eta=2: Gram is zero", true, self.gram.is_zero());
  ck.check("TLRS eta=2: LCD (criterion, Gram, oracle)", json::array({false, false, false}),
           json::array({self.lcd_by_criterion, !self.det_value.is_zero(), *self.lcd_by_oracle}));
  ck.check("TLRS eta=2: hull dim", 2, *self.hull_dim);

  const auto p23 = acd::make_params(tower, 1, {mid(2), mid(3)}, u);
  ck.check("ACD q=5 k=1 L={2,3} gamma=u: T", json::array({json::array({4, 0}), json::array({0, 3})}),
           mat_json(f, acd::t_matrix(p23)));
  ck.check("ACD q=5 k=1 L={2,3} gamma=u: ACD (matrix, oracle)", json::array({true, true}),
           json::array({acd::acd_check(p23).by_matrix, acd::acd_oracle(p23) == 0}));
  ck.check("ACD q=5 k=1 L={2,3} gamma=u: d", 2, acd::min_distance_oracle(p23));
  const auto p12 = acd::make_params(tower, 1, {mid(1), mid(2)}, u);
  ck.check("ACD q=5 k=1 L={1,2} gamma=u: ACD (matrix, oracle)", json::array({false, false}),
           json::array({acd::acd_check(p12).by_matrix, acd::acd_oracle(p12) == 0}));
  const auto p123 = acd::make_params(tower, 1, {mid(1), mid(2), mid(3)}, u);
  ck.check("ACD q=5 k=1 L={1,2,3} gamma=u: MDS criterion, d", json::array({true, 3}),
           json::array({acd::mds_criterion(p123), acd::min_distance_oracle(p123)}));
  ck.check("ACD gamma=u: gamma^(q+1)", 3, f.restrict(f.pow(u, 6), Level::mid).code);

  const auto ex = acd::lambda_search(tower, 1, 3, acd::SearchStrategy::exhaustive);
  ck.check("search q=5 k=1 ell=3 exhaustive", json::array({1, 2, 3}),
           ex.params ? elems_json(f, ex.params->lambda_set) : json(nullptr));
  const auto geo = acd::lambda_search(tower, 1, 2, acd::SearchStrategy::geometric);
  ck.check("search q=5 k=1 ell=2 geometric fails", false, geo.params.has_value());
  const auto fallback = acd::lambda_search(tower, 1, 2, acd::SearchStrategy::automatic);
  bool recovered = fallback.params && fallback.used == acd::SearchStrategy::exhaustive &&
                   acd::acd_check(*fallback.params).by_matrix && acd::acd_oracle(*fallback.params) == 0 &&
                   acd::mds_criterion(*fallback.params);
  ck.check("search q=5 k=1 ell=2 exhaustive fallback recovers", true, recovered);

  // Information only: agreement of the evaluation-side form with the coefficient-side form.
  {
    tlrs::TlrsParams params{QuotientCtx::subgroup(tower, 2), 1, 0, top("2+1u")};
    const auto code = tlrs::build_code(params);
    std::size_t agree = 0, total = 0;
    for (const auto& a : code.basis_polys)
      for (const auto& b : code.basis_polys) {
        ++total;
        agree += experimental::evaluation_side_form(a, b, params.ctx) == tlrs::lambda_form(a, b, params.ctx);
      }
    sink.write(json{{"info", "evaluation-side form agreement on the eta=2+u basis"},
                    {"agreeing_pairs", agree},
                    {"pairs", total}});
  }
  return ck.failures == 0 ? exit_ok : exit_mismatch;
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [name, cmd] : command_names())
    if (cmd == c) return name;
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  const auto it = command_names().find(std::string(name));
  if (it == command_names().end()) return std::nullopt;
  return it->second;
}

std::uint64_t guard_from_env() {
  const char* v = std::getenv("SUMRANK_ENUM_GUARD");
  if (!v || !*v) return acd::kDefaultEnumerationGuard;
  char* end = nullptr;
  const unsigned long long g = std::strtoull(v, &end, 10);
  if (*end != '\0' || g == 0) return acd::kDefaultEnumerationGuard;
  return g;
}

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  c.guard = guard_from_env();
  CLI::App app{"Twisted sum-rank and additive Reed-Solomon codes: build, certify, sweep", "sumrank"};
  app.set_help_flag("--help", "print help and exit");
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--p", c.p, "characteristic");
  app.add_option("--m", c.m, "degree of F_q over F_p");
  app.add_option("--r", c.r, "degree of L over F_q");
  app.add_option("--base-modulus", c.base_modulus, "monic base modulus, little-endian, comma separated")
      ->delimiter(',');
  app.add_option("--top-modulus", c.top_modulus, "monic top modulus over F_q (mid codes), little-endian")
      ->delimiter(',');
  app.add_option("--ell", c.ell, "number of evaluation points / subgroup order");
  app.add_option("--k", c.k, "dimension parameter");
  app.add_option("--h", c.h, "twist exponent (TLRS)");
  app.add_option("--eta", c.eta, "twist coefficient in L, e.g. 2+1u");
  app.add_option("--gamma", c.gamma, "twist scalar in F_{q^2} (ACD); default alpha");
  app.add_option("--lambda", c.lambda, "evaluation points in F_q, comma separated")->delimiter(',');
  const std::map<std::string, acd::SearchStrategy> strategies{{"geometric", acd::SearchStrategy::geometric},
                                                              {"exhaustive", acd::SearchStrategy::exhaustive},
                                                              {"automatic", acd::SearchStrategy::automatic}};
  app.add_option("--strategy", c.strategy, "geometric | exhaustive | automatic")
      ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  app.add_option("--format", c.format, "json | csv | text")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--guard", c.guard, "enumeration guard (also SUMRANK_ENUM_GUARD)");
  app.add_option("--seed", c.seed, "seed for sampled sweeps");
  app.add_option("--samples", c.samples, "number of sampled parameter sets (acd-sweep)");
  app.add_option("--jobs", c.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--require-distance", c.require_distance, "exit 3 when a distance enumeration exceeds the guard");

  std::vector<CLI::App*> subs;
  for (const auto& [name, cmd] : command_names()) subs.push_back(app.add_subcommand(name));
  subs[0]->description("ACD code for given parameters");
  subs[1]->description("search a Λ with ACD and MDS certificates");
  subs[2]->description("random ACD parameter sets: matrix verdict vs hull oracle");
  subs[3]->description("TLRS code: Gram matrix, LCD verdicts, hull");
  subs[4]->description("TLRS sweep over ell, k, h, eta");
  subs[5]->description("reproduce the worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_invalid_config;
  }
  for (auto* s : subs)
    if (s->parsed()) c.command = *parse_command(s->get_name());
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::tlrs_build: return cmd_tlrs_build(config, out);
      case Command::tlrs_sweep: return cmd_tlrs_sweep(config, out, err);
      case Command::acd_build: return cmd_acd_build(config, out);
      case Command::acd_search: return cmd_acd_search(config, out);
      case Command::acd_sweep: return cmd_acd_sweep(config, out, err);
      case Command::verify_paper_examples: return cmd_verify(config, out);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::too_large ? exit_guard_exceeded : exit_invalid_config;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_config;
  }
  return exit_invalid_config;
}

}  // namespace sumrank::cli
