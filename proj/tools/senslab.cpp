#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "senslab/senslab.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace senslab;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

/// Global n cap; SENSLAB_MAX_N may only lower it.
unsigned max_n() {
  static const unsigned cap = [] {
    unsigned c = kMaxVars;
    if (const char* env = std::getenv("SENSLAB_MAX_N")) {
      try {
        const unsigned long v = std::stoul(env);
        if (v >= 1 && v < c) c = static_cast<unsigned>(v);
      } catch (const std::exception&) {
        std::cerr << "senslab: ignoring malformed SENSLAB_MAX_N='" << env << "'\n";
      }
    }
    return c;
  }();
  return cap;
}

void check_n(unsigned n) {
  if (n < 1 || n > max_n()) throw ParameterError("n = " + std::to_string(n) + " is outside [1, " + std::to_string(max_n()) + "]");
}

TruthTable load_table(const std::string& path) {
  auto f = io::load_tt(path);
  check_n(f.n());
  return f;
}

BallAdvice load_advice(const std::string& path) {
  auto a = io::load_ball(path);
  check_n(a.n());
  return a;
}

Point parse_point(const std::string& bits, unsigned n) {
  const Point x = Point::from_bits(bits);
  require_same_dimension(x.n(), n, "point");
  return x;
}

json rational_json(const Rational& r) { return json{{"exact", to_string(r)}, {"value", to_double(r)}}; }

json stats_json(const EvalStats& s) {
  json by_weight = json::object();
  for (const auto& [w, c] : s.points_by_weight) by_weight[std::to_string(w)] = c;
  return json{{"points_computed", s.points_computed}, {"points_by_weight", by_weight}, {"ball_shifts", s.ball_shifts},
              {"ball_size", s.ball_size},         {"majority_votes", s.majority_votes}, {"rng_draws", s.rng_draws},
              {"max_depth", s.max_depth},         {"trials", s.trials}};
}

/// One JSON object per line on stdout.
struct Report {
  json j;
  explicit Report(const std::string& command) { j["command"] = command; j["parameters"] = json::object(); }
  json& params() { return j["parameters"]; }
  json& outputs() { return j["outputs"]; }
  void seed(std::uint64_t s) { j["seed"] = s; }
  void emit() const { std::cout << j.dump() << '\n'; }
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------------------

struct GenOpts {
  std::string family;
  unsigned n = 0;
  unsigned s = 0;
  unsigned depth = 0;
  unsigned var = 1;
  bool value = false;
  std::optional<std::uint64_t> seed;
  std::string base;
  std::string out;
};

int run_gen(const GenOpts& o) {
  check_n(o.n);
  families::FamilySpec spec;
  spec.kind = families::parse_kind(o.family);
  spec.n = o.n;
  spec.s = o.s;
  spec.depth = o.depth;
  spec.var = o.var;
  spec.value = o.value;
  spec.seed = o.seed;
  if (!o.base.empty()) spec.base = load_table(o.base);
  if ((spec.kind == families::Kind::RandomDt || spec.kind == families::Kind::Random) && !spec.seed) spec.seed = 0;
  const auto f = families::gen_family(spec);

  Report r("gen");
  r.params() = {{"family", o.family}, {"n", o.n}, {"s", o.s}, {"depth", o.depth}, {"var", o.var}, {"value", o.value}};
  if (spec.seed) r.seed(*spec.seed);
  r.outputs()["n"] = f.n();
  r.outputs()["ones"] = f.count_ones();
  if (o.out.empty()) {
    r.outputs()["table"] = f.to_string();
  } else {
    io::save(o.out, [&](std::ostream& out) { io::write_tt(out, f); });
    r.outputs()["path"] = o.out;
  }
  r.emit();
  return kExitOk;
}

struct MeasureOpts {
  std::string in;
  bool radii = false;
};

int run_measure(const MeasureOpts& o) {
  const auto f = load_table(o.in);
  const auto p = complexity_profile(f);
  const auto b = check_bias_bound(f);
  Report r("measure");
  r.params() = {{"in", o.in}, {"radii", o.radii}};
  auto& out = r.outputs();
  out["n"] = f.n();
  out["s"] = p.s;
  out["s0"] = p.s0;
  out["s1"] = p.s1;
  out["deg"] = p.deg;
  out["deg2"] = p.deg2;
  out["mu0"] = rational_json(p.mu0);
  out["mu1"] = rational_json(p.mu1);
  out["relevant"] = p.relevant;
  out["bias_bound"] = {{"holds_0", b.holds_0}, {"holds_1", b.holds_1}, {"tight_0", b.tight_0},
                       {"tight_1", b.tight_1}, {"subcube_0", b.subcube_0}, {"subcube_1", b.subcube_1}};
  if (o.radii) {
    out["r_maj"] = r_maj(f);
    out["r_maj_bruteforce"] = r_maj_bruteforce(f);
    out["r_par"] = r_par(f);
    out["r_par_bruteforce"] = r_par_bruteforce(f);
  }
  r.emit();
  return kExitOk;
}

struct ExtendOpts {
  std::string in;
  std::string tt;
  std::string center;
  unsigned radius = 0;
  std::string rule = "maj";
  std::string out;
  std::string write_ball;
  std::string truth;
};

int run_extend(const ExtendOpts& o) {
  std::optional<BallAdvice> advice;
  if (!o.in.empty()) {
    advice = load_advice(o.in);
  } else {
    if (o.tt.empty()) throw ParameterError("extend needs --in <file.ball> or --tt <file.tt>");
    const auto f = load_table(o.tt);
    const Point c = o.center.empty() ? Point::zeros(f.n()) : parse_point(o.center, f.n());
    advice = restrict_to_ball(f, c, o.radius);
  }
  if (!o.write_ball.empty()) io::save(o.write_ball, [&](std::ostream& out) { io::write_ball(out, *advice); });

  Report r("extend");
  r.params() = {{"in", o.in}, {"tt", o.tt}, {"center", advice->center().to_bits()}, {"radius", advice->radius()}, {"rule", o.rule}};
  auto& out = r.outputs();
  std::optional<TruthTable> result;
  if (o.rule == "maj" || o.rule == "par") {
    const ExtensionOutcome outcome = o.rule == "maj" ? majority_extend(*advice) : as_boolean(parity_extend(*advice));
    if (const auto* fail = std::get_if<ExtensionFailure>(&outcome)) {
      out["status"] = "failed";
      out["reason"] = to_string(fail->reason);
      out["point"] = fail->point.to_bits();
    } else {
      result = std::get<TruthTable>(outcome);
    }
  } else if (o.rule == "f2") {
    result = f2_extend(*advice);
  } else {
    throw ParameterError("unknown rule '" + o.rule + "' (expected maj, par or f2)");
  }
  if (result) {
    out["status"] = "extended";
    if (o.out.empty()) {
      out["table"] = result->to_string();
    } else {
      io::save(o.out, [&](std::ostream& s) { io::write_tt(s, *result); });
      out["path"] = o.out;
    }
  }
  if (!o.write_ball.empty()) out["ball_path"] = o.write_ball;
  int code = kExitOk;
  if (!o.truth.empty()) {
    const auto truth = load_table(o.truth);
    const bool ok = result && *result == truth;
    r.j["pass"] = ok;
    if (!ok) code = kExitAssertion;
  }
  r.emit();
  return code;
}

struct EvalOpts {
  std::string in;
  unsigned s = 1;
  std::string x;
  std::string algo = "bottom-up";
  std::uint64_t seed = 0;
  std::string target = "1/20";
  std::string truth;
  bool all = false;
};

int run_eval(const EvalOpts& o) {
  const auto advice = load_advice(o.in);
  std::optional<TruthTable> truth;
  if (!o.truth.empty()) truth = load_table(o.truth);

  Report r("eval");
  r.params() = {{"in", o.in}, {"s", o.s}, {"algo", o.algo}, {"x", o.x}, {"all", o.all}};
  const bool randomized = o.algo == "parallel" || o.algo == "amplified";
  if (randomized) r.seed(o.seed);
  if (o.algo == "amplified") r.params()["target"] = o.target;

  std::optional<BottomUpEvaluator> bu;
  std::optional<TopDownEvaluator> td;
  std::optional<ParallelEvaluator> pe;
  const Rational target = parse_rational(o.target);
  if (o.algo == "bottom-up") {
    bu.emplace(advice, o.s);
  } else if (o.algo == "top-down") {
    td.emplace(advice, o.s);
  } else if (o.algo == "parallel") {
    pe.emplace(advice, o.s);
  } else if (o.algo != "amplified") {
    throw ParameterError("unknown algorithm '" + o.algo + "'");
  }
  auto evaluate = [&](Point x, std::uint64_t seed) -> EvalResult {
    if (bu) return (*bu)(x);
    if (td) return (*td)(x);
    if (pe) return (*pe)(x, seed);
    return amplified_eval(advice, o.s, x, target, seed);
  };

  int code = kExitOk;
  if (o.all) {
    if (!truth) throw ParameterError("--all needs --truth");
    require_same_dimension(truth->n(), advice.n(), "eval");
    std::uint64_t mismatches = 0;
    EvalStats total;
    for (std::uint64_t xi = 0; xi < truth->size(); ++xi) {
      const Point x(advice.n(), static_cast<std::uint32_t>(xi));
      const auto res = evaluate(x, derive_seed(o.seed, xi));
      mismatches += res.value != (*truth)[x.index()];
      total.merge(res.stats);
    }
    r.outputs() = {{"inputs", truth->size()}, {"mismatches", mismatches}};
    r.j["stats"] = stats_json(total);
    r.j["pass"] = randomized || mismatches == 0;
    if (!randomized && mismatches != 0) code = kExitAssertion;
  } else {
    if (o.x.empty()) throw ParameterError("eval needs --x <bitstring> or --all");
    const Point x = parse_point(o.x, advice.n());
    const auto res = evaluate(x, o.seed);
    r.outputs() = {{"x", x.to_bits()}, {"value", res.value ? 1 : 0}};
    r.j["stats"] = stats_json(res.stats);
    if (truth) {
      const bool ok = res.value == truth->at(x);
      r.j["pass"] = ok;
      if (!ok && !randomized) code = kExitAssertion;
    }
  }
  r.emit();
  return code;
}

struct NsOpts {
  std::string in;
  std::string delta = "1/20";
  std::string x;
  std::optional<unsigned> down_t;
};

int run_ns(const NsOpts& o) {
  const auto f = load_table(o.in);
  const NoiseRate delta(parse_rational(o.delta));
  Report r("ns");
  r.params() = {{"in", o.in}, {"delta", o.delta}, {"x", o.x}};
  auto& out = r.outputs();
  const unsigned s = sensitivity(f).s;
  out["s"] = s;
  out["bound_2_delta_s"] = rational_json(2 * delta.value() * s);
  if (!o.x.empty()) {
    const Point x = parse_point(o.x, f.n());
    out["ns_at_x"] = rational_json(noise_sensitivity_at(f, x, delta));
    out["t_at_x"] = rational_json(noise_operator_exact_at(f, x, delta));
    if (o.down_t) {
      r.params()["down_t"] = *o.down_t;
      const auto d = downward_mismatch(f, x, *o.down_t);
      out["downward_mismatch"] = rational_json(d.value);
      if (weight(x) > *o.down_t) out["downward_bound"] = rational_json(Rational(s * *o.down_t, weight(x) - *o.down_t));
    }
  } else {
    if (f.n() > kPairwiseCap) {
      const auto t = noise_operator(f, delta);
      double total = 0;
      for (std::uint64_t x = 0; x < f.size(); ++x) total += f[static_cast<std::uint32_t>(x)] ? 1 - t.values[x] : t.values[x];
      out["ns"] = json{{"value", total / static_cast<double>(f.size())}};
    } else {
      out["ns"] = rational_json(noise_sensitivity(f, delta));
    }
  }
  r.emit();
  return kExitOk;
}

struct LambdaOpts {
  std::string in;
  std::string delta = "1/20";
  std::string theta = "2/5";
  std::string out;
};

int run_lambda(const LambdaOpts& o) {
  const auto S = load_table(o.in);
  const NoiseRate delta(parse_rational(o.delta));
  const Rational theta = parse_rational(o.theta);
  const auto rep = hypercontractivity_check(S, delta, theta);
  Report r("lambda");
  r.params() = {{"in", o.in}, {"delta", o.delta}, {"theta", o.theta}};
  auto& out = r.outputs();
  out["mu_S"] = rational_json(rep.mu_S);
  out["mu_Lambda"] = rational_json(rep.mu_Lambda);
  out["rhs"] = rep.rhs;
  out["holds"] = rep.holds;
  out["sse_applies"] = rep.sse_applies;
  out["sse_holds"] = rep.sse_holds;
  out["high_precision_used"] = rep.high_precision_used;
  if (!o.out.empty()) {
    const auto lam = lambda_set(S, delta, theta);
    io::save(o.out, [&](std::ostream& s) { io::write_tt(s, lam); });
    out["path"] = o.out;
  }
  r.j["pass"] = rep.holds && rep.sse_holds;
  r.emit();
  return rep.holds && rep.sse_holds ? kExitOk : kExitAssertion;
}

/// Upper limit on c^k for the local corrector from the command line.
constexpr std::uint64_t kCliLocalQueryCap = 100'000'000;

struct CorrectOpts {
  std::string mode = "global";
  std::string in;
  unsigned s = 1;
  std::optional<unsigned> k;
  std::string x;
  std::string eps = "1/100";
  std::optional<std::string> delta;
  std::uint64_t seed = 0;
  unsigned repetitions = 1;
  std::string truth;
  std::string out;
  bool timing = false;
};

int run_correct(const CorrectOpts& o) {
  const auto start = Clock::now();
  const auto rtable = load_table(o.in);
  std::optional<TruthTable> truth;
  if (!o.truth.empty()) {
    truth = load_table(o.truth);
    require_same_dimension(truth->n(), rtable.n(), "correct");
  }
  CorrectorParams params;
  params.s = o.s;
  params.k = o.k;
  params.epsilon = parse_rational(o.eps);
  params.repetitions = o.repetitions;
  if (o.delta) params.delta = parse_rational(*o.delta);

  Report r("correct");
  r.params() = {{"mode", o.mode}, {"in", o.in}, {"s", o.s}, {"delta", to_string(params.noise().value())}};
  int code = kExitOk;
  if (o.mode == "global") {
    r.params()["k"] = params.global_k(rtable.n());
    const auto g = global_correct(rtable, params, truth ? &*truth : nullptr);
    auto& out = r.outputs();
    out["iterations"] = g.iterations;
    out["fixpoint"] = g.fixpoint;
    out["ties"] = g.ties;
    if (truth) {
      out["trace"] = g.trace;
      out["recovered"] = g.recovered;
      out["containment_holds"] = g.containment_holds;
      r.j["pass"] = g.recovered && g.containment_holds;
      if (!g.recovered || !g.containment_holds) code = kExitAssertion;
    }
    if (o.out.empty()) {
      if (rtable.n() <= 12) out["table"] = g.table.to_string();
    } else {
      io::save(o.out, [&](std::ostream& s) { io::write_tt(s, g.table); });
      out["path"] = o.out;
    }
  } else if (o.mode == "local") {
    if (o.x.empty()) throw ParameterError("local mode needs --x <bitstring>");
    const Point x = parse_point(o.x, rtable.n());
    const unsigned k = params.local_k(rtable.n());
    const unsigned c = majority_threshold_c(Rational(1, 4), params.epsilon);
    const std::uint64_t queries = local_query_count(c, k);
    if (queries > kCliLocalQueryCap / std::max(1u, o.repetitions)) {
      throw GuardExceeded("local correction would use " + std::to_string(c) + "^" + std::to_string(k) +
                          " queries per tree; pass a smaller --k");
    }
    // The oracle answers r; with --truth the corruption set is r XOR truth.
    const TruthTable base = truth ? *truth : rtable;
    const CorruptedOracle oracle(base, rtable ^ base);
    r.seed(o.seed);
    r.params()["x"] = o.x;
    r.params()["k"] = k;
    r.params()["eps"] = o.eps;
    r.params()["repetitions"] = o.repetitions;
    const auto res = local_correct(oracle, x, params, o.seed);
    r.outputs() = {{"value", res.value ? 1 : 0}, {"queries", res.queries}, {"c", res.c}, {"k", res.k}};
    if (truth) {
      const bool ok = res.value == truth->at(x);
      r.j["pass"] = ok;
    }
  } else {
    throw ParameterError("unknown mode '" + o.mode + "' (expected global or local)");
  }
  if (o.timing) r.j["wall_time_ms"] = elapsed_ms(start);
  r.emit();
  return code;
}

struct EnumerateOpts {
  unsigned n = 2;
  std::optional<unsigned> s;
  bool allow_long = false;
};

int run_enumerate(const EnumerateOpts& o) {
  check_n(o.n);
  Report r("enumerate");
  r.params() = {{"n", o.n}, {"allow_long", o.allow_long}};
  bool ok = true;
  if (o.s) {
    r.params()["s"] = *o.s;
    const auto count = enumerate_class(o.n, *o.s, o.allow_long);
    const auto b = count_bounds(o.n, std::min(*o.s, o.n));
    ok = b.lower <= count && BigInt(count) <= b.upper;
    r.outputs() = {{"count", count}, {"lower", b.lower.str()}, {"upper", b.upper.str()}};
  } else {
    const auto c = census(o.n, o.allow_long);
    json rows = json::array();
    for (unsigned s = 0; s <= o.n; ++s)
      rows.push_back({{"s", s}, {"count", c.counts[s]}, {"lower", c.bounds[s].lower.str()}, {"upper", c.bounds[s].upper.str()}});
    ok = c.bounds_hold();
    r.outputs() = {{"census", rows}};
  }
  r.j["pass"] = ok;
  r.emit();
  return ok ? kExitOk : kExitAssertion;
}

struct InterpolateOpts {
  unsigned n = 4;
  unsigned s = 1;
  std::optional<std::uint64_t> k;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  bool all_points = false;
};

int run_interpolate(const InterpolateOpts& o) {
  check_n(o.n);
  const std::uint64_t k = o.k ? *o.k : interpolation_sample_size(o.n, o.s);
  const auto rep = interpolation_experiment(o.n, o.s, k, o.trials, o.seed, o.all_points);
  Report r("interpolate");
  r.params() = {{"n", o.n}, {"s", o.s}, {"k", k}, {"trials", o.trials}, {"all_points", o.all_points}};
  r.seed(o.seed);
  r.outputs() = {{"success_fraction", rep.success_fraction()},
                 {"hit_fraction", rep.hit_fraction()},
                 {"interpolating", rep.interpolating},
                 {"hitting", rep.hitting},
                 {"implication_holds", rep.implication_holds},
                 {"equivalence_holds", rep.equivalence_holds}};
  const bool ok = rep.implication_holds && rep.equivalence_holds;
  r.j["pass"] = ok;
  r.emit();
  return ok ? kExitOk : kExitAssertion;
}

struct VerifyOpts {
  std::string suite = "all";
  unsigned n = 4;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyOpts& o) {
  check_n(o.n);
  const auto results = verify::run_suite(o.suite, o.n, o.seed);
  bool ok = true;
  for (const auto& res : results) {
    Report r("verify");
    r.params() = {{"suite", o.suite}, {"n", o.n}, {"check", res.name}};
    r.seed(o.seed);
    json metrics = json::object();
    for (const auto& [k, v] : res.metrics) metrics[k] = v;
    r.outputs() = {{"metrics", metrics}};
    if (!res.passed) r.outputs()["failure"] = res.failure;
    r.j["pass"] = res.passed;
    r.emit();
    std::cerr << (res.passed ? "PASS " : "FAIL ") << res.name << (res.passed ? "" : ": " + res.failure) << '\n';
    ok = ok && res.passed;
  }
  return ok ? kExitOk : kExitAssertion;
}

struct BenchOpts {
  unsigned n = 12;
  unsigned s = 2;
  std::string algo = "bottom-up";
  std::uint64_t samples = 200;
  std::uint64_t seed = 0;
  bool timing = false;
};

int run_bench(const BenchOpts& o) {
  check_n(o.n);
  const auto f = families::random_dt(std::min(o.s, o.n), o.n, derive_seed(o.seed, "bench-function"));
  const bool parallel = o.algo == "parallel";
  const unsigned radius = std::min(parallel ? 10 * o.s : 2 * o.s, o.n);
  const auto advice = restrict_to_ball(f, Point::zeros(o.n), radius);
  SplitMix64 rng(derive_seed(o.seed, "bench-points"));
  std::vector<Point> pts;
  for (std::uint64_t i = 0; i < o.samples; ++i) pts.emplace_back(o.n, static_cast<std::uint32_t>(uniform_below(rng, f.size())));

  const auto start = Clock::now();
  EvalStats total;
  std::uint64_t mismatches = 0;
  if (o.algo == "bottom-up") {
    BottomUpEvaluator e(advice, o.s);
    for (auto x : pts) {
      const auto res = e(x);
      mismatches += res.value != f[x.index()];
      total.merge(res.stats);
    }
  } else if (o.algo == "top-down") {
    TopDownEvaluator e(advice, o.s);
    for (auto x : pts) {
      const auto res = e(x);
      mismatches += res.value != f[x.index()];
      total.merge(res.stats);
    }
  } else if (parallel) {
    const ParallelEvaluator e(advice, o.s);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto res = e(pts[i], derive_seed(o.seed, i));
      mismatches += res.value != f[pts[i].index()];
      total.merge(res.stats);
    }
  } else {
    throw ParameterError("unknown algorithm '" + o.algo + "'");
  }
  Report r("bench");
  r.params() = {{"n", o.n}, {"s", o.s}, {"algo", o.algo}, {"samples", o.samples}};
  r.seed(o.seed);
  r.outputs() = {{"mismatches", mismatches}};
  r.j["stats"] = stats_json(total);
  if (o.timing) r.j["wall_time_ms"] = elapsed_ms(start);
  r.emit();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"senslab: experiments on low-sensitivity Boolean functions"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* g = app.add_subcommand("gen", "generate a family member as a .tt file");
  g->add_option("--family", gen.family, "constant|dictator|or|and|parity|majority|tribes|addressing|junta-lift|random-dt|random")->required();
  g->add_option("--n", gen.n, "number of variables")->required();
  g->add_option("--s", gen.s, "tribes block size or addressing sensitivity");
  g->add_option("--depth", gen.depth, "random-dt depth");
  g->add_option("--var", gen.var, "dictator variable (1-based)");
  g->add_flag("--value", gen.value, "constant value 1");
  g->add_option("--seed", gen.seed, "seed for randomized families");
  g->add_option("--base", gen.base, "base .tt for junta-lift");
  g->add_option("--out", gen.out, "output .tt path");

  MeasureOpts measure;
  auto* m = app.add_subcommand("measure", "complexity profile of a .tt file");
  m->add_option("--in", measure.in)->required();
  m->add_flag("--radii", measure.radii, "also brute-force r^Maj and r^Par (n <= 10)");

  ExtendOpts extend;
  auto* e = app.add_subcommand("extend", "extend ball advice by the Majority, Parity or F2 rule");
  e->add_option("--in", extend.in, ".ball advice file");
  e->add_option("--tt", extend.tt, "restrict this .tt file instead of reading advice");
  e->add_option("--center", extend.center, "ball center bitstring (with --tt; default 0^n)");
  e->add_option("--radius", extend.radius, "ball radius (with --tt)");
  e->add_option("--rule", extend.rule, "maj|par|f2");
  e->add_option("--out", extend.out, "output .tt path");
  e->add_option("--write-ball", extend.write_ball, "save the advice as a .ball file");
  e->add_option("--truth", extend.truth, "expected .tt; exit 1 on mismatch");

  EvalOpts eval;
  auto* v = app.add_subcommand("eval", "evaluate f(x) from advice at 0^n");
  v->add_option("--in", eval.in, ".ball advice centered at 0^n")->required();
  v->add_option("--s", eval.s, "sensitivity bound")->required();
  v->add_option("--x", eval.x, "input bitstring");
  v->add_option("--algo", eval.algo, "bottom-up|top-down|parallel|amplified");
  v->add_option("--seed", eval.seed);
  v->add_option("--target", eval.target, "amplified target error in (0, 1/20]");
  v->add_option("--truth", eval.truth, "expected .tt");
  v->add_flag("--all", eval.all, "evaluate every input and count mismatches against --truth");

  NsOpts ns;
  auto* nsc = app.add_subcommand("ns", "noise sensitivity and downward mismatch");
  nsc->add_option("--in", ns.in)->required();
  nsc->add_option("--delta", ns.delta, "noise rate p/q in (0, 1/2]");
  nsc->add_option("--x", ns.x, "point for pointwise values");
  nsc->add_option("--down-t", ns.down_t, "downward walk length at --x");

  LambdaOpts lambda;
  auto* l = app.add_subcommand("lambda", "Lambda set and hypercontractivity check for a set S");
  l->add_option("--in", lambda.in, ".tt indicator of S")->required();
  l->add_option("--delta", lambda.delta);
  l->add_option("--theta", lambda.theta);
  l->add_option("--out", lambda.out, "write the Lambda set as .tt");

  CorrectOpts correct;
  auto* c = app.add_subcommand("correct", "global or local self-correction");
  c->add_option("--mode", correct.mode, "global|local");
  c->add_option("--in", correct.in, "corrupted table r")->required();
  c->add_option("--s", correct.s)->required();
  c->add_option("--k", correct.k, "iterations (global) or tree depth (local)");
  c->add_option("--x", correct.x, "query point (local)");
  c->add_option("--eps", correct.eps, "local failure target");
  c->add_option("--delta", correct.delta, "noise rate override (default 1/(20s))");
  c->add_option("--seed", correct.seed);
  c->add_option("--repetitions", correct.repetitions, "independent local trees (odd)");
  c->add_option("--truth", correct.truth, "ground truth .tt");
  c->add_option("--out", correct.out, "output .tt path (global)");
  c->add_flag("--timing", correct.timing, "include wall_time_ms");

  EnumerateOpts enumerate;
  auto* en = app.add_subcommand("enumerate", "exact |F(s,n)| by exhaustive scan");
  en->add_option("--n", enumerate.n)->required();
  en->add_option("--s", enumerate.s, "omit for the full census");
  en->add_flag("--allow-long", enumerate.allow_long, "permit n = 5 (2^32 candidates)");

  InterpolateOpts interp;
  auto* in = app.add_subcommand("interpolate", "random-sample interpolation experiment");
  in->add_option("--n", interp.n)->required();
  in->add_option("--s", interp.s)->required();
  in->add_option("--k", interp.k, "sample size (default 3 * 2^{2s} * C(n, <= 4s))");
  in->add_option("--trials", interp.trials);
  in->add_option("--seed", interp.seed);
  in->add_flag("--all-points", interp.all_points, "use the whole cube instead of a sample");

  VerifyOpts verify_opts;
  auto* vf = app.add_subcommand("verify", "run property batteries");
  vf->add_option("--suite", verify_opts.suite, "ball|rules|evaluators|noise|selfcorrect|counting|all");
  vf->add_option("--n", verify_opts.n);
  vf->add_option("--seed", verify_opts.seed);

  BenchOpts bench;
  auto* b = app.add_subcommand("bench", "instrumented evaluator run on a random decision tree");
  b->add_option("--n", bench.n);
  b->add_option("--s", bench.s);
  b->add_option("--algo", bench.algo, "bottom-up|top-down|parallel");
  b->add_option("--samples", bench.samples);
  b->add_option("--seed", bench.seed);
  b->add_flag("--timing", bench.timing, "include wall_time_ms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*m) return run_measure(measure);
    if (*e) return run_extend(extend);
    if (*v) return run_eval(eval);
    if (*nsc) return run_ns(ns);
    if (*l) return run_lambda(lambda);
    if (*c) return run_correct(correct);
    if (*en) return run_enumerate(enumerate);
    if (*in) return run_interpolate(interp);
    if (*vf) return run_verify(verify_opts);
    if (*b) return run_bench(bench);
  } catch (const std::invalid_argument& err) {  // ParameterError, DimensionMismatch
    std::cerr << "senslab: " << err.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& err) {
    std::cerr << "senslab: " << err.what() << '\n';
    return kExitUsage;
  } catch (const GuardExceeded& err) {
    std::cerr << "senslab: " << err.what() << '\n';
    return kExitUsage;
  } catch (const AdviceError& err) {
    std::cerr << "senslab: " << err.what() << '\n';
    return kExitAssertion;
  }
  std::cerr << app.help();
  return kExitUsage;
}
