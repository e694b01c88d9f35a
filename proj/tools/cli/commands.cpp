#include "cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "cli/workers.hpp"
#include "cyint/crystal.hpp"
#include "cyint/hassewitt.hpp"
#include "cyint/mirror.hpp"
#include "cyint/reduction.hpp"

namespace cyint::app {

namespace {

using ojson = nlohmann::ordered_json;

std::string str(const Rational& x) { return to_string(x); }

std::string precision_mod(std::int64_t p, std::size_t N) { return "mod " + std::to_string(p) + "^" + std::to_string(N); }

/// Nonnegative residue of a p-adic integer modulo p^N; falls back to the full value when not integral.
std::string residue(const PadicScalar& x, std::int64_t p, std::size_t N) {
  if (x.is_zero()) return "0";
  Rational v = x.lift();
  if (v.get_den() != 1) return str(v);
  Integer m = ipow(p, N);
  Integer r = v.get_num() % m;
  if (r < 0) r += m;
  return to_string(r);
}

ojson series_json(const QSeries& s) {
  ojson a = ojson::array();
  for (std::size_t i = 0; i < s.order(); ++i) a.push_back(str(s[i]));
  return a;
}

ojson rationals_json(const std::vector<Rational>& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

Status verdict_status(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return Status::kPass;
    case Verdict::kFalse: return Status::kFail;
    case Verdict::kInconclusive: return Status::kInconclusive;
  }
  return Status::kFail;
}

template <class T>
T need(const std::optional<T>& v, const char* what) {
  if (!v) throw ConfigError(std::string("missing required setting: ") + what);
  return *v;
}

std::vector<std::int64_t> primes_or(const RunConfig& c, std::vector<std::int64_t> fallback) {
  return c.primes ? *c.primes : fallback;
}

/// Primes at or below this bound are outside the integrality hypotheses for the operator.
std::int64_t excluded_bound(const std::string& selector, std::vector<std::string>& notes) {
  if (selector == "quintic") return 5;
  if (selector == "diagonal4" || selector == "diagonal") return 4;
  for (std::string prefix : {"simplicial:", "hyperoctahedral:"}) {
    if (selector.rfind(prefix, 0) == 0) {
      long n = std::stol(selector.substr(prefix.size()));
      return prefix == "simplicial:" ? n + 1 : n;
    }
  }
  notes.push_back("operator read from a file: no prime is excluded from the integrality hypotheses");
  return 0;
}

std::string face_string(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

/// theta^n - ((n+1)t)^(n+1) (theta+1)...(theta+n).
std::string simplicial_closed_form(std::size_t n) {
  std::ostringstream os;
  os << "theta^" << n << " - (" << n + 1 << "t)^" << n + 1 << " ";
  for (std::size_t j = 1; j <= n; ++j) os << "(theta+" << j << ")";
  return os.str();
}

// ---------------------------------------------------------------------------------------------------------------
// Reusable checks shared by the subcommands and the verification suites.

struct MirrorCheck {
  std::int64_t p = 0;
  bool outside = false;
  std::vector<bool> exp_ok, dd_ok;
  bool prefix_agree = true;
  bool all_integral = true;

  Status status() const {
    if (outside) return Status::kPass;
    return (prefix_agree && all_integral) ? Status::kPass : Status::kFail;
  }
};

MirrorCheck mirror_check(const QSeries& g, std::int64_t p, bool outside) {
  MirrorCheck c;
  c.p = p;
  c.outside = outside;
  c.exp_ok = exp_integrality_profile(g, p);
  c.dd_ok = dieudonne_dwork_profile(g, p);
  bool pe = true, pd = true;
  for (std::size_t k = 0; k < c.exp_ok.size(); ++k) {
    pe = pe && c.exp_ok[k];
    pd = pd && c.dd_ok[k];
    if (pe != pd) c.prefix_agree = false;
  }
  c.all_integral = pe;
  return c;
}

QSeries mirror_exponent(const ThetaOperator& L, std::size_t M) {
  if (L.order() < 2) throw ConfigError("the mirror map needs an operator of order >= 2");
  FrobeniusBasis b = frobenius_basis(L, M);
  return b.F[1] / b.F[0];
}

struct HWRun {
  std::int64_t p = 0;
  bool condition = false;
  std::vector<HWReport> levels;
  std::vector<HWBlockReport> blocks;

  Status status() const {
    bool ok = condition;
    for (const auto& b : blocks) ok = ok && b.ok;
    return ok ? Status::kPass : Status::kFail;
  }
};

HWRun hw_run(const Family& fam, int k, std::int64_t p, std::size_t M) {
  HWRun r;
  r.p = p;
  r.condition = hw_condition(fam, k, static_cast<int>(p), M, &r.levels);
  for (int l = 1; l <= k; ++l) r.blocks.push_back(hw_block_check(fam, l, static_cast<int>(p)));
  return r;
}

ojson valuation_json(std::int64_t v) { return v == kInfiniteValuation ? ojson(nullptr) : ojson(v); }

ojson hw_json(const HWRun& r) {
  ojson j;
  j["p"] = r.p;
  j["condition"] = r.condition;
  ojson levels = ojson::array();
  for (std::size_t i = 0; i < r.levels.size(); ++i) {
    const HWReport& h = r.levels[i];
    ojson l;
    l["k"] = h.k;
    l["size"] = h.size();
    l["L_k"] = h.L_k;
    l["det_at_0"] = to_string(h.det_at_0);
    l["det_valuation"] = valuation_json(h.det_valuation_at_0);
    l["unit"] = h.hw_unit;
    const HWBlockReport& b = r.blocks.at(i);
    ojson pb;
    pb["ok"] = b.ok;
    pb["det_full"] = to_string(b.det_full);
    pb["det_product"] = to_string(b.det_product);
    ojson bl = ojson::array();
    for (const auto& blk : b.blocks) {
      if (blk.points.empty()) continue;
      ojson e;
      e["face"] = blk.face;
      e["size"] = blk.points.size();
      e["det"] = to_string(blk.det);
      e["det_valuation"] = valuation_json(blk.valuation);
      e["expected_valuation"] = blk.expected_valuation;
      e["matches_full"] = blk.matches_full;
      bl.push_back(e);
    }
    pb["blocks"] = bl;
    l["per_face_blocks"] = pb;
    levels.push_back(l);
  }
  j["levels"] = levels;
  return j;
}

std::string valuation_string(std::int64_t v) { return v == kInfiniteValuation ? "inf" : std::to_string(v); }

struct FrobeniusRun {
  std::int64_t p = 0;
  std::size_t N = 0, M = 0;
  FrobeniusStructure fs;
  bool alpha0_one = false, alpha1_zero = false, valuations_ok = false, functional_equation = false;
  ActionCheck action;

  Status status() const {
    bool ok = alpha0_one && alpha1_zero && valuations_ok && functional_equation && action.ok;
    return ok ? Status::kPass : Status::kFail;
  }
};

FrobeniusRun frobenius_run(const Family& fam, std::int64_t p, std::size_t N, std::size_t M) {
  FrobeniusRun r;
  r.p = p;
  r.N = N;
  r.M = M;
  r.fs = frobenius_structure(fam, p, N, M);
  r.alpha0_one = r.fs.alpha[0].congruent(PadicScalar::from_rational(Rational(1), p, static_cast<std::int64_t>(N)));
  r.alpha1_zero = r.fs.alpha.size() < 2 ||
                  has_valuation_at_least(r.fs.alpha[1], static_cast<std::int64_t>(N)) == Verdict::kTrue;
  r.valuations_ok = true;
  for (std::size_t i = 0; i < r.fs.lambda_valuations.size(); ++i)
    r.valuations_ok = r.valuations_ok && r.fs.lambda_valuations[i] >= static_cast<std::int64_t>(i);
  QSeries F0 = constant_term_series(fam.g, fam.polytope, M);
  r.functional_equation = verify_frobenius_equation(r.fs, F0, p, N, M);
  FrobeniusBasis basis = frobenius_basis(derive_picard_fuchs(fam, std::max<std::size_t>(M, 12)), M);
  r.action = frobenius_action_check(r.fs, basis);
  return r;
}

ojson frobenius_json(const Family& fam, const FrobeniusRun& r) {
  ojson j;
  j["family"] = fam.name;
  j["n"] = fam.dimension();
  j["p"] = r.p;
  j["N"] = r.N;
  j["M"] = r.M;
  j["precision"] = precision_mod(r.p, r.N);
  ojson alpha = ojson::array();
  for (const auto& a : r.fs.alpha) alpha.push_back(residue(a, r.p, r.N));
  j["alpha"] = alpha;
  j["lambda_valuations"] = r.fs.lambda_valuations;
  j["functional_equation"] = r.functional_equation;
  j["checks"] = {{"alpha0_is_one", r.alpha0_one},
                 {"alpha1_vanishes", r.alpha1_zero},
                 {"lambda_divisibility", r.valuations_ok},
                 {"action_on_basis", r.action.ok},
                 {"action_effective_precision", r.action.effective_precision}};
  j["working_precision"] = {{"N_work", r.fs.prec.N_work}, {"M_work", r.fs.prec.M_work}, {"K_max", r.fs.prec.K_max}};
  return j;
}

void require_tier(const Family& fam, const RunConfig& c) {
  if (fam.dimension() >= 4 && !c.extended.value_or(false))
    throw ConfigError("Frobenius structures in dimension >= 4 are a long-running tier; pass --extended");
}

Family family_of(const RunConfig& c) {
  FamilySpec spec = resolve_family(need(c.family, "family"), c.n);
  return build_family(spec);
}

// ---------------------------------------------------------------------------------------------------------------
// Subcommands.

void cmd_frobenius_basis(const RunConfig& c, Report& rep) {
  ThetaOperator L = resolve_operator(need(c.op, "operator"));
  std::size_t M = c.M.value_or(10);
  FrobeniusBasis b = frobenius_basis(L, M);
  rep.result["operator"] = L.str();
  rep.result["order"] = L.order();
  rep.result["truncation"] = M;
  rep.result["precision"] = "exact";
  ojson F = ojson::array();
  Table& t = rep.table("basis", {"i", "k", "coefficient"});
  for (std::size_t i = 0; i < b.F.size(); ++i) {
    F.push_back(series_json(b.F[i]));
    for (std::size_t k = 0; k < b.F[i].order(); ++k) t.add({std::to_string(i), std::to_string(k), str(b.F[i][k])});
  }
  rep.result["F"] = F;
}

void cmd_mirror(const RunConfig& c, Report& rep) {
  ThetaOperator L = resolve_operator(need(c.op, "operator"));
  std::size_t M = c.M.value_or(10);
  if (L.order() < 2) throw ConfigError("the mirror map needs an operator of order >= 2");
  FrobeniusBasis b = frobenius_basis(L, M);
  QSeries g = b.F[1] / b.F[0];
  QSeries e = series_exp(g);
  QSeries q = canonical_coordinate(b.F[0], b.F[1]);
  QSeries tq = reversion(q);
  std::optional<QSeries> K;
  if (L.order() >= 3) K = yukawa(b, M).K_of_q;
  else rep.notes.push_back("operator order < 3: no Yukawa coupling");
  rep.result["operator"] = L.str();
  rep.result["truncation"] = M;
  rep.result["precision"] = "exact";
  rep.result["exp_F1_over_F0"] = series_json(e);
  rep.result["q_of_t"] = series_json(q);
  rep.result["t_of_q"] = series_json(tq);
  rep.result["K_of_q"] = K ? series_json(*K) : ojson(nullptr);
  Table& t = rep.table("mirror", {"k", "exp_F1_over_F0", "q_of_t", "t_of_q", "K_of_q"});
  for (std::size_t k = 0; k < M; ++k)
    t.add({std::to_string(k), str(e[k]), str(q[k]), str(tq[k]), K ? str((*K)[k]) : "NA"});
}

void cmd_instantons(const RunConfig& c, Report& rep, std::size_t workers) {
  std::string sel = need(c.op, "operator");
  ThetaOperator L = resolve_operator(sel);
  if (L.order() < 3) throw ConfigError("instanton numbers need an operator of order >= 3 (Yukawa coupling)");
  std::size_t R = c.R.value_or(10);
  int s = c.s.value_or(3);
  Rational kappa = parse_rational(c.kappa.value_or("1"));
  std::vector<std::int64_t> primes = primes_or(c, {});
  std::int64_t excluded = excluded_bound(sel, rep.notes);
  std::int64_t N = static_cast<std::int64_t>(c.N.value_or(10));

  MirrorData d = mirror_pipeline(L, R, s, kappa);
  std::vector<IntegralityReport> checks = parallel_map<IntegralityReport>(
      primes.size(), workers, [&](std::size_t i) { return check_integrality(d.A, s, primes[i], N, excluded); });

  rep.result["operator"] = L.str();
  rep.result["R"] = R;
  rep.result["s"] = s;
  rep.result["kappa"] = str(kappa);
  rep.result["precision"] = "exact";
  rep.result["A"] = rationals_json(d.A);
  rep.result["a"] = rationals_json(d.a);
  ojson pj = ojson::array();
  for (const auto& ch : checks) {
    ojson e;
    e["p"] = ch.p;
    e["outcome"] = to_string(ch.outcome);
    e["first_failure"] = ch.first_failure ? ojson(*ch.first_failure) : ojson(nullptr);
    ojson v = ojson::array();
    for (Verdict x : ch.per_r) v.push_back(to_string(x));
    e["verdicts"] = v;
    pj.push_back(e);
    if (ch.outcome == IntegralityOutcome::kOutsideHypotheses) continue;
    for (Verdict x : ch.per_r) rep.fold(verdict_status(x));
  }
  rep.result["checks"] = pj;

  std::vector<std::string> cols = {"r", "A_r", "a_r"};
  for (std::int64_t p : primes) cols.push_back("p=" + std::to_string(p));
  Table& t = rep.table("instantons", cols);
  for (std::size_t r = 0; r < R; ++r) {
    std::vector<std::string> row = {std::to_string(r + 1), str(d.A[r]), str(d.a[r])};
    for (const auto& ch : checks) {
      std::string v = ch.per_r[r] == Verdict::kTrue ? "pass" : ch.per_r[r] == Verdict::kFalse ? "fail" : "inconclusive";
      if (ch.outcome == IntegralityOutcome::kOutsideHypotheses) v += " (outside hypotheses)";
      row.push_back(v);
    }
    t.add(row);
  }
  Table& summary = rep.table("primes", {"p", "outcome", "first_failure"});
  for (const auto& ch : checks)
    summary.add({std::to_string(ch.p), to_string(ch.outcome), ch.first_failure ? std::to_string(*ch.first_failure) : "-"});
}

void cmd_check(const RunConfig& c, Report& rep, std::size_t workers) {
  std::string sel = need(c.op, "operator");
  ThetaOperator L = resolve_operator(sel);
  std::size_t M = c.M.value_or(41);
  std::vector<std::int64_t> primes = primes_or(c, {7, 11, 13});
  std::int64_t excluded = excluded_bound(sel, rep.notes);
  QSeries g = mirror_exponent(L, M);
  std::vector<MirrorCheck> checks = parallel_map<MirrorCheck>(
      primes.size(), workers, [&](std::size_t i) { return mirror_check(g, primes[i], primes[i] <= excluded); });

  rep.result["operator"] = L.str();
  rep.result["truncation"] = M;
  rep.result["precision"] = "exact";
  ojson pj = ojson::array();
  Table& t = rep.table("check", {"p", "k", "exp_integral", "dieudonne_dwork", "prefix_agree"});
  Table& summary = rep.table("primes", {"p", "mirror_map_integral", "criteria_agree", "outcome"});
  for (const auto& ch : checks) {
    rep.fold(ch.status());
    ojson e;
    e["p"] = ch.p;
    e["outside_hypotheses"] = ch.outside;
    e["mirror_map_integral"] = ch.all_integral;
    e["criteria_agree"] = ch.prefix_agree;
    e["exp_integral"] = ch.exp_ok;
    e["dieudonne_dwork"] = ch.dd_ok;
    pj.push_back(e);
    bool pe = true, pd = true;
    for (std::size_t k = 0; k < ch.exp_ok.size(); ++k) {
      pe = pe && ch.exp_ok[k];
      pd = pd && ch.dd_ok[k];
      t.add({std::to_string(ch.p), std::to_string(k), ch.exp_ok[k] ? "1" : "0", ch.dd_ok[k] ? "1" : "0",
             pe == pd ? "1" : "0"});
    }
    summary.add({std::to_string(ch.p), ch.all_integral ? "1" : "0", ch.prefix_agree ? "1" : "0",
                 ch.outside ? "outside hypotheses" : to_string(ch.status())});
  }
  rep.result["checks"] = pj;
}

void cmd_hasse_witt(const RunConfig& c, Report& rep, std::size_t workers) {
  Family fam = family_of(c);
  int k = static_cast<int>(c.k.value_or(fam.dimension()));
  std::size_t M = c.M.value_or(10);
  std::vector<std::int64_t> primes = primes_or(c, {7});
  for (std::int64_t p : primes)
    if (k >= p) throw ConfigError("Hasse-Witt level k must be below p");
  if (!fam.builtin()) rep.notes.push_back("custom family: values reported as computed, no theorem applies");
  std::vector<HWRun> runs =
      parallel_map<HWRun>(primes.size(), workers, [&](std::size_t i) { return hw_run(fam, k, primes[i], M); });

  rep.result["family"] = fam.name;
  rep.result["n"] = fam.dimension();
  rep.result["k"] = k;
  rep.result["M"] = M;
  rep.result["precision"] = "exact at t = 0";
  ojson rj = ojson::array();
  Table& t = rep.table("hasse_witt", {"p", "k", "size", "L_k", "det_valuation", "unit", "blocks_ok"});
  Table& bt = rep.table("blocks", {"p", "k", "face", "size", "det_valuation", "expected_valuation", "matches_full"});
  for (const auto& r : runs) {
    rep.fold(r.status());
    rj.push_back(hw_json(r));
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
      const HWReport& h = r.levels[i];
      const HWBlockReport& b = r.blocks[i];
      t.add({std::to_string(r.p), std::to_string(h.k), std::to_string(h.size()), std::to_string(h.L_k),
             valuation_string(h.det_valuation_at_0), h.hw_unit ? "1" : "0", b.ok ? "1" : "0"});
      for (const auto& blk : b.blocks)
        if (!blk.points.empty())
          bt.add({std::to_string(r.p), std::to_string(h.k), face_string(blk.face), std::to_string(blk.points.size()),
                valuation_string(blk.valuation), std::to_string(blk.expected_valuation), blk.matches_full ? "1" : "0"});
    }
  }
  rep.result["runs"] = rj;
}

void cmd_frobenius_structure(const RunConfig& c, Report& rep, std::size_t workers, Progress& progress) {
  Family fam = family_of(c);
  if (!fam.builtin()) throw ConfigError("Frobenius structures are available for the builtin families only");
  require_tier(fam, c);
  std::size_t N = c.N.value_or(3), M = c.M.value_or(10);
  std::vector<std::int64_t> primes = primes_or(c, {7});
  std::vector<FrobeniusRun> runs = parallel_map<FrobeniusRun>(primes.size(), workers, [&](std::size_t i) {
    progress.say("frobenius-structure " + fam.name + " p=" + std::to_string(primes[i]) + " started");
    FrobeniusRun r = frobenius_run(fam, primes[i], N, M);
    progress.say("frobenius-structure " + fam.name + " p=" + std::to_string(primes[i]) + " finished");
    return r;
  });
  ojson rj = ojson::array();
  Table& t = rep.table("frobenius", {"p", "i", "alpha_i", "lambda_valuation", "precision"});
  Table& ct = rep.table("checks", {"p", "alpha0_is_one", "alpha1_vanishes", "lambda_divisibility",
                                   "functional_equation", "action_on_basis", "action_effective_precision"});
  for (const auto& r : runs) {
    rep.fold(r.status());
    rj.push_back(frobenius_json(fam, r));
    for (std::size_t i = 0; i < r.fs.alpha.size(); ++i)
      t.add({std::to_string(r.p), std::to_string(i), residue(r.fs.alpha[i], r.p, N),
             std::to_string(r.fs.lambda_valuations[i]), precision_mod(r.p, N)});
    ct.add({std::to_string(r.p), r.alpha0_one ? "1" : "0", r.alpha1_zero ? "1" : "0", r.valuations_ok ? "1" : "0",
            r.functional_equation ? "1" : "0", r.action.ok ? "1" : "0", std::to_string(r.action.effective_precision)});
  }
  rep.result["runs"] = rj;
}

void cmd_derive_pf(const RunConfig& c, Report& rep) {
  Family fam = family_of(c);
  if (!fam.builtin()) throw ConfigError("Picard-Fuchs derivation is available for the builtin families only");
  std::size_t M = c.M.value_or(30);
  ThetaOperator L = derive_picard_fuchs(fam, M);
  std::optional<std::string> closed;
  std::optional<bool> matches;
  std::size_t n = fam.dimension();
  if (fam.spec.kind == FamilyKind::kSimplicial) {
    closed = simplicial_closed_form(n);
    matches = L.coeffs() == simplicial_operator(n).coeffs();
  } else if (n == 4) {
    closed = "diagonal4";
    matches = L.coeffs() == diagonal4_operator().coeffs();
  }
  if (matches && !*matches) rep.fold(Status::kFail);
  rep.result["family"] = fam.name;
  rep.result["n"] = n;
  rep.result["operator"] = L.str();
  rep.result["closed_form"] = closed ? ojson(*closed) : ojson(nullptr);
  rep.result["matches_closed_form"] = matches ? ojson(*matches) : ojson(nullptr);
  rep.result["verified_to"] = M;
  rep.result["precision"] = "exact";
  ojson coeffs = ojson::array();
  Table& t = rep.table("operator", {"theta_power", "t_degree", "coefficient"});
  for (std::size_t i = 0; i < L.coeffs().size(); ++i) {
    coeffs.push_back(rationals_json(L.coeffs()[i]));
    for (std::size_t m = 0; m < L.coeffs()[i].size(); ++m)
      if (L.coeffs()[i][m] != 0) t.add({std::to_string(i), std::to_string(m), str(L.coeffs()[i][m])});
  }
  rep.result["coefficients"] = coeffs;
  Table& s = rep.table("summary", {"operator", "closed_form", "matches_closed_form"});
  s.add({L.str(), closed.value_or("-"), matches ? (*matches ? "1" : "0") : "-"});
}

// ---------------------------------------------------------------------------------------------------------------
// Verification suites.

struct Member {
  std::string name;
  bool extended_only = false;
  std::function<std::pair<Status, std::string>(std::size_t workers)> run;
};

struct MemberResult {
  std::string name;
  std::string status;
  std::string detail;
  Status code = Status::kPass;
};

std::pair<Status, std::string> pf_member(FamilySpec spec, std::optional<ThetaOperator> expected) {
  Family fam = build_family(spec);
  ThetaOperator L = derive_picard_fuchs(fam, 30);
  if (expected && L.coeffs() != expected->coeffs()) return {Status::kFail, "differs from the closed form: " + L.str()};
  // derive_picard_fuchs has already checked that L annihilates the constant-term series.
  return {Status::kPass, L.str()};
}

std::pair<Status, std::string> hw_member(FamilySpec spec, std::int64_t p) {
  Family fam = build_family(spec);
  HWRun r = hw_run(fam, static_cast<int>(fam.dimension()), p, 10);
  std::ostringstream os;
  os << "k<=" << fam.dimension() << " condition=" << r.condition << " valuations=";
  for (std::size_t i = 0; i < r.levels.size(); ++i) os << (i ? "," : "") << valuation_string(r.levels[i].det_valuation_at_0);
  return {r.status(), os.str()};
}

std::pair<Status, std::string> frobenius_member(FamilySpec spec, std::int64_t p) {
  Family fam = build_family(spec);
  FrobeniusRun r = frobenius_run(fam, p, 3, 10);
  std::ostringstream os;
  os << "alpha=";
  for (std::size_t i = 0; i < r.fs.alpha.size(); ++i) os << (i ? "," : "") << residue(r.fs.alpha[i], p, 3);
  os << " " << precision_mod(p, 3) << " functional_equation=" << r.functional_equation
     << " action=" << r.action.ok;
  return {r.status(), os.str()};
}

std::pair<Status, std::string> mirror_member(const ThetaOperator& L, std::vector<std::int64_t> primes,
                                             std::size_t M) {
  QSeries g = mirror_exponent(L, M);
  Status st = Status::kPass;
  std::ostringstream os;
  os << "to t^" << M - 1 << ":";
  for (std::int64_t p : primes) {
    MirrorCheck c = mirror_check(g, p, false);
    st = combine(st, c.status());
    os << " p=" << p << (c.all_integral ? " integral" : " NOT integral") << (c.prefix_agree ? "" : " (criteria disagree)");
  }
  return {st, os.str()};
}

std::pair<Status, std::string> instanton_member(const ThetaOperator& L, int s, const Rational& kappa, std::size_t R,
                                                std::vector<std::int64_t> primes, std::vector<Rational> expected,
                                                bool require_integral) {
  MirrorData d = mirror_pipeline(L, R, s, kappa);
  Status st = Status::kPass;
  std::ostringstream os;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (d.a[i] != expected[i]) {
      st = Status::kFail;
      os << "a_" << i + 1 << "=" << d.a[i] << " expected " << expected[i] << "; ";
    }
  if (require_integral)
    for (std::size_t r = 0; r < R; ++r)
      if (d.a[r].get_den() != 1) {
        st = Status::kFail;
        os << "a_" << r + 1 << " not integral; ";
      }
  for (std::int64_t p : primes) {
    IntegralityReport rep = check_integrality(d.A, s, p, 10);
    if (rep.outcome != IntegralityOutcome::kPass) {
      st = Status::kFail;
      os << "A_r/r^" << s << " fails at p=" << p << " r=" << rep.first_failure.value_or(0) << "; ";
    }
  }
  os << "R=" << R << " a_1=" << d.a[0];
  return {st, os.str()};
}

std::vector<Member> suite_members(const std::string& suite) {
  using FS = FamilySpec;
  std::vector<Member> m;
  if (suite == "smoke") {
    m.push_back({"pf-simplicial-2", false, [](std::size_t) { return pf_member(FS::simplicial(2), simplicial_operator(2)); }});
    m.push_back({"pf-hyperoctahedral-2", false, [](std::size_t) { return pf_member(FS::hyperoctahedral(2), std::nullopt); }});
    m.push_back({"hw-simplicial-2-p7", false, [](std::size_t) { return hw_member(FS::simplicial(2), 7); }});
    m.push_back({"hw-hyperoctahedral-2-p7", false, [](std::size_t) { return hw_member(FS::hyperoctahedral(2), 7); }});
    m.push_back({"frobenius-simplicial-2-p7", false, [](std::size_t) { return frobenius_member(FS::simplicial(2), 7); }});
    m.push_back({"frobenius-hyperoctahedral-2-p7", false,
                 [](std::size_t) { return frobenius_member(FS::hyperoctahedral(2), 7); }});
    m.push_back({"mirror-simplicial-2-p7", false,
                 [](std::size_t) { return mirror_member(simplicial_operator(2), {7}, 21); }});
  } else if (suite == "quintic") {
    std::vector<Rational> known = {Rational(2875), Rational(609250), Rational(317206375),
                                   Rational(Integer("242467530000")), Rational(Integer("229305888887625"))};
    m.push_back({"instantons-quintic", false, [known](std::size_t) {
                   return instanton_member(quintic_operator(), 3, Rational(5), 20, {7, 11, 13}, known, true);
                 }});
    m.push_back({"mirror-quintic", false,
                 [](std::size_t) { return mirror_member(quintic_operator(), {7, 11, 13}, 41); }});
    m.push_back({"pf-simplicial-4", false, [](std::size_t) { return pf_member(FS::simplicial(4), simplicial_operator(4)); }});
    m.push_back({"hw-simplicial-4-p7", false, [](std::size_t) { return hw_member(FS::simplicial(4), 7); }});
    m.push_back({"frobenius-simplicial-4-p7", true, [](std::size_t) { return frobenius_member(FS::simplicial(4), 7); }});
  } else if (suite == "diagonal") {
    m.push_back({"pf-hyperoctahedral-4", false,
                 [](std::size_t) { return pf_member(FS::hyperoctahedral(4), diagonal4_operator()); }});
    m.push_back({"self-dual-diagonal4", false, [](std::size_t) -> std::pair<Status, std::string> {
                   bool ok = is_self_dual(diagonal4_operator(), 15);
                   return {ok ? Status::kPass : Status::kFail, "to t^14"};
                 }});
    m.push_back({"instantons-diagonal4", false, [](std::size_t) {
                   return instanton_member(diagonal4_operator(), 3, Rational(1), 16, {5, 7, 11}, {}, false);
                 }});
    m.push_back({"mirror-diagonal4", false,
                 [](std::size_t) { return mirror_member(diagonal4_operator(), {5, 7, 11}, 41); }});
    m.push_back({"hw-hyperoctahedral-4-p7", false, [](std::size_t) { return hw_member(FS::hyperoctahedral(4), 7); }});
    m.push_back({"frobenius-hyperoctahedral-4-p7", true,
                 [](std::size_t) { return frobenius_member(FS::hyperoctahedral(4), 7); }});
  } else {
    throw ConfigError("unknown suite '" + suite + "' (expected smoke, quintic or diagonal)");
  }
  return m;
}

void cmd_verify(const RunConfig& c, Report& rep, std::size_t workers, Progress& progress) {
  std::string suite = need(c.suite, "suite");
  std::vector<Member> members = suite_members(suite);
  bool extended = c.extended.value_or(false);
  std::vector<MemberResult> results = parallel_map<MemberResult>(members.size(), workers, [&](std::size_t i) {
    const Member& m = members[i];
    MemberResult r{m.name, "", "", Status::kPass};
    if (m.extended_only && !extended) {
      r.status = "skipped";
      r.detail = "long-running tier; pass --extended";
      return r;
    }
    progress.say("verify " + suite + ": " + m.name + " started");
    auto start = std::chrono::steady_clock::now();
    try {
      auto [st, detail] = m.run(workers);
      r.code = st;
      r.status = to_string(st);
      r.detail = detail;
    } catch (const PadicError& e) {
      r.code = Status::kInconclusive;
      r.status = to_string(r.code);
      r.detail = e.what();
    } catch (const std::exception& e) {
      r.code = Status::kFail;
      r.status = to_string(r.code);
      r.detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os.precision(3);
    os << "verify " << suite << ": " << m.name << " " << r.status << " in " << secs << " s";
    progress.say(os.str());
    return r;
  });
  rep.result["suite"] = suite;
  rep.result["extended"] = extended;
  ojson mj = ojson::array();
  Table& t = rep.table("suite", {"member", "status", "detail"});
  for (const auto& r : results) {
    rep.fold(r.code);
    mj.push_back({{"member", r.name}, {"status", r.status}, {"detail", r.detail}});
    t.add({r.name, r.status, r.detail});
  }
  rep.result["members"] = mj;
}

}  // namespace

Report execute(const RunConfig& c, std::ostream* diagnostics) {
  c.validate();
  Command cmd = need(c.command, "command");
  std::size_t workers = worker_count();
  Progress progress(diagnostics);
  Report rep;
  rep.command = to_string(cmd);
  rep.config = c.to_json();
  switch (cmd) {
    case Command::kFrobeniusBasis: cmd_frobenius_basis(c, rep); break;
    case Command::kMirror: cmd_mirror(c, rep); break;
    case Command::kInstantons: cmd_instantons(c, rep, workers); break;
    case Command::kCheck: cmd_check(c, rep, workers); break;
    case Command::kHasseWitt: cmd_hasse_witt(c, rep, workers); break;
    case Command::kFrobeniusStructure: cmd_frobenius_structure(c, rep, workers, progress); break;
    case Command::kDerivePf: cmd_derive_pf(c, rep); break;
    case Command::kVerify: cmd_verify(c, rep, workers, progress); break;
  }
  return rep;
}

RunOutcome run(const RunConfig& c, std::ostream* diagnostics) {
  RunOutcome out;
  try {
    Report rep = execute(c, diagnostics);
    out.exit_code = static_cast<int>(rep.status);
    out.text = c.format.value_or(Format::kTsv) == Format::kJson ? render_json(rep) : render_tsv(rep);
  } catch (const ConfigError& e) {
    out = {2, "", e.what()};
  } catch (const PadicError& e) {
    out = {3, "", std::string("precision exhausted: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    // Library precondition failures (bad prime, unsupported dimension, malformed polytope data).
    out = {2, "", e.what()};
  } catch (const SeriesError& e) {
    out = {2, "", e.what()};
  } catch (const std::exception& e) {
    out = {1, "", e.what()};
  }
  return out;
}

std::size_t worker_count() {
  const char* env = std::getenv("CYINT_WORKERS");
  if (!env || !*env) return std::max(1u, std::thread::hardware_concurrency());
  std::string s(env);
  if (!std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 4 || std::stoul(s) == 0)
    throw ConfigError("CYINT_WORKERS must be a positive integer; got '" + s + "'");
  return std::stoul(s);
}

}  // namespace cyint::app
