#include "ofip/campaign.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstring>
#include <ctime>
#include <limits>
#include <map>
#include <memory>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "ofip/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ofip {

namespace {

struct RealizationSet {
  FuzzyInnerProductTriple fip;
  std::optional<FuzzyNormTriple> fnorm;
  std::optional<FuzzyInnerProductTriple> fip_pair;
  std::optional<FuzzyNormTriple> fnorm_pair;
};

struct Env {
  const CampaignConfig& cfg;
  std::map<std::size_t, RealizationSet> sets;
  std::vector<CheckId> enabled;
  double m_bound = 1.0;
  double l_bound = 1.0;
};

struct Scenario {
  std::uint64_t trial = 0;
  std::size_t dim = 1;
  bool complex_field = false;
  double alpha = 1.0;
  double alpha2 = 1.0;
  Complex k{1.0, 0.0};
  Vector x, y, z;
  std::shared_ptr<const OrthonormalSystem> system;
  std::size_t bessel_n = 1;
  bool pair_from_system = false;
  std::size_t sys_i = 0;
  std::size_t sys_j = 0;
};

AlphaProfile build_profile(const ProfileSpec& p, const std::vector<double>& grid) {
  switch (p.kind) {
    case ProfileKind::Constant:
      return AlphaProfile::constant(p.lower, p.upper, grid);
    case ProfileKind::Affine:
      return AlphaProfile::affine(p.lower_base, p.lower_slope, p.upper_base, p.upper_slope, grid);
    case ProfileKind::Table:
      return AlphaProfile::table(grid, p.table_lower, p.table_upper);
  }
  throw std::invalid_argument("unknown profile kind");
}

MixingFunction build_mixing(const MixingSpec& m, std::uint64_t seed) {
  switch (m.kind) {
    case MixingKind::Constant:
      return MixingFunction::constant(m.t, m.phase);
    case MixingKind::Affine:
      return MixingFunction::affine_in_alpha(m.t_base, m.t_slope, m.phase);
    case MixingKind::Hashed:
      return MixingFunction::hashed(splitmix64(seed ^ 0x6d1c355e5eedULL));
  }
  throw std::invalid_argument("unknown mixing kind");
}

std::vector<double> second_base_weights(std::size_t dim) {
  // Fixed pattern, distinct from the standard dot in every coordinate.
  std::vector<double> w(dim);
  for (std::size_t i = 0; i < dim; ++i) w[i] = 2.0 + 0.5 * static_cast<double>(i % 3);
  return w;
}

Env build_env(const CampaignConfig& cfg) {
  if (cfg.dims.empty()) throw std::invalid_argument("dims must be non-empty");
  for (std::size_t d : cfg.dims) {
    if (d == 0) throw std::invalid_argument("dims entries must be positive");
  }
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const AlphaProfile profile = build_profile(cfg.profile, cfg.alpha_grid);
  if (cfg.realization != RealizationKind::General && !profile.simplified()) {
    throw std::invalid_argument(
        "this realization requires an ordered profile (lower <= upper on the grid)");
  }

  Env env{cfg, {}, {}, 1.0, 1.0};
  const MixingFunction mixing = build_mixing(cfg.mixing, cfg.seed);
  const MixingFunction pair_mixing =
      MixingFunction::hashed(splitmix64(cfg.seed ^ 0x9a17c0a1f2ULL));
  const auto base = ClassicalInnerProduct::standard_dot();

  std::set<std::size_t> dims(cfg.dims.begin(), cfg.dims.end());
  for (std::size_t dim : dims) {
    switch (cfg.realization) {
      case RealizationKind::Scaled: {
        auto fip = make_scaled_fip(base, profile, mixing);
        auto pair = make_scaled_fip(base, profile, pair_mixing);
        auto fnorm = derive_norm_triple(fip);
        auto fnorm_pair = derive_norm_triple(pair);
        env.sets.emplace(dim, RealizationSet{std::move(fip), std::move(fnorm), std::move(pair),
                                             std::move(fnorm_pair)});
        break;
      }
      case RealizationKind::General: {
        auto fip = make_general_fip(base, ClassicalInnerProduct::diagonal(second_base_weights(dim)),
                                    profile, mixing);
        env.sets.emplace(dim, RealizationSet{std::move(fip), std::nullopt, std::nullopt,
                                             std::nullopt});
        break;
      }
      case RealizationKind::Adversarial: {
        auto fip = make_adversarial_fip(base, profile);
        auto pair = make_scaled_fip(base, profile, pair_mixing);
        auto fnorm = derive_norm_triple(fip);
        auto fnorm_pair = derive_norm_triple(pair);
        env.sets.emplace(dim, RealizationSet{std::move(fip), std::move(fnorm), std::move(pair),
                                             std::move(fnorm_pair)});
        break;
      }
    }
  }

  if (cfg.realization != RealizationKind::General) {
    env.m_bound = profile.global_ratio_bound();
    env.l_bound = profile.sqrt_profile().global_ratio_bound();
  }

  if (cfg.checks.empty()) {
    for (CheckId id : all_check_ids()) {
      if (check_applicable(id, cfg.realization)) env.enabled.push_back(id);
    }
  } else {
    std::set<int> seen;
    for (CheckId id : cfg.checks) {
      if (!check_applicable(id, cfg.realization)) {
        throw std::invalid_argument(std::string("check '") + std::string(check_id_name(id)) +
                                    "' does not apply to this realization kind");
      }
      if (seen.insert(static_cast<int>(id)).second) env.enabled.push_back(id);
    }
    std::sort(env.enabled.begin(), env.enabled.end());
  }
  return env;
}

Vector random_vector(std::mt19937_64& rng, std::size_t dim, bool complex_field) {
  std::uniform_real_distribution<double> entry(-10.0, 10.0);
  std::vector<Complex> e(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double re = entry(rng);
    const double im = complex_field ? entry(rng) : 0.0;
    e[i] = Complex(re, im);
  }
  return Vector(std::move(e));
}

std::shared_ptr<const OrthonormalSystem> draw_system(std::mt19937_64& rng, std::size_t dim,
                                                     bool complex_field,
                                                     const ClassicalInnerProduct& base) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const bool canonical = unit(rng) < 0.5;
  if (!canonical) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::vector<Vector> vs;
      vs.reserve(dim);
      for (std::size_t i = 0; i < dim; ++i) vs.push_back(random_vector(rng, dim, complex_field));
      try {
        return std::make_shared<OrthonormalSystem>(gram_schmidt(vs, base));
      } catch (const GramSchmidtError&) {
        // near-dependent draw; retry
      }
    }
  }
  std::vector<Vector> vs;
  vs.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) vs.push_back(Vector::basis(dim, i));
  return std::make_shared<OrthonormalSystem>(std::move(vs), base);
}

Scenario make_scenario(const Env& env, std::uint64_t trial) {
  const CampaignConfig& cfg = env.cfg;
  std::mt19937_64 rng(trial_seed(cfg.seed, trial));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> scalar(-10.0, 10.0);

  Scenario s;
  s.trial = trial;
  s.complex_field =
      cfg.field == Field::Complex || (cfg.field == Field::Both && (rng() & 1) != 0);
  s.dim = cfg.dims[rng() % cfg.dims.size()];
  s.alpha = cfg.alpha_grid[rng() % cfg.alpha_grid.size()];
  s.alpha2 = cfg.alpha_grid[rng() % cfg.alpha_grid.size()];

  const double cx = unit(rng);
  if (cx < 0.05) {
    s.x = Vector::zero(s.dim);
  } else if (cx < 0.12) {
    s.x = Vector::basis(s.dim, rng() % s.dim);
  } else {
    s.x = random_vector(rng, s.dim, s.complex_field);
  }

  const double cy = unit(rng);
  if (cy < 0.05) {
    s.y = Vector::zero(s.dim);
  } else if (cy < 0.12) {
    s.y = s.x;
  } else {
    s.y = random_vector(rng, s.dim, s.complex_field);
  }

  s.z = random_vector(rng, s.dim, s.complex_field);

  const double ck = unit(rng);
  if (ck < 0.3) {
    constexpr std::array<double, 5> corners = {0.0, 1.0, -1.0, 1e-6, 1e6};
    s.k = Complex(corners[rng() % corners.size()], 0.0);
  } else {
    s.k = Complex(scalar(rng), 0.0);
  }
  if (s.complex_field && unit(rng) < 0.5) {
    s.k = std::polar(std::abs(s.k), 2.0 * std::numbers::pi * unit(rng));
  }

  const auto& rs = env.sets.at(s.dim);
  s.system = draw_system(rng, s.dim, s.complex_field, rs.fip.base1());
  s.bessel_n = 1 + rng() % s.dim;
  if (s.dim >= 2) {
    s.pair_from_system = (rng() & 1) != 0;
    s.sys_i = rng() % s.dim;
    s.sys_j = (s.sys_i + 1 + rng() % (s.dim - 1)) % s.dim;
  }
  return s;
}

bool runnable(CheckId id, const Scenario& s, const RealizationSet& rs) {
  switch (id) {
    case CheckId::Polarization:
    case CheckId::PolarizationClassical:
      return !s.complex_field;
    case CheckId::NormDefiniteness:
    case CheckId::NormTriangle:
    case CheckId::NormHomogeneity:
    case CheckId::NormUniformTriangle:
    case CheckId::NormUniformHomogeneity:
    case CheckId::CrossAlphaNorm:
      return rs.fnorm.has_value();
    case CheckId::CrossAlphaNormPair:
      return rs.fnorm.has_value() && rs.fnorm_pair.has_value();
    case CheckId::CrossAlphaIpPair:
      return rs.fip_pair.has_value();
    default:
      return true;
  }
}

CheckRecord evaluate_check(const Env& env, CheckId id, const Scenario& s) {
  const RealizationSet& rs = env.sets.at(s.dim);
  const double tol = env.cfg.tolerance;
  CheckRecord rec;
  switch (id) {
    case CheckId::DefiningPredicate:
      rec = check_defining_predicate(rs.fip, s.alpha, s.x, s.y);
      break;
    case CheckId::Orthogonality: {
      const Vector& a = s.pair_from_system ? (*s.system)[s.sys_i] : s.x;
      const Vector& b = s.pair_from_system ? (*s.system)[s.sys_j] : s.y;
      rec = check_orthogonality(rs.fip, s.alpha, a, b);
      break;
    }
    case CheckId::IpDefiniteness:
      rec = check_ip_definiteness(rs.fip, s.alpha, s.x);
      break;
    case CheckId::IpZeroLeft:
      rec = check_ip_zero_left(rs.fip, s.alpha, s.y);
      break;
    case CheckId::NormBounds:
      rec = check_norm_bounds(rs.fip, s.alpha, s.x, tol);
      break;
    case CheckId::CauchySchwarz:
      rec = check_fuzzy_cauchy_schwarz(rs.fip, s.alpha, s.x, s.y, tol);
      break;
    case CheckId::Parallelogram:
      rec = check_fuzzy_parallelogram(rs.fip, s.alpha, s.x, s.y, tol);
      break;
    case CheckId::Polarization:
      rec = check_fuzzy_polarization(rs.fip, s.alpha, s.x, s.y, tol);
      break;
    case CheckId::PolarizationClassical:
      rec = check_classical_polarization_bound(rs.fip.base1(), s.x, s.y, tol);
      break;
    case CheckId::Bessel:
      rec = check_fuzzy_bessel(rs.fip, *s.system, s.x, s.alpha, s.bessel_n, tol);
      break;
    case CheckId::NormDefiniteness:
      rec = check_fuzzy_norm_properties(*rs.fnorm, 1, s.alpha, s.k, s.x, s.y, tol);
      break;
    case CheckId::NormTriangle:
      rec = check_fuzzy_norm_properties(*rs.fnorm, 2, s.alpha, s.k, s.x, s.y, tol);
      break;
    case CheckId::NormHomogeneity:
      rec = check_fuzzy_norm_properties(*rs.fnorm, 3, s.alpha, s.k, s.x, s.y, tol);
      break;
    case CheckId::NormUniformTriangle:
      rec = check_norm_uniform_bound(*rs.fnorm, env.l_bound, 2, s.alpha, s.k, s.x, s.y, tol);
      break;
    case CheckId::NormUniformHomogeneity:
      rec = check_norm_uniform_bound(*rs.fnorm, env.l_bound, 3, s.alpha, s.k, s.x, s.y, tol);
      break;
    case CheckId::CrossAlphaIp:
      rec = check_cross_alpha(rs.fip, rs.fip, s.alpha, s.alpha2, s.x, s.y, false, tol);
      break;
    case CheckId::CrossAlphaIpPair:
      rec = check_cross_alpha(rs.fip, *rs.fip_pair, s.alpha, s.alpha2, s.x, s.y, true, tol);
      break;
    case CheckId::CrossAlphaNorm:
      rec = check_cross_alpha_norm(*rs.fnorm, *rs.fnorm, s.alpha, s.alpha2, s.x, false, tol);
      break;
    case CheckId::CrossAlphaNormPair:
      rec = check_cross_alpha_norm(*rs.fnorm, *rs.fnorm_pair, s.alpha, s.alpha2, s.x, true, tol);
      break;
    default: {
      const int idx = static_cast<int>(id);
      if (idx >= static_cast<int>(CheckId::Qlin03) && idx <= static_cast<int>(CheckId::Qlin12)) {
        const int item = idx - static_cast<int>(CheckId::Qlin03) + 3;
        rec = check_quasi_linearity(rs.fip, item, s.alpha, s.k, s.x, s.y, &s.z, tol);
      } else if (idx >= static_cast<int>(CheckId::Uniform03) &&
                 idx <= static_cast<int>(CheckId::Uniform12)) {
        const int item = idx - static_cast<int>(CheckId::Uniform03) + 3;
        rec = check_uniform_bound(rs.fip, env.m_bound, item, s.alpha, s.k, s.x, s.y, &s.z, tol);
      } else {
        throw std::logic_error("unhandled check id");
      }
      break;
    }
  }
  rec.inputs.trial = s.trial;
  return rec;
}

struct Aggregate {
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  bool has_worst = false;
  CheckRecord worst;
  bool has_fail = false;
  std::uint64_t fail_trial = 0;
  Scenario fail_scenario;

  void add(const CheckRecord& rec, const Scenario& s) {
    ++trials;
    if (rec.pass) ++passes;
    if (!has_worst || rec.slack < worst.slack ||
        (rec.slack == worst.slack && rec.inputs.trial < worst.inputs.trial)) {
      has_worst = true;
      worst = rec;
    }
    if (!rec.pass && (!has_fail || s.trial < fail_trial)) {
      has_fail = true;
      fail_trial = s.trial;
      fail_scenario = s;
    }
  }

  // Order-independent up to the total (slack, trial) and trial tie-breaks, so
  // any partition of trials merges to the same result.
  void merge(const Aggregate& o) {
    trials += o.trials;
    passes += o.passes;
    if (o.has_worst && (!has_worst || o.worst.slack < worst.slack ||
                        (o.worst.slack == worst.slack &&
                         o.worst.inputs.trial < worst.inputs.trial))) {
      has_worst = true;
      worst = o.worst;
    }
    if (o.has_fail && (!has_fail || o.fail_trial < fail_trial)) {
      has_fail = true;
      fail_trial = o.fail_trial;
      fail_scenario = o.fail_scenario;
    }
  }
};

using Partial = std::array<Aggregate, kCheckCount>;

void run_trial(const Env& env, std::uint64_t trial, Partial& out) {
  const Scenario s = make_scenario(env, trial);
  const RealizationSet& rs = env.sets.at(s.dim);
  for (CheckId id : env.enabled) {
    if (!runnable(id, s, rs)) continue;
    const CheckRecord rec = evaluate_check(env, id, s);
    out[static_cast<std::size_t>(id)].add(rec, s);
  }
}

Vector& scenario_vector(Scenario& s, int which) {
  switch (which) {
    case 0: return s.x;
    case 1: return s.y;
    default: return s.z;
  }
}

// Greedy structural shrinking: zero whole vectors, snap entries to {0, +-1},
// push alpha to grid endpoints and k to simple scalars, keeping failure.
Scenario shrink_scenario(const Env& env, CheckId id, Scenario start) {
  auto fails = [&](const Scenario& s) { return !evaluate_check(env, id, s).pass; };
  Scenario cur = std::move(start);
  bool changed = true;
  int rounds = 0;
  while (changed && ++rounds <= 32) {
    changed = false;

    for (int w = 0; w < 3; ++w) {
      Scenario cand = cur;
      Vector& v = scenario_vector(cand, w);
      if (v.dim() == 0 || v.is_zero()) continue;
      v = Vector::zero(v.dim());
      if (fails(cand)) {
        cur = std::move(cand);
        changed = true;
      }
    }

    for (int w = 0; w < 3; ++w) {
      const std::size_t dim = scenario_vector(cur, w).dim();
      for (std::size_t i = 0; i < dim; ++i) {
        const Complex e = scenario_vector(cur, w)[i];
        const Complex snapped(e.real() == 0.0 ? 0.0 : std::copysign(1.0, e.real()),
                              e.imag() == 0.0 ? 0.0 : std::copysign(1.0, e.imag()));
        for (const Complex& cand_entry : {Complex(0.0, 0.0), snapped}) {
          if (cand_entry == e) break;
          Scenario cand = cur;
          std::vector<Complex> entries = scenario_vector(cand, w).entries();
          entries[i] = cand_entry;
          scenario_vector(cand, w) = Vector(std::move(entries));
          if (fails(cand)) {
            cur = std::move(cand);
            changed = true;
            break;
          }
        }
      }
    }

    const std::vector<double>& grid = env.cfg.alpha_grid;
    for (double a : {grid.front(), grid.back()}) {
      if (cur.alpha != a) {
        Scenario cand = cur;
        cand.alpha = a;
        if (fails(cand)) {
          cur = std::move(cand);
          changed = true;
        }
      }
      if (cur.alpha2 != a) {
        Scenario cand = cur;
        cand.alpha2 = a;
        if (fails(cand)) {
          cur = std::move(cand);
          changed = true;
        }
      }
    }

    for (const Complex cand_k : {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(-1.0, 0.0)}) {
      if (cur.k == cand_k) continue;
      Scenario cand = cur;
      cand.k = cand_k;
      if (fails(cand)) {
        cur = std::move(cand);
        changed = true;
        break;
      }
    }

    if (cur.bessel_n != 1) {
      Scenario cand = cur;
      cand.bessel_n = 1;
      if (fails(cand)) {
        cur = std::move(cand);
        changed = true;
      }
    }
  }
  return cur;
}

std::string iso_utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::vector<CheckId> all_check_ids() {
  std::vector<CheckId> ids;
  ids.reserve(kCheckCount);
  for (int i = 0; i < kCheckCount; ++i) ids.push_back(static_cast<CheckId>(i));
  return ids;
}

bool check_applicable(CheckId id, RealizationKind realization) {
  if (realization != RealizationKind::General) return true;
  switch (id) {
    case CheckId::DefiningPredicate:
    case CheckId::IpDefiniteness:
    case CheckId::IpZeroLeft:
      return true;
    default:
      return false;
  }
}

bool CampaignReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckSummary& c) {
    return c.passes == c.trials && !c.counterexample;
  });
}

CampaignReport run_campaign(const CampaignConfig& config, Execution execution, int threads) {
  const Env env = build_env(config);

  CampaignReport report;
  report.config = config;
  if (config.timestamps) report.started = iso_utc_now();

  const auto n = static_cast<std::int64_t>(config.trials);
  std::vector<Partial> partials;
#ifdef _OPENMP
  if (execution == Execution::Parallel) {
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
    partials.resize(static_cast<std::size_t>(std::max(nthreads, 1)));
#pragma omp parallel num_threads(nthreads)
    {
      Partial& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::int64_t t = 0; t < n; ++t) {
        run_trial(env, static_cast<std::uint64_t>(t), local);
      }
    }
  }
#else
  (void)threads;
#endif
  if (partials.empty()) {
    partials.resize(1);
    for (std::int64_t t = 0; t < n; ++t) run_trial(env, static_cast<std::uint64_t>(t), partials[0]);
  }

  Partial total;
  for (const Partial& p : partials) {
    for (int i = 0; i < kCheckCount; ++i) total[static_cast<std::size_t>(i)].merge(p[static_cast<std::size_t>(i)]);
  }

  for (CheckId id : env.enabled) {
    const Aggregate& agg = total[static_cast<std::size_t>(id)];
    CheckSummary summary;
    summary.id = id;
    summary.trials = agg.trials;
    summary.passes = agg.passes;
    if (agg.has_worst) summary.worst = agg.worst;
    if (agg.has_fail) {
      const Scenario shrunk = shrink_scenario(env, id, agg.fail_scenario);
      CheckRecord rec = evaluate_check(env, id, shrunk);
      rec.inputs.trial = agg.fail_trial;
      summary.counterexample = Counterexample{agg.fail_trial, std::move(rec)};
    }
    report.checks.push_back(std::move(summary));
  }

  if (config.timestamps) report.finished = iso_utc_now();
  return report;
}

}  // namespace ofip
