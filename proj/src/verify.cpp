#include "invfp/verify.hpp"

#include "invfp/distance.hpp"
#include "invfp/distribution.hpp"
#include "invfp/gf.hpp"
#include "invfp/involutions.hpp"
#include "invfp/limits.hpp"
#include "invfp/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace invfp {

namespace {

double rel_error(double actual, double target) {
  return std::abs(actual - target) / std::abs(target);
}

std::string direction_name(Direction d) {
  return d == Direction::Increasing ? "increasing" : "decreasing";
}

// Distances over doubling n must not grow beyond the noise allowance; rows
// sharing a label form one sequence.
void check_trends(const std::vector<ReportRow>& rows, const std::string& label, double noise,
                  bool& passed, std::vector<std::string>& warnings) {
  const ReportRow* prev = nullptr;
  for (const ReportRow& r : rows) {
    if (r.label != label) continue;
    if (prev != nullptr && r.n >= 2 * prev->n && r.distance > prev->distance + noise) {
      passed = false;
      warnings.push_back("distance trend violated for " + label + ": n=" + std::to_string(prev->n) +
                         " gave " + format_double(prev->distance) + ", n=" + std::to_string(r.n) +
                         " gave " + format_double(r.distance));
    }
    prev = &r;
  }
}

const ReportRow* last_row_with_label(const std::vector<ReportRow>& rows, const std::string& label) {
  const ReportRow* out = nullptr;
  for (const ReportRow& r : rows) {
    if (r.label == label) out = &r;
  }
  return out;
}

}  // namespace

OrderedJson report_json(const ExperimentReport& r) {
  OrderedJson spec;
  spec["theorem"] = r.spec.theorem;
  if (r.spec.sigma_class) spec["sigma_class"] = sigma_class_name(*r.spec.sigma_class);
  if (r.spec.k) spec["k"] = *r.spec.k;
  if (r.spec.direction) spec["direction"] = direction_name(*r.spec.direction);
  spec["q"] = r.spec.q_text;
  if (r.spec.theorem == "t1") {
    spec["parity"] = r.spec.parity ? parity_name(*r.spec.parity) : "by-n";
  }
  spec["n_list"] = r.spec.n_list;
  spec["engine"] = r.spec.engine;
  spec["samples"] = r.spec.samples;
  spec["seed"] = r.spec.seed;

  OrderedJson rows = OrderedJson::array();
  for (const ReportRow& row : r.rows) {
    OrderedJson jr;
    jr["n"] = row.n;
    jr["label"] = row.label;
    jr["distance"] = row.distance;
    jr["distance_type"] = row.distance_type;
    jr["mean"] = row.mean;
    jr["variance"] = row.variance;
    rows.push_back(std::move(jr));
  }

  OrderedJson out;
  out["version"] = kVersion;
  out["spec"] = std::move(spec);
  out["rows"] = std::move(rows);
  out["adjudication"] = OrderedJson(r.adjudication);
  out["winner"] = r.winner;
  out["warnings"] = r.warnings;
  out["vacuous"] = r.vacuous;
  out["passed"] = r.passed;
  return out;
}

std::string report_csv(const ExperimentReport& r) {
  std::string out = "n,label,distance,distance_type,mean,variance\n";
  for (const ReportRow& row : r.rows) {
    out += std::to_string(row.n) + ',' + row.label + ',' + format_double(row.distance) + ',' +
           row.distance_type + ',' + format_double(row.mean) + ',' + format_double(row.variance) +
           '\n';
  }
  return out;
}

std::string report_filename(const ExperimentSpec& spec, long long timestamp) {
  std::string middle;
  if (spec.sigma_class) {
    middle = sigma_class_name(*spec.sigma_class);
  } else if (spec.k) {
    middle = "k" + std::to_string(*spec.k);
  } else {
    middle = "all";
  }
  std::string q = spec.q_text;
  std::replace(q.begin(), q.end(), '/', '-');
  return "reports/" + spec.theorem + "_" + middle + "_" + q + "_" + std::to_string(timestamp) +
         ".json";
}

ExperimentReport run_t1(int k, const BigRat& q, std::optional<Parity> parity,
                        const std::vector<int>& n_list) {
  ExperimentReport rep;
  rep.spec.theorem = "t1";
  rep.spec.k = k;
  rep.spec.direction = Direction::Increasing;
  rep.spec.q_text = to_string(q);
  rep.spec.q = to_double(q);
  rep.spec.parity = parity;
  rep.spec.n_list = n_list;
  rep.spec.engine = "shape";

  const double qd = to_double(q);
  rep.passed = true;
  for (int n : n_list) {
    const Parity pn = parity_of(n);
    if (parity && *parity != pn) continue;
    WeightPolynomial w = monotone_weights(n, k, Direction::Increasing);
    FpDistribution d = biased_distribution(w, q);
    const std::map<int, double> limit = monotone_parity_table(k, qd, pn);
    const double tv = tv_distance(d, limit);
    Moments m = exact_moments(d);
    rep.rows.push_back({n, parity_name(pn), tv, "tv", m.mean, m.variance});
  }
  for (const char* label : {"even", "odd"}) {
    const ReportRow* last = last_row_with_label(rep.rows, label);
    if (last != nullptr && last->distance >= thresholds::kT1Tv) rep.passed = false;
  }
  if (rep.rows.empty()) {
    rep.vacuous = true;
    rep.warnings.push_back("no n in n_list matches the requested parity");
  }
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const double mass = monotone_stated_normalizer_mass(k, qd, p);
    rep.adjudication[std::string("stated_normalizer_mass_") + parity_name(p)] = mass;
  }
  rep.warnings.push_back(
      "stated closed-form normalizer does not normalize the parity classes (masses above); "
      "the pmf is normalized by the numeric class mass instead");
  check_trends(rep.rows, "even", thresholds::kTrendNoiseExact, rep.passed, rep.warnings);
  check_trends(rep.rows, "odd", thresholds::kTrendNoiseExact, rep.passed, rep.warnings);
  return rep;
}

ExperimentReport run_t2(int k, double q, const std::vector<int>& n_list, long long samples,
                        std::uint64_t seed) {
  if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("run_t2: need 0 < q <= 1");
  ExperimentReport rep;
  rep.spec.theorem = "t2";
  rep.spec.k = k;
  rep.spec.direction = Direction::Decreasing;
  rep.spec.q_text = format_double(q);
  rep.spec.q = q;
  rep.spec.n_list = n_list;
  rep.spec.engine = "shape";
  rep.spec.samples = k == 2 ? 0 : samples;
  rep.spec.seed = seed;

  std::optional<TiltedS2Cdf> tilted;
  std::optional<WeightedSample> sample;
  if (k == 2) {
    tilted.emplace(q);
  } else {
    sample = xk_weighted_sample(k, q, samples, seed);
    rep.adjudication["ess"] = sample->ess;
    if (ess_is_low(*sample)) {
      rep.warnings.push_back("low effective sample size: ess=" + format_double(sample->ess) +
                             " of " + std::to_string(samples));
    }
  }

  const std::string label = "k" + std::to_string(k);
  rep.passed = true;
  const double threshold = k == 2 ? thresholds::kT2K2Ks : thresholds::kT2K3Ks;
  for (int n : n_list) {
    const double qn = std::pow(q, std::sqrt(static_cast<double>(k) / n));
    WeightPolynomial w = monotone_weights(n, k, Direction::Decreasing);
    FpDistribution d = biased_distribution(w, qn);
    const double center = (k % 2 == 1) ? static_cast<double>(n) / k : 0.0;
    const double scale = std::sqrt(static_cast<double>(n) / k);
    double ks = 0.0;
    if (k == 2) {
      ks = ks_distance(d, center, scale, [&](double x) { return tilted->cdf(x); });
    } else {
      ks = ks_finite_vs_weighted(d, center, scale, *sample);
    }
    Moments m = exact_moments(d);
    rep.rows.push_back({n, label, ks, "ks", m.mean, m.variance});
  }
  const ReportRow* last = last_row_with_label(rep.rows, label);
  if (last == nullptr) {
    rep.vacuous = true;
  } else if (last->distance >= threshold) {
    rep.passed = false;
  }
  check_trends(rep.rows, label, thresholds::kTrendNoiseMc, rep.passed, rep.warnings);
  return rep;
}

ExperimentReport run_t3(const BigRat& q, const std::vector<int>& n_list) {
  if (q <= 0) throw std::invalid_argument("run_t3: q must be positive");
  ExperimentReport rep;
  rep.spec.theorem = "t3";
  rep.spec.sigma_class = SigmaClass::Class321;
  rep.spec.q_text = to_string(q);
  rep.spec.q = to_double(q);
  rep.spec.n_list = n_list;
  rep.spec.engine = "path";
  rep.passed = true;

  const double qd = to_double(q);
  if (q < 1) {
    for (int n : n_list) {
      const Parity pn = parity_of(n);
      WeightPolynomial w = path_row(n);
      FpDistribution d = biased_distribution(w, q);
      const int max_i = std::max(2 * n, 200);
      std::map<int, double> limit = nb_parity_table(qd, pn, max_i);
      double mass = 0.0;
      for (const auto& [i, p] : limit) mass += p;
      if (1.0 - mass > 1e-12) {
        rep.warnings.push_back("limit pmf truncation tail " + format_double(1.0 - mass) +
                               " at n=" + std::to_string(n));
      }
      const double tv = tv_distance(d, limit);
      Moments m = exact_moments(d);
      rep.rows.push_back({n, parity_name(pn), tv, "tv", m.mean, m.variance});
    }
    for (const char* label : {"even", "odd"}) {
      const ReportRow* last = last_row_with_label(rep.rows, label);
      if (last != nullptr && last->distance >= thresholds::kT3NbTv) rep.passed = false;
      check_trends(rep.rows, label, thresholds::kTrendNoiseExact, rep.passed, rep.warnings);
    }
    if (rep.rows.empty()) rep.vacuous = true;
    return rep;
  }

  if (q == 1) {
    for (int n : n_list) {
      WeightPolynomial w = path_row(n);
      FpDistribution d = biased_distribution(w, q);
      const double ks = ks_distance(d, 0.0, std::sqrt(static_cast<double>(n)), rayleigh_cdf);
      Moments m = exact_moments(d);
      rep.rows.push_back({n, "rayleigh", ks, "ks", m.mean, m.variance});
    }
    const ReportRow* last = last_row_with_label(rep.rows, "rayleigh");
    if (last == nullptr) {
      rep.vacuous = true;
    } else if (last->distance >= thresholds::kT3RayleighKs) {
      rep.passed = false;
    }
    check_trends(rep.rows, "rayleigh", thresholds::kTrendNoiseExact, rep.passed, rep.warnings);
    return rep;
  }

  // q > 1: normal limit; adjudicate the two variance-slope candidates.
  const ClassConstants consts = class321_constants(qd);
  double mean_rel = 0.0;
  std::map<std::string, double> var_rel;
  for (int n : n_list) {
    WeightPolynomial w = path_row(n);
    FpDistribution d = biased_distribution(w, q);
    Moments m = exact_moments(d);
    const double center = consts.mean_slope * n;
    for (const auto& [label, slope] : consts.variance_slopes) {
      const double ks = ks_distance(d, center, std::sqrt(slope * n), std_normal_cdf);
      rep.rows.push_back({n, label, ks, "ks", m.mean, m.variance});
    }
    mean_rel = rel_error(m.mean / n, consts.mean_slope);
    for (const auto& [label, slope] : consts.variance_slopes) {
      var_rel[label] = rel_error(m.variance / n, slope);
    }
  }
  if (rep.rows.empty()) {
    rep.vacuous = true;
    return rep;
  }
  rep.adjudication["mean_rel"] = mean_rel;
  for (const auto& [label, rel] : var_rel) rep.adjudication["var_rel_" + label] = rel;
  if (mean_rel >= thresholds::kT3MeanRel) rep.passed = false;

  int winners = 0;
  for (const auto& [label, rel] : var_rel) {
    if (rel < thresholds::kT3VarWinRel) {
      ++winners;
      rep.winner = label;
    }
  }
  bool others_lose = true;
  for (const auto& [label, rel] : var_rel) {
    if (label != rep.winner && rel <= thresholds::kT3VarLoseRel) others_lose = false;
  }
  if (winners != 1 || !others_lose) {
    rep.passed = false;
    rep.winner.clear();
  } else {
    const ReportRow* last = last_row_with_label(rep.rows, rep.winner);
    if (last == nullptr || last->distance >= thresholds::kT3NormalKs) rep.passed = false;
    check_trends(rep.rows, rep.winner, thresholds::kTrendNoiseExact, rep.passed, rep.warnings);
  }
  return rep;
}

ExperimentReport run_t4(const BigRat& q, const std::vector<int>& n_list) {
  if (q <= 0) throw std::invalid_argument("run_t4: q must be positive");
  ExperimentReport rep;
  rep.spec.theorem = "t4";
  rep.spec.sigma_class = SigmaClass::Class231;
  rep.spec.q_text = to_string(q);
  rep.spec.q = to_double(q);
  rep.spec.n_list = n_list;
  rep.spec.engine = "gf";
  rep.passed = true;
  if (n_list.empty()) {
    rep.vacuous = true;
    return rep;
  }

  const int n_max = *std::max_element(n_list.begin(), n_list.end());
  SeriesTable table = expand_class231(n_max);
  const ClassConstants consts = class231_constants(to_double(q));
  const double var_slope = consts.variance_slopes[0].second;

  double mean_rel = 0.0, variance_rel = 0.0;
  for (int n : n_list) {
    FpDistribution d = biased_distribution(table.rows[static_cast<size_t>(n)], q);
    Moments m = exact_moments(d);
    const double ks =
        ks_distance(d, consts.mean_slope * n, std::sqrt(var_slope * n), std_normal_cdf);
    rep.rows.push_back({n, "normal", ks, "ks", m.mean, m.variance});
    mean_rel = rel_error(m.mean / n, consts.mean_slope);
    variance_rel = rel_error(m.variance / n, var_slope);
  }
  rep.adjudication["mean_rel"] = mean_rel;
  rep.adjudication["var_rel"] = variance_rel;
  if (mean_rel >= thresholds::kT4MeanRel) rep.passed = false;
  if (variance_rel >= thresholds::kT4VarRel) rep.passed = false;
  const ReportRow* last = last_row_with_label(rep.rows, "normal");
  if (last != nullptr && last->distance >= thresholds::kT4NormalKs) rep.passed = false;
  check_trends(rep.rows, "normal", thresholds::kTrendNoiseExact, rep.passed, rep.warnings);
  return rep;
}

std::optional<Mismatch> first_mismatch(const std::vector<WeightPolynomial>& a,
                                       const std::vector<WeightPolynomial>& b) {
  const size_t common = std::min(a.size(), b.size());
  for (size_t n = 0; n < common; ++n) {
    for (int j = 0; j <= static_cast<int>(n); ++j) {
      const BigInt& lhs = a[n].coeffs[static_cast<size_t>(j)];
      const BigInt& rhs = b[n].coeffs[static_cast<size_t>(j)];
      if (lhs != rhs) {
        return Mismatch{static_cast<int>(n), j, to_string(lhs), to_string(rhs)};
      }
    }
  }
  if (a.size() != b.size()) {
    return Mismatch{static_cast<int>(common), -1, std::to_string(a.size()) + " rows",
                    std::to_string(b.size()) + " rows"};
  }
  return std::nullopt;
}

ExperimentReport cross_engine_check(int n_max_poly, int n_max_path, bool inject_path_fault) {
  if (n_max_poly < 0 || n_max_poly > kMaxPolyRows321) {
    throw std::invalid_argument("cross_engine_check: n_max_poly must be in [0, 60]");
  }
  if (n_max_path < 0 || n_max_path > kMaxPathTable) {
    throw std::invalid_argument("cross_engine_check: n_max_path must be in [0, 1000]");
  }

  ExperimentReport rep;
  rep.spec.theorem = "selftest";
  rep.spec.q_text = "1";
  rep.spec.n_list = {n_max_poly, n_max_path};
  rep.spec.engine = "all";
  rep.passed = true;

  const auto record = [&](const std::string& label, int n_checked,
                          const std::optional<Mismatch>& mm, const std::string& context) {
    ReportRow row{n_checked, label, 0.0, "equal", 0.0, 0.0};
    if (mm) {
      row.distance = 1.0;
      rep.passed = false;
      rep.warnings.push_back(label + " mismatch" + (context.empty() ? "" : " (" + context + ")") +
                             " at n=" + std::to_string(mm->n) + ", j=" + std::to_string(mm->j) +
                             ": " + mm->lhs + " vs " + mm->rhs);
    }
    rep.rows.push_back(std::move(row));
  };

  // gf vs brute force, all five length-3 patterns.
  {
    constexpr int kBruteMax = 10;
    SeriesTable t321 = expand_class321(kBruteMax);
    SeriesTable t231 = expand_class231(kBruteMax);
    for (const std::string name : {"321", "132", "213", "231", "312"}) {
      const Pattern pat = *Pattern::parse(name);
      const SeriesTable& table = (name == "231" || name == "312") ? t231 : t321;
      std::vector<WeightPolynomial> brute;
      for (int n = 0; n <= kBruteMax; ++n) brute.push_back(brute_force_weights(n, pat));
      record("gf-vs-brute", kBruteMax, first_mismatch(brute, table.rows), name);
      if (rep.rows.back().distance != 0.0) break;
    }
  }

  // path DP vs gf rows.
  if (n_max_poly == 0) {
    rep.vacuous = true;
    rep.warnings.push_back("path-vs-gf comparison vacuous (n_max_poly=0)");
    rep.rows.push_back({0, "path-vs-gf", 0.0, "equal", 0.0, 0.0});
  } else {
    SeriesTable gf = expand_class321(n_max_poly);
    SeriesTable pw = path_weights(n_max_poly);
    if (inject_path_fault && n_max_poly >= 2) {
      pw.rows[2].coeffs[0] += 1;
    }
    record("path-vs-gf", n_max_poly, first_mismatch(pw.rows, gf.rows), "");
  }

  // shape engine vs brute force, both directions.
  {
    std::optional<Mismatch> found;
    std::string context;
    for (int k = 1; k <= 4 && !found; ++k) {
      for (Direction dir : {Direction::Increasing, Direction::Decreasing}) {
        std::vector<WeightPolynomial> shape_rows, brute_rows;
        for (int n = 0; n <= 9; ++n) {
          shape_rows.push_back(monotone_weights(n, k, dir));
          const Pattern pat = dir == Direction::Increasing ? Pattern::increasing(k + 1)
                                                           : Pattern::decreasing(k + 1);
          brute_rows.push_back(brute_force_weights(n, pat));
        }
        if (auto mm = first_mismatch(shape_rows, brute_rows)) {
          found = mm;
          context = "k=" + std::to_string(k) + " " + direction_name(dir);
          break;
        }
      }
    }
    record("shape-vs-brute", 9, found, context);
  }

  // Row sums of the path table against central binomial coefficients.
  {
    SeriesTable pw = path_weights(n_max_path);
    std::optional<Mismatch> found;
    for (int n = 0; n <= n_max_path; ++n) {
      const BigInt sum = pw.rows[static_cast<size_t>(n)].total();
      const BigInt expected = binomial(n, n / 2);
      if (sum != expected) {
        found = Mismatch{n, -1, to_string(sum), to_string(expected)};
        break;
      }
    }
    record("path-row-sums", n_max_path, found, "");
  }

  return rep;
}

}  // namespace invfp
