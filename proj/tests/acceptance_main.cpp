// Acceptance gate: each criterion is one invocation (argv[1] in 1..10),
// printing the measured quantities next to the pinned thresholds and
// exiting 0 on pass, 1 on fail.  Thresholds live here on purpose; the
// library reports raw distances and never knows about this gate.

#include "invfp/bigint.hpp"
#include "invfp/distance.hpp"
#include "invfp/distribution.hpp"
#include "invfp/gf.hpp"
#include "invfp/goe.hpp"
#include "invfp/involutions.hpp"
#include "invfp/io.hpp"
#include "invfp/limits.hpp"
#include "invfp/shapes.hpp"
#include "invfp/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace invfp;

namespace {

std::string fmt(double v) { return format_double(v); }

double row_distance(const ExperimentReport& rep, int n, const std::string& label = "") {
  for (const ReportRow& r : rep.rows) {
    if (r.n == n && (label.empty() || r.label == label)) return r.distance;
  }
  return -1.0;
}

double adj(const ExperimentReport& rep, const std::string& key) {
  const auto it = rep.adjudication.find(key);
  return it == rep.adjudication.end() ? -1.0 : it->second;
}

// 1: the independent engines agree exactly on their overlap.
bool criterion1(std::string& detail) {
  const ExperimentReport rep = cross_engine_check(60, 60);
  std::ostringstream os;
  os << "cross-engine checks: " << rep.rows.size() << " comparisons, "
     << (rep.passed ? "all exact" : "MISMATCH");
  for (const std::string& w : rep.warnings) os << "; " << w;
  detail = os.str();
  return rep.passed && !rep.vacuous;
}

// 2: closed-form counting identities for both classes at q=1.
bool criterion2(std::string& detail) {
  bool ok = true;
  const SeriesTable t231 = expand_class231(12);
  BigInt pow2 = 1;
  for (int n = 1; n <= 12; ++n) {
    if (t231.rows[static_cast<size_t>(n)].total() != pow2) ok = false;
    pow2 *= 2;
  }
  const SeriesTable t321 = expand_class321(30);
  for (int n = 0; n <= 30; ++n) {
    if (t321.rows[static_cast<size_t>(n)].total() != binomial(n, n / 2)) ok = false;
  }
  detail = ok ? "2^(n-1) totals (n<=12) and central binomial totals (n<=30) all exact"
              : "counting identity violated";
  return ok;
}

// 3: subcritical bias, TV against the parity negative binomial.
bool criterion3(std::string& detail) {
  const ExperimentReport rep = run_t3(BigRat(1, 2), {25, 50, 100, 101});
  const double d25 = row_distance(rep, 25);
  const double d50 = row_distance(rep, 50);
  const double d100 = row_distance(rep, 100);
  const double d101 = row_distance(rep, 101);
  const bool decreasing = d25 > d50 && d50 > d100;
  const bool ok = decreasing && d100 < 0.02 && d101 < 0.02;
  detail = "tv(25)=" + fmt(d25) + " tv(50)=" + fmt(d50) + " tv(100,even)=" + fmt(d100) +
           " tv(101,odd)=" + fmt(d101) + " need <0.02 at 100/101 and decreasing";
  return ok;
}

// 4: critical bias, KS of fp/sqrt(n) against Rayleigh(1).
bool criterion4(std::string& detail) {
  const ExperimentReport rep = run_t3(BigRat(1), {500, 1000, 2000});
  const double d500 = row_distance(rep, 500);
  const double d1000 = row_distance(rep, 1000);
  const double d2000 = row_distance(rep, 2000);
  const bool decreasing = d500 > d1000 && d1000 > d2000;
  const bool ok = decreasing && d2000 < 0.03;
  detail = "ks(500)=" + fmt(d500) + " ks(1000)=" + fmt(d1000) + " ks(2000)=" + fmt(d2000) +
           " need <0.03 at 2000 and decreasing";
  return ok;
}

// 5: supercritical bias, moment match plus variance-candidate adjudication.
bool criterion5(std::string& detail) {
  bool ok = true;
  std::ostringstream os;
  for (const BigRat& q : {BigRat(3, 2), BigRat(2), BigRat(3)}) {
    const ExperimentReport rep = run_t3(q, {500});
    const double mean_rel = adj(rep, "mean_rel");
    const double rel_paper = adj(rep, "var_rel_paper");
    const double rel_rederived = adj(rep, "var_rel_rederived");
    const int within5 = (rel_paper < 0.05 ? 1 : 0) + (rel_rederived < 0.05 ? 1 : 0);
    const bool unique = within5 == 1 && (rel_paper < 0.05 ? rel_rederived : rel_paper) > 0.20;
    const double winner_ks = rep.winner.empty() ? -1.0 : row_distance(rep, 500, rep.winner);
    const bool cell = mean_rel < 0.01 && unique && !rep.winner.empty() && winner_ks < 0.05;
    ok = ok && cell;
    os << "q=" << to_string(q) << ": mean_rel=" << fmt(mean_rel) << " var_rel{paper="
       << fmt(rel_paper) << ",rederived=" << fmt(rel_rederived) << "} winner="
       << (rep.winner.empty() ? "(none)" : rep.winner) << " ks=" << fmt(winner_ks) << "; ";
  }
  detail = os.str() + "need mean_rel<0.01, unique winner (<5% vs >20%), winner ks<0.05";
  return ok;
}

// 6: the other class, normal limit with closed-form slopes.
bool criterion6(std::string& detail) {
  bool ok = true;
  std::ostringstream os;
  for (const BigRat& q : {BigRat(1), BigRat(2)}) {
    const ExperimentReport rep = run_t4(q, {500});
    const double mean_rel = adj(rep, "mean_rel");
    const double var_rel = adj(rep, "var_rel");
    const double ks = row_distance(rep, 500);
    const bool cell = mean_rel < 0.01 && var_rel < 0.03 && ks < 0.05;
    ok = ok && cell;
    os << "q=" << to_string(q) << ": mean_rel=" << fmt(mean_rel) << " var_rel=" << fmt(var_rel)
       << " ks=" << fmt(ks) << "; ";
  }
  detail = os.str() + "need mean_rel<0.01, var_rel<0.03, ks<0.05";
  return ok;
}

// 7: bounded-column classes against the tilted binomial parity law.
bool criterion7(std::string& detail) {
  bool ok = true;
  double max_tv = 0.0;
  double min_mass_gap = 1e18;
  for (int k : {2, 3}) {
    for (const BigRat& q : {BigRat(1, 2), BigRat(1), BigRat(2)}) {
      for (Parity parity : {Parity::Even, Parity::Odd}) {
        const int n = parity == Parity::Even ? 40 : 41;
        const ExperimentReport rep = run_t1(k, q, parity, {n});
        const double tv = row_distance(rep, n);
        const double mass =
            adj(rep, std::string("stated_normalizer_mass_") + parity_name(parity));
        if (tv < 0.0 || tv >= 0.02) ok = false;
        if (tv > max_tv) max_tv = tv;
        const double gap = std::abs(mass - 1.0);
        if (gap < min_mass_gap) min_mass_gap = gap;
      }
    }
  }
  // the stated closed-form normalizer must be visibly wrong in every cell,
  // recorded as adjudication rather than failure
  if (min_mass_gap <= 1e-9) ok = false;
  detail = "12 cells (k in {2,3}, q in {1/2,1,2}, both parities, n=40/41): max tv=" +
           fmt(max_tv) + " (need <0.02), min |stated normalizer mass - 1|=" + fmt(min_mass_gap);
  return ok;
}

// 8: the weighted eigenvalue sampler against its analytic k=2 anchors.
bool criterion8(std::string& detail) {
  const WeightedSample flat = xk_weighted_sample(2, 1.0, 1000000, 7);
  const double ks_flat = ks_weighted_vs_cdf(flat, [](double x) { return s2_cdf(x); });
  const TiltedS2Cdf tilted(0.5);
  const WeightedSample half = xk_weighted_sample(2, 0.5, 1000000, 7);
  const double ks_half = ks_weighted_vs_cdf(half, [&](double x) { return tilted.cdf(x); });
  const bool ok = ks_flat < 0.01 && ks_half < 0.02;
  detail = "10^6 draws: ks(q=1 vs closed form)=" + fmt(ks_flat) + " (need <0.01), ks(q=1/2 vs quadrature)=" +
           fmt(ks_half) + " (need <0.02), ess(q=1/2)=" + fmt(half.ess);
  return ok;
}

// 9: finite-n rescaled laws against the k=2 analytic and k=3 sampled limits.
bool criterion9(std::string& detail) {
  const ExperimentReport k2q1 = run_t2(2, 1.0, {400}, 0, 0);
  const ExperimentReport k2qh = run_t2(2, 0.5, {400}, 0, 0);
  const ExperimentReport k3 = run_t2(3, 1.0, {120}, 1000000, 7);
  const double d1 = row_distance(k2q1, 400);
  const double dh = row_distance(k2qh, 400);
  const double d3 = row_distance(k3, 120);
  const bool ok = d1 < 0.08 && dh < 0.08 && d3 < 0.10;
  detail = "ks(k=2,q=1,n=400)=" + fmt(d1) + " ks(k=2,q=1/2,n=400)=" + fmt(dh) +
           " (need <0.08), ks(k=3,q=1,n=120)=" + fmt(d3) + " (need <0.1, ess=" +
           fmt(adj(k3, "ess")) + ")";
  return ok;
}

// 10: byte-identical reports on re-execution, across all four runners.
bool criterion10(std::string& detail) {
  const auto dump = [](const ExperimentReport& rep) { return report_json(rep).dump(2); };
  bool ok = true;
  std::ostringstream os;

  const std::string t1a = dump(run_t1(2, BigRat(1), std::nullopt, {20, 40}));
  const std::string t1b = dump(run_t1(2, BigRat(1), std::nullopt, {20, 40}));
  ok = ok && t1a == t1b;
  os << "t1 " << (t1a == t1b ? "identical" : "DIFFERS");

  const std::string t2a = dump(run_t2(3, 0.5, {30}, 20000, 42));
  const std::string t2b = dump(run_t2(3, 0.5, {30}, 20000, 42));
  ok = ok && t2a == t2b;
  os << ", t2 " << (t2a == t2b ? "identical" : "DIFFERS");

  const std::string t3a = dump(run_t3(BigRat(1, 2), {25, 50}));
  const std::string t3b = dump(run_t3(BigRat(1, 2), {25, 50}));
  ok = ok && t3a == t3b;
  os << ", t3 " << (t3a == t3b ? "identical" : "DIFFERS");

  const std::string t4a = dump(run_t4(BigRat(1), {50, 100}));
  const std::string t4b = dump(run_t4(BigRat(1), {50, 100}));
  ok = ok && t4a == t4b;
  os << ", t4 " << (t4a == t4b ? "identical" : "DIFFERS");

  detail = os.str();
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: invfp_acceptance <criterion 1..10>\n";
    return 2;
  }
  const int idx = std::atoi(argv[1]);
  std::string detail;
  bool ok = false;
  switch (idx) {
    case 1: ok = criterion1(detail); break;
    case 2: ok = criterion2(detail); break;
    case 3: ok = criterion3(detail); break;
    case 4: ok = criterion4(detail); break;
    case 5: ok = criterion5(detail); break;
    case 6: ok = criterion6(detail); break;
    case 7: ok = criterion7(detail); break;
    case 8: ok = criterion8(detail); break;
    case 9: ok = criterion9(detail); break;
    case 10: ok = criterion10(detail); break;
    default:
      std::cerr << "usage: invfp_acceptance <criterion 1..10>\n";
      return 2;
  }
  std::cout << "criterion " << idx << ": " << (ok ? "PASS" : "FAIL") << " | " << detail << "\n";
  return ok ? 0 : 1;
}
