#pragma once

#include "invfp/bigint.hpp"
#include "invfp/common.hpp"
#include "invfp/io.hpp"
#include "invfp/weights.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace invfp {

inline constexpr const char* kVersion = "1.0.0";

// Pass thresholds for the theorem runners.  These are artifact choices, not
// claims; every report carries the raw distances so they can be revisited.
namespace thresholds {
inline constexpr double kT1Tv = 0.02;
inline constexpr double kT3NbTv = 0.02;
inline constexpr double kT3RayleighKs = 0.03;
inline constexpr double kT3MeanRel = 0.01;
inline constexpr double kT3VarWinRel = 0.05;
inline constexpr double kT3VarLoseRel = 0.20;
inline constexpr double kT3NormalKs = 0.05;
inline constexpr double kT4MeanRel = 0.01;
inline constexpr double kT4VarRel = 0.03;
inline constexpr double kT4NormalKs = 0.05;
inline constexpr double kT2K2Ks = 0.08;
inline constexpr double kT2K3Ks = 0.10;
// Distances over doubling n must not grow by more than this.
inline constexpr double kTrendNoiseExact = 0.005;
inline constexpr double kTrendNoiseMc = 0.01;
}  // namespace thresholds

struct ExperimentSpec {
  std::string theorem;  // t1 | t2 | t3 | t4 | selftest
  std::optional<SigmaClass> sigma_class;
  std::optional<int> k;
  std::optional<Direction> direction;
  std::string q_text;  // exact echo of the bias as given
  double q = 1.0;
  std::optional<Parity> parity;  // t1; unset = use each n's own parity
  std::vector<int> n_list;
  std::string engine;
  long long samples = 0;
  std::uint64_t seed = 0;
};

struct ReportRow {
  int n = 0;
  std::string label;  // parity, variance candidate, or check name
  double distance = 0.0;
  std::string distance_type;  // "tv" | "ks" | "equal"
  double mean = 0.0;
  double variance = 0.0;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<ReportRow> rows;
  std::map<std::string, double> adjudication;  // label -> relative error etc.
  std::string winner;                          // adjudicated candidate, if any
  std::vector<std::string> warnings;
  bool vacuous = false;
  bool passed = false;
};

OrderedJson report_json(const ExperimentReport& r);
std::string report_csv(const ExperimentReport& r);
// reports/{theorem}_{pattern-or-k}_{q}_{timestamp}.json
std::string report_filename(const ExperimentSpec& spec, long long timestamp);

// TV of the exact biased law of fp under the increasing pattern against the
// parity-class limit pmf q^i C(k,i), per matching-parity n.  Also quantifies
// how far the stated closed-form normalizer is from normalizing.
ExperimentReport run_t1(int k, const BigRat& q, std::optional<Parity> parity,
                        const std::vector<int>& n_list);

// KS of the rescaled biased law under the decreasing pattern at bias
// q^sqrt(k/n) against the tilted alternating-eigenvalue law: the analytic
// k=2 cdf, or a weighted GOE Monte Carlo sample for k >= 3.
ExperimentReport run_t2(int k, double q, const std::vector<int>& n_list, long long samples,
                        std::uint64_t seed);

// Class321 phase transition: TV vs the parity negative binomial (q < 1), KS
// of fp/sqrt(n) vs Rayleigh(1) (q = 1), or KS vs the standard normal under
// both variance candidates plus moment adjudication (q > 1).
ExperimentReport run_t3(const BigRat& q, const std::vector<int>& n_list);

// Class231: exact moment slopes against q/sqrt(q^2+8) and 8q/(8+q^2)^(3/2),
// and KS of the standardized law vs the standard normal.
ExperimentReport run_t4(const BigRat& q, const std::vector<int>& n_list);

struct Mismatch {
  int n = 0;
  int j = 0;
  std::string lhs;
  std::string rhs;
};

// First differing coefficient between two row sets (by n, then j).
std::optional<Mismatch> first_mismatch(const std::vector<WeightPolynomial>& a,
                                       const std::vector<WeightPolynomial>& b);

// Certifies the engine equivalences: gf vs brute force (n <= 10, all five
// length-3 patterns), path vs gf (n <= n_max_poly), shape vs brute force
// (n <= 9, k <= 4, both directions), and the path row-sum identity
// sum_j b(n,j) = C(n, floor(n/2)) for n <= n_max_path.  inject_path_fault
// perturbs b(2,0) first; tests use it to prove a mismatch is detected.
ExperimentReport cross_engine_check(int n_max_poly, int n_max_path, bool inject_path_fault = false);

}  // namespace invfp
