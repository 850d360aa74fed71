#include "invfp/bigint.hpp"
#include "invfp/distribution.hpp"
#include "invfp/gf.hpp"
#include "invfp/involutions.hpp"
#include "invfp/io.hpp"
#include "invfp/permutation.hpp"
#include "invfp/shapes.hpp"
#include "invfp/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace invfp;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  const std::filesystem::path parent = std::filesystem::path(out_path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  write_text_file(out_path, content);
  std::cerr << "wrote " << out_path << "\n";
}

std::string join_image(std::span<const int> image) {
  std::string s;
  for (size_t i = 0; i < image.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(image[i]);
  }
  return s;
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("--n-list: empty entry");
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("--n-list: bad integer '" + item + "'");
    }
    if (pos != item.size() || v < 0) throw UsageError("--n-list: bad entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--n-list: no entries");
  return out;
}

BigRat parse_positive_q(const std::string& text) {
  BigRat q;
  try {
    q = parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--q: ") + e.what());
  }
  if (q <= 0) throw UsageError("--q must be positive");
  return q;
}

int cmd_enumerate(int n, const std::string& pattern_text, const std::string& format,
                  const std::string& out_path) {
  if (n < 0 || n > kMaxBruteForceN) {
    throw UsageError("enumerate: --n must be in [0, " + std::to_string(kMaxBruteForceN) + "]");
  }
  const std::optional<Pattern> pat = Pattern::parse(pattern_text);
  if (!pat) throw UsageError("enumerate: unrecognized pattern '" + pattern_text + "'");

  std::vector<std::pair<std::string, int>> rows;
  enumerate_involutions(n, [&](std::span<const int> image) {
    if (avoids(image, pat->perm().image())) {
      rows.emplace_back(join_image(image), count_fixed_points(image));
    }
  });

  if (format == "csv") {
    std::string text = "involution,fixed_points\n";
    for (const auto& [image, fp] : rows) text += image + ',' + std::to_string(fp) + '\n';
    text += "count=" + std::to_string(rows.size()) + '\n';
    emit(out_path, text);
  } else {
    OrderedJson j;
    j["n"] = n;
    j["pattern"] = pattern_text;
    j["count"] = rows.size();
    OrderedJson list = OrderedJson::array();
    for (const auto& [image, fp] : rows) {
      OrderedJson row;
      row["image"] = image;
      row["fixed_points"] = fp;
      list.push_back(std::move(row));
    }
    j["involutions"] = std::move(list);
    emit(out_path, j.dump(2) + "\n");
  }
  return 0;
}

// Shared by weights/dist: compute one weight polynomial with the requested
// engine, enforcing the per-engine n guards and class compatibility.
WeightPolynomial resolve_weights(int n, const std::string& pattern_class, int k,
                                 std::string engine) {
  if (n < 0) throw UsageError("--n must be nonnegative");

  const bool monotone = pattern_class == "inc" || pattern_class == "dec";
  if (monotone) {
    if (k < 1) throw UsageError("--k >= 1 is required for inc/dec pattern classes");
    if (engine == "auto") engine = "shape";
    const Direction dir = pattern_class == "inc" ? Direction::Increasing : Direction::Decreasing;
    if (engine == "shape") {
      if (n > monotone_weights_max_n(k)) {
        throw UsageError("shape engine: n exceeds " + std::to_string(monotone_weights_max_n(k)) +
                         " for k=" + std::to_string(k));
      }
      return monotone_weights(n, k, dir);
    }
    if (engine == "bruteforce") {
      if (n > kMaxBruteForceN) throw UsageError("bruteforce engine: n exceeds 12");
      const Pattern pat =
          dir == Direction::Increasing ? Pattern::increasing(k + 1) : Pattern::decreasing(k + 1);
      return brute_force_weights(n, pat);
    }
    throw UsageError("engine '" + engine + "' is incompatible with pattern class '" +
                     pattern_class + "'");
  }

  if (pattern_class != "c321" && pattern_class != "c231") {
    throw UsageError("--pattern-class must be one of c321, c231, inc, dec");
  }
  const SigmaClass cls = pattern_class == "c321" ? SigmaClass::Class321 : SigmaClass::Class231;
  const int poly_cap = cls == SigmaClass::Class321 ? kMaxPolyRows321 : kMaxPolyRows231;
  if (engine == "auto") {
    engine = (cls == SigmaClass::Class321 && n > poly_cap) ? "path" : "gf";
  }
  if (engine == "gf") {
    if (n > poly_cap) {
      throw UsageError("gf engine: n exceeds " + std::to_string(poly_cap) + " for " +
                       pattern_class);
    }
    return expand_rows(cls, n).rows[static_cast<size_t>(n)];
  }
  if (engine == "path") {
    if (cls != SigmaClass::Class321) throw UsageError("path engine covers the c321 class only");
    if (n > kMaxPathRow) throw UsageError("path engine: n exceeds " + std::to_string(kMaxPathRow));
    return path_row(n);
  }
  if (engine == "bruteforce") {
    if (n > kMaxBruteForceN) throw UsageError("bruteforce engine: n exceeds 12");
    const Pattern pat = *Pattern::parse(cls == SigmaClass::Class321 ? "321" : "231");
    return brute_force_weights(n, pat);
  }
  throw UsageError("engine '" + engine + "' is incompatible with pattern class '" + pattern_class +
                   "'");
}

int cmd_weights(int n, const std::string& pattern_class, int k, const std::string& engine,
                const std::string& format, const std::string& out_path) {
  const WeightPolynomial w = resolve_weights(n, pattern_class, k, engine);
  const std::vector<WeightPolynomial> rows{w};
  if (format == "csv") {
    emit(out_path, weights_csv(rows));
  } else {
    emit(out_path, weights_json(rows).dump(2) + "\n");
  }
  return 0;
}

int cmd_dist(int n, const std::string& pattern_class, int k, const std::string& engine,
             const std::string& q_text, const std::string& format, const std::string& out_path) {
  const BigRat q = parse_positive_q(q_text);
  const WeightPolynomial w = resolve_weights(n, pattern_class, k, engine);
  const FpDistribution d = biased_distribution(w, q);
  if (format == "csv") {
    emit(out_path, distribution_csv(d));
  } else {
    emit(out_path, distribution_json(d).dump(2) + "\n");
  }
  return 0;
}

int cmd_verify(const std::string& theorem, const std::string& q_text, int k,
               const std::string& parity_text, const std::string& n_list_text, long long samples,
               std::uint64_t seed, const std::string& format, const std::string& out_path) {
  const std::vector<int> n_list = parse_n_list(n_list_text);
  const BigRat q = parse_positive_q(q_text);
  std::optional<Parity> parity;
  if (parity_text == "even") parity = Parity::Even;
  if (parity_text == "odd") parity = Parity::Odd;
  if (samples < 1) throw UsageError("--samples must be >= 1");

  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep;
  if (theorem == "t1") {
    rep = run_t1(k, q, parity, n_list);
  } else if (theorem == "t2") {
    rep = run_t2(k, to_double(q), n_list, samples, seed);
  } else if (theorem == "t3") {
    rep = run_t3(q, n_list);
  } else if (theorem == "t4") {
    rep = run_t4(q, n_list);
  } else {
    throw UsageError("--theorem must be one of t1, t2, t3, t4");
  }
  const auto t1 = std::chrono::steady_clock::now();
  const double secs = std::chrono::duration<double>(t1 - t0).count();
  std::cerr << "wall_clock_seconds=" << format_double(secs) << "\n";

  std::string path = out_path;
  if (path.empty()) {
    path = report_filename(rep.spec, static_cast<long long>(std::time(nullptr)));
  }
  const std::string content =
      format == "csv" ? report_csv(rep) : report_json(rep).dump(2) + "\n";
  emit(path, content);

  std::cout << theorem << ": " << (rep.passed ? "passed" : "FAILED");
  if (!rep.winner.empty()) std::cout << " winner=" << rep.winner;
  std::cout << "\n";
  return rep.passed ? 0 : 1;
}

int cmd_selftest(int n_max_poly, int n_max_path, bool inject_fault, const std::string& format,
                 const std::string& out_path) {
  const ExperimentReport rep = cross_engine_check(n_max_poly, n_max_path, inject_fault);
  for (const ReportRow& row : rep.rows) {
    std::cout << row.label << " (n <= " << row.n << "): "
              << (row.distance == 0.0 ? "ok" : "MISMATCH") << "\n";
  }
  for (const std::string& w : rep.warnings) std::cout << "warning: " << w << "\n";
  if (rep.vacuous) std::cout << "vacuous\n";
  std::cout << (rep.passed ? "selftest passed" : "selftest FAILED") << "\n";
  if (!out_path.empty()) {
    emit(out_path, format == "csv" ? report_csv(rep) : report_json(rep).dump(2) + "\n");
  }
  return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed-point statistics of pattern-avoiding involutions"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 12345;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "output file (default: stdout; verify: reports/...)");
  app.add_option("--seed", seed, "RNG seed for sampling runners");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list avoiding involutions with fp");
  int en_n = 0;
  std::string en_pattern;
  enumerate->add_option("--n", en_n, "length (<= 12)")->required();
  enumerate->add_option("--pattern", en_pattern, "pattern, e.g. 321, 2413, inc:4, dec:3")
      ->required();
  enumerate->fallthrough();

  CLI::App* weights = app.add_subcommand("weights", "fixed-point weight polynomial of one n");
  int w_n = 0, w_k = 0;
  std::string w_class, w_engine = "auto";
  weights->add_option("--n", w_n, "length")->required();
  weights->add_option("--pattern-class", w_class, "c321 | c231 | inc | dec")->required();
  weights->add_option("--k", w_k, "monotone pattern bound (inc/dec)");
  weights->add_option("--engine", w_engine, "auto | gf | path | shape | bruteforce")
      ->check(CLI::IsMember({"auto", "gf", "path", "shape", "bruteforce"}));
  weights->fallthrough();

  CLI::App* dist = app.add_subcommand("dist", "biased fixed-point distribution of one n");
  int d_n = 0, d_k = 0;
  std::string d_class, d_engine = "auto", d_q = "1";
  dist->add_option("--n", d_n, "length")->required();
  dist->add_option("--pattern-class", d_class, "c321 | c231 | inc | dec")->required();
  dist->add_option("--k", d_k, "monotone pattern bound (inc/dec)");
  dist->add_option("--engine", d_engine, "auto | gf | path | shape | bruteforce")
      ->check(CLI::IsMember({"auto", "gf", "path", "shape", "bruteforce"}));
  dist->add_option("--q", d_q, "bias, rational like 1/2 or decimal like 0.5")->required();
  dist->fallthrough();

  CLI::App* verify = app.add_subcommand("verify", "run a limit-theorem verification sweep");
  std::string v_theorem, v_q = "1", v_parity = "both", v_nlist;
  int v_k = 2;
  long long v_samples = 200000;
  verify->add_option("--theorem", v_theorem, "t1 | t2 | t3 | t4")->required();
  verify->add_option("--q", v_q, "bias (t2 requires 0 < q <= 1)");
  verify->add_option("--k", v_k, "monotone pattern bound (t1/t2)");
  verify->add_option("--parity", v_parity, "even | odd | both (t1)")
      ->check(CLI::IsMember({"even", "odd", "both"}));
  verify->add_option("--n-list", v_nlist, "comma-separated lengths")->required();
  verify->add_option("--samples", v_samples, "Monte Carlo draws (t2, k >= 3)");
  verify->fallthrough();

  CLI::App* selftest = app.add_subcommand("selftest", "cross-engine equivalence checks");
  int s_poly = 60, s_path = 200;
  bool s_inject = false;
  selftest->add_option("--n-max-poly", s_poly, "path-vs-gf bound (<= 60)");
  selftest->add_option("--n-max-path", s_path, "row-sum identity bound (<= 1000)");
  selftest->add_flag("--inject-fault", s_inject, "perturb the path DP to prove detection");
  selftest->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(enumerate)) {
      return cmd_enumerate(en_n, en_pattern, format, out_path);
    }
    if (app.got_subcommand(weights)) {
      return cmd_weights(w_n, w_class, w_k, w_engine, format, out_path);
    }
    if (app.got_subcommand(dist)) {
      return cmd_dist(d_n, d_class, d_k, d_engine, d_q, format, out_path);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(v_theorem, v_q, v_k, v_parity, v_nlist, v_samples, seed, format, out_path);
    }
    if (app.got_subcommand(selftest)) {
      return cmd_selftest(s_poly, s_path, s_inject, format, out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
