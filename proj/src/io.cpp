#include "invfp/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace invfp {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) throw std::logic_error("format_double: to_chars failed");
  return std::string(buf, res.ptr);
}

std::string weights_csv(const std::vector<WeightPolynomial>& rows) {
  std::string out = "n,j,count\n";
  for (const WeightPolynomial& w : rows) {
    for (int j = 0; j <= w.n; ++j) {
      const BigInt& c = w.coeffs[static_cast<size_t>(j)];
      if (c == 0) continue;
      out += std::to_string(w.n);
      out += ',';
      out += std::to_string(j);
      out += ',';
      out += to_string(c);
      out += '\n';
    }
  }
  return out;
}

OrderedJson weights_json(const std::vector<WeightPolynomial>& rows) {
  OrderedJson arr = OrderedJson::array();
  for (const WeightPolynomial& w : rows) {
    for (int j = 0; j <= w.n; ++j) {
      const BigInt& c = w.coeffs[static_cast<size_t>(j)];
      if (c == 0) continue;
      OrderedJson row;
      row["n"] = w.n;
      row["j"] = j;
      row["count"] = to_string(c);
      arr.push_back(std::move(row));
    }
  }
  return arr;
}

std::string distribution_csv(const FpDistribution& d) {
  std::string out = "j,probability\n";
  if (d.mode == FpDistribution::Mode::Exact) {
    for (const auto& [j, p] : d.probs_exact) {
      out += std::to_string(j);
      out += ',';
      out += to_string(p);
      out += '\n';
    }
  } else {
    for (const auto& [j, p] : d.probs) {
      out += std::to_string(j);
      out += ',';
      out += format_double(p);
      out += '\n';
    }
  }
  return out;
}

OrderedJson distribution_json(const FpDistribution& d) {
  OrderedJson obj;
  obj["n"] = d.n;
  if (d.mode == FpDistribution::Mode::Exact) {
    obj["mode"] = "exact";
    obj["q"] = to_string(d.q_exact);
    OrderedJson probs;
    for (const auto& [j, p] : d.probs_exact) probs[std::to_string(j)] = to_string(p);
    obj["probs"] = std::move(probs);
  } else {
    obj["mode"] = "floating";
    obj["q"] = d.q;
    OrderedJson probs;
    for (const auto& [j, p] : d.probs) probs[std::to_string(j)] = p;
    obj["probs"] = std::move(probs);
  }
  return obj;
}

std::string weighted_sample_csv(const WeightedSample& s) {
  std::string out = "# k=" + std::to_string(s.k) + " q=" + format_double(s.q) +
                    " seed=" + std::to_string(s.seed) + " ess=" + format_double(s.ess) + "\n";
  out += "value,weight\n";
  for (size_t i = 0; i < s.values.size(); ++i) {
    out += format_double(s.values[i]);
    out += ',';
    out += format_double(s.weights[i]);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace invfp
