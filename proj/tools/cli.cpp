#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qseries/closed_form.hpp"
#include "qseries/identities.hpp"
#include "qseries/json_io.hpp"
#include "qseries/multisection.hpp"
#include "qseries/qfunctions.hpp"

namespace qseries::cli {

namespace {

constexpr std::int64_t kDefaultOrder = 200;

struct Config {
  std::string command;
  std::string n_csv;
  std::vector<std::int64_t> primes;
  std::int64_t order = kDefaultOrder;
  std::optional<std::int64_t> residue;
  std::string filter;
  std::string format = "text";
  std::string out_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_primes(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--n expects a comma-separated list of integers, got '" + csv + "'");
    }
    if (used != item.size()) throw UsageError("--n: bad entry '" + item + "'");
    prime_context(v);  // NotPrime / UnsupportedPrime
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--n must name at least one prime");
  return out;
}

std::string theta_label(const ThetaPair& p) {
  return "f(-q^" + std::to_string(p.first) + ",-q^" + std::to_string(p.second) + ")";
}

std::string closed_form_text(const JClosedForm& f) {
  std::string s = f.sign < 0 ? "-" : "";
  if (f.x > 0) s += f.x == 1 ? "q" : "q^" + std::to_string(f.x);
  if (f.theta_num) {
    if (f.x > 0) s += " ";
    s += theta_label(*f.theta_num) + " / " + theta_label(*f.theta_den);
  } else if (f.x == 0) {
    s += "1";
  }
  return s;
}

json expand_json(const PrimeContext& ctx, const Config& c) {
  const auto js = j_oracle_all(ctx, c.order);
  json list = json::array();
  for (std::int64_t r = 0; r < ctx.n; ++r) {
    const auto& j = js[static_cast<std::size_t>(r)];
    if (c.residue ? *c.residue != r : j.is_zero()) continue;
    list.push_back({{"r", r}, {"series", to_json(j)}});
  }
  return {{"N", ctx.n}, {"order", c.order}, {"J", std::move(list)}};
}

void cmd_expand(const Config& c, std::ostream& out) {
  for (auto n : c.primes) {
    if (c.residue && (*c.residue < 0 || *c.residue >= n)) throw UsageError("--residue must lie in [0, N-1]");
  }
  json all = json::array();
  for (auto n : c.primes) {
    const auto ctx = prime_context(n);
    json doc = expand_json(ctx, c);
    if (c.format == "json") {
      all.push_back(std::move(doc));
      continue;
    }
    out << "(q^(1/" << n << "))_inf / (q^" << n << ")_inf, order " << c.order << "\n";
    for (const auto& entry : doc["J"]) {
      out << "  J_" << entry["r"].get<std::int64_t>() << " = "
          << to_string(series_from_json(entry["series"]), 12) << "\n";
    }
  }
  if (c.format == "json") out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
}

void cmd_table(const Config& c, std::ostream& out) {
  json all = json::array();
  for (auto n : c.primes) {
    const auto table = closed_form_table(prime_context(n));
    if (c.format == "json") {
      all.push_back(to_json(table));
      continue;
    }
    out << "N = " << n << "\n";
    out << std::setw(5) << "A" << std::setw(5) << "p" << std::setw(6) << "sign" << std::setw(5) << "X"
        << "  J_p\n";
    for (const auto& f : table) {
      out << std::setw(5) << f.a_value << std::setw(5) << f.p << std::setw(6) << f.sign << std::setw(5) << f.x
          << "  " << closed_form_text(f) << "\n";
    }
  }
  if (c.format == "json") out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
}

int cmd_verify(const Config& c, std::ostream& out) {
  const auto summary = run_suite(c.filter, c.order, c.primes);
  if (c.format == "json") {
    json reports = json::array();
    for (const auto& r : summary.reports) reports.push_back(to_json(r));
    out << json{{"reports", reports}, {"passed", summary.passed}, {"total", summary.total}}.dump(2) << "\n";
  } else {
    for (const auto& r : summary.reports) {
      out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(18) << r.id << std::right
          << " trunc=" << r.trunc << " comparisons=" << r.comparisons;
      if (!r.pass) {
        out << " first_bad_exponent=" << r.first_bad_exponent.value_or(-1) << " [" << r.failed_label << "]";
      }
      out << "\n";
    }
    out << summary.passed << "/" << summary.total << " checks passed\n";
  }
  return summary.ok() ? kExitOk : kExitFail;
}

void cmd_theta(const Config& c, std::ostream& out) {
  json all = json::array();
  for (auto n : c.primes) {
    json list = json::array();
    for (std::int64_t a = 1; 2 * a < n; ++a) {
      const ThetaPair pair{a, n - a};
      list.push_back({{"args", json::array({pair.first, pair.second})},
                      {"series", to_json(theta_sum({-1, {pair.first}}, {-1, {pair.second}}, c.order))}});
    }
    if (c.format == "json") {
      all.push_back({{"N", n}, {"theta", std::move(list)}});
      continue;
    }
    out << "N = " << n << "\n";
    for (const auto& e : list) {
      const ThetaPair pair{e["args"][0].get<std::int64_t>(), e["args"][1].get<std::int64_t>()};
      out << "  " << theta_label(pair) << " = " << to_string(series_from_json(e["series"]), 12) << "\n";
    }
  }
  if (c.format == "json") out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
}

void cmd_partitions(const Config& c, std::ostream& out) {
  ScaledSeries series;
  std::string label = "sum p(n) q^n";
  if (c.n_csv.empty()) {
    series = partition_series(c.order);
  } else {
    const auto n = c.primes.front();
    const auto r = c.residue.value_or(0);
    if (r < 0 || r >= n) throw UsageError("--residue must lie in [0, N-1]");
    series = multisect(substitute_power(partition_series(n * c.order), {1, n}), n, r);
    label = "sum p(" + std::to_string(n) + "n+" + std::to_string(r) + ") q^n";
  }
  if (c.format == "json") {
    out << to_json(series).dump(2) << "\n";
  } else {
    out << label << " = " << to_string(series, 16) << "\n";
  }
}

int dispatch(Config& c, std::ostream& out) {
  if (c.order < 1) throw UsageError("--order must be at least 1");
  if (c.format != "json" && c.format != "text") throw UsageError("--format must be json or text");
  if (c.command == "verify" || c.command == "partitions") {
    if (!c.n_csv.empty()) c.primes = parse_primes(c.n_csv);
    if (c.primes.empty()) c.primes = kDefaultPrimes;
  } else {
    if (c.n_csv.empty()) throw UsageError("--n is required for " + c.command);
    c.primes = parse_primes(c.n_csv);
  }
  if (c.command == "expand") cmd_expand(c, out);
  if (c.command == "table") cmd_table(c, out);
  if (c.command == "theta") cmd_theta(c, out);
  if (c.command == "partitions") cmd_partitions(c, out);
  if (c.command == "verify") return cmd_verify(c, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series expansions of (q^(1/N))_inf and identity verification", "qseries"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--n", c.n_csv, "prime N > 3, or a comma-separated list");
    sub->add_option("--order", c.order, "truncation order T (exponents below q^T are exact)");
    sub->add_option("--format", c.format, "json or text");
    sub->add_option("--out", c.out_path, "write output to this file instead of stdout");
  };
  auto* expand = app.add_subcommand("expand", "nonzero J_r series from multisection");
  add_common(expand);
  expand->add_option("--residue", c.residue, "only this residue r");
  auto* table = app.add_subcommand("table", "closed-form descriptors of each nonzero J_p");
  add_common(table);
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  add_common(verify);
  verify->add_option("--filter", c.filter, "only checks whose id starts with this prefix");
  auto* theta = app.add_subcommand("theta", "theta functions f(-q^A, -q^(N-A)) for A = 1..(N-1)/2");
  add_common(theta);
  auto* partitions = app.add_subcommand("partitions", "partition numbers, optionally sum p(Nn+r) q^n");
  add_common(partitions);
  partitions->add_option("--residue", c.residue, "residue r for sum p(Nn+r) q^n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) {
      err << "error: cannot open " << c.out_path << "\n";
      return kExitUsage;
    }
    sink = &file;
  }
  try {
    return dispatch(c, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const NotPrime& e) {
    err << "error: NotPrime: " << e.what() << "\n";
  } catch (const UnsupportedPrime& e) {
    err << "error: UnsupportedPrime: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace qseries::cli
