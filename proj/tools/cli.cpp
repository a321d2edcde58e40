#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "cubeperm/asymptotics.hpp"
#include "cubeperm/sieve.hpp"
#include "cubeperm/zetadist.hpp"

namespace cubeperm::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxVerifyLimit = 1'000'000;
constexpr std::uint64_t kListedMembers = 1000;
constexpr double kZThreshold = 4.0;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(std::string(what) + ": '" + std::string(text) + "' is not a non-negative integer");
  }
  return v;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(parse_u64(std::string_view(text).substr(start, comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct SelectorFlags {
  std::string set;
  std::uint64_t modulus = 0;
  std::string forbid;
  bool squarefree = false;

  void attach(CLI::App* app) {
    app->add_option("--set", set, "Named set: W (cube-bijective), V (no p = 1 mod 3), Q (square-free)")
        ->check(CLI::IsMember({"W", "V", "Q"}));
    app->add_option("--modulus", modulus, "Modulus m >= 1");
    app->add_option("--forbid", forbid, "Forbidden residues a1,a2,... in [0, m] (0 means m)");
    app->add_flag("--squarefree", squarefree, "Keep square-free members only");
  }

  CongruenceSelector build(bool default_to_w) const {
    if (!set.empty()) {
      if (modulus != 0 || !forbid.empty() || squarefree) {
        throw UsageError("--set cannot be combined with --modulus/--forbid/--squarefree");
      }
      if (set == "W") return CongruenceSelector::cube_bijective();
      if (set == "V") return CongruenceSelector::no_one_mod_three();
      return CongruenceSelector::squarefree();
    }
    if (modulus == 0) {
      if (default_to_w && forbid.empty() && !squarefree) return CongruenceSelector::cube_bijective();
      throw UsageError("--modulus must be given and >= 1");
    }
    std::vector<std::int64_t> residues;
    for (std::uint64_t a : parse_u64_list(forbid, "--forbid")) {
      if (a > modulus) {
        throw UsageError("--forbid: residue " + std::to_string(a) + " outside {1,...," +
                         std::to_string(modulus) + "}");
      }
      residues.push_back(static_cast<std::int64_t>(a));
    }
    return CongruenceSelector(modulus, residues, squarefree);
  }
};

// Writes to --output when given, else to the stream passed to run().
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
      out_ = file_.get();
    }
  }
  std::ostream& get() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

json optional_real(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

int cmd_verify(std::uint64_t limit, std::ostream& out) {
  if (limit < 1 || limit > kMaxVerifyLimit) throw UsageError("verify: --limit must be in [1, 10^6]");
  const auto report = verify_cube_characterization(limit);
  json j;
  j["command"] = "verify";
  j["limit"] = report.limit;
  j["status"] = report.counterexample ? "mismatch" : "ok";
  j["members"] = report.members;
  j["first_counterexample"] = report.counterexample ? json(*report.counterexample) : json(nullptr);
  if (!report.listed.empty()) j["listed"] = report.listed;
  out << j.dump() << '\n';
  return report.counterexample ? kVerificationFailure : kSuccess;
}

int cmd_count(const CongruenceSelector& sel, std::uint64_t limit, const std::string& checkpoint_spec,
              const std::string& format, unsigned threads, std::ostream& out, std::ostream& err) {
  if (limit < 1 || limit > kMaxSieveLimit) throw UsageError("count: --limit must be in [1, 10^9]");
  std::vector<std::uint64_t> points;
  if (checkpoint_spec == "decades") {
    points = decades(limit);
    if (points.empty() || points.back() != limit) points.push_back(limit);
  } else {
    points = parse_u64_list(checkpoint_spec, "--checkpoints");
    if (points.empty()) throw UsageError("--checkpoints: empty list");
    for (auto p : points) {
      if (p < 1 || p > limit) throw UsageError("--checkpoints: " + std::to_string(p) + " outside [1, limit]");
    }
  }
  CountTable table = count_members(sel, limit, points, threads);
  if (!attach_predictions(table)) {
    if (sel.degenerate() && sel.squarefree_only()) {
      const auto b = sel.allowed_divisor_primes().size();
      err << "note: every unit class is forbidden, so the square-free members form a finite set of 2^"
          << b << " = " << (std::uint64_t{1} << b) << " integers\n";
    } else {
      err << "note: every unit class is forbidden and no prime divisor of m is allowed; the set is {1}\n";
    }
  }
  if (format == "json") {
    for (const auto& c : table.checkpoints) {
      json j;
      j["n"] = c.n;
      j["count"] = c.count;
      j["predicted"] = optional_real(c.predicted);
      j["ratio"] = optional_real(c.ratio);
      out << j.dump() << '\n';
    }
  } else {
    table.write_csv(out);
  }
  return kSuccess;
}

int cmd_enumerate(const CongruenceSelector& sel, std::uint64_t limit, std::ostream& out) {
  if (limit < 1 || limit > kMaxSieveLimit) throw UsageError("enumerate: --limit must be in [1, 10^9]");
  for_each_member(sel, limit, [&](std::uint64_t n) { out << n << '\n'; });
  return kSuccess;
}

EulerProductResult constant_by_name(const std::string& name, double tolerance) {
  if (name == "C") return constant_C(std::max(tolerance, 1e-12));
  if (name == "b") return landau_ramanujan_b(std::max(tolerance, 1e-12));
  if (name == "p2") return p2(std::max(tolerance, 1e-12));
  if (name == "L_chi1") {
    EulerProductResult r;
    r.value = L_chi1_exact();
    r.method = ProductMethod::closed_form;
    return r;
  }
  if (name == "L_chi1_sum") return L_chi1_summed();
  if (name.rfind("c_a(", 0) == 0 && name.back() == ')') {
    const auto inner = name.substr(4, name.size() - 5);
    const auto parts = parse_u64_list(inner, "c_a");
    if (parts.size() != 2 || parts[0] == 0) throw UsageError("c_a expects c_a(m,a) with m >= 1");
    return c_a_estimate(parts[0], parts[1], tolerance);
  }
  throw UsageError("unknown constant '" + name + "' (known: C, b, p2, L_chi1, L_chi1_sum, c_a(m,a))");
}

int cmd_constants(const std::string& names, double tolerance, std::ostream& out) {
  if (!(tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  const auto list = split_names(names);
  if (list.empty()) throw UsageError("--name: no constant requested");
  std::vector<std::pair<std::string, EulerProductResult>> results;
  for (const auto& name : list) results.emplace_back(name, constant_by_name(name, tolerance));
  for (const auto& [name, r] : results) out << to_json(name, r) << '\n';
  return kSuccess;
}

int cmd_fit(const std::string& path, const CongruenceSelector& sel, std::ostream& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  const CountTable table = [&] {
    try {
      return CountTable::read_csv(in, sel);
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }();
  const auto fit = fit_count_table(table);
  for (const auto& p : fit.points) {
    json j;
    j["n"] = p.n;
    j["count"] = p.count;
    j["r"] = p.r;
    out << j.dump() << '\n';
  }
  json j;
  j["name"] = "fit";
  j["exponent"] = std::isfinite(fit.exponent) ? json(fit.exponent) : json(nullptr);
  j["estimate"] = fit.estimate;
  j["slope"] = fit.slope;
  out << j.dump() << '\n';
  return kSuccess;
}

struct SampleFlags {
  double s = 2.0;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::string test = "suite";
  std::uint64_t d = 2;
  std::uint64_t k = 1;
  std::string primes = "2,3";
  std::string thresholds = "1,1";
};

int cmd_sample(const SampleFlags& f, const CongruenceSelector& sel, std::ostream& out) {
  if (!(f.s > 1.0)) throw UsageError("--s must exceed 1");
  std::vector<SampleReport> reports;
  auto valuation = [&](ZetaSampler& sampler) {
    const auto ps = parse_u64_list(f.primes, "--primes");
    const auto raw = parse_u64_list(f.thresholds, "--thresholds");
    std::vector<unsigned> th(raw.begin(), raw.end());
    for (auto& r : valuation_independence_test(sampler, ps, th, f.samples)) reports.push_back(std::move(r));
  };
  // Each test draws from its own stream seeded with --seed.
  auto fresh = [&] { return ZetaSampler(f.s, f.seed); };
  if (f.test == "divisibility") {
    auto z = fresh();
    reports.push_back(divisibility_test(z, f.d, f.samples));
  } else if (f.test == "pmf") {
    auto z = fresh();
    reports.push_back(pmf_test(z, f.k, f.samples));
  } else if (f.test == "valuation") {
    auto z = fresh();
    valuation(z);
  } else if (f.test == "membership") {
    auto z = fresh();
    reports.push_back(membership_frequency_test(z, sel, f.samples));
  } else if (f.test == "suite") {
    for (std::uint64_t d : {1, 2, 3, 6}) {
      auto z = fresh();
      reports.push_back(divisibility_test(z, d, f.samples));
    }
    for (std::uint64_t k = 1; k <= 10; ++k) {
      auto z = fresh();
      reports.push_back(pmf_test(z, k, f.samples));
    }
    {
      auto z = fresh();
      valuation(z);
    }
    for (const auto& s : {sel, CongruenceSelector::no_one_mod_three(), CongruenceSelector::squarefree()}) {
      auto z = fresh();
      reports.push_back(membership_frequency_test(z, s, f.samples));
    }
  } else {
    throw UsageError("unknown --test '" + f.test + "' (divisibility, pmf, valuation, membership, suite)");
  }
  bool ok = true;
  for (const auto& r : reports) {
    out << to_json(r) << '\n';
    ok = ok && std::abs(r.z_score) <= kZThreshold;
  }
  return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

VerifyReport verify_cube_characterization(std::uint64_t limit) {
  const auto w = CongruenceSelector::cube_bijective();
  VerifyReport report;
  report.limit = limit;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const bool brute = power_map_is_bijection(n, 3);
    if (brute != is_member(n, w)) {
      report.counterexample = n;
      break;
    }
    if (brute) {
      ++report.members;
      if (limit <= kListedMembers) report.listed.push_back(n);
    }
  }
  return report;
}

FitResult fit_count_table(const CountTable& table) {
  const auto& sel = table.selector;
  FitResult fit;
  std::optional<PrimeSet> allowed;
  if (sel.degenerate()) {
    allowed.emplace(sel.allowed_divisor_primes());
    if (allowed->empty() || sel.squarefree_only()) {
      throw UsageError("fit: the selected set is finite; there is no asymptotic to fit");
    }
    fit.exponent = std::numeric_limits<double>::quiet_NaN();
  } else {
    fit.exponent = static_cast<double>(sel.coprime_forbidden_count()) / static_cast<double>(sel.totient());
  }
  std::vector<FitPoint> usable;
  for (const auto& c : table.checkpoints) {
    if (c.n < 2) continue;
    const double n = static_cast<double>(c.n);
    const double r = allowed ? static_cast<double>(c.count) / degenerate_asymptotic(*allowed, n)
                             : static_cast<double>(c.count) * std::pow(std::log(n), fit.exponent) / n;
    fit.points.push_back({c.n, c.count, r});
    if (c.n >= 100) usable.push_back(fit.points.back());
  }
  if (usable.size() < 2) throw UsageError("fit: need at least two checkpoints with n >= 100");
  const auto& p1 = usable[usable.size() - 2];
  const auto& p2v = usable.back();
  const double l1 = std::log(static_cast<double>(p1.n));
  const double l2 = std::log(static_cast<double>(p2v.n));
  // r = c + d / L through both points.
  fit.estimate = (p2v.r * l2 - p1.r * l1) / (l2 - l1);
  fit.slope = (p1.r - fit.estimate) * l1;
  return fit;
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char ch : list) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      if (!current.empty()) out.push_back(current);
      current.clear();
      continue;
    }
    if (ch != ' ') current += ch;
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting and asymptotics for integers on which x -> x^3 is a bijection mod n"};
  app.require_subcommand(1);

  std::uint64_t verify_limit = 0;
  auto* verify = app.add_subcommand("verify", "Check the brute-force cube bijection against the predicate");
  verify->add_option("--limit", verify_limit, "Check every n <= limit")->required();

  SelectorFlags count_sel;
  std::uint64_t count_limit = 0;
  std::string checkpoints = "decades";
  std::string format = "csv";
  std::string count_output;
  unsigned threads = 1;
  auto* count = app.add_subcommand("count", "Exact counts by sieve, with predicted asymptotics");
  count_sel.attach(count);
  count->add_option("--limit", count_limit, "Sieve limit (<= 10^9)")->required();
  count->add_option("--checkpoints", checkpoints, "'decades' or a list n1,n2,...");
  count->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  count->add_option("--output", count_output, "Output file (default: stdout)");
  count->add_option("--threads", threads, "Sieve workers")->check(CLI::Range(1u, 256u));

  SelectorFlags enum_sel;
  std::uint64_t enum_limit = 0;
  std::string enum_output;
  auto* enumerate = app.add_subcommand("enumerate", "List members in increasing order");
  enum_sel.attach(enumerate);
  enumerate->add_option("--limit", enum_limit, "Upper bound")->required();
  enumerate->add_option("--output", enum_output, "Output file (default: stdout)");

  std::string names;
  double tolerance = 1e-10;
  std::string const_output;
  auto* constants = app.add_subcommand("constants", "Evaluate constants as JSON lines");
  constants->add_option("--name", names, "C, b, p2, L_chi1, L_chi1_sum, c_a(m,a); comma separated")->required();
  constants->add_option("--tolerance", tolerance, "Target accuracy");
  constants->add_option("--output", const_output, "Output file (default: stdout)");

  SelectorFlags fit_sel;
  std::string fit_input;
  auto* fit = app.add_subcommand("fit", "Empirical constant from a count table CSV");
  fit_sel.attach(fit);
  fit->add_option("--input", fit_input, "CSV produced by 'count'")->required();

  SelectorFlags sample_sel;
  SampleFlags sf;
  std::string sample_output;
  auto* sample = app.add_subcommand("sample", "Zeta-distribution experiments");
  sample_sel.attach(sample);
  sample->add_option("--s", sf.s, "Parameter s > 1");
  sample->add_option("--samples", sf.samples, "Number of draws per test");
  sample->add_option("--seed", sf.seed, "Seed for the mt19937_64 stream");
  sample->add_option("--test", sf.test, "divisibility, pmf, valuation, membership or suite");
  sample->add_option("--d", sf.d, "Divisor for the divisibility test");
  sample->add_option("--k", sf.k, "Value for the pmf test");
  sample->add_option("--primes", sf.primes, "Primes for the valuation test");
  sample->add_option("--thresholds", sf.thresholds, "Valuation thresholds, one per prime");
  sample->add_option("--output", sample_output, "Output file (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("cubeperm");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_limit, out);
    if (count->parsed()) {
      Sink sink(count_output, out);
      return cmd_count(count_sel.build(false), count_limit, checkpoints, format, threads, sink.get(), err);
    }
    if (enumerate->parsed()) {
      Sink sink(enum_output, out);
      return cmd_enumerate(enum_sel.build(false), enum_limit, sink.get());
    }
    if (constants->parsed()) {
      Sink sink(const_output, out);
      return cmd_constants(names, tolerance, sink.get());
    }
    if (fit->parsed()) return cmd_fit(fit_input, fit_sel.build(true), out);
    if (sample->parsed()) {
      Sink sink(sample_output, out);
      return cmd_sample(sf, sample_sel.build(true), sink.get());
    }
  } catch (const EstimationFailure& e) {
    err << "error: " << e.what() << " (best " << e.best() << ", error " << e.error() << ")\n";
    return kVerificationFailure;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace cubeperm::cli
