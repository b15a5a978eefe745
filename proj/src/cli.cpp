#include "mdsgrs/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "mdsgrs/constructions.hpp"
#include "mdsgrs/coset_lifts.hpp"
#include "mdsgrs/numtheory.hpp"
#include "mdsgrs/search.hpp"
#include "mdsgrs/serialize.hpp"

namespace mdsgrs::cli {

namespace {

struct Config {
  std::uint64_t table_limit = Field::kDefaultTableLimit;
  std::uint64_t enumeration_limit = 10'000'000;
  std::uint64_t minor_limit = 1'000'000;
  std::size_t sample_count = 1000;
  std::string format = "json";

  VerifyLimits limits() const {
    VerifyLimits l;
    l.enumeration_limit = enumeration_limit;
    l.minor_limit = minor_limit;
    l.sample_count = sample_count;
    return l;
  }
};

// Thrown for malformed command lines that CLI11 itself accepts.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::HypothesisViolated:
    case ErrorKind::BaseNotSelfDual:
    case ErrorKind::ParityCondition:
    case ErrorKind::E1NotOdd:
    case ErrorKind::CharacterCondition:
    case ErrorKind::TooManyCosets:
    case ErrorKind::ShiftInSubspace:
      return kHypothesis;
    case ErrorKind::VerificationFailed:
    case ErrorKind::GreedyFailed:
      return kVerification;
    case ErrorKind::TableLimitExceeded:
    case ErrorKind::EnumerationTooLarge:
      return kTooLarge;
    default:
      return kUsage;
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("parameter " + key + " = '" + s + "' is not a non-negative integer");
  return v;
}

std::uint32_t parse_u32(const std::string& key, const std::string& s) {
  const std::uint64_t v = parse_u64(key, s);
  if (v > 0xffffffffULL) throw UsageError("parameter " + key + " is out of range");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> parse_list(const std::string& key, const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_u32(key, item));
  if (out.empty()) throw UsageError("parameter " + key + " is empty");
  return out;
}

class Params {
 public:
  explicit Params(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

  const std::string& raw(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) throw UsageError("missing parameter " + key);
    used_.insert(key);
    return it->second;
  }
  std::uint64_t u64(const std::string& key) const { return parse_u64(key, raw(key)); }
  std::uint32_t u32(const std::string& key) const { return parse_u32(key, raw(key)); }
  std::vector<std::uint32_t> list(const std::string& key) const { return parse_list(key, raw(key)); }

  void check_all_used() const {
    for (const auto& [key, value] : kv_)
      if (!used_.count(key)) throw UsageError("parameter " + key + " does not apply to this theorem");
  }

 private:
  std::map<std::string, std::string> kv_;
  mutable std::set<std::string> used_;
};

std::uint64_t checked_order(std::uint64_t r, std::uint64_t exponent) {
  if (exponent == 0 || exponent > 64) throw UsageError("extension degree out of range");
  const auto q = nt::checked_pow(r, static_cast<std::uint32_t>(exponent));
  if (!q || *q > 0xffffffffULL) throw Error(ErrorKind::TableLimitExceeded, "field order too large");
  return *q;
}

std::optional<CosetVariant> coset_variant(const std::string& th) {
  if (th == "th8" || th == "cor1") return CosetVariant::th8;
  if (th == "th9" || th == "cor2") return CosetVariant::th9;
  if (th == "th10" || th == "cor3") return CosetVariant::th10;
  if (th == "th11" || th == "cor4") return CosetVariant::th11;
  return std::nullopt;
}

SelfDualCode build(const std::string& th, const Params& p, const Config& cfg, bool permissive) {
  const auto tl = cfg.table_limit;
  if (th == "th1" || th == "th4") {
    const auto r = p.u64("r");
    const auto m = p.u32("m");
    auto f = field_for(r, m, tl);
    return th == "th1" ? th1_code(f, r, m, p.u32("e"), p.u64("t")) : th4_code(f, r, m, p.u32("e"), p.u64("t"));
  }
  if (th == "th2" || th == "th3") {
    const auto pp = p.u64("p");
    const auto m = p.u32("m");
    auto f = field_for(pp, m, tl);
    return th == "th2" ? th2_code(f, pp, m, p.u32("e"), p.u64("t")) : th3_code(f, pp, m, p.u32("e"), p.u64("t"));
  }
  if (auto variant = coset_variant(th)) {
    const bool corollary = th.rfind("cor", 0) == 0;
    const auto r = p.u64("r");
    const auto s = p.u32("s");
    const auto ms = corollary ? p.list("ms") : std::vector<std::uint32_t>{p.u32("m")};
    std::uint64_t degree = s;
    for (auto m : ms) degree *= m;
    if (!nt::prime_power(r) || r % 2 == 0) throw UsageError("r must be an odd prime power");
    auto f = make_field_of_order(checked_order(r, degree), tl);
    return iterated_lift(f, *variant, r, s, ms, p.u32("e"), p.u64("t"));
  }
  if (th == "th12" || th == "th13") {
    const auto r = p.u64("r");
    if (!nt::prime_power(r) || r % 2 == 0) throw UsageError("r must be an odd prime power");
    auto f = make_field_of_order(checked_order(r, 2), tl);
    if (th == "th13") return th13_code(f, r, p.u64("e"), p.u64("f"), p.u64("s"), p.u64("t"));
    const std::string& v = p.raw("variant");
    if (v != "tf" && v != "tf+2") throw UsageError("variant must be tf or tf+2");
    return th12_code(f, r, p.u64("e"), p.u64("f"), p.u64("s"), p.u64("t"),
                     v == "tf" ? Th12Variant::tf : Th12Variant::tf_plus_2);
  }
  if (th == "thq") {
    const auto q = p.u64("q");
    if (!nt::prime_power(q) || q % 2 == 0) throw UsageError("q must be an odd prime power");
    return th_large_q_code(make_field_of_order(q, tl), p.u32("n"), permissive);
  }
  throw UsageError("unknown theorem '" + th + "'");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string join_codes(std::span<const Elem> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i].code());
  }
  return out;
}

std::string params_text(const Provenance& p) {
  std::string out = p.theorem;
  for (const auto& [k, v] : p.params.items()) out += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  return out;
}

void print_code(std::ostream& out, const SelfDualCode& code, const std::string& format) {
  if (format == "json") {
    out << code_to_json(code).dump() << '\n';
    return;
  }
  out << "[" << code.length() << "," << code.k << "] self-dual code over " << code.field().name() << '\n';
  out << "construction: " << params_text(code.provenance) << '\n';
  out << "extended: " << (code.eval.extended ? "yes" : "no") << '\n';
  out << "a: " << join_codes(code.eval.points) << '\n';
  out << "v: " << join_codes(code.eval.multipliers) << '\n';
}

struct ConstructArgs {
  std::string theorem;
  std::vector<std::string> positional;
  std::map<std::string, std::string> named;
  std::string out_path, generator_path;
  bool permissive = false;
};

int cmd_construct(const ConstructArgs& a, const Config& cfg, std::ostream& out) {
  std::map<std::string, std::string> kv = a.named;
  std::string theorem = a.theorem;
  for (const auto& item : a.positional) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      if (!theorem.empty()) throw UsageError("unexpected argument '" + item + "'");
      theorem = item;
      continue;
    }
    const std::string key = item.substr(0, eq);
    if (kv.count(key)) throw UsageError("parameter " + key + " given twice");
    kv[key] = item.substr(eq + 1);
  }
  if (theorem.empty()) throw UsageError("no theorem given");

  const Params params(kv);
  const SelfDualCode code = build(theorem, params, cfg, a.permissive);
  params.check_all_used();

  if (!a.generator_path.empty()) write_file(a.generator_path, generator_text(code.generator()));
  if (!a.out_path.empty()) {
    std::ostringstream s;
    print_code(s, code, cfg.format);
    write_file(a.out_path, s.str());
  } else {
    print_code(out, code, cfg.format);
  }
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& mode_name, const Config& cfg, std::ostream& out) {
  const SelfDualCode code = code_from_string(read_input(path), cfg.table_limit);
  const GeneratorMatrix g = code.generator();
  const VerifyLimits limits = cfg.limits();

  const bool self_dual = check_self_dual(g);
  const std::size_t rk = rank(g);
  MdsMode mode;
  if (mode_name == "auto") {
    mode = auto_mds_mode(g, limits);
  } else {
    const auto m = parse_mds_mode(mode_name);
    if (!m) throw UsageError("unknown MDS mode '" + mode_name + "'");
    mode = *m;
  }
  std::optional<std::size_t> distance;
  bool mds = false;
  if (mode == MdsMode::exhaustive) {
    distance = min_distance(g, limits.enumeration_limit);
    mds = *distance == g.cols() - g.rows() + 1;
  } else {
    mds = check_mds(g, mode, limits);
  }

  if (cfg.format == "json") {
    Json j;
    j["n"] = code.length();
    j["k"] = code.k;
    j["field"] = field_to_json(code.field());
    j["self_dual"] = self_dual;
    j["rank"] = rk;
    j["mds_mode"] = std::string(to_string(mode));
    j["mds"] = mds;
    if (distance) j["min_distance"] = *distance;
    out << j.dump() << '\n';
  } else {
    out << "code: [" << code.length() << "," << code.k << "] over " << code.field().name() << '\n';
    out << "self_dual: " << (self_dual ? "true" : "false") << '\n';
    out << "rank: " << rk << '\n';
    out << "mds (" << to_string(mode) << "): " << (mds ? "pass" : "fail") << '\n';
    if (distance) out << "min_distance: " << *distance << '\n';
  }
  if (!self_dual) return kNotSelfDual;
  if (!mds) return kMdsFailed;
  return kOk;
}

struct CatalogArgs {
  std::uint64_t q = 0;
  std::uint64_t q_max = 0;
  std::optional<std::uint64_t> max_n;
  std::string csv_path;
  bool first_hit = false;
  bool no_certificates = false;
};

Json entry_json(const CatalogEntry& e, bool with_certificate) {
  Json j;
  j["q"] = e.q;
  j["n"] = e.n;
  j["status"] = std::string(to_string(e.status));
  Json prov = Json::array();
  for (const auto& p : e.provenance) prov.push_back(p.flat());
  j["provenance"] = std::move(prov);
  if (with_certificate && e.certificate) j["certificate"] = code_to_json(*e.certificate);
  if (!e.skipped.empty()) j["skipped"] = e.skipped;
  return j;
}

int cmd_catalog(const CatalogArgs& a, const Config& cfg, std::ostream& out) {
  std::vector<std::uint64_t> orders;
  if (a.q_max) {
    for (std::uint64_t q = 3; q <= a.q_max; q += 2)
      if (nt::prime_power(q)) orders.push_back(q);
  } else {
    if (!nt::prime_power(a.q) || a.q % 2 == 0) throw UsageError("q must be an odd prime power");
    orders.push_back(a.q);
  }
  CatalogOptions opt;
  opt.table_limit = cfg.table_limit;
  opt.first_hit_only = a.first_hit;

  std::ostringstream csv;
  csv << "q,n,status,first_theorem\n";
  for (std::uint64_t q : orders) {
    const auto entries = catalog(q, a.max_n.value_or(q + 1), opt);
    for (const auto& e : entries) {
      const std::string first = e.provenance.empty() ? "" : e.provenance.front().theorem;
      if (cfg.format == "json") {
        out << entry_json(e, !a.no_certificates).dump() << '\n';
      } else {
        out << "q=" << e.q << " n=" << e.n << " " << to_string(e.status);
        if (!e.provenance.empty()) out << " " << params_text(e.provenance.front());
        out << '\n';
      }
      csv << e.q << ',' << e.n << ',' << to_string(e.status) << ',' << first << '\n';
    }
  }
  if (!a.csv_path.empty()) write_file(a.csv_path, csv.str());
  return kOk;
}

int cmd_selftest(SelftestOptions opt, const Config& cfg, const Hooks& hooks, std::ostream& out, std::ostream& err) {
  opt.provider = hooks.selftest_fields;
  if (!opt.provider) {
    const auto tl = cfg.table_limit;
    opt.provider = [tl](std::uint64_t q) { return make_field_of_order(q, tl); };
  }
  const SelftestReport report = run_selftest(opt);
  if (cfg.format == "json") {
    Json j;
    j["max_q"] = opt.max_q;
    j["fields"] = report.fields;
    Json suites = Json::array();
    for (const auto& s : report.suites)
      suites.push_back(Json{{"suite", s.name}, {"checks", s.checks}, {"failures", s.failures}, {"witnesses", s.witnesses}});
    j["suites"] = std::move(suites);
    j["ok"] = report.ok();
    out << j.dump() << '\n';
  } else {
    out << "fields: " << report.fields << " (q <= " << opt.max_q << ")\n";
    for (const auto& s : report.suites)
      out << s.name << ": " << s.checks << " checks, " << s.failures << " failures\n";
    out << (report.ok() ? "all suites passed" : "FAILED") << '\n';
  }
  for (const auto& s : report.suites)
    for (const auto& w : s.witnesses) err << "selftest failure [" << s.name << "] " << w << '\n';
  return report.ok() ? kOk : kSelftestFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Self-dual MDS codes from generalized Reed-Solomon codes", "mdsgrs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file (table_limit, enumeration_limit, minor_limit, sample_count, format)");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Config cfg;
  app.add_option("--table-limit,--table_limit", cfg.table_limit, "Largest field order with tables")
      ->check(CLI::PositiveNumber);
  app.add_option("--enum-limit,--enumeration_limit", cfg.enumeration_limit, "Largest q^k for exhaustive distance")
      ->check(CLI::PositiveNumber);
  app.add_option("--minor-limit,--minor_limit", cfg.minor_limit, "Largest C(n,k) for the full minor check")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples,--sample_count", cfg.sample_count, "Column subsets for the sampled MDS check")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a code from one construction");
  construct->add_option("--theorem", ca.theorem, "th1-th4, th8-th13, cor1-cor4, thq");
  for (const char* key : {"r", "p", "m", "e", "t", "s", "ms", "f", "variant", "n", "q"})
    construct->add_option(std::string("--") + key, ca.named[key], std::string("parameter ") + key);
  construct->add_option("args", ca.positional, "theorem and key=value parameters");
  construct->add_option("--out", ca.out_path, "Write the code here instead of stdout");
  construct->add_option("--generator", ca.generator_path, "Also write the generator matrix as text");
  construct->add_flag("--permissive", ca.permissive, "thq: allow q below the bound");

  std::string verify_path, mds_mode = "auto";
  auto* verify = app.add_subcommand("verify", "Check a code file");
  verify->add_option("file", verify_path, "Code JSON ('-' for stdin)")->required();
  verify->add_option("--mds", mds_mode, "exhaustive, minors, sampled or auto")
      ->check(CLI::IsMember({"auto", "exhaustive", "minors", "sampled"}));

  CatalogArgs cat;
  auto* catalog_cmd = app.add_subcommand("catalog", "List lengths with a construction");
  auto* q_opt = catalog_cmd->add_option("--q", cat.q, "Field order");
  auto* qmax_opt = catalog_cmd->add_option("--q-max", cat.q_max, "Every odd prime power up to this order");
  q_opt->excludes(qmax_opt);
  catalog_cmd->add_option("--max-n", cat.max_n, "Largest length (default q+1)");
  catalog_cmd->add_option("--csv", cat.csv_path, "Write a q,n,status,first_theorem summary");
  catalog_cmd->add_flag("--first-hit", cat.first_hit, "Record one witness per length");
  catalog_cmd->add_flag("--no-certificates", cat.no_certificates, "Omit certificate codes");

  SelftestOptions st;
  auto* selftest = app.add_subcommand("selftest", "Run the identity suites");
  selftest->add_option("--max-q", st.max_q, "Largest field order");
  selftest->add_option("--seed", st.seed, "Seed for the randomized suites");
  selftest->add_option("--trials", st.random_trials, "Random trials per field")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    // Named options default to empty strings; only pass on the ones given.
    std::map<std::string, std::string> named;
    for (const auto& [key, value] : ca.named)
      if (construct->count("--" + key)) named[key] = value;
    ca.named = std::move(named);

    if (construct->parsed()) return cmd_construct(ca, cfg, out);
    if (verify->parsed()) return cmd_verify(verify_path, mds_mode, cfg, out);
    if (catalog_cmd->parsed()) {
      if (!cat.q && !cat.q_max) throw UsageError("catalog needs --q or --q-max");
      return cmd_catalog(cat, cfg, out);
    }
    if (selftest->parsed()) return cmd_selftest(st, cfg, hooks, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace mdsgrs::cli
