#include "dualpoly/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "dualpoly/approx_lab.hpp"
#include "dualpoly/dual_and.hpp"
#include "dualpoly/symcheb.hpp"
#include "dualpoly/weight_degree.hpp"

namespace dualpoly::cli {

namespace {

// Larger witnesses are only written through --emit.
constexpr int kInlineWitnessBits = 12;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  Json result = Json::object();
  std::optional<Table> table;
  std::vector<std::string> warnings;
  std::optional<std::pair<std::string, std::string>> violation;

  void require(bool ok, const std::string& property, const std::string& instance) {
    if (!ok && !violation) violation = {property, instance};
  }
};

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  int threads = 1;
  bool list_commands = false;
};

std::string fmt_float(double v) {
  std::ostringstream os;
  os.precision(17);
  os << std::scientific << v;
  return os.str();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Symmetric functions named on the command line.

std::vector<Rational> named_function(const std::string& name, int n) {
  if (n < 1) throw std::invalid_argument("--n must be positive");
  if (name == "and") return and_by_weight(n);
  if (name == "or") return or_by_weight(n);
  if (name == "maj") return maj_by_weight(n);
  if (name == "parity") return parity_by_weight(n);
  if (name == "exact-half") {
    if (n % 2) throw std::invalid_argument("exact-half needs even n");
    return exact_by_weight(n, n / 2);
  }
  if (name == "exact-threshold") return exact_by_weight(n, 1);
  throw std::invalid_argument("unknown function " + name);
}

// A function is a name (with --n) or a JSON file holding "predicate" or
// "values" per weight.
std::vector<Rational> resolve_function(const std::string& f, int n) {
  if (f.size() > 5 && f.substr(f.size() - 5) == ".json") {
    const Json j = read_json_file(f);
    if (j.contains("predicate")) {
      std::vector<Rational> v;
      for (const auto& e : j.at("predicate")) v.emplace_back(e.get<int>());
      return v;
    }
    if (j.contains("values")) return rationals_from_json(j.at("values"));
    throw std::invalid_argument(f + " needs a \"predicate\" or \"values\" array");
  }
  return named_function(f, n);
}

// ---------------------------------------------------------------------------
// Commands.

Outcome cmd_dual_and(int n, const std::string& weights, const std::string& d_text, const std::string& emit) {
  DualAndParams params;
  params.n = n;
  params.w = weights.empty() ? WeightVector::uniform(n) : WeightVector{parse_rational_list(weights)};
  params.d = parse_rational(d_text);
  const DualAndWitness wit = build_phi(params);
  const WitnessReport rep = verify_witness(wit.phi, and_pm, params.d, params.w);
  const Rational eps = epsilon_of(params);

  Outcome o;
  o.result["h_size"] = wit.h_size.get_str();
  o.result["z"] = to_string(wit.z);
  o.result["epsilon"] = to_string(wit.epsilon);
  o.result["epsilon_float"] = to_double(wit.epsilon);
  o.result["negated"] = wit.negated;
  o.result["pure_high_degree"] = rep.pure_high_degree;
  o.result["boundary_orthogonal"] = rep.boundary_orthogonal;
  o.result["l1"] = to_string(rep.l1);
  o.result["correlation"] = to_string(rep.correlation);
  if (n <= kInlineWitnessBits) o.result["witness"] = to_json(wit.phi);
  const std::string inst = "n=" + std::to_string(n) + " d=" + d_text;
  o.require(rep.pure_high_degree, "pure high degree", inst);
  o.require(rep.l1 == 1, "normalization", inst);
  o.require(rep.correlation == eps, "correlation equals Pr[<w,X> >= d]", inst);
  if (!emit.empty()) {
    std::ofstream f(emit);
    if (!f) throw std::invalid_argument("cannot write " + emit);
    f << to_json(wit.phi).dump(1) << "\n";
    o.result["witness_file"] = emit;
  }
  return o;
}

Outcome cmd_sample_shares(const std::string& witness_path, int secret, long count, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("--count must be nonnegative");
  const DualWitness psi = witness_from_json(read_json_file(witness_path));
  const ShareSampler sampler(psi);
  std::mt19937_64 rng(seed);
  Outcome o;
  Table t;
  for (int i = 1; i <= psi.n; ++i) t.header.push_back("bit_" + std::to_string(i));
  Json shares = Json::array();
  for (long c = 0; c < count; ++c) {
    const CubePoint x = sampler.sample(secret, rng);
    std::vector<std::string> row;
    Json bits = Json::array();
    for (int i = 0; i < psi.n; ++i) {
      row.push_back(std::to_string(x.bit(i)));
      bits.push_back(x.bit(i));
    }
    t.rows.push_back(std::move(row));
    shares.push_back(std::move(bits));
  }
  o.result["shares"] = std::move(shares);
  o.table = std::move(t);
  return o;
}

Outcome cmd_symcheb_pw(int n, int K, int w, const std::string& check, int k, const std::string& eps_text,
                       const std::string& delta_text, int samples) {
  const SymmetrizedTest test = build_pw(n, K, w);
  Outcome o;
  o.result["zeros_minus"] = to_json(test.zeros_minus);
  o.result["zeros_plus"] = to_json(test.zeros_plus);
  o.result["c_w"] = to_string(test.c_w);
  o.result["poly"] = to_json(test.poly);
  o.result["chebyshev"] = to_json(cheb_transform(test.poly).half_coeffs());
  const ReflectionCheck refl = pw_reflection_check(test);
  o.result["reflection_negation"] = refl.negation;
  o.result["reflection_unit_shift"] = refl.unit_shift;
  const std::string inst = "n=" + std::to_string(n) + " K=" + std::to_string(K) + " w=" + std::to_string(w);
  const bool hypothesis = n >= 64 * K;
  if (!hypothesis && !check.empty()) o.warnings.push_back("hypothesis n >= 64K does not hold; results are informational");

  if (check == "bounded") {
    const BoundedReport r = bounded_check(test, std::max(samples, 1000));
    o.result["bounded"] = {{"certified_upper", to_string(r.certified_upper)},
                           {"certified_upper_float", to_double(r.certified_upper)},
                           {"certified_lower", to_string(r.certified_lower)},
                           {"grid_max_float", r.grid_max},
                           {"holds", r.holds}};
    if (hypothesis) o.require(r.holds, "|p_w| <= 2 on [-1,1]", inst);
  } else if (check == "main3") {
    if (k < 0) throw std::invalid_argument("--check main3 needs --k");
    const QwApproximation r = approx_qw(test, k);
    o.result["main3"] = {{"k", k},
                         {"q", to_json(r.q)},
                         {"err_upper", to_string(r.err_upper)},
                         {"err_upper_float", to_double(r.err_upper)},
                         {"errbound_float", r.errbound},
                         {"tail_sum", to_string(r.tail_sum)},
                         {"holds", r.holds}};
    if (hypothesis) o.require(r.holds, "truncation error <= 4 sqrt(K) exp(-k^2/1156K)", inst + " k=" + std::to_string(k));
  } else if (check == "normg") {
    const Rational eps = parse_rational(eps_text);
    if (eps <= 0) throw std::invalid_argument("--eps must be positive");
    const HDeltaParams p = HDeltaParams::make(eps, samples);
    const double disc = normg_identity_check(test, p);
    o.result["normg"] = {{"epsilon", to_string(p.epsilon)},
                         {"delta", to_string(p.delta)},
                         {"samples", samples},
                         {"discrepancy_float", disc},
                         {"holds", disc < 1e-8}};
    o.require(disc < 1e-8, "two-route |g|^2 identity", inst + " eps=" + eps_text);
  } else if (check == "fupper") {
    const Rational delta = parse_rational(delta_text);
    if (delta < 0) throw std::invalid_argument("--delta must be nonnegative");
    if (2 * w > K) o.warnings.push_back("w > K/2; the bound is stated for w <= K/2");
    std::vector<double> grid;
    const int m = std::max(samples, 1000);
    for (int i = 0; i <= m; ++i) grid.push_back(-1.0 + 2.0 * i / m);
    const FupperReport r = fupper_property_check(test, delta, grid);
    o.result["fupper"] = {{"delta", to_string(delta)},
                          {"holds", r.holds},
                          {"literal_holds", r.literal_holds},
                          {"worst_ratio_float", r.worst_ratio}};
    if (hypothesis && 2 * w <= K) o.require(r.holds, "h_delta product upper bound", inst + " delta=" + delta_text);
  } else if (!check.empty()) {
    throw std::invalid_argument("unknown --check " + check);
  }
  return o;
}

Outcome cmd_approx_degree(const std::string& f, int n, const std::string& eps_text) {
  const std::vector<Rational> values = resolve_function(f, n);
  const int nn = static_cast<int>(values.size()) - 1;
  const Rational eps = parse_rational(eps_text);
  const int deg = approx_degree(values, eps);
  Outcome o;
  o.result["n"] = nn;
  o.result["approx_degree"] = deg;
  const MinimaxResult at = minimax_lp(MinimaxInstance::on_weights(nn, values, deg));
  o.result["error_at_degree"] = to_string(at.epsilon);
  o.result["poly"] = to_json(at.poly);
  if (deg > 0) {
    const MinimaxResult below = minimax_lp(MinimaxInstance::on_weights(nn, values, deg - 1));
    o.result["error_below"] = to_string(below.epsilon);
    o.result["certificate"] = to_json(*below.certificate.witness);
  }
  return o;
}

Outcome cmd_ramp(int k, int K, int n, bool finite) {
  const RampAdvantage r = ramp_advantage(k, K);
  Outcome o;
  o.result["radicand"] = to_string(r.radicand);
  o.result["value_float"] = r.value;
  o.result["proof_radicand"] = to_string(r.proof_radicand);
  o.result["proof_value_float"] = r.proof_value;
  o.result["l2_tail_bound"] = to_string(l2_tail_bound(K, k));
  if (finite) {
    if (n <= 0) throw std::invalid_argument("--finite needs --n");
    const FiniteRamp fr = finite_n_ramp(k, K, n);
    o.result["finite"] = {{"n", n},
                          {"advantage", to_string(fr.advantage)},
                          {"advantage_float", to_double(fr.advantage)},
                          {"limit_value_float", fr.limit_value},
                          {"kwise", fr.kwise},
                          {"mu", to_json(fr.mu)},
                          {"nu", to_json(fr.nu)}};
    o.require(fr.kwise, "perfect k-wise indistinguishability of the LP pair", "n=" + std::to_string(n));
  }
  return o;
}

Outcome cmd_weight_bound(const std::string& f, int n, int K, const std::string& eps_text, bool construct, bool lower) {
  if (!construct && !lower) construct = lower = true;
  const std::vector<Rational> values = resolve_function(f, n);
  std::vector<int> pred;
  for (const auto& v : values) {
    if (v != 0 && v != 1) throw std::invalid_argument("weight-bound needs a Boolean predicate");
    pred.push_back(v == 1 ? 1 : 0);
  }
  const SymmetricSpec spec = SymmetricSpec::from_predicate(pred);
  const Rational eps = parse_rational(eps_text);
  Outcome o;
  o.result["n"] = spec.n;
  o.result["k_f"] = spec.k_f;
  std::optional<Rational> built, bound;
  if (construct) {
    const auto [poly, rep] = symub_construct(spec, K, eps);
    built = rep.weight;
    o.result["construct"] = {{"degree", rep.degree},
                             {"weight", to_string(rep.weight)},
                             {"weight_float", to_double(rep.weight)},
                             {"error", to_string(rep.error)},
                             {"route", rep.route},
                             {"blocks", rep.blocks},
                             {"outer_degree", rep.outer_degree},
                             {"bound_exponent_float", rep.bound_exponent},
                             {"bound_exponent_improved_float", rep.bound_exponent_improved}};
  }
  if (lower) {
    const int deg = approx_degree(values, Rational(1, 3));
    Json lj = {{"approx_degree_third", deg}};
    if (deg == 0) {
      lj["bound"] = "0/1";
    } else {
      const MinimaxResult cert = minimax_lp(MinimaxInstance::on_weights(spec.n, values, deg - 1));
      const WeightLowerBound wl = weight_lower_bound(cert.certificate, K, eps);
      lj["certificate_degree"] = deg - 1;
      lj["certificate_epsilon"] = to_string(cert.epsilon);
      lj["max_correlation"] = to_string(wl.max_correlation);
      lj["unbounded"] = wl.unbounded;
      lj["bound"] = to_string(wl.bound);
      lj["bound_float"] = to_double(wl.bound);
      if (!wl.unbounded) bound = wl.bound;
      if (wl.unbounded && built) o.require(false, "weight sandwich", "lower bound unbounded but a polynomial exists");
    }
    o.result["lower"] = std::move(lj);
  }
  if (built && bound) o.require(*bound <= *built, "weight sandwich", "K=" + std::to_string(K));
  return o;
}

Outcome cmd_consolidate(const std::string& dist_path, int t) {
  const SymmetricDistribution d = distribution_from_json(read_json_file(dist_path));
  const SymmetricDistribution c = consolidate_and(d, t);
  Outcome o;
  o.result["t"] = t;
  o.result["consolidated"] = to_json(c);
  return o;
}

Outcome cmd_indist_check(const std::string& p1, const std::string& p2, int k) {
  const SymmetricDistribution d1 = distribution_from_json(read_json_file(p1));
  const SymmetricDistribution d2 = distribution_from_json(read_json_file(p2));
  Outcome o;
  o.result["stat_distance"] = to_string(stat_distance_symmetric(d1, d2));
  o.result["kwise"] = kwise_indistinguishable(d1, d2, k);
  if (k >= 1) {
    o.result["projected_stat_distance"] =
        to_string(stat_distance_symmetric(project_symmetric(d1, k), project_symmetric(d2, k)));
  }
  return o;
}

// ---------------------------------------------------------------------------
// Output.

void flatten(const Json& j, const std::string& prefix, Table& t) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(*it, prefix.empty() ? it.key() : prefix + "." + it.key(), t);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", t);
  } else if (j.is_number_float()) {
    t.rows.push_back({prefix, fmt_float(j.get<double>())});
  } else if (j.is_string()) {
    t.rows.push_back({prefix, j.get<std::string>()});
  } else {
    t.rows.push_back({prefix, j.dump()});
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string render(const Json& envelope, const Outcome& o, const std::string& format) {
  if (format == "json") return envelope.dump(2) + "\n";
  std::ostringstream os;
  os << "# " << kToolName << " " << kVersion << "\n";
  os << "# config: " << envelope.at("config").dump() << "\n";
  os << "# status: " << envelope.at("status").get<std::string>() << "\n";
  Table t;
  if (o.table) {
    t = *o.table;
  } else {
    t.header = {"key", "value"};
    flatten(o.result, "", t);
  }
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_escape(t.header[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
    os << "\n";
  }
  return os.str();
}

void write_atomic(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << text;
    if (!f) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, target);
}

std::string resolve_output(const Globals& g, const std::string& command, const std::string& override_path) {
  if (!override_path.empty()) return override_path;
  if (!g.out.empty()) return g.out;
  if (const char* dir = std::getenv("APPROXDEG_OUT_DIR"); dir && *dir)
    return (std::filesystem::path(dir) / (command + (g.format == "csv" ? ".csv" : ".json"))).string();
  return {};
}

}  // namespace

Json command_schema() {
  auto flag = [](const char* name, const char* type, bool required, const char* help) {
    return Json{{"flag", name}, {"type", type}, {"required", required}, {"help", help}};
  };
  Json cmds = Json::array();
  cmds.push_back({{"command", "dual-and"},
                  {"flags",
                   {flag("--n", "int", true, "number of variables (1..24)"),
                    flag("--weights", "rational list", false, "comma-separated weights, default all ones"),
                    flag("--d", "rational", true, "threshold degree"),
                    flag("--emit", "path", false, "write the witness JSON")}}});
  cmds.push_back({{"command", "sample-shares"},
                  {"flags",
                   {flag("--witness", "path", true, "witness JSON"), flag("--secret", "+1|-1", true, "secret bit"),
                    flag("--count", "int", true, "number of share vectors")}}});
  cmds.push_back({{"command", "symcheb pw"},
                  {"flags",
                   {flag("--n", "int", true, "bits"), flag("--K", "int", true, "test size"),
                    flag("--w", "int", true, "weight"), flag("--check", "bounded|main3|normg|fupper", false, "check"),
                    flag("--k", "int", false, "truncation degree for main3"),
                    flag("--eps", "rational", false, "epsilon for normg (default 1/10)"),
                    flag("--delta", "rational", false, "delta for fupper (default 1/100)"),
                    flag("--samples", "int", false, "theta samples or grid size"),
                    flag("--json", "path", false, "report path")}}});
  cmds.push_back({{"command", "approx-degree"},
                  {"flags",
                   {flag("--f", "and|or|maj|parity|exact-half|exact-threshold|file.json", true, "function"),
                    flag("--n", "int", false, "bits for named functions"), flag("--eps", "rational", true, "error")}}});
  cmds.push_back({{"command", "ramp"},
                  {"flags",
                   {flag("--k", "int", true, "perfect indistinguishability"), flag("--K", "int", true, "test size"),
                    flag("--n", "int", false, "bits for --finite"), flag("--finite", "bool", false, "finite-n LP")}}});
  cmds.push_back({{"command", "weight-bound"},
                  {"flags",
                   {flag("--f", "name|spec.json", true, "symmetric function"), flag("--n", "int", false, "bits"),
                    flag("--K", "int", true, "degree"), flag("--eps", "rational", true, "error"),
                    flag("--construct", "bool", false, "constructive side"),
                    flag("--lower", "bool", false, "dual lower bound")}}});
  cmds.push_back({{"command", "consolidate"},
                  {"flags", {flag("--dist", "path", true, "distribution JSON"), flag("--t", "int", true, "block size")}}});
  cmds.push_back({{"command", "indist-check"},
                  {"flags",
                   {flag("--dist1", "path", true, "distribution JSON"), flag("--dist2", "path", true, "distribution JSON"),
                    flag("--k", "int", true, "marginal size")}}});
  return {{"tool", kToolName},
          {"version", kVersion},
          {"global_flags",
           {flag("--seed", "int", false, "RNG seed (default 0)"), flag("--out", "path", false, "output file"),
            flag("--format", "json|csv", false, "output format"),
            flag("--threads", "int", false, "accepted for compatibility; runs are single-threaded"),
            flag("--csv", "bool", false, "same as --format csv"),
            flag("--list-commands", "bool", false, "print this schema")}},
          {"env", {{"APPROXDEG_OUT_DIR", "default directory for <command>.json/.csv"}}},
          {"commands", cmds}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dual polynomials, Chebyshev machinery and weight-degree tools", kToolName};
  app.set_version_flag("--version", kVersion);
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--out", g.out, "output file");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--list-commands", g.list_commands, "print the command schema as JSON");
  bool csv = false;
  app.add_flag("--csv", csv, "shorthand for --format csv");
  app.require_subcommand(0, 1);
  app.fallthrough();

  Json params = Json::object();
  std::string command;
  std::function<Outcome()> action;
  std::string override_path;

  // dual-and
  int da_n = 0;
  std::string da_weights, da_d, da_emit;
  auto* da = app.add_subcommand("dual-and", "explicit dual witness for (weighted) AND");
  da->add_option("--n", da_n)->required();
  da->add_option("--weights", da_weights);
  da->add_option("--d", da_d)->required();
  da->add_option("--emit", da_emit);
  da->callback([&] {
    command = "dual-and";
    params = {{"n", da_n}, {"weights", da_weights}, {"d", da_d}, {"emit", da_emit}};
    action = [&] { return cmd_dual_and(da_n, da_weights, da_d, da_emit); };
  });

  // sample-shares
  std::string ss_witness, ss_secret;
  long ss_count = 0;
  auto* ss = app.add_subcommand("sample-shares", "sample secret shares from a witness");
  ss->add_option("--witness", ss_witness)->required();
  ss->add_option("--secret", ss_secret)->required()->check(CLI::IsMember({"+1", "1", "-1"}));
  ss->add_option("--count", ss_count)->required();
  ss->callback([&] {
    command = "sample-shares";
    params = {{"witness", ss_witness}, {"secret", ss_secret}, {"count", ss_count}};
    action = [&] { return cmd_sample_shares(ss_witness, ss_secret == "-1" ? -1 : 1, ss_count, g.seed); };
  });

  // symcheb pw
  int sc_n = 0, sc_K = 0, sc_w = 0, sc_k = -1, sc_samples = 64;
  std::string sc_check, sc_eps = "1/10", sc_delta = "1/100", sc_json;
  auto* sc = app.add_subcommand("symcheb", "symmetrized tests and Chebyshev checks");
  sc->require_subcommand(1);
  auto* pw = sc->add_subcommand("pw", "build p_w and run one check");
  pw->add_option("--n", sc_n)->required();
  pw->add_option("--K", sc_K)->required();
  pw->add_option("--w", sc_w)->required();
  pw->add_option("--check", sc_check)->check(CLI::IsMember({"bounded", "main3", "normg", "fupper"}));
  pw->add_option("--k", sc_k);
  pw->add_option("--eps", sc_eps);
  pw->add_option("--delta", sc_delta);
  pw->add_option("--samples", sc_samples)->check(CLI::PositiveNumber);
  pw->add_option("--json", sc_json);
  pw->callback([&] {
    command = "symcheb";
    params = {{"sub", "pw"}, {"n", sc_n},         {"K", sc_K},         {"w", sc_w},         {"check", sc_check},
              {"k", sc_k},   {"eps", sc_eps},     {"delta", sc_delta}, {"samples", sc_samples}};
    override_path = sc_json;
    action = [&] { return cmd_symcheb_pw(sc_n, sc_K, sc_w, sc_check, sc_k, sc_eps, sc_delta, sc_samples); };
  });

  // approx-degree
  std::string ad_f, ad_eps;
  int ad_n = 0;
  auto* ad = app.add_subcommand("approx-degree", "epsilon-approximate degree of a symmetric function");
  ad->add_option("--f", ad_f)->required();
  ad->add_option("--n", ad_n);
  ad->add_option("--eps", ad_eps)->required();
  ad->callback([&] {
    command = "approx-degree";
    params = {{"f", ad_f}, {"n", ad_n}, {"eps", ad_eps}};
    action = [&] { return cmd_approx_degree(ad_f, ad_n, ad_eps); };
  });

  // ramp
  int rp_k = 0, rp_K = 0, rp_n = 0;
  bool rp_finite = false;
  auto* rp = app.add_subcommand("ramp", "ramp-scheme advantage formula");
  rp->add_option("--k", rp_k)->required();
  rp->add_option("--K", rp_K)->required();
  rp->add_option("--n", rp_n);
  rp->add_flag("--finite", rp_finite);
  rp->callback([&] {
    command = "ramp";
    params = {{"k", rp_k}, {"K", rp_K}, {"n", rp_n}, {"finite", rp_finite}};
    action = [&] { return cmd_ramp(rp_k, rp_K, rp_n, rp_finite); };
  });

  // weight-bound
  std::string wb_f, wb_eps;
  int wb_n = 0, wb_K = 0;
  bool wb_construct = false, wb_lower = false;
  auto* wb = app.add_subcommand("weight-bound", "weight-degree construction and dual lower bound");
  wb->add_option("--f", wb_f)->required();
  wb->add_option("--n", wb_n);
  wb->add_option("--K", wb_K)->required();
  wb->add_option("--eps", wb_eps)->required();
  wb->add_flag("--construct", wb_construct);
  wb->add_flag("--lower", wb_lower);
  wb->callback([&] {
    command = "weight-bound";
    params = {{"f", wb_f}, {"n", wb_n}, {"K", wb_K}, {"eps", wb_eps}, {"construct", wb_construct}, {"lower", wb_lower}};
    action = [&] { return cmd_weight_bound(wb_f, wb_n, wb_K, wb_eps, wb_construct, wb_lower); };
  });

  // consolidate
  std::string co_dist;
  int co_t = 0;
  auto* co = app.add_subcommand("consolidate", "count all-ones blocks of a symmetric distribution");
  co->add_option("--dist", co_dist)->required();
  co->add_option("--t", co_t)->required();
  co->callback([&] {
    command = "consolidate";
    params = {{"dist", co_dist}, {"t", co_t}};
    action = [&] { return cmd_consolidate(co_dist, co_t); };
  });

  // indist-check
  std::string ic_d1, ic_d2;
  int ic_k = 0;
  auto* ic = app.add_subcommand("indist-check", "statistical distance and k-wise indistinguishability");
  ic->add_option("--dist1", ic_d1)->required();
  ic->add_option("--dist2", ic_d2)->required();
  ic->add_option("--k", ic_k)->required();
  ic->callback([&] {
    command = "indist-check";
    params = {{"dist1", ic_d1}, {"dist2", ic_d2}, {"k", ic_k}};
    action = [&] { return cmd_indist_check(ic_d1, ic_d2, ic_k); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (csv) g.format = "csv";
  if (g.list_commands) {
    out << command_schema().dump(2) << "\n";
    return kOk;
  }
  if (!action) {
    err << app.help();
    return kUsage;
  }

  Outcome outcome;
  int code = kOk;
  try {
    outcome = action();
  } catch (const CertificationError& e) {
    outcome.violation = {e.property(), e.instance()};
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (outcome.violation) code = kViolated;

  Json envelope = {{"tool", kToolName},
                   {"version", kVersion},
                   {"config",
                    {{"command", command},
                     {"parameters", params},
                     {"seed", g.seed},
                     {"format", g.format},
                     {"threads", g.threads}}},
                   {"status", outcome.violation ? "violated" : "ok"}};
  if (outcome.violation)
    envelope["violation"] = {{"property", outcome.violation->first}, {"instance", outcome.violation->second}};
  if (!outcome.warnings.empty()) envelope["warnings"] = outcome.warnings;
  envelope["result"] = outcome.result;

  const std::string text = render(envelope, outcome, g.format);
  const std::string path = resolve_output(g, command, override_path);
  try {
    if (path.empty())
      out << text;
    else
      write_atomic(path, text);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (outcome.violation)
    err << "violated: " << outcome.violation->first << " at " << outcome.violation->second << "\n";
  return code;
}

}  // namespace dualpoly::cli
