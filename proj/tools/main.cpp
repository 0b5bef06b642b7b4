#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "serialize.hpp"

namespace {

using namespace sidon;
using cli::json;

constexpr int kExitSidon = 0;
constexpr int kExitOk = 0;
constexpr int kExitCampaignFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitNotSidon = 10;

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start);
}

std::uint64_t default_pair_budget() {
  if (const char* env = std::getenv("SIDON_MEMORY_BUDGET"))
    return to_u64(parse_nat(env));
  return 1000000;
}

Rat env_rat_or(const char* name, Rat fallback) {
  if (const char* env = std::getenv(name)) return parse_rat(env);
  return fallback;
}

// Flags win over the environment, the environment over the built-ins.
Rat resolve_constant(ThresholdTag tag, const std::string& c_flag) {
  if (!c_flag.empty()) return parse_rat(c_flag);
  switch (tag) {
    case ThresholdTag::cubes_pow:
      return env_rat_or("SIDON_DEFAULT_C_CUBES", default_c_cubes());
    case ThresholdTag::quartic_sidon:
      return env_rat_or("SIDON_DEFAULT_C_QUARTIC_SIDON",
                        default_c_quartic_sidon());
    case ThresholdTag::quartic_pow:
      return env_rat_or("SIDON_DEFAULT_C_QUARTIC_POW",
                        default_c_quartic_pow());
    default:
      throw std::invalid_argument("no constant applies to this kind");
  }
}

ThresholdKind build_kind(const std::string& name, const std::string& c_flag,
                         const std::string& eps_flag, int power) {
  ThresholdTag tag = threshold_tag_from_name(name);
  if (tag == ThresholdTag::custom)
    throw std::invalid_argument(
        "use --length for fixed-length intervals instead of --kind custom");
  int implied = implied_power(tag);
  if (implied != 0 && implied != power)
    throw std::invalid_argument("kind '" + name + "' applies to power " +
                                std::to_string(implied) + ", not " +
                                std::to_string(power));
  switch (tag) {
    case ThresholdTag::squares_open:
      return ThresholdKind::squares_open();
    case ThresholdTag::squares_cor_open:
      return ThresholdKind::squares_cor_open();
    case ThresholdTag::squares_eps:
      if (eps_flag.empty())
        throw std::invalid_argument("kind squares-eps requires --eps");
      return ThresholdKind::squares_eps(parse_rat(eps_flag));
    case ThresholdTag::cubes_open:
      return ThresholdKind::cubes_open();
    case ThresholdTag::cubes_cor_closed:
      return ThresholdKind::cubes_cor_closed();
    case ThresholdTag::cubes_pow:
      return ThresholdKind::cubes_pow(resolve_constant(tag, c_flag));
    case ThresholdTag::quartic_sidon:
      return ThresholdKind::quartic_sidon(resolve_constant(tag, c_flag));
    case ThresholdTag::quartic_pow:
      return ThresholdKind::quartic_pow(resolve_constant(tag, c_flag));
    default:
      throw std::invalid_argument("unsupported kind '" + name + "'");
  }
}

json quadruple_result(const PowerQuadruple& q) {
  json j{{"type", "quadruple"}, {"k", q.k}};
  j.update(cli::to_json(q));
  return j;
}

void require_valid(const PowerQuadruple& q) {
  if (!q.valid())
    throw std::logic_error("constructed quadruple failed re-verification");
}

// ---------------------------------------------------------------- verify --

struct VerifyArgs {
  int power = 0;
  std::string start;
  std::string length;
  std::string kind;
  std::string c, eps;
  std::size_t witness_cap = 8;
  std::uint64_t budget = 0;
  std::string format = "json";
};

int cmd_verify(const VerifyArgs& a) {
  const auto start_time = Clock::now();
  Nat N = parse_nat(a.start);
  VerifyOptions opts{a.witness_cap, a.budget};
  json args{{"power", a.power}, {"start", a.start}};
  SidonReport rep;
  if (!a.length.empty()) {
    if (!a.kind.empty())
      throw std::invalid_argument("--length and --kind are exclusive");
    Nat H = parse_nat(a.length);
    args["length"] = cli::str(H);
    rep = verify_interval(a.power, N, H, opts);
  } else if (!a.kind.empty()) {
    ThresholdKind kind = build_kind(a.kind, a.c, a.eps, a.power);
    args["kind"] = cli::kind_json(kind);
    rep = verify_theorem_interval(IntervalSpec{a.power, N, kind}, opts);
  } else {
    throw std::invalid_argument("verify needs --length or --kind");
  }
  args["witness_cap"] = a.witness_cap;
  args["memory_budget"] = a.budget;
  if (a.format == "csv") {
    std::cout << cli::witnesses_csv(rep);
  } else {
    cli::print_envelope(cli::envelope("verify", std::move(args),
                                      cli::to_json(rep), since(start_time)));
  }
  return rep.verdict == Verdict::sidon ? kExitSidon : kExitNotSidon;
}

// ------------------------------------------------------------- construct --

struct ConstructArgs {
  std::string family;
  std::string start, index, n, p, q, a, b;
  unsigned index_cap = 64;
};

int cmd_construct(const ConstructArgs& a) {
  const auto start_time = Clock::now();
  json args{{"family", a.family}};
  json result;

  auto need = [](const std::string& value, const char* flag,
                 const char* family) -> const std::string& {
    if (value.empty())
      throw std::invalid_argument(std::string("family ") + family +
                                  " requires " + flag);
    return value;
  };

  if (a.family == "squares") {
    Nat N = parse_nat(need(a.start, "--start", "squares"));
    args["start"] = cli::str(N);
    SquaresTrace tr = squares_quadruple(N);
    require_valid(tr.quadruple);
    result = cli::to_json(tr);
  } else if (a.family == "cubes-pell") {
    unsigned m = static_cast<unsigned>(
        to_u64(parse_nat(need(a.index, "--index", "cubes-pell"))));
    args["index"] = m;
    CubesPellTrace tr = cubes_pell_quadruple(m);
    require_valid(tr.quadruple);
    result = cli::to_json(tr);
  } else if (a.family == "cubes-poly") {
    Nat n = parse_nat(need(a.n, "--n", "cubes-poly"));
    args["n"] = cli::str(n);
    PowerQuadruple q = cubes_poly_quadruple(n);
    require_valid(q);
    result = quadruple_result(q);
  } else if (a.family == "cubes-scaled") {
    Nat N = parse_nat(need(a.start, "--start", "cubes-scaled"));
    args["start"] = cli::str(N);
    args["index_cap"] = a.index_cap;
    ScaledCubesTrace tr = cubes_scaled_quadruple(N, a.index_cap);
    require_valid(tr.quadruple);
    result = cli::to_json(tr);
  } else if (a.family == "quartic-poly") {
    Nat n = parse_nat(need(a.n, "--n", "quartic-poly"));
    args["n"] = cli::str(n);
    PowerQuadruple q = quartic_poly_quadruple(n);
    require_valid(q);
    result = quadruple_result(q);
  } else if (a.family == "quartic-interval") {
    Nat N = parse_nat(need(a.start, "--start", "quartic-interval"));
    args["start"] = cli::str(N);
    PowerQuadruple q = quartic_short_interval(N);
    require_valid(q);
    result = quadruple_result(q);
  } else if (a.family == "euler-binet") {
    Rat p = parse_rat(need(a.p, "--p", "euler-binet"));
    Rat q = parse_rat(need(a.q, "--q", "euler-binet"));
    args["p"] = cli::str(p);
    args["q"] = cli::str(q);
    auto vals = euler_binet(p, q);
    Rat lhs = vals[0] * vals[0] * vals[0] + vals[1] * vals[1] * vals[1];
    Rat rhs = vals[2] * vals[2] * vals[2] + vals[3] * vals[3] * vals[3];
    if (lhs != rhs) throw std::logic_error("cube identity re-check failed");
    result = cli::rational_quadruple_json(vals, 3);
  } else if (a.family == "euler-quartic") {
    Rat av = parse_rat(need(a.a, "--a", "euler-quartic"));
    Rat bv = parse_rat(need(a.b, "--b", "euler-quartic"));
    args["a"] = cli::str(av);
    args["b"] = cli::str(bv);
    QuarticParams par = QuarticParams::from(av, bv);
    auto vals = euler_quartic(par);
    auto p4 = [](const Rat& v) {
      Rat s = v * v;
      return Rat(s * s);
    };
    if (p4(vals[0]) + p4(vals[1]) != p4(vals[2]) + p4(vals[3]))
      throw std::logic_error("quartic identity re-check failed");
    result = cli::rational_quadruple_json(vals, 4);
    result["params"] = json{{"f", cli::str(par.f)},
                            {"g", cli::str(par.g)},
                            {"z", cli::str(par.zpar)},
                            {"p", cli::str(par.p)},
                            {"q", cli::str(par.q)},
                            {"r", cli::str(par.r)},
                            {"s", cli::str(par.s)}};
  } else {
    throw std::invalid_argument("unknown family '" + a.family + "'");
  }

  cli::print_envelope(cli::envelope("construct", std::move(args),
                                    std::move(result), since(start_time)));
  return kExitOk;
}

// ------------------------------------------------------------------ pell --

struct PellArgs {
  unsigned long a = 1;
  std::string bound;
  int obstruction_limit = -1;
  int iterate = -1;
};

int cmd_pell(const PellArgs& a) {
  const auto start_time = Clock::now();
  int modes = (!a.bound.empty() ? 1 : 0) + (a.obstruction_limit >= 0 ? 1 : 0) +
              (a.iterate >= 0 ? 1 : 0);
  if (modes != 1)
    throw std::invalid_argument(
        "pell needs exactly one of --bound, --obstruction-limit, --iterate");
  json args{{"a", a.a}};
  json result;
  if (a.iterate >= 0) {
    if (a.a != 1)
      throw std::invalid_argument(
          "--iterate walks the solution chain of the a=1 instance; use --a 1");
    args["iterate"] = a.iterate;
    result = cli::to_json(pell_at(static_cast<unsigned>(a.iterate)));
  } else if (!a.bound.empty()) {
    Nat bound = parse_nat(a.bound);
    args["bound"] = cli::str(bound);
    GenPellInstance inst{a.a};
    auto sols = gen_pell_solutions_bounded(inst, bound);
    json list = json::array();
    for (const auto& [X, Y] : sols)
      list.push_back(json{{"X", cli::str(X)}, {"Y", cli::str(Y)}});
    result = json{{"type", "gen_pell_solutions"},
                  {"a", a.a},
                  {"rhs", cli::str(inst.rhs())},
                  {"bound", cli::str(bound)},
                  {"solutions", std::move(list)}};
  } else {
    args["obstruction_limit"] = a.obstruction_limit;
    GenPellInstance inst{a.a};
    auto mod = local_obstruction(inst,
                                 static_cast<unsigned>(a.obstruction_limit));
    result = json{{"type", "obstruction_report"},
                  {"a", a.a},
                  {"rhs", cli::str(inst.rhs())},
                  {"limit", a.obstruction_limit},
                  {"modulus", mod ? json(*mod) : json(nullptr)}};
  }
  cli::print_envelope(cli::envelope("pell", std::move(args), std::move(result),
                                    since(start_time)));
  return kExitOk;
}

// ------------------------------------------------------------------ scan --

struct ScanArgs {
  int power = 0;
  std::string kind;
  std::string from, to;
  std::string c, eps;
  unsigned jobs = 1;
  std::uint64_t budget = 0;
  std::string format = "json";
};

int cmd_scan(const ScanArgs& a) {
  const auto start_time = Clock::now();
  ThresholdKind kind = build_kind(a.kind, a.c, a.eps, a.power);
  Nat from = parse_nat(a.from);
  Nat to = parse_nat(a.to);
  VerifyOptions opts{1, a.budget};
  ScanReport rep = scan(a.power, kind, from, to, a.jobs, opts);
  json args{{"power", a.power},      {"kind", cli::kind_json(kind)},
            {"from", cli::str(from)}, {"to", cli::str(to)},
            {"jobs", a.jobs},        {"memory_budget", a.budget}};
  if (a.format == "csv") {
    std::cout << cli::failures_csv(rep);
  } else {
    cli::print_envelope(cli::envelope("scan", std::move(args),
                                      cli::to_json(rep), since(start_time)));
  }
  return rep.failures.empty() ? kExitSidon : kExitNotSidon;
}

// --------------------------------------------------------------- density --

struct DensityArgs {
  std::string m, t;
  std::uint64_t budget = 0;
  std::string format = "json";
};

int cmd_density(const DensityArgs& a) {
  const auto start_time = Clock::now();
  Nat M = parse_nat(a.m);
  Nat T = parse_nat(a.t);
  VerifyOptions opts{1, a.budget};
  DensityScanReport rep = density_scan(M, T, opts);
  json args{{"M", cli::str(M)}, {"T", cli::str(T)},
            {"memory_budget", a.budget}};
  cli::print_envelope(cli::envelope("density", std::move(args),
                                    cli::to_json(rep), since(start_time)));
  return kExitOk;
}

// -------------------------------------------------------------- campaign --

struct CampaignArgs {
  std::string theorem;
  std::string nmax = "10000";
  std::string closed_nmax;
  unsigned mmax = 5;
  unsigned samples = 50;
  std::string eps = "1";
  std::string c;
  std::uint64_t seed = 20260810;
  unsigned jobs = 1;
  std::uint64_t budget = 0;
};

int cmd_campaign(const CampaignArgs& a) {
  const auto start_time = Clock::now();
  VerifyOptions opts{8, a.budget};
  Nat nmax = parse_nat(a.nmax);
  CampaignResult res;
  json args{{"theorem", a.theorem}};

  if (a.theorem == "t1") {
    Nat closed = a.closed_nmax.empty() ? Nat(nmax * 10)
                                       : parse_nat(a.closed_nmax);
    args["nmax"] = cli::str(nmax);
    args["closed_nmax"] = cli::str(closed);
    args["jobs"] = a.jobs;
    res = run_t1(nmax, closed, a.jobs, opts);
  } else if (a.theorem == "t3") {
    Rat eps = parse_rat(a.eps);
    args["eps"] = cli::str(eps);
    args["samples"] = a.samples;
    res = run_t3(eps, a.samples, a.seed);
  } else if (a.theorem == "t4") {
    args["nmax"] = cli::str(nmax);
    args["mmax"] = a.mmax;
    args["jobs"] = a.jobs;
    res = run_t4(nmax, a.mmax, a.jobs, opts);
  } else if (a.theorem == "t5") {
    Rat c = a.c.empty() ? env_rat_or("SIDON_DEFAULT_C_CUBES",
                                     default_c_cubes())
                        : parse_rat(a.c);
    args["c"] = cli::str(c);
    args["samples"] = a.samples;
    res = run_t5(a.samples, c, a.seed);
  } else if (a.theorem == "t7") {
    Rat c = a.c.empty() ? env_rat_or("SIDON_DEFAULT_C_QUARTIC_SIDON",
                                     default_c_quartic_sidon())
                        : parse_rat(a.c);
    args["c"] = cli::str(c);
    args["nmax"] = cli::str(nmax);
    args["jobs"] = a.jobs;
    res = run_t7(nmax, c, a.jobs, opts);
  } else if (a.theorem == "t8") {
    Rat c = a.c.empty() ? env_rat_or("SIDON_DEFAULT_C_QUARTIC_POW",
                                     default_c_quartic_pow())
                        : parse_rat(a.c);
    args["c"] = cli::str(c);
    args["samples"] = a.samples;
    res = run_t8(a.samples, c, a.seed);
  } else {
    throw std::invalid_argument("unknown campaign '" + a.theorem +
                                "' (expected t1, t3, t4, t5, t7 or t8)");
  }

  cli::print_envelope(cli::envelope("campaign", std::move(args),
                                    cli::to_json(res), since(start_time),
                                    res.seed));
  return res.pass ? kExitOk : kExitCampaignFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sidon -- exact verification and construction of equal power-sum\n"
      "collisions in short integer intervals"};
  app.require_subcommand(1);

  const std::uint64_t budget_default = default_pair_budget();

  VerifyArgs verify_args;
  verify_args.budget = budget_default;
  auto* verify = app.add_subcommand(
      "verify", "Decide whether {n^k : N <= n <= N+H} has distinct pair sums");
  verify->add_option("--power", verify_args.power, "power k (2, 3 or 4)")
      ->required();
  verify->add_option("--start", verify_args.start, "interval base point N")
      ->required();
  verify->add_option("--length", verify_args.length, "explicit length H");
  verify->add_option("--kind", verify_args.kind,
                     "threshold kind (squares-open, cubes-open, ...)");
  verify->add_option("--c", verify_args.c, "constant for power-law kinds");
  verify->add_option("--eps", verify_args.eps, "epsilon for squares-eps");
  verify->add_option("--witness-cap", verify_args.witness_cap,
                     "most witnesses to keep");
  verify->add_option("--memory-budget", verify_args.budget,
                     "pair-count budget");
  verify->add_option("--format", verify_args.format, "json or csv");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand(
      "construct", "Emit an explicit equal power-sum quadruple");
  construct
      ->add_option("--family", construct_args.family,
                   "squares | cubes-pell | cubes-poly | cubes-scaled | "
                   "quartic-poly | quartic-interval | euler-binet | "
                   "euler-quartic")
      ->required();
  construct->add_option("--start", construct_args.start, "base point N");
  construct->add_option("--index", construct_args.index, "chain index m");
  construct->add_option("--n", construct_args.n, "polynomial parameter n");
  construct->add_option("--p", construct_args.p, "rational parameter p");
  construct->add_option("--q", construct_args.q, "rational parameter q");
  construct->add_option("--a", construct_args.a, "rational parameter a");
  construct->add_option("--b", construct_args.b, "rational parameter b");
  construct->add_option("--index-cap", construct_args.index_cap,
                        "chain search cap for cubes-scaled");

  PellArgs pell_args;
  auto* pell = app.add_subcommand(
      "pell", "Generalized Pell instances: solutions and obstructions");
  pell->add_option("--a", pell_args.a, "instance parameter a")->required();
  pell->add_option("--bound", pell_args.bound,
                   "list solutions with 0 <= Y <= X <= bound");
  pell->add_option("--obstruction-limit", pell_args.obstruction_limit,
                   "search moduli up to this limit");
  pell->add_option("--iterate", pell_args.iterate,
                   "walk the a=1 solution chain to index m");

  ScanArgs scan_args;
  scan_args.budget = budget_default;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Run verify over every N in a range under a threshold kind");
  scan_cmd->add_option("--power", scan_args.power, "power k")->required();
  scan_cmd->add_option("--kind", scan_args.kind, "threshold kind")
      ->required();
  scan_cmd->add_option("--from", scan_args.from, "first N")->required();
  scan_cmd->add_option("--to", scan_args.to, "last N")->required();
  scan_cmd->add_option("--c", scan_args.c, "constant for power-law kinds");
  scan_cmd->add_option("--eps", scan_args.eps, "epsilon for squares-eps");
  scan_cmd->add_option("--jobs", scan_args.jobs, "worker threads");
  scan_cmd->add_option("--memory-budget", scan_args.budget,
                       "pair-count budget");
  scan_cmd->add_option("--format", scan_args.format, "json or csv");

  DensityArgs density_args;
  density_args.budget = budget_default;
  auto* density = app.add_subcommand(
      "density",
      "Exploratory: count non-Sidon cube subintervals across [M, 2M]");
  density->add_option("--m", density_args.m, "left endpoint M")->required();
  density->add_option("--t", density_args.t, "subinterval parameter T")
      ->required();
  density->add_option("--memory-budget", density_args.budget,
                      "pair-count budget");

  CampaignArgs campaign_args;
  campaign_args.budget = budget_default;
  auto* campaign = app.add_subcommand(
      "campaign", "Named verification campaigns with structured evidence");
  campaign
      ->add_option("--theorem", campaign_args.theorem,
                   "t1 | t3 | t4 | t5 | t7 | t8")
      ->required();
  campaign->add_option("--nmax", campaign_args.nmax, "scan upper bound");
  campaign->add_option("--closed-nmax", campaign_args.closed_nmax,
                       "t1 closed-endpoint bound (default 10 * nmax)");
  campaign->add_option("--mmax", campaign_args.mmax, "chain index bound (t4)");
  campaign->add_option("--samples", campaign_args.samples, "sample count");
  campaign->add_option("--eps", campaign_args.eps, "epsilon (t3)");
  campaign->add_option("--c", campaign_args.c, "constant (t5, t7, t8)");
  campaign->add_option("--seed", campaign_args.seed, "sampling seed");
  campaign->add_option("--jobs", campaign_args.jobs, "worker threads");
  campaign->add_option("--memory-budget", campaign_args.budget,
                       "pair-count budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(verify_args);
    if (app.got_subcommand(construct)) return cmd_construct(construct_args);
    if (app.got_subcommand(pell)) return cmd_pell(pell_args);
    if (app.got_subcommand(scan_cmd)) return cmd_scan(scan_args);
    if (app.got_subcommand(density)) return cmd_density(density_args);
    if (app.got_subcommand(campaign)) return cmd_campaign(campaign_args);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return kExitUsage;
}
