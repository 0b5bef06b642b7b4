#include "serialize.hpp"

#include <iostream>

namespace sidon::cli {

std::string str(const Nat& v) { return v.get_str(); }
std::string str(const Rat& v) { return v.get_str(); }

json to_json(const PowerQuadruple& q) {
  return json{{"x", str(q.x)},
              {"y", str(q.y)},
              {"z", str(q.z)},
              {"t", str(q.t)},
              {"sum", str(q.power_sum())}};
}

json to_json(const SidonReport& rep) {
  json wits = json::array();
  for (const auto& w : rep.witnesses) wits.push_back(to_json(w));
  return json{{"type", "sidon_report"},
              {"k", rep.k},
              {"N", str(rep.N)},
              {"H", str(rep.H)},
              {"verdict", rep.verdict == Verdict::sidon ? "sidon"
                                                        : "not_sidon"},
              {"witnesses", std::move(wits)},
              {"pairs_examined", rep.pairs_examined},
              {"elapsed_ms", rep.elapsed.count()}};
}

json kind_json(const ThresholdKind& kind) {
  json j{{"name", threshold_tag_name(kind.tag)}};
  switch (kind.tag) {
    case ThresholdTag::squares_eps:
      j["eps"] = str(kind.c);
      break;
    case ThresholdTag::cubes_pow:
    case ThresholdTag::quartic_sidon:
    case ThresholdTag::quartic_pow:
      j["c"] = str(kind.c);
      break;
    case ThresholdTag::custom:
      j["H"] = str(kind.H);
      break;
    default:
      break;
  }
  return j;
}

json to_json(const ScanReport& rep) {
  json fails = json::array();
  for (const auto& f : rep.failures) {
    json row = to_json(f.witness);
    json entry{{"N", str(f.N)}, {"H", str(f.H)}};
    entry.update(row);
    fails.push_back(std::move(entry));
  }
  return json{{"type", "scan_report"},
              {"k", rep.k},
              {"kind", kind_json(rep.kind)},
              {"from", str(rep.from)},
              {"to", str(rep.to)},
              {"intervals", rep.intervals},
              {"failures", std::move(fails)},
              {"pairs_examined", rep.pairs_examined},
              {"elapsed_ms", rep.elapsed.count()}};
}

json to_json(const DensityScanReport& rep) {
  json fails = json::array();
  for (const auto& f : rep.failures) {
    json entry{{"N", str(f.N)}, {"H", str(f.H)}};
    entry.update(to_json(f.witness));
    fails.push_back(std::move(entry));
  }
  return json{{"type", "density_report"},
              {"M", str(rep.M)},
              {"T", str(rep.T)},
              {"subintervals", str(rep.subintervals)},
              {"sublength", str(rep.sublength)},
              {"non_sidon", rep.non_sidon},
              {"failures", std::move(fails)},
              {"pairs_examined", rep.pairs_examined},
              {"elapsed_ms", rep.elapsed.count()}};
}

json to_json(const CampaignResult& res) {
  json checks = json::array();
  for (const auto& c : res.checks)
    checks.push_back(
        json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json j{{"type", "campaign_report"},
         {"campaign", res.campaign},
         {"pass", res.pass}};
  if (res.seed) j["seed"] = *res.seed;
  j["checks"] = std::move(checks);
  j["elapsed_ms"] = res.elapsed.count();
  return j;
}

json to_json(const PellSolution& s) {
  return json{{"type", "pell_solution"},
              {"m", s.m},
              {"D", str(s.D)},
              {"B", str(s.B)}};
}

json to_json(const SquaresTrace& tr) {
  return json{{"type", "squares_trace"},
              {"N", str(tr.N)},
              {"u", str(tr.u)},
              {"s", str(tr.s)},
              {"l", str(tr.l)},
              {"retried", tr.retried},
              {"quadruple", to_json(tr.quadruple)}};
}

json to_json(const CubesPellTrace& tr) {
  return json{{"type", "cubes_chain_trace"},
              {"m", tr.m},
              {"D", str(tr.D)},
              {"B", str(tr.B)},
              {"C", str(tr.C)},
              {"A", str(tr.A)},
              {"N", str(tr.N)},
              {"quadruple", to_json(tr.quadruple)}};
}

json to_json(const ScaledCubesTrace& tr) {
  return json{{"type", "cubes_scaled_trace"},
              {"m", tr.m},
              {"base_point", str(tr.base_point)},
              {"factor", str(tr.factor)},
              {"quadruple", to_json(tr.quadruple)}};
}

json rational_quadruple_json(const std::array<Rat, 4>& vals, int k) {
  return json{{"k", k},
              {"x", str(vals[0])},
              {"y", str(vals[1])},
              {"z", str(vals[2])},
              {"t", str(vals[3])}};
}

namespace {

void csv_row(std::string& out, const Nat& N, const Nat& H,
             const PowerQuadruple& q) {
  out += str(N) + "," + str(H) + "," + str(q.x) + "," + str(q.y) + "," +
         str(q.z) + "," + str(q.t) + "," + str(q.power_sum()) + "\n";
}

}  // namespace

std::string witnesses_csv(const SidonReport& rep) {
  std::string out = "N,H,x,y,z,t,sum\n";
  for (const auto& w : rep.witnesses) csv_row(out, rep.N, rep.H, w);
  return out;
}

std::string failures_csv(const ScanReport& rep) {
  std::string out = "N,H,x,y,z,t,sum\n";
  for (const auto& f : rep.failures) csv_row(out, f.N, f.H, f.witness);
  return out;
}

json envelope(const std::string& command, json arguments, json result,
              std::chrono::milliseconds timing,
              std::optional<std::uint64_t> seed) {
  json env{{"schema_version", 1},
           {"command", command},
           {"arguments", std::move(arguments)},
           {"result", std::move(result)}};
  if (seed) env["seed"] = *seed;
  env["timing_ms"] = timing.count();
  return env;
}

void print_envelope(const json& env) { std::cout << env.dump(2) << "\n"; }

}  // namespace sidon::cli
