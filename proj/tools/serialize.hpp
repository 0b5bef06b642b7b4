#pragma once

#include <json.hpp>

#include "sidon/campaigns.hpp"
#include "sidon/constructors.hpp"
#include "sidon/verifier.hpp"

namespace sidon::cli {

// Insertion-ordered JSON so a parse/re-serialize round trip is
// byte-identical. Every big integer and rational is emitted as a decimal
// string; only machine-sized counters are native JSON numbers.
using json = nlohmann::ordered_json;

std::string str(const Nat& v);
std::string str(const Rat& v);

json to_json(const PowerQuadruple& q);
json to_json(const SidonReport& rep);
json to_json(const ScanReport& rep);
json to_json(const DensityScanReport& rep);
json to_json(const CampaignResult& res);
json to_json(const PellSolution& s);

json to_json(const SquaresTrace& tr);
json to_json(const CubesPellTrace& tr);
json to_json(const ScaledCubesTrace& tr);

// Rational quadruples from the two-parameter families.
json rational_quadruple_json(const std::array<Rat, 4>& vals, int k);

// Kind description including the constant that parametrizes it, if any.
json kind_json(const ThresholdKind& kind);

// CSV rows "N,H,x,y,z,t,sum" (header included).
std::string witnesses_csv(const SidonReport& rep);
std::string failures_csv(const ScanReport& rep);

// The output envelope printed to stdout (one per invocation).
json envelope(const std::string& command, json arguments, json result,
              std::chrono::milliseconds timing,
              std::optional<std::uint64_t> seed = std::nullopt);

void print_envelope(const json& env);

}  // namespace sidon::cli
