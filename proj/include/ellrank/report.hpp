#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ellrank/picard.hpp"

namespace ellrank {

using Json = nlohmann::ordered_json;

/// Coefficients lowest degree first, each a decimal string.
Json to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json to_json(const WeierstrassModel& m);
WeierstrassModel model_from_json(const Json& j);

Json to_json(const FiberConfiguration& c);
Json to_json(const RankLedger& l);
Json to_json(const TraceData& t);
Json to_json(const WeilFactor& f);
Json to_json(const SquareClass& c);
Json to_json(const PicardReport& r);
Json to_json(const RankCertificate& c);

struct VerificationResult {
  std::vector<std::string> passed;
  std::vector<std::string> failed;
  bool ok() const { return failed.empty(); }
};

/// Re-checks the arithmetic recorded in a certificate without counting points:
/// polynomial products, power transports, Tate counts, square classes,
/// Shioda-Tate sums, trace identities and the final rank arithmetic.
VerificationResult verify_certificate(const Json& cert, const FactorOptions& options = {});

}  // namespace ellrank
