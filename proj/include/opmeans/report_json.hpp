#pragma once

// JSON serialization of check, falsification and suite reports. Doubles are
// written in shortest round-trip form, so equal reports give equal bytes.

#include "opmeans/matrix_json.hpp"
#include "opmeans/suite.hpp"

namespace opmeans {

json to_json(const CheckReport& r);
json to_json(const Witness& w);
json to_json(const FalsificationReport& r);
json to_json(const ExampleResult& r);
json to_json(const ClaimAggregate& a);
json to_json(const SuiteConfig& c);
/// {"config", "claims", "falsifications", "examples"}; wall time is left out.
json to_json(const SuiteReport& r);

/// {"error": {"type", "message", ...}} for exceptions surfaced by the CLI.
json error_json(const std::exception& e);

}  // namespace opmeans
