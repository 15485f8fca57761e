#pragma once

#include <json.hpp>
#include <string>

#include "evanslewis/profiles.hpp"
#include "evanslewis/sharp.hpp"
#include "evanslewis/spectral.hpp"

namespace evanslewis::jsonio {

// Insertion-ordered document type; parsing comes from nlohmann, serialization
// goes through dump() below so float formatting stays pinned.
using Json = nlohmann::ordered_json;

// Deterministic writer: 17 significant digits for doubles, plain integers,
// fixed field order. Same tree -> same bytes.
std::string dump(const Json& j, int indent = 2);
std::string format_double(double v);

Json load_file(const std::string& path);

Json profile_to_json(const RadialProfile& p);
RadialProfile profile_from_json(const Json& j);

Json function_to_json(const TestFunction& f);
TestFunction function_from_json(const Json& j);
TestFunction function_from_file(const std::string& path);

SpectrumSpec spectrum_from_json(const Json& j);
SpectrumSpec spectrum_from_file(const std::string& path);

Json norm_report_to_json(const NormReport& r);
Json slack_table_to_json(const SlackTable& s);
Json proof_ledger_to_json(const ProofLedger& l);

// Run manifest embedded in every output. The timestamp stays empty unless
// stamped, so identical invocations stay byte-identical.
Json manifest(const std::string& command, Json parameters, double rel_tol, double abs_tol,
              bool stamp);

}  // namespace evanslewis::jsonio
