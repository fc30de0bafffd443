#ifndef ITERFIX_REPORT_JSON_HPP
#define ITERFIX_REPORT_JSON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "iterfix/bounds.hpp"
#include "iterfix/dynamics.hpp"
#include "iterfix/identities.hpp"
#include "iterfix/search.hpp"
#include "iterfix/verify.hpp"

namespace iterfix {

// ordered_json keeps insertion order, so serialized output is stable.
using Json = nlohmann::ordered_json;

// Complex values serialize as {re, im}; non-finite doubles become null.
Json complex_json(Complex z);

Json report_json(const FixedPointReport& report, double classify_tol = 1e-9);
Json report_json(const TraceReport& report);
Json report_json(const BoundReport& report, BoundFlavor flavor);
Json report_json(const ScanSummary& summary);
Json report_json(const SearchResult& result, const SearchConfig& cfg);
Json report_json(const std::vector<CheckResult>& checks, const std::string& suite,
                 std::uint64_t seed);

// CSV: complex as adjacent _re/_im columns, numbers in shortest
// round-trip form, strings quoted.
std::string report_csv(const FixedPointReport& report, double classify_tol = 1e-9);
std::string report_csv(const TraceReport& report);
std::string report_csv(const BoundReport& report, BoundFlavor flavor);
std::string report_csv(const ScanSummary& summary);
std::string report_csv(const SearchResult& result, const SearchConfig& cfg);
std::string report_csv(const std::vector<CheckResult>& checks);

// Human-oriented text; not a stability contract.
std::string report_text(const FixedPointReport& report, double classify_tol = 1e-9);
std::string report_text(const TraceReport& report);
std::string report_text(const BoundReport& report, BoundFlavor flavor);
std::string report_text(const ScanSummary& summary);
std::string report_text(const SearchResult& result, const SearchConfig& cfg);
std::string report_text(const std::vector<CheckResult>& checks);

} // namespace iterfix

#endif
