#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "ivi/interval.hpp"
#include "ivi/partition.hpp"
#include "ivi/rational.hpp"
#include "ivi/sets.hpp"
#include "ivi/theorems/certificates.hpp"
#include "ivi/theorems/common.hpp"

namespace ivi {

// All reports use insertion-ordered JSON so identical runs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

// --- wire encodings -------------------------------------------------------
// Rationals are "p/q" strings; intervals are {"lo": "p/q", "hi": "p/q"};
// closed sets are arrays of intervals; partitions are {"cuts", "tags"};
// covers are {"members": [interval...]}. These shapes round-trip exactly.

Json rational_json(const Rational& q);
Json interval_json(const Interval& I);
Json closed_set_json(const ClosedSet& C);
Json rational_list_json(const std::vector<Rational>& xs);
Json partition_json(const TaggedPartition& p);
Json cover_json(const OpenCover& O);

Rational rational_from(const Json& j);
Interval interval_from(const Json& j);
ClosedSet closed_set_from(const Json& j);
std::vector<Rational> rational_list_from(const Json& j);
TaggedPartition partition_from(const Json& j);
OpenCover cover_from(const Json& j);

// --- certificate encodings (field names match the type definitions) -------

Json certificate_json(const BoundCertificate& c);
Json certificate_json(const SignCertificate& c);
Json certificate_json(const ArgmaxCandidate& c);   // {"point","value","budget"}
Json certificate_json(const MonotoneChain& c);
Json certificate_json(const TiltCertificate& c);
Json certificate_json(const UniformModulus& c);
Json certificate_json(const IndexCertificate& c);
Json certificate_json(const SubcoverCertificate& c);
Json certificate_json(const DiniDerivateBound& c);
Json certificate_json(const std::vector<Rational>& points);  // {"points": [...]}

// --- run reports -----------------------------------------------------------

Json failure_json(const RunFailure& f);

// {"instance", "inputs", "outcome", "trace_file"} with outcome either
// {"status":"certificate", "certificate": ...} or
// {"status":"failure", "failure": ...}.
Json make_report(const std::string& instance, Json inputs, Json outcome,
                 const std::optional<std::string>& trace_file);
Json certificate_outcome(Json certificate);
Json failure_outcome(const RunFailure& f);

// Re-check the certificate embedded in a report against its echoed inputs
// using the instance's independent verifier. Returns false when the report
// records a failure or the claim does not hold. Throws InputError (or
// ParseError) on malformed reports and unknown instances.
bool verify_report(const Json& report);

}  // namespace ivi
