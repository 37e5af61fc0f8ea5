#pragma once

// JSON and CSV serialization of results. The schema is described in
// docs/report-schema.md.

#include "cheeger/checks.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cheeger::app {

using Json = nlohmann::ordered_json;

Json domain_to_json(const DomainSpec& d);
DomainSpec domain_from_json(const Json& j);

Json breakdown_to_json(const RatioBreakdown& b);
Json candidate_to_json(const CandidateSet& c);
Json certificate_to_json(const CertificateReport& r);
Json diagnostics_to_json(const SolverDiagnostics& d);
Json result_to_json(const CheegerResult& r, const std::vector<CertificateReport>& certs);
Json sweep_to_json(const SweepResult& s);

/// Rebuilds the candidate recorded in a report (domain, H, structure, glue)
/// and returns its ratio.
double recompute_h(const Json& report, double tol = 1e-10);

/// Candidate recorded in a report.
CandidateSet candidate_from_json(const Json& report, double tol = 1e-10);

/// Fixed CSV header: family, l, r, theta, A, B, C, D, R, n, H_opt, h,
/// structure, certificate_pass.
std::string csv_header();
std::string csv_row(const CheegerResult& r, bool certificate_pass);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

} // namespace cheeger::app
