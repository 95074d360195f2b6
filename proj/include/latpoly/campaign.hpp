#pragma once

#include "latpoly/adjoint.hpp"
#include "latpoly/corpus.hpp"

#include <string>

namespace latpoly {

// One counterexample hunt per result the library implements. Each campaign
// evaluates a hypothesis predicate and a conclusion predicate independently
// on every corpus polytope; a report failure is a polytope where the
// hypotheses held and the conclusion did not.
//
// ids: lemma-l1, nakagawa, lemma-l2, lemma-l3, prop-p1, prop-p1a,
//      lemma-3l0, prop-pr1, prop-5p1, thm-tm2

struct CampaignFailure {
    std::string polytope;  // canonical serialization — a reproducible bug report
    std::string detail;
};

struct CampaignReport {
    std::string id;
    CorpusSpec spec;
    long long examined = 0;
    long long hypothesis_satisfied = 0;
    std::vector<CampaignFailure> failures;  // sorted by serialization
    double wall_seconds = 0.0;              // not part of the JSON report
};

std::vector<std::string> known_campaigns();

CampaignReport run_campaign(const std::string& id, const CorpusSpec& spec);

// Stable machine-readable report; byte-identical for fixed id and spec.
std::string campaign_report_json(const CampaignReport& report);

// Empty 3-simplex fixture Conv{0, e1, e2, e1 + p*e2 + q*e3}, gcd(p,q) = 1.
LatticePolytope empty_simplex_pq(int p, int q);

}  // namespace latpoly
