#pragma once

#include <string>
#include <vector>

#include "minors/graph.hpp"
#include "minors/linked.hpp"
#include "minors/model.hpp"

namespace minors {

/// A separation (A, B) of the host plus the evidence that it left-contains
/// `pattern`: a minor model inside host[A] whose branch sets each meet the
/// separator exactly once, and a linkage witnessing paths on the B side.
struct SeparationCertificate {
    std::vector<int> a;
    std::vector<int> b;
    Graph pattern = Graph::make(0, {});
    MinorModel left_model;
    std::vector<VertexPath> linkage;
};

struct CertificateCheckOptions {
    // when set, also run the full linkedness oracle on A cap B inside host[B]
    bool check_linkedness = false;
    LinkedOptions linked;
};

struct CertificateReport {
    std::vector<std::string> violations;
    // only meaningful with check_linkedness: the oracle may run out of budget
    LinkedOutcome linkedness = LinkedOutcome::unknown;
    bool ok() const { return violations.empty(); }
};

CertificateReport verify_separation_certificate(const Graph& host, const SeparationCertificate& c,
                                                CertificateCheckOptions opts = {});

std::string certificate_to_json(const SeparationCertificate& c);
SeparationCertificate certificate_from_json(const std::string& text);

}  // namespace minors
