#pragma once

#include <string>

#include "diagram.hpp"
#include "limits.hpp"
#include "matchings.hpp"
#include "orderability.hpp"

namespace hg {

// A finished certificate report: the same content rendered as plain text and
// as a JSON document, plus the decision exit code (0 = positive certificate,
// 1 = negative or inapplicable result).  Building a report is deterministic;
// the same input yields byte-identical output.
struct Report {
  std::string text;
  std::string json;
  int exit_code = 0;
};

// Full pipeline on a diagram: presentation, intersection matrices, |H1|,
// generators and gradings, strongness, the determinant orderability verdict
// on the presentation's sign matrix, and (for strong diagrams with |H1| = 1)
// the 3-sphere verdict.  Exit code 0 iff the diagram is strong.
Report analyze_report(const HeegaardDiagram& h, const Limits& limits = {});

// Strongness check only.  Exit code 0 iff strong.
Report strong_report(const HeegaardDiagram& h, const Limits& limits = {});

// Count matrix, algebraic matrix, determinant, |H1| and permanent.
Report matrix_report(const HeegaardDiagram& h, const Limits& limits = {});

// 3-sphere recognition verdict with the leaf-deletion trace.
Report s3_report(const HeegaardDiagram& h, const Limits& limits = {});

// Orderability certificates on a bare sign matrix.
Report lo_det_report(const SignMatrix& m, const Limits& limits = {});
Report lo_bruteforce_report(const SignMatrix& m, const Limits& limits = {});

const char* s3_outcome_name(S3Outcome o);

}  // namespace hg
