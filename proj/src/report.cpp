#include "report.hpp"

#include <sstream>

#include <json.hpp>

#include "formats.hpp"

namespace hg {

namespace {

using ojson = nlohmann::ordered_json;

std::string finish(const ojson& doc) { return doc.dump(2) + "\n"; }

ojson perm1(const Perm& p) {
  ojson a = ojson::array();
  for (int v : p) a.push_back(v + 1);
  return a;
}

std::string perm1_text(const Perm& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(p[i] + 1);
  }
  return s + "]";
}

ojson int_matrix_json(const IntMatrix& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.rows; ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string int_matrix_text(const IntMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows; ++i) {
    out += " ";
    for (int j = 0; j < m.cols; ++j) {
      out += ' ';
      out += std::to_string(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

ojson sign_matrix_json(const SignMatrix& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.rows; ++i) {
    std::string row;
    for (int j = 0; j < m.cols; ++j) {
      if (j) row += ' ';
      row += sign_char(m.at(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string indent2(const std::string& block) {
  std::string out;
  size_t start = 0;
  while (start < block.size()) {
    size_t nl = block.find('\n', start);
    if (nl == std::string::npos) nl = block.size();
    out += "  ";
    out.append(block, start, nl - start);
    out += '\n';
    start = nl + 1;
  }
  return out;
}

std::string signs_seen_text(const DetClassification& det) {
  std::string s = "{";
  if (det.plus_seen) s += "+";
  if (det.minus_seen) s += s.size() > 1 ? ", -" : "-";
  return s + "}";
}

ojson signs_seen_json(const DetClassification& det) {
  ojson a = ojson::array();
  if (det.plus_seen) a.push_back("+");
  if (det.minus_seen) a.push_back("-");
  return a;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void orderability_text(std::ostream& os, const OrderabilityVerdict& v) {
  const DetClassification& det = v.det;
  os << "nonzero summand exists: " << yesno(det.has_nonzero_summand) << "\n";
  os << "star in a nonzero summand: " << yesno(det.star_in_nonzero_summand)
     << "\n";
  os << "summand signs seen: " << signs_seen_text(det) << "\n";
  if (v.not_left_orderable) {
    os << "verdict: not left-orderable\n";
    os << "witness sigma: " << perm1_text(*v.witness_sigma0) << "\n";
    os << "summand sign: " << sign_char(*v.common_sign) << "\n";
    return;
  }
  os << "verdict: criterion inapplicable (condition " << v.failed_condition
     << ": ";
  switch (v.failed_condition) {
    case 1: os << "no nonzero summand"; break;
    case 2: os << "a nonzero summand contains *"; break;
    default: os << "summands of both signs"; break;
  }
  os << ")\n";
  if (v.star_witness) {
    os << "star witness sigma: " << perm1_text(*v.star_witness) << "\n";
  }
  if (v.conflict) {
    os << "plus witness sigma: " << perm1_text(v.conflict->first) << "\n";
    os << "minus witness sigma: " << perm1_text(v.conflict->second) << "\n";
  }
}

ojson orderability_json(const OrderabilityVerdict& v) {
  ojson o;
  o["verdict"] =
      v.not_left_orderable ? "not_left_orderable" : "criterion_inapplicable";
  o["has_nonzero_summand"] = v.det.has_nonzero_summand;
  o["star_in_nonzero_summand"] = v.det.star_in_nonzero_summand;
  o["signs_seen"] = signs_seen_json(v.det);
  o["witness_sigma"] =
      v.witness_sigma0 ? perm1(*v.witness_sigma0) : ojson(nullptr);
  o["summand_sign"] = v.common_sign
                          ? ojson(std::string(1, sign_char(*v.common_sign)))
                          : ojson(nullptr);
  o["failed_condition"] =
      v.not_left_orderable ? ojson(nullptr) : ojson(v.failed_condition);
  o["star_witness"] = v.star_witness ? perm1(*v.star_witness) : ojson(nullptr);
  if (v.conflict) {
    o["conflict"] = {{"plus", perm1(v.conflict->first)},
                     {"minus", perm1(v.conflict->second)}};
  } else {
    o["conflict"] = nullptr;
  }
  return o;
}

void strong_text(std::ostream& os, const StrongReport& r) {
  os << "det: " << r.det << "\n";
  if (r.h1) {
    os << "|H1|: " << *r.h1 << "\n";
  } else {
    os << "|H1|: b1 positive\n";
  }
  os << "generators: " << r.generator_count << " (+1 grading: "
     << r.plus_gradings << ", -1 grading: " << r.minus_gradings << ")\n";
  os << "gradings uniform: " << yesno(r.gradings_uniform) << "\n";
  os << "euler characteristic: " << r.euler_characteristic << "\n";
  os << "strong diagram: " << yesno(r.is_strong) << "\n";
}

void strong_json_fields(ojson& o, const StrongReport& r) {
  o["det"] = r.det;
  o["b1_positive"] = !r.h1.has_value();
  o["h1_order"] = r.h1 ? ojson(*r.h1) : ojson(nullptr);
  o["generator_count"] = r.generator_count;
  o["gradings"] = {{"plus", r.plus_gradings},
                   {"minus", r.minus_gradings},
                   {"uniform", r.gradings_uniform}};
  o["euler_characteristic"] = r.euler_characteristic;
  o["strong"] = r.is_strong;
}

std::string trace_text(const std::vector<PruneStep>& trace) {
  std::string s;
  for (size_t i = 0; i < trace.size(); ++i) {
    if (i) s += ' ';
    s += "(A" + std::to_string(trace[i].a + 1) + ",B" +
         std::to_string(trace[i].b + 1) + ")";
  }
  return s;
}

ojson trace_json(const std::vector<PruneStep>& trace) {
  ojson a = ojson::array();
  for (const PruneStep& s : trace) {
    a.push_back({{"a", s.a + 1}, {"b", s.b + 1}, {"side", std::string(1, s.side)}});
  }
  return a;
}

ojson matching_json(const Matching& mu) {
  ojson a = ojson::array();
  for (int id : mu) a.push_back(id);
  return a;
}

void s3_text(std::ostream& os, const S3Verdict& v) {
  os << "verdict: " << s3_outcome_name(v.outcome) << "\n";
  if (!v.trace.empty()) os << "prune trace: " << trace_text(v.trace) << "\n";
  if (v.stalled_second) {
    os << "second matching (edge ids): " << matching_json(*v.stalled_second).dump()
       << "\n";
  }
}

ojson s3_json(const S3Verdict& v) {
  ojson o;
  o["outcome"] = s3_outcome_name(v.outcome);
  o["trace"] = trace_json(v.trace);
  o["second_matching"] =
      v.stalled_second ? matching_json(*v.stalled_second) : ojson(nullptr);
  return o;
}

void diagram_header_text(std::ostream& os, const HeegaardDiagram& h) {
  os << "diagram: genus " << h.genus << ", beta word lengths [";
  for (int j = 0; j < h.genus; ++j) {
    if (j) os << ", ";
    os << h.beta_words[j].size();
  }
  os << "]\n";
}

ojson beta_lengths_json(const HeegaardDiagram& h) {
  ojson a = ojson::array();
  for (const auto& w : h.beta_words) a.push_back(w.size());
  return a;
}

}  // namespace

const char* s3_outcome_name(S3Outcome o) {
  switch (o) {
    case S3Outcome::IsS3: return "IsS3";
    case S3Outcome::NotIntegerHomologySphere: return "NotIntegerHomologySphere";
    case S3Outcome::NotStrongDiagram: return "NotStrongDiagram";
    case S3Outcome::Inconsistent: return "Inconsistent";
  }
  return "?";
}

Report analyze_report(const HeegaardDiagram& h, const Limits& limits) {
  validate_diagram(h);
  const Presentation pres = presentation_of(h);
  const IntMatrix c = count_matrix(h);
  const IntMatrix a = algebraic_matrix(h);
  const StrongReport strong = check_strong(h, limits.max_generators);
  const SignMatrix eps = epsilon_matrix(pres);
  const OrderabilityVerdict lo = check_formal_determinant(eps, limits.max_perm_n);

  std::vector<int> trivial_relators;  // 0-based
  for (size_t j = 0; j < pres.relators.size(); ++j) {
    if (word_is_trivial_free_reduction(pres.relators[j])) {
      trivial_relators.push_back(static_cast<int>(j));
    }
  }

  const bool run_s3 = strong.is_strong && strong.h1 && *strong.h1 == 1;
  std::optional<S3Verdict> s3;
  if (run_s3) s3 = recognize_s3(h, limits);

  std::ostringstream os;
  diagram_header_text(os, h);
  os << "presentation:\n" << indent2(format_presentation(pres));
  if (!trivial_relators.empty()) {
    os << "freely trivial relators:";
    for (int j : trivial_relators) os << " b" << (j + 1);
    os << "\n";
  }
  os << "count matrix:\n" << int_matrix_text(c);
  os << "algebraic matrix:\n" << int_matrix_text(a);
  strong_text(os, strong);
  os << "epsilon matrix:\n" << indent2(format_sign_matrix(eps));
  std::ostringstream lo_os;
  orderability_text(lo_os, lo);
  os << "orderability (formal determinant criterion):\n" << indent2(lo_os.str());
  if (run_s3) {
    std::ostringstream s3_os;
    s3_text(s3_os, *s3);
    os << "s3 recognition:\n" << indent2(s3_os.str());
  } else {
    os << "s3 recognition: skipped (requires a strong diagram with |H1| = 1)\n";
  }

  ojson doc;
  doc["command"] = "analyze";
  doc["genus"] = h.genus;
  doc["beta_word_lengths"] = beta_lengths_json(h);
  ojson relators = ojson::array();
  {
    std::istringstream lines(format_presentation(pres));
    std::string line;
    std::getline(lines, line);  // "gens m"
    while (std::getline(lines, line)) relators.push_back(line);
  }
  doc["presentation"] = {{"generators", pres.num_generators},
                         {"relators", std::move(relators)}};
  ojson triv = ojson::array();
  for (int j : trivial_relators) triv.push_back(j + 1);
  doc["freely_trivial_relators"] = std::move(triv);
  doc["count_matrix"] = int_matrix_json(c);
  doc["algebraic_matrix"] = int_matrix_json(a);
  strong_json_fields(doc, strong);
  doc["epsilon_matrix"] = sign_matrix_json(eps);
  doc["orderability"] = orderability_json(lo);
  doc["s3"] = run_s3 ? s3_json(*s3) : ojson(nullptr);
  const int code = strong.is_strong ? 0 : 1;
  doc["exit_code"] = code;

  return Report{os.str(), finish(doc), code};
}

Report strong_report(const HeegaardDiagram& h, const Limits& limits) {
  validate_diagram(h);
  const StrongReport strong = check_strong(h, limits.max_generators);
  std::ostringstream os;
  diagram_header_text(os, h);
  strong_text(os, strong);

  ojson doc;
  doc["command"] = "check_strong";
  doc["genus"] = h.genus;
  doc["beta_word_lengths"] = beta_lengths_json(h);
  strong_json_fields(doc, strong);
  const int code = strong.is_strong ? 0 : 1;
  doc["exit_code"] = code;
  return Report{os.str(), finish(doc), code};
}

Report matrix_report(const HeegaardDiagram& h, const Limits& limits) {
  validate_diagram(h);
  const IntMatrix c = count_matrix(h);
  const IntMatrix a = algebraic_matrix(h);
  const long long det = det_exact(a);
  const long long permanent =
      static_cast<long long>(generators(h, limits.max_generators).size());

  std::ostringstream os;
  diagram_header_text(os, h);
  os << "count matrix:\n" << int_matrix_text(c);
  os << "algebraic matrix:\n" << int_matrix_text(a);
  os << "det: " << det << "\n";
  if (det == 0) {
    os << "|H1|: b1 positive\n";
  } else {
    os << "|H1|: " << (det < 0 ? -det : det) << "\n";
  }
  os << "permanent: " << permanent << "\n";

  ojson doc;
  doc["command"] = "matrix";
  doc["genus"] = h.genus;
  doc["count_matrix"] = int_matrix_json(c);
  doc["algebraic_matrix"] = int_matrix_json(a);
  doc["det"] = det;
  doc["b1_positive"] = det == 0;
  doc["h1_order"] = det == 0 ? ojson(nullptr) : ojson(det < 0 ? -det : det);
  doc["permanent"] = permanent;
  doc["exit_code"] = 0;
  return Report{os.str(), finish(doc), 0};
}

Report s3_report(const HeegaardDiagram& h, const Limits& limits) {
  validate_diagram(h);
  const S3Verdict v = recognize_s3(h, limits);
  std::ostringstream os;
  diagram_header_text(os, h);
  strong_text(os, v.strong);
  s3_text(os, v);

  ojson doc;
  doc["command"] = "recognize_s3";
  doc["genus"] = h.genus;
  ojson strong;
  strong_json_fields(strong, v.strong);
  doc["strong_report"] = std::move(strong);
  doc["outcome"] = s3_outcome_name(v.outcome);
  doc["trace"] = trace_json(v.trace);
  doc["second_matching"] =
      v.stalled_second ? matching_json(*v.stalled_second) : ojson(nullptr);
  const int code = v.outcome == S3Outcome::IsS3 ? 0 : 1;
  doc["exit_code"] = code;
  return Report{os.str(), finish(doc), code};
}

Report lo_det_report(const SignMatrix& m, const Limits& limits) {
  const OrderabilityVerdict v = check_formal_determinant(m, limits.max_perm_n);
  std::ostringstream os;
  os << "mode: det\n";
  os << "matrix: " << m.rows << " x " << m.cols << "\n";
  orderability_text(os, v);

  ojson doc;
  doc["command"] = "check_lo";
  doc["mode"] = "det";
  doc["rows"] = m.rows;
  doc["cols"] = m.cols;
  doc["orderability"] = orderability_json(v);
  const int code = v.not_left_orderable ? 0 : 1;
  doc["exit_code"] = code;
  return Report{os.str(), finish(doc), code};
}

namespace {

struct ColumnAnalysis {
  int column;  // 0-based
  bool plus = false, minus = false, star = false;

  const char* status() const {
    if (star) return "contains_star";
    if (!plus && !minus) return "all_zero";
    if (plus && minus) return "mixed_signs";
    return plus ? "uniform_plus" : "uniform_minus";
  }
  bool qualifies() const { return !star && (plus != minus); }
};

std::vector<ColumnAnalysis> analyze_columns(const SignMatrix& m) {
  std::vector<ColumnAnalysis> cols;
  for (int j = 0; j < m.cols; ++j) {
    ColumnAnalysis ca;
    ca.column = j;
    for (int i = 0; i < m.rows; ++i) {
      switch (m.at(i, j)) {
        case Sign::Plus: ca.plus = true; break;
        case Sign::Minus: ca.minus = true; break;
        case Sign::Star: ca.star = true; break;
        case Sign::Zero: break;
      }
    }
    cols.push_back(ca);
  }
  return cols;
}

std::string scaling_text(const RowScaling& d) {
  std::string s = "[";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += sign_char(d[i]);
  }
  return s + "]";
}

ojson scaling_json(const RowScaling& d) {
  ojson a = ojson::array();
  for (Sign s : d) a.push_back(std::string(1, sign_char(s)));
  return a;
}

}  // namespace

Report lo_bruteforce_report(const SignMatrix& m, const Limits& limits) {
  const ScalingSweepResult res =
      sweep_row_scalings(m, limits.max_bruteforce_rows);
  long long total = 1;
  for (int i = 0; i < m.rows; ++i) total *= 3;
  --total;  // nonzero scalings

  std::ostringstream os;
  os << "mode: bruteforce\n";
  os << "matrix: " << m.rows << " x " << m.cols << "\n";
  os << "scalings checked: " << res.scalings_checked << " of " << total << "\n";
  if (res.holds) {
    os << "verdict: holds (not left-orderable)\n";
  } else {
    os << "verdict: fails (criterion inapplicable)\n";
    os << "witness scaling: " << scaling_text(*res.witness) << "\n";
    const SignMatrix scaled = scale_rows(m, *res.witness);
    os << "scaled matrix:\n" << indent2(format_sign_matrix(scaled));
    os << "column analysis:\n";
    for (const ColumnAnalysis& ca : analyze_columns(scaled)) {
      os << "  column " << (ca.column + 1) << ": ";
      if (ca.star) {
        os << "contains *\n";
      } else if (!ca.plus && !ca.minus) {
        os << "all zero\n";
      } else if (ca.plus && ca.minus) {
        os << "nonzero entries {+, -}: mixed signs\n";
      } else {
        os << "nonzero entries {" << (ca.plus ? '+' : '-')
           << "}: uniform (qualifies)\n";
      }
    }
  }

  ojson doc;
  doc["command"] = "check_lo";
  doc["mode"] = "bruteforce";
  doc["rows"] = m.rows;
  doc["cols"] = m.cols;
  doc["holds"] = res.holds;
  doc["scalings_checked"] = res.scalings_checked;
  doc["scalings_total"] = total;
  if (res.witness) {
    doc["witness_scaling"] = scaling_json(*res.witness);
    const SignMatrix scaled = scale_rows(m, *res.witness);
    doc["scaled_matrix"] = sign_matrix_json(scaled);
    ojson cols = ojson::array();
    for (const ColumnAnalysis& ca : analyze_columns(scaled)) {
      cols.push_back({{"column", ca.column + 1},
                      {"status", ca.status()},
                      {"qualifies", ca.qualifies()}});
    }
    doc["column_analysis"] = std::move(cols);
  } else {
    doc["witness_scaling"] = nullptr;
    doc["scaled_matrix"] = nullptr;
    doc["column_analysis"] = nullptr;
  }
  const int code = res.holds ? 0 : 1;
  doc["exit_code"] = code;
  return Report{os.str(), finish(doc), code};
}

}  // namespace hg
