// Exercises the shared library through the public C header only.
#include <doctest.h>

#include <cstring>
#include <string>

#include "heegaard.h"

namespace {

struct ReportHolder {
  hg_report* r = nullptr;
  ~ReportHolder() { hg_report_free(r); }
};

struct DiagramHolder {
  hg_diagram* d = nullptr;
  ~DiagramHolder() { hg_diagram_free(d); }
};

struct SignmatHolder {
  hg_signmat* m = nullptr;
  ~SignmatHolder() { hg_signmat_free(m); }
};

}  // namespace

TEST_CASE("version and limits") {
  CHECK(hg_version() != nullptr);
  hg_limits limits;
  hg_limits_init(&limits);
  CHECK(limits.max_generators == 1000000);
  CHECK(limits.max_perm_n == 12);
  CHECK(limits.max_bruteforce_rows == 16);
  hg_limits_init(nullptr);  // harmless
}

TEST_CASE("lens diagram analysis lifecycle") {
  char err[256] = "";
  DiagramHolder d;
  REQUIRE(hg_diagram_lens(3, &d.d, err, sizeof err) == HG_OK);

  ReportHolder r;
  REQUIRE(hg_analyze(d.d, nullptr, &r.r, err, sizeof err) == HG_OK);
  CHECK(hg_report_exit_code(r.r) == 0);
  const std::string text = hg_report_text(r.r);
  CHECK(text.find("strong diagram: yes") != std::string::npos);
  const std::string json = hg_report_json(r.r);
  CHECK(json.find("\"h1_order\": 3") != std::string::npos);

  char* serialized = nullptr;
  REQUIRE(hg_diagram_to_json(d.d, &serialized, err, sizeof err) == HG_OK);
  DiagramHolder reparsed;
  CHECK(hg_diagram_parse_json(serialized, &reparsed.d, err, sizeof err) ==
        HG_OK);
  hg_string_free(serialized);
}

TEST_CASE("error paths") {
  char err[256] = "";
  hg_diagram* d = nullptr;
  CHECK(hg_diagram_parse_json("not json", &d, err, sizeof err) ==
        HG_ERR_PARSE);
  CHECK(d == nullptr);
  CHECK(std::strlen(err) > 0);

  CHECK(hg_diagram_parse_json(nullptr, &d, err, sizeof err) == HG_ERR_INVALID);
  CHECK(hg_diagram_lens(0, &d, err, sizeof err) == HG_ERR_INVALID);

  hg_report* r = nullptr;
  CHECK(hg_analyze(nullptr, nullptr, &r, err, sizeof err) == HG_ERR_INVALID);

  DiagramHolder lens;
  REQUIRE(hg_diagram_lens(9, &lens.d, err, sizeof err) == HG_OK);
  hg_limits tight;
  hg_limits_init(&tight);
  tight.max_generators = 4;
  CHECK(hg_analyze(lens.d, &tight, &r, err, sizeof err) == HG_ERR_LIMIT);
  tight.max_generators = 0;
  CHECK(hg_analyze(lens.d, &tight, &r, err, sizeof err) == HG_ERR_INVALID);
}

TEST_CASE("sign matrix checks through the C API") {
  char err[256] = "";
  SignmatHolder m;
  REQUIRE(hg_signmat_parse("+ -\n+ +\n", &m.m, err, sizeof err) == HG_OK);

  ReportHolder det;
  REQUIRE(hg_check_lo(m.m, HG_LO_DET, nullptr, &det.r, err, sizeof err) ==
          HG_OK);
  CHECK(hg_report_exit_code(det.r) == 0);

  ReportHolder sweep;
  REQUIRE(hg_check_lo(m.m, HG_LO_BRUTEFORCE, nullptr, &sweep.r, err,
                      sizeof err) == HG_OK);
  CHECK(hg_report_exit_code(sweep.r) == 0);

  CHECK(hg_check_lo(m.m, 7, nullptr, &det.r, err, sizeof err) ==
        HG_ERR_INVALID);

  SignmatHolder bad;
  CHECK(hg_signmat_parse("+  -\n", &bad.m, err, sizeof err) == HG_ERR_PARSE);

  // det mode needs a square matrix.
  SignmatHolder rect;
  REQUIRE(hg_signmat_parse("+ - +\n", &rect.m, err, sizeof err) == HG_OK);
  hg_report* r = nullptr;
  CHECK(hg_check_lo(rect.m, HG_LO_DET, nullptr, &r, err, sizeof err) ==
        HG_ERR_INVALID);
}

TEST_CASE("sign matrix from a presentation") {
  char err[256] = "";
  SignmatHolder m;
  REQUIRE(hg_signmat_from_presentation("gens 1\ng1 g1 g1\n", &m.m, err,
                                       sizeof err) == HG_OK);
  ReportHolder r;
  REQUIRE(hg_check_lo(m.m, HG_LO_DET, nullptr, &r.r, err, sizeof err) == HG_OK);
  CHECK(hg_report_exit_code(r.r) == 0);  // Z/3 is not left-orderable

  SignmatHolder bad;
  CHECK(hg_signmat_from_presentation("gens x\n", &bad.m, err, sizeof err) ==
        HG_ERR_PARSE);
}

TEST_CASE("recognize and strong reports through the C API") {
  char err[256] = "";
  DiagramHolder s3;
  REQUIRE(hg_diagram_lens(1, &s3.d, err, sizeof err) == HG_OK);
  ReportHolder verdict;
  REQUIRE(hg_recognize_s3(s3.d, nullptr, &verdict.r, err, sizeof err) == HG_OK);
  CHECK(hg_report_exit_code(verdict.r) == 0);

  DiagramHolder lens2;
  REQUIRE(hg_diagram_lens(2, &lens2.d, err, sizeof err) == HG_OK);
  ReportHolder not_ihs;
  REQUIRE(hg_recognize_s3(lens2.d, nullptr, &not_ihs.r, err, sizeof err) ==
          HG_OK);
  CHECK(hg_report_exit_code(not_ihs.r) == 1);

  ReportHolder strong;
  REQUIRE(hg_check_strong(lens2.d, nullptr, &strong.r, err, sizeof err) ==
          HG_OK);
  CHECK(hg_report_exit_code(strong.r) == 0);

  ReportHolder matrix;
  REQUIRE(hg_matrix_summary(lens2.d, nullptr, &matrix.r, err, sizeof err) ==
          HG_OK);
  CHECK(hg_report_exit_code(matrix.r) == 0);
  CHECK(std::string(hg_report_text(matrix.r)).find("permanent: 2") !=
        std::string::npos);
}
