#include "heegaard.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "diagram.hpp"
#include "errors.hpp"
#include "formats.hpp"
#include "report.hpp"

struct hg_diagram {
  hg::HeegaardDiagram value;
};

struct hg_signmat {
  hg::SignMatrix value;
};

struct hg_report {
  hg::Report value;
};

namespace {

void put_message(char* errmsg, size_t errcap, const char* what) {
  if (!errmsg || errcap == 0) return;
  std::strncpy(errmsg, what, errcap - 1);
  errmsg[errcap - 1] = '\0';
}

// Runs fn, translating exceptions into status codes and messages.
template <typename Fn>
int guarded(char* errmsg, size_t errcap, Fn&& fn) {
  try {
    fn();
    return HG_OK;
  } catch (const hg::ParseError& e) {
    put_message(errmsg, errcap, e.what());
    return HG_ERR_PARSE;
  } catch (const hg::ResourceLimitError& e) {
    put_message(errmsg, errcap, e.what());
    return HG_ERR_LIMIT;
  } catch (const std::invalid_argument& e) {
    put_message(errmsg, errcap, e.what());
    return HG_ERR_INVALID;
  } catch (const std::exception& e) {
    put_message(errmsg, errcap, e.what());
    return HG_ERR_INTERNAL;
  } catch (...) {
    put_message(errmsg, errcap, "unknown error");
    return HG_ERR_INTERNAL;
  }
}

int check_limits(const hg_limits* limits, hg::Limits& out, char* errmsg,
                 size_t errcap) {
  if (!limits) return HG_OK;  // defaults
  if (limits->max_generators < 1 || limits->max_perm_n < 1 ||
      limits->max_bruteforce_rows < 1) {
    put_message(errmsg, errcap, "limits: all caps must be positive");
    return HG_ERR_INVALID;
  }
  out.max_generators = limits->max_generators;
  out.max_perm_n = limits->max_perm_n;
  out.max_bruteforce_rows = limits->max_bruteforce_rows;
  return HG_OK;
}

template <typename Fn>
int make_report(const hg_limits* limits, hg_report** out, char* errmsg,
                size_t errcap, Fn&& build) {
  if (!out) {
    put_message(errmsg, errcap, "null output handle");
    return HG_ERR_INVALID;
  }
  *out = nullptr;
  hg::Limits lim;
  if (int rc = check_limits(limits, lim, errmsg, errcap); rc != HG_OK) return rc;
  return guarded(errmsg, errcap, [&] {
    *out = new hg_report{build(lim)};
  });
}

}  // namespace

extern "C" {

const char* hg_version(void) { return "1.0.0"; }

void hg_limits_init(hg_limits* limits) {
  if (!limits) return;
  limits->max_generators = hg::kDefaultMaxGenerators;
  limits->max_perm_n = hg::kDefaultMaxPermN;
  limits->max_bruteforce_rows = hg::kDefaultMaxBruteforceRows;
}

int hg_diagram_parse_json(const char* text, hg_diagram** out, char* errmsg,
                          size_t errcap) {
  if (!text || !out) {
    put_message(errmsg, errcap, "null argument");
    return HG_ERR_INVALID;
  }
  *out = nullptr;
  return guarded(errmsg, errcap, [&] {
    *out = new hg_diagram{hg::parse_diagram_json(text)};
  });
}

int hg_diagram_lens(long long p, hg_diagram** out, char* errmsg, size_t errcap) {
  if (!out) {
    put_message(errmsg, errcap, "null output handle");
    return HG_ERR_INVALID;
  }
  *out = nullptr;
  return guarded(errmsg, errcap, [&] {
    *out = new hg_diagram{hg::lens_diagram(p)};
  });
}

int hg_diagram_to_json(const hg_diagram* d, char** out_text, char* errmsg,
                       size_t errcap) {
  if (!d || !out_text) {
    put_message(errmsg, errcap, "null argument");
    return HG_ERR_INVALID;
  }
  *out_text = nullptr;
  return guarded(errmsg, errcap, [&] {
    const std::string s = hg::format_diagram_json(d->value);
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out_text = buf;
  });
}

void hg_diagram_free(hg_diagram* d) { delete d; }

int hg_signmat_parse(const char* text, hg_signmat** out, char* errmsg,
                     size_t errcap) {
  if (!text || !out) {
    put_message(errmsg, errcap, "null argument");
    return HG_ERR_INVALID;
  }
  *out = nullptr;
  return guarded(errmsg, errcap, [&] {
    *out = new hg_signmat{hg::parse_sign_matrix(text)};
  });
}

int hg_signmat_from_presentation(const char* text, hg_signmat** out,
                                 char* errmsg, size_t errcap) {
  if (!text || !out) {
    put_message(errmsg, errcap, "null argument");
    return HG_ERR_INVALID;
  }
  *out = nullptr;
  return guarded(errmsg, errcap, [&] {
    *out = new hg_signmat{hg::epsilon_matrix(hg::parse_presentation(text))};
  });
}

void hg_signmat_free(hg_signmat* m) { delete m; }

int hg_analyze(const hg_diagram* d, const hg_limits* limits, hg_report** out,
               char* errmsg, size_t errcap) {
  if (!d) {
    put_message(errmsg, errcap, "null diagram");
    return HG_ERR_INVALID;
  }
  return make_report(limits, out, errmsg, errcap, [&](const hg::Limits& lim) {
    return hg::analyze_report(d->value, lim);
  });
}

int hg_check_strong(const hg_diagram* d, const hg_limits* limits,
                    hg_report** out, char* errmsg, size_t errcap) {
  if (!d) {
    put_message(errmsg, errcap, "null diagram");
    return HG_ERR_INVALID;
  }
  return make_report(limits, out, errmsg, errcap, [&](const hg::Limits& lim) {
    return hg::strong_report(d->value, lim);
  });
}

int hg_matrix_summary(const hg_diagram* d, const hg_limits* limits,
                      hg_report** out, char* errmsg, size_t errcap) {
  if (!d) {
    put_message(errmsg, errcap, "null diagram");
    return HG_ERR_INVALID;
  }
  return make_report(limits, out, errmsg, errcap, [&](const hg::Limits& lim) {
    return hg::matrix_report(d->value, lim);
  });
}

int hg_recognize_s3(const hg_diagram* d, const hg_limits* limits,
                    hg_report** out, char* errmsg, size_t errcap) {
  if (!d) {
    put_message(errmsg, errcap, "null diagram");
    return HG_ERR_INVALID;
  }
  return make_report(limits, out, errmsg, errcap, [&](const hg::Limits& lim) {
    return hg::s3_report(d->value, lim);
  });
}

int hg_check_lo(const hg_signmat* m, int mode, const hg_limits* limits,
                hg_report** out, char* errmsg, size_t errcap) {
  if (!m) {
    put_message(errmsg, errcap, "null matrix");
    return HG_ERR_INVALID;
  }
  if (mode != HG_LO_DET && mode != HG_LO_BRUTEFORCE) {
    put_message(errmsg, errcap, "mode must be HG_LO_DET or HG_LO_BRUTEFORCE");
    return HG_ERR_INVALID;
  }
  return make_report(limits, out, errmsg, errcap, [&](const hg::Limits& lim) {
    return mode == HG_LO_DET ? hg::lo_det_report(m->value, lim)
                             : hg::lo_bruteforce_report(m->value, lim);
  });
}

const char* hg_report_text(const hg_report* r) {
  return r ? r->value.text.c_str() : nullptr;
}

const char* hg_report_json(const hg_report* r) {
  return r ? r->value.json.c_str() : nullptr;
}

int hg_report_exit_code(const hg_report* r) {
  return r ? r->value.exit_code : HG_ERR_INVALID;
}

void hg_report_free(hg_report* r) { delete r; }

void hg_string_free(char* s) { std::free(s); }

}  // extern "C"
