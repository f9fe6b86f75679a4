#include "polycert.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "polycert/certdoc.hpp"
#include "polycert/error.hpp"
#include "polycert/polynomial.hpp"

using polycert::Error;
using polycert::Polynomial;
using polycert::Rational;
using polycert::RunResult;

struct pc_poly {
  Polynomial value;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_msg(char** slot, const std::string& msg) {
  if (slot) *slot = dup_string(msg);
}

pc_status status_of(const Error& e) {
  switch (e.code()) {
    case Error::Code::kArgument: return PC_ERR_ARGUMENT;
    case Error::Code::kParse: return PC_ERR_PARSE;
    case Error::Code::kDimension: return PC_ERR_DIMENSION;
    case Error::Code::kPrecondition: return PC_ERR_PRECONDITION;
    case Error::Code::kInternal: return PC_ERR_INTERNAL;
  }
  return PC_ERR_INTERNAL;
}

template <typename Fn>
pc_status guarded(char** errmsg, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    set_msg(errmsg, e.what());
    return status_of(e);
  } catch (const std::bad_alloc&) {
    set_msg(errmsg, "out of memory");
    return PC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_msg(errmsg, e.what());
    return PC_ERR_INTERNAL;
  }
}

// command runners already fold their errors into RunResult
pc_status deliver(const RunResult& res, char** doc, char** errmsg) {
  if (res.code == 1) {
    set_msg(errmsg, res.error);
    return PC_ERR_PRECONDITION;
  }
  if (doc) *doc = dup_string(res.document);
  return res.code == 0 ? PC_OK : PC_NEGATIVE;
}

template <typename Op>
pc_status binary_op(const pc_poly* a, const pc_poly* b, pc_poly** out, Op op) {
  if (!a || !b || !out) return PC_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    *out = new pc_poly{op(a->value, b->value)};
    return PC_OK;
  });
}

}  // namespace

extern "C" {

const char* pc_version(void) { return "1.0.0"; }

void pc_string_free(char* s) { std::free(s); }

pc_status pc_poly_parse(const char* text, int nvars, pc_poly** out,
                        char** errmsg) {
  if (!text || !out) {
    set_msg(errmsg, "null argument");
    return PC_ERR_ARGUMENT;
  }
  return guarded(errmsg, [&] {
    *out = new pc_poly{Polynomial::parse(text, nvars)};
    return PC_OK;
  });
}

pc_status pc_poly_print(const pc_poly* p, char** out) {
  if (!p || !out) return PC_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    *out = dup_string(p->value.str());
    return PC_OK;
  });
}

pc_status pc_poly_nvars(const pc_poly* p, int* out) {
  if (!p || !out) return PC_ERR_ARGUMENT;
  *out = p->value.nvars();
  return PC_OK;
}

pc_status pc_poly_degree(const pc_poly* p, long* out) {
  if (!p || !out) return PC_ERR_ARGUMENT;
  auto d = p->value.degree();
  *out = d ? *d : -1;
  return PC_OK;
}

pc_status pc_poly_add(const pc_poly* a, const pc_poly* b, pc_poly** out) {
  return binary_op(a, b, out, [](const Polynomial& x, const Polynomial& y) {
    return x + y;
  });
}

pc_status pc_poly_sub(const pc_poly* a, const pc_poly* b, pc_poly** out) {
  return binary_op(a, b, out, [](const Polynomial& x, const Polynomial& y) {
    return x - y;
  });
}

pc_status pc_poly_mul(const pc_poly* a, const pc_poly* b, pc_poly** out) {
  return binary_op(a, b, out, [](const Polynomial& x, const Polynomial& y) {
    return x * y;
  });
}

pc_status pc_poly_pow(const pc_poly* p, unsigned long k, pc_poly** out) {
  if (!p || !out) return PC_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    *out = new pc_poly{p->value.pow(k)};
    return PC_OK;
  });
}

pc_status pc_poly_eval(const pc_poly* p, const char* const* coords,
                       size_t ncoords, char** value_out) {
  if (!p || !coords || !value_out) return PC_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    std::vector<Rational> x;
    x.reserve(ncoords);
    for (size_t i = 0; i < ncoords; ++i) {
      if (!coords[i]) throw Error(Error::Code::kArgument, "null coordinate");
      x.push_back(polycert::parse_rational(coords[i]));
    }
    *value_out = dup_string(polycert::rational_str(p->value.evaluate(x)));
    return PC_OK;
  });
}

pc_status pc_poly_is_nonneg(const pc_poly* p, int* result, char** witness_out) {
  if (!p || !result) return PC_ERR_ARGUMENT;
  auto check = p->value.nonneg_coefficients();
  *result = check.nonneg ? 1 : 0;
  if (!check.nonneg && witness_out) {
    std::string s;
    for (std::size_t i = 0; i < check.witness->size(); ++i) {
      if (i) s += ",";
      s += std::to_string((*check.witness)[i]);
    }
    *witness_out = dup_string(s);
  }
  return PC_OK;
}

void pc_poly_free(pc_poly* p) { delete p; }

pc_status pc_run_polya(const char* f_text, long max_k, char** doc,
                       char** errmsg) {
  if (!f_text) {
    set_msg(errmsg, "null input");
    return PC_ERR_ARGUMENT;
  }
  return deliver(polycert::run_polya(f_text, max_k), doc, errmsg);
}

pc_status pc_run_certify(const char* f_text, const char* identity_text,
                         int positive, long max_shift, long max_k, char** doc,
                         char** errmsg) {
  if (!f_text || (!positive && !identity_text)) {
    set_msg(errmsg, "null input");
    return PC_ERR_ARGUMENT;
  }
  return deliver(polycert::run_certify(f_text, identity_text ? identity_text : "",
                                       positive != 0, max_shift, max_k),
                 doc, errmsg);
}

pc_status pc_run_powers(const char* f_text, long max_power, char** doc,
                        char** errmsg) {
  if (!f_text) {
    set_msg(errmsg, "null input");
    return PC_ERR_ARGUMENT;
  }
  return deliver(polycert::run_powers(f_text, max_power), doc, errmsg);
}

pc_status pc_run_member(const char* target_text, const char* generators_text,
                        long degree, char** doc, char** errmsg) {
  if (!target_text || !generators_text) {
    set_msg(errmsg, "null input");
    return PC_ERR_ARGUMENT;
  }
  return deliver(polycert::run_member(target_text, generators_text, degree),
                 doc, errmsg);
}

pc_status pc_run_newton(const char* f_text, char** doc, char** errmsg) {
  if (!f_text) {
    set_msg(errmsg, "null input");
    return PC_ERR_ARGUMENT;
  }
  return deliver(polycert::run_newton(f_text), doc, errmsg);
}

pc_status pc_run_initial(const char* f_text, const char* w_csv, char** doc,
                         char** errmsg) {
  if (!f_text) {
    set_msg(errmsg, "null input");
    return PC_ERR_ARGUMENT;
  }
  return deliver(polycert::run_initial(f_text, w_csv ? w_csv : ""), doc, errmsg);
}

pc_status pc_run_frobenius(long l1, long l2, long k, char** doc, char** errmsg) {
  return deliver(polycert::run_frobenius(l1, l2, k), doc, errmsg);
}

pc_status pc_run_verify(const char* document_json, char** report,
                        char** errmsg) {
  if (!document_json) {
    set_msg(errmsg, "null input");
    return PC_ERR_ARGUMENT;
  }
  return deliver(polycert::run_verify(document_json), report, errmsg);
}

}  // extern "C"
