#include "twobridge/twobridge.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/alexpoly.hpp"
#include "core/covering.hpp"
#include "core/swinv.hpp"
#include "report/commands.hpp"
#include "report/json_io.hpp"

struct tb_poly {
  twobridge::LaurentPoly value;
};
struct tb_word {
  twobridge::BridgeWord value;
};
struct tb_knot {
  twobridge::TwoBridge value;
};
struct tb_certificate {
  twobridge::Certificate value;
};

namespace {

using namespace twobridge;

thread_local std::string last_error;

tb_status from_errc(Errc e) {
  // tb_status mirrors Errc one-to-one, shifted past TB_OK.
  return static_cast<tb_status>(static_cast<int>(e) + 1);
}

template <class F>
tb_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return TB_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return from_errc(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return TB_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TB_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TB_INTERNAL_ERROR;
  }
}

void need(const void* p) {
  if (p == nullptr) throw Error(Errc::InvalidArgument, "null argument");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Budgets budgets_of(const tb_budgets* b) {
  Budgets out;
  if (b == nullptr) return out;
  out.alexander_terms = b->alexander_terms;
  out.cross_check = b->cross_check;
  out.profile = b->profile;
  out.direct = b->direct;
  out.determinant_size = b->determinant_size;
  out.word_nmax = b->word_nmax;
  out.alexander_nmax = b->alexander_nmax;
  return out;
}

WeightMatrix weights_of(size_t m, const int64_t* w) {
  need(w);
  return WeightMatrix(m, std::vector<std::int64_t>(w, w + m * m));
}

void emit(const Report& r, char** out) { *out = dup(r.to_json().dump()); }

}  // namespace

extern "C" {

const char* tb_status_name(tb_status status) {
  if (status == TB_OK) return "Ok";
  if (status == TB_INTERNAL_ERROR) return "InternalError";
  if (status < TB_OK || status > TB_INTERNAL_ERROR) return "Unknown";
  return errc_name(static_cast<Errc>(static_cast<int>(status) - 1));
}

const char* tb_last_error(void) { return last_error.c_str(); }

void tb_string_free(char* s) { std::free(s); }

tb_budgets tb_budgets_default(void) {
  const Budgets b;
  return {b.alexander_terms, b.cross_check, b.profile, b.direct, b.determinant_size,
          static_cast<uint32_t>(b.word_nmax), static_cast<uint32_t>(b.alexander_nmax)};
}

tb_status tb_poly_from_json(const char* json, tb_poly** out) {
  return guarded([&] {
    need(json), need(out);
    *out = new tb_poly{poly_from_json(Json::parse(json))};
  });
}

tb_status tb_poly_to_json(const tb_poly* f, char** out) {
  return guarded([&] {
    need(f), need(out);
    *out = dup(poly_to_json(f->value).dump());
  });
}

tb_status tb_poly_to_string(const tb_poly* f, const char* var, char** out) {
  return guarded([&] {
    need(f), need(out);
    *out = dup(f->value.to_string(var ? var : "t"));
  });
}

tb_status tb_poly_add(const tb_poly* f, const tb_poly* g, tb_poly** out) {
  return guarded([&] {
    need(f), need(g), need(out);
    *out = new tb_poly{f->value + g->value};
  });
}

tb_status tb_poly_mul(const tb_poly* f, const tb_poly* g, tb_poly** out) {
  return guarded([&] {
    need(f), need(g), need(out);
    *out = new tb_poly{f->value * g->value};
  });
}

tb_status tb_poly_symmetrize(const tb_poly* f, tb_poly** out) {
  return guarded([&] {
    need(f), need(out);
    *out = new tb_poly{symmetrize(f->value)};
  });
}

tb_status tb_poly_equal_up_to_units(const tb_poly* f, const tb_poly* g, int* out) {
  return guarded([&] {
    need(f), need(g), need(out);
    *out = equal_up_to_units(f->value, g->value) ? 1 : 0;
  });
}

tb_status tb_poly_evaluate(const tb_poly* f, const char* x, char** out) {
  return guarded([&] {
    need(f), need(x), need(out);
    *out = dup(to_string(evaluate(f->value, parse_rational(x))));
  });
}

void tb_poly_free(tb_poly* f) { delete f; }

tb_status tb_word_parse(const char* text, tb_word** out) {
  return guarded([&] {
    need(text), need(out);
    *out = new tb_word{BridgeWord::parse(text)};
  });
}

tb_status tb_word_to_string(const tb_word* w, char** out) {
  return guarded([&] {
    need(w), need(out);
    *out = dup(w->value.to_string());
  });
}

tb_status tb_word_is_fibered(const tb_word* w, int* out) {
  return guarded([&] {
    need(w), need(out);
    *out = is_fibered(w->value) ? 1 : 0;
  });
}

tb_status tb_word_evaluate(const tb_word* w, tb_knot** out) {
  return guarded([&] {
    need(w), need(out);
    *out = new tb_knot{evaluate_word(w->value).knot};
  });
}

tb_status tb_word_alexander(const tb_word* w, tb_poly** out) {
  return guarded([&] {
    need(w), need(out);
    *out = new tb_poly{alexander_from_word(w->value)};
  });
}

void tb_word_free(tb_word* w) { delete w; }

tb_status tb_knot_normalize(const char* p, const char* q, tb_knot** out) {
  return guarded([&] {
    need(p), need(q), need(out);
    *out = new tb_knot{normalize(parse_bigint(p), parse_bigint(q))};
  });
}

tb_status tb_knot_parse(const char* text, tb_knot** out) {
  return guarded([&] {
    need(text), need(out);
    *out = new tb_knot{TwoBridge::parse(text)};
  });
}

tb_status tb_knot_to_string(const tb_knot* k, char** out) {
  return guarded([&] {
    need(k), need(out);
    *out = dup(k->value.to_string());
  });
}

tb_status tb_knot_p(const tb_knot* k, char** out) {
  return guarded([&] {
    need(k), need(out);
    *out = dup(k->value.p().get_str());
  });
}

tb_status tb_knot_q(const tb_knot* k, char** out) {
  return guarded([&] {
    need(k), need(out);
    *out = dup(k->value.q().get_str());
  });
}

tb_status tb_knot_equivalent(const tb_knot* a, const tb_knot* b, int* out) {
  return guarded([&] {
    need(a), need(b), need(out);
    *out = equivalent(a->value, b->value) ? 1 : 0;
  });
}

tb_status tb_knot_mirror(const tb_knot* k, tb_knot** out) {
  return guarded([&] {
    need(k), need(out);
    *out = new tb_knot{mirror(k->value)};
  });
}

tb_status tb_knot_even_expansion(const tb_knot* k, tb_word** out) {
  return guarded([&] {
    need(k), need(out);
    *out = new tb_word{even_cf_expansion(k->value)};
  });
}

tb_status tb_knot_alexander(const tb_knot* k, const tb_budgets* budgets, tb_poly** out) {
  return guarded([&] {
    need(k), need(out);
    *out = new tb_poly{alexander_from_pq(k->value, budgets_of(budgets).alexander_terms)};
  });
}

tb_status tb_knot_diagonal(const tb_knot* k, const tb_budgets* budgets, int64_t* out) {
  return guarded([&] {
    need(k), need(out);
    *out = diagonal_direct(k->value, budgets_of(budgets).direct);
  });
}

void tb_knot_free(tb_knot* k) { delete k; }

tb_status tb_certify(const tb_knot* a, const tb_knot* b, const tb_budgets* budgets, tb_certificate** out) {
  return guarded([&] {
    need(a), need(b), need(out);
    *out = new tb_certificate{distinguish_certificate(a->value, b->value, budgets_of(budgets))};
  });
}

tb_status tb_certificate_distinguished(const tb_certificate* c, int* out) {
  return guarded([&] {
    need(c), need(out);
    *out = c->value.verdict == Verdict::Distinguished ? 1 : 0;
  });
}

tb_status tb_certificate_to_json(const tb_certificate* c, char** out) {
  return guarded([&] {
    need(c), need(out);
    *out = dup(certificate_to_json(c->value).dump());
  });
}

void tb_certificate_free(tb_certificate* c) { delete c; }

tb_status tb_laplacian_cofactor(size_t m, const int64_t* weights_row_major, char** out) {
  return guarded([&] {
    need(out);
    *out = dup(laplacian_cofactor(weights_of(m, weights_row_major)).get_str());
  });
}

tb_status tb_tree_sum(size_t m, const int64_t* weights_row_major, char** out) {
  return guarded([&] {
    need(out);
    *out = dup(tree_sum_bruteforce(weights_of(m, weights_row_major)).get_str());
  });
}

tb_status tb_sw_covering_base(const tb_poly* alex, tb_poly** out) {
  return guarded([&] {
    need(alex), need(out);
    *out = new tb_poly{sw_covering_base(alex->value).poly};
  });
}

tb_status tb_sw_knot_surgery(const tb_poly* base, const tb_poly* alex, tb_poly** out) {
  return guarded([&] {
    need(base), need(alex), need(out);
    *out = new tb_poly{sw_knot_surgery(base->value, alex->value).poly};
  });
}

tb_status tb_cmd_classify(const char* word, const char* pq, const tb_budgets* budgets, char** out) {
  return guarded([&] {
    need(out);
    KnotInput in;
    if (word) in.word = word;
    if (pq) in.pq = pq;
    emit(cmd_classify(in, budgets_of(budgets)), out);
  });
}

tb_status tb_cmd_alex(const char* word, const char* pq, const tb_budgets* budgets, char** out) {
  return guarded([&] {
    need(out);
    KnotInput in;
    if (word) in.word = word;
    if (pq) in.pq = pq;
    emit(cmd_alex(in, budgets_of(budgets)), out);
  });
}

tb_status tb_cmd_covering(const char* pq, int profile, const tb_budgets* budgets, char** out) {
  return guarded([&] {
    need(pq), need(out);
    emit(cmd_covering(pq, profile != 0, budgets_of(budgets)), out);
  });
}

tb_status tb_cmd_family(const char* construction, uint32_t n, int64_t i, const tb_budgets* budgets, char** out) {
  return guarded([&] {
    need(construction), need(out);
    std::optional<std::uint64_t> member;
    if (i >= 0) member = static_cast<std::uint64_t>(i);
    emit(cmd_family(construction, n, member, budgets_of(budgets)), out);
  });
}

tb_status tb_cmd_sw(const char* family, uint32_t n, const tb_budgets* budgets, char** out) {
  return guarded([&] {
    need(family), need(out);
    emit(cmd_sw(family, n, budgets_of(budgets)), out);
  });
}

tb_status tb_cmd_certify(const char* left, const char* right, const tb_budgets* budgets, char** out) {
  return guarded([&] {
    need(left), need(right), need(out);
    emit(cmd_certify(left, right, budgets_of(budgets)), out);
  });
}

tb_status tb_cmd_report(uint32_t n, const tb_budgets* budgets, char** out) {
  return guarded([&] {
    need(out);
    emit(cmd_report(n, budgets_of(budgets)), out);
  });
}

tb_status tb_cmd_verify(const char* suite, int64_t pmax, int64_t nmax, int64_t n, const tb_budgets* budgets,
                        char** out, int* passed) {
  return guarded([&] {
    need(suite), need(out), need(passed);
    VerifyOptions opt;
    if (pmax >= 0) opt.pmax = static_cast<unsigned>(pmax);
    if (nmax >= 0) opt.nmax = static_cast<unsigned>(nmax);
    if (n >= 0) opt.n = static_cast<unsigned>(n);
    opt.budgets = budgets_of(budgets);
    const Report r = cmd_verify(suite, opt);
    *passed = r.passed() ? 1 : 0;
    emit(r, out);
  });
}

}  // extern "C"
