#include "lamred.h"

#include <cstring>
#include <string>

#include "lamred/bench.hpp"
#include "lamred/meter.hpp"
#include "lamred/parser.hpp"
#include "lamred/printer.hpp"
#include "lamred/rules.hpp"
#include "lamred/stack.hpp"
#include "lamred/strategies.hpp"
#include "lamred/term.hpp"
#include "lamred/trace.hpp"

#include "json.hpp"

using namespace lamred;

struct lamred_engine {
  TermArena arena;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

TermNode* as_node(lamred_term* t) { return reinterpret_cast<TermNode*>(t); }
const TermNode* as_node(const lamred_term* t) {
  return reinterpret_cast<const TermNode*>(t);
}
lamred_term* as_handle(TermNode* t) {
  return reinterpret_cast<lamred_term*>(t);
}

template <typename Fn>
lamred_status guarded(lamred_engine* eng, Fn&& fn) {
  eng->last_error.clear();
  try {
    lamred_status st = LAMRED_OK;
    run_with_stack(kBigStackBytes, [&] { st = fn(); });
    return st;
  } catch (const ParseError& e) {
    eng->last_error = e.what();
    return LAMRED_ERR_PARSE;
  } catch (const TranslateError& e) {
    eng->last_error = e.what();
    return LAMRED_ERR_PARSE;
  } catch (const NonTerminatingError& e) {
    eng->last_error = e.what();
    return LAMRED_ERR_NONTERMINATING;
  } catch (const UnsupportedInputError& e) {
    eng->last_error = e.what();
    return LAMRED_ERR_UNSUPPORTED;
  } catch (const IllFormedError& e) {
    eng->last_error = e.what();
    return LAMRED_ERR_ILL_FORMED;
  } catch (const ResourceLimitError& e) {
    eng->last_error = e.what();
    return LAMRED_ERR_RESOURCE;
  } catch (const std::exception& e) {
    eng->last_error = e.what();
    return LAMRED_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

lamred_engine* lamred_engine_new(void) {
  try {
    return new lamred_engine();
  } catch (...) {
    return nullptr;
  }
}

void lamred_engine_free(lamred_engine* eng) { delete eng; }

const char* lamred_engine_last_error(const lamred_engine* eng) {
  return eng == nullptr ? "" : eng->last_error.c_str();
}

lamred_status lamred_parse(lamred_engine* eng, const char* src,
                           lamred_term** out_term) {
  if (eng == nullptr || src == nullptr || out_term == nullptr)
    return LAMRED_ERR_BAD_ARGUMENT;
  return guarded(eng, [&] {
    *out_term = as_handle(parse_to_debruijn(src, eng->arena));
    return LAMRED_OK;
  });
}

lamred_status lamred_format(lamred_engine* eng, const lamred_term* term,
                            int style, char** out_text) {
  if (eng == nullptr || term == nullptr || out_text == nullptr)
    return LAMRED_ERR_BAD_ARGUMENT;
  return guarded(eng, [&] {
    TermStyle s = style == 0 ? TermStyle::Compact : TermStyle::Unicode;
    *out_text = dup_string(format_term(as_node(term), s));
    return LAMRED_OK;
  });
}

lamred_status lamred_normalize(lamred_engine* eng, lamred_term* term,
                               const char* strategy, const char* form,
                               long long max_beta_steps) {
  if (eng == nullptr || term == nullptr || strategy == nullptr ||
      form == nullptr)
    return LAMRED_ERR_BAD_ARGUMENT;
  auto s = strategy_from_name(strategy);
  if (!s) {
    eng->last_error = std::string("unknown strategy '") + strategy + "'";
    return LAMRED_ERR_BAD_ARGUMENT;
  }
  std::string f = form;
  if (f != "hnf" && f != "whnf" && f != "nf") {
    eng->last_error = "unknown form '" + f + "'";
    return LAMRED_ERR_BAD_ARGUMENT;
  }
  long long fuel = max_beta_steps > 0 ? max_beta_steps : kDefaultFuel;
  return guarded(eng, [&] {
    TermNode* t = as_node(term);
    if (f == "nf")
      normalize_full(t, *s, fuel, eng->arena);
    else
      head_norm(t, *s, f == "hnf" ? Form::Hnf : Form::Whnf, fuel, eng->arena);
    return LAMRED_OK;
  });
}

lamred_status lamred_read_out(lamred_engine* eng, lamred_term* term,
                              lamred_term** out_term) {
  if (eng == nullptr || term == nullptr || out_term == nullptr)
    return LAMRED_ERR_BAD_ARGUMENT;
  return guarded(eng, [&] {
    *out_term = as_handle(read_out(as_node(term), eng->arena));
    return LAMRED_OK;
  });
}

lamred_status lamred_equal(lamred_engine* eng, const lamred_term* a,
                           const lamred_term* b, int* out_equal) {
  if (eng == nullptr || a == nullptr || b == nullptr || out_equal == nullptr)
    return LAMRED_ERR_BAD_ARGUMENT;
  return guarded(eng, [&] {
    *out_equal = equal_structure(as_node(a), as_node(b)) ? 1 : 0;
    return LAMRED_OK;
  });
}

lamred_status lamred_trace(lamred_engine* eng, lamred_term* term,
                           long long max_steps, int style, char** out_text) {
  if (eng == nullptr || term == nullptr || out_text == nullptr)
    return LAMRED_ERR_BAD_ARGUMENT;
  return guarded(eng, [&] {
    TermStyle s = style == 0 ? TermStyle::Compact : TermStyle::Unicode;
    long long budget = max_steps > 0 ? max_steps : 10000;
    TraceResult trace =
        trace_explicit(as_node(term), budget, s, eng->arena);
    *out_text = dup_string(render_trace(trace));
    return LAMRED_OK;
  });
}

lamred_status lamred_meter_reset(lamred_engine* eng) {
  if (eng == nullptr) return LAMRED_ERR_BAD_ARGUMENT;
  eng->arena.meter().reset();
  eng->last_error.clear();
  return LAMRED_OK;
}

lamred_status lamred_meter_json(lamred_engine* eng, char** out_json) {
  if (eng == nullptr || out_json == nullptr) return LAMRED_ERR_BAD_ARGUMENT;
  return guarded(eng, [&] {
    ByteModel model = ByteModel::from_env();
    const Meter& m = eng->arena.meter();
    static const char* kKindNames[kTermKindCount] = {
        "Const", "FreeVar", "BoundIdx", "App", "Lam", "Susp", "Indirection"};
    nlohmann::ordered_json j;
    j["byte_model"] = model.describe();
    nlohmann::ordered_json kinds;
    for (int k = 0; k < kTermKindCount; ++k)
      kinds[kKindNames[k]] = m.term_counts[k];
    j["nodes_by_kind"] = kinds;
    j["env_items"] = m.env_items();
    j["total_nodes"] = m.total_nodes();
    j["total_bytes"] = m.total_bytes(model);
    j["beta_steps"] = m.beta_steps;
    j["reading_steps"] = m.reading_steps;
    *out_json = dup_string(j.dump(2));
    return LAMRED_OK;
  });
}

lamred_status lamred_bench(const char* spec_json, char** out_json,
                           char** out_error) {
  if (spec_json == nullptr || out_json == nullptr)
    return LAMRED_ERR_BAD_ARGUMENT;
  try {
    nlohmann::json spec = nlohmann::json::parse(spec_json);
    bench::SuiteSpec s;
    s.suite = spec.value("suite", std::string("ski"));
    s.seed = spec.value("seed", 1ull);
    s.count = spec.value("count", 500);
    s.size = spec.value("size", 12);
    s.fuel = spec.value("fuel", kDefaultFuel);
    std::string strategy = spec.value("strategy", std::string("all"));
    std::string report = spec.value("report", std::string("json"));
    ByteModel model = ByteModel::from_env();
    std::vector<bench::BenchReport> reports;
    if (strategy == "all") {
      reports = bench::compare_suites(s, model);
    } else {
      auto st = strategy_from_name(strategy);
      if (!st) throw Error("unknown strategy '" + strategy + "'");
      reports.push_back(bench::run_benchmark(s, *st, model));
    }
    std::string rendered;
    if (report == "json") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports)
        arr.push_back(nlohmann::ordered_json::parse(r.to_json()));
      rendered = arr.dump(2);
    } else if (report == "table") {
      if (reports.size() > 1) {
        rendered = bench::render_comparison_table(reports);
      } else {
        for (const auto& r : reports) rendered += r.to_text();
      }
    } else if (report == "csv") {
      rendered = bench::BenchReport::csv_header() + "\n";
      for (const auto& r : reports) rendered += r.to_csv_row() + "\n";
    } else {
      throw Error("unknown report format '" + report + "'");
    }
    *out_json = dup_string(rendered);
    return LAMRED_OK;
  } catch (const std::exception& e) {
    if (out_error != nullptr) *out_error = dup_string(e.what());
    return LAMRED_ERR_INTERNAL;
  }
}

void lamred_string_free(char* s) { delete[] s; }

}  // extern "C"
