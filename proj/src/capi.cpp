#include "taitkit/taitkit.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "taitkit/codecs.hpp"
#include "taitkit/flype.hpp"
#include "taitkit/goeritz.hpp"
#include "taitkit/orbit.hpp"
#include "taitkit/parallel.hpp"

struct tk_diagram {
  taitkit::Diagram d;
};

struct tk_table {
  std::vector<taitkit::DiagramDocument> docs;
};

namespace {

thread_local std::string last_error;

tk_status status_of(taitkit::ErrorKind k) { return static_cast<tk_status>(static_cast<int>(k) + 1); }

template <class F>
tk_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return TK_OK;
  } catch (const taitkit::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TK_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tk_status invalid(const char* what) {
  last_error = what;
  return TK_ERR_INVALID_ARGUMENT;
}

taitkit::OrbitLimits limits_of(size_t max_nodes, int max_depth) {
  taitkit::OrbitLimits l;
  if (max_nodes > 0) l.max_nodes = max_nodes;
  if (max_depth >= 0) l.max_depth = max_depth;
  return l;
}

}  // namespace

extern "C" {

TK_API const char* tk_last_error_message(void) { return last_error.c_str(); }

TK_API const char* tk_status_name(tk_status status) {
  switch (status) {
    case TK_OK: return "Ok";
    case TK_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case TK_ERR_INTERNAL: return "Internal";
    default: break;
  }
  const int k = static_cast<int>(status) - 1;
  if (k >= 0 && k <= static_cast<int>(taitkit::ErrorKind::InvalidSite))
    return taitkit::to_string(static_cast<taitkit::ErrorKind>(k));
  return "Unknown";
}

TK_API void tk_string_free(char* s) { std::free(s); }

TK_API tk_status tk_diagram_from_pd(const char* text, tk_diagram** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    const auto pd = taitkit::parse_pd_text(text);
    *out = new tk_diagram{taitkit::build_from_crossing_list(pd)};
  });
}

TK_API tk_status tk_diagram_from_gauss(const char* text, tk_diagram** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { *out = new tk_diagram{taitkit::parse_gauss(text)}; });
}

TK_API void tk_diagram_free(tk_diagram* d) { delete d; }

TK_API tk_status tk_diagram_to_pd(const tk_diagram* d, char** out) {
  if (!d || !out) return invalid("null argument");
  return guarded([&] { *out = dup(taitkit::serialize_pd(d->d)); });
}

TK_API tk_status tk_diagram_canonical_code(const tk_diagram* d, char** out) {
  if (!d || !out) return invalid("null argument");
  return guarded([&] { *out = dup(taitkit::canonical_code(d->d).to_string()); });
}

TK_API tk_status tk_diagram_properties(const tk_diagram* d, tk_properties* out) {
  if (!d || !out) return invalid("null argument");
  return guarded([&] {
    out->crossings = d->d.crossing_count();
    out->components = static_cast<int>(d->d.components().size());
    out->writhe = taitkit::writhe(d->d);
    out->alternating = taitkit::is_alternating(d->d);
    out->reduced = taitkit::is_reduced(d->d);
    out->prime = taitkit::is_prime_diagram(d->d);
  });
}

TK_API tk_status tk_diagram_check_identities(const tk_diagram* d, const char* name, char** json_out, int* all_pass) {
  if (!d || !json_out) return invalid("null argument");
  return guarded([&] {
    const auto report = taitkit::check_identities(d->d, name ? name : "");
    *json_out = dup(taitkit::to_json(report));
    if (all_pass) *all_pass = report.all_pass();
  });
}

TK_API tk_status tk_diagram_flype_sites(const tk_diagram* d, char** json_out) {
  if (!d || !json_out) return invalid("null argument");
  return guarded([&] {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : taitkit::find_flype_sites(d->d)) arr.push_back(nlohmann::ordered_json::parse(taitkit::to_json(s)));
    *json_out = dup(arr.dump());
  });
}

TK_API tk_status tk_diagram_apply_flype(const tk_diagram* d, size_t site_index, tk_diagram** out) {
  if (!d || !out) return invalid("null argument");
  return guarded([&] {
    const auto sites = taitkit::find_flype_sites(d->d);
    if (site_index >= sites.size())
      throw taitkit::Error(taitkit::ErrorKind::IndexOutOfRange, "flype site index out of range");
    *out = new tk_diagram{taitkit::apply_flype(d->d, sites[site_index]).diagram};
  });
}

TK_API tk_status tk_table_load(const char* path, tk_table** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] { *out = new tk_table{taitkit::load_table(path)}; });
}

TK_API void tk_table_free(tk_table* t) { delete t; }

TK_API size_t tk_table_size(const tk_table* t) { return t ? t->docs.size() : 0; }

TK_API const char* tk_table_name(const tk_table* t, size_t index) {
  if (!t || index >= t->docs.size()) return nullptr;
  return t->docs[index].name.c_str();
}

TK_API size_t tk_table_find(const tk_table* t, const char* name) {
  if (!t || !name) return static_cast<size_t>(-1);
  for (size_t i = 0; i < t->docs.size(); ++i)
    if (t->docs[i].name == name) return i;
  return static_cast<size_t>(-1);
}

TK_API tk_status tk_table_diagram(const tk_table* t, size_t index, tk_diagram** out) {
  if (!t || !out) return invalid("null argument");
  if (index >= t->docs.size()) {
    last_error = "table index out of range";
    return TK_ERR_INDEX_OUT_OF_RANGE;
  }
  return guarded([&] { *out = new tk_diagram{t->docs[index].diagram}; });
}

TK_API tk_status tk_invariants_report(const tk_table* t, char** json_out, int* all_pass) {
  if (!t || !json_out) return invalid("null argument");
  return guarded([&] {
    // Entries are checked in parallel; the report is ordered by entry name.
    std::vector<taitkit::ValidationReport> reports(t->docs.size());
    taitkit::parallel_for(t->docs.size(), [&](std::size_t i) {
      reports[i] = taitkit::check_identities(t->docs[i].diagram, t->docs[i].name);
    });
    std::stable_sort(reports.begin(), reports.end(),
                     [](const auto& a, const auto& b) { return a.name < b.name; });
    auto arr = nlohmann::ordered_json::array();
    bool ok = true;
    for (const auto& report : reports) {
      ok = ok && report.all_pass();
      arr.push_back(nlohmann::ordered_json::parse(taitkit::to_json(report)));
    }
    *json_out = dup(arr.dump(2));
    if (all_pass) *all_pass = ok;
  });
}

TK_API tk_status tk_flype_orbit(const tk_diagram* d, size_t max_nodes, int max_depth, char** json_out, char** dot_out,
                                int* truncated) {
  if (!d || !json_out) return invalid("null argument");
  return guarded([&] {
    const auto report = taitkit::flype_orbit(d->d, limits_of(max_nodes, max_depth));
    char* json = dup(taitkit::to_json(report));
    if (dot_out) {
      try {
        *dot_out = dup(taitkit::to_dot(report));
      } catch (...) {
        std::free(json);
        throw;
      }
    }
    *json_out = json;
    if (truncated) *truncated = report.truncated;
  });
}

TK_API tk_status tk_flype_related(const tk_diagram* a, const tk_diagram* b, size_t max_nodes, int max_depth,
                                  tk_relation* relation, int* truncated, char** description_out) {
  if (!a || !b || !relation) return invalid("null argument");
  return guarded([&] {
    const auto r = taitkit::is_flype_related(a->d, b->d, limits_of(max_nodes, max_depth));
    switch (r.relation) {
      case taitkit::Relation::Related: *relation = TK_RELATED; break;
      case taitkit::Relation::NotRelatedWithin: *relation = TK_NOT_RELATED_WITHIN; break;
      case taitkit::Relation::DistinguishedByInvariant: *relation = TK_DISTINGUISHED; break;
    }
    if (truncated) *truncated = r.truncated;
    if (description_out) *description_out = dup(taitkit::describe(r));
  });
}

}  // extern "C"
