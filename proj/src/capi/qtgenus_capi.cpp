/*
   Copyright 2026 The qtgenus Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qtgenus/qtgenus.h"

#include <cstring>
#include <string>

#include "error.hpp"
#include "io/reports.hpp"
#include "theorems/symmetry.hpp"

struct qtg_manifest {
  qtg::Manifest value;
};

namespace {

thread_local std::string last_error;

qtg_status status_of(qtg::ErrorKind kind) {
  using qtg::ErrorKind;
  switch (kind) {
    case ErrorKind::argument:
    case ErrorKind::parse:
    case ErrorKind::validation:
    case ErrorKind::shape:
    case ErrorKind::degenerate_circle:
      return QTG_INVALID_INPUT;
    case ErrorKind::hypothesis:
    case ErrorKind::precondition:
      return QTG_UNMET;
    case ErrorKind::internal:
      return QTG_INTERNAL;
    default:
      return QTG_COMPUTATION;
  }
}

template <class Fn>
qtg_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return QTG_OK;
  } catch (const qtg::Error& e) {
    last_error = std::string(qtg::to_string(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return QTG_INTERNAL;
  } catch (...) {
    last_error = "internal: unknown exception";
    return QTG_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  qtg::require(p != nullptr, qtg::ErrorKind::argument, std::string(what) + " must not be null");
}

void emit(const qtg::Json& j, char** out) {
  need(out, "output pointer");
  *out = copy_string(j.dump(2));
}

}  // namespace

extern "C" {

const char* qtg_version(void) { return "0.1.0"; }

const char* qtg_last_error(void) { return last_error.c_str(); }

qtg_status qtg_manifest_parse(const char* text, qtg_manifest** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output pointer");
    *out = new qtg_manifest{qtg::parse_manifest(text)};
  });
}

qtg_status qtg_manifest_load(const char* path, qtg_manifest** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "output pointer");
    *out = new qtg_manifest{qtg::load_manifest(path)};
  });
}

void qtg_manifest_free(qtg_manifest* manifest) { delete manifest; }

qtg_status qtg_manifest_serialize(const qtg_manifest* manifest, char** out) {
  return guarded([&] {
    need(manifest, "manifest");
    need(out, "output pointer");
    *out = copy_string(qtg::serialize_manifest(manifest->value));
  });
}

int qtg_manifest_equal(const qtg_manifest* a, const qtg_manifest* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->value == b->value ? 1 : 0;
}

qtg_status qtg_manifest_validate(const qtg_manifest* manifest) {
  return guarded([&] {
    need(manifest, "manifest");
    qtg::build_manifold(manifest->value);
  });
}

void qtg_string_free(char* s) { delete[] s; }

qtg_status qtg_describe(const qtg_manifest* manifest, char** json) {
  return guarded([&] {
    need(manifest, "manifest");
    emit(qtg::describe_report(manifest->value), json);
  });
}

qtg_status qtg_genus(const qtg_manifest* manifest, const qtg_genus_options* options, char** json) {
  return guarded([&] {
    need(manifest, "manifest");
    need(options, "options");
    qtg::GenusRequest req;
    if (options->twist) req.twist = options->twist;
    if (options->engine) req.engine = options->engine;
    req.q_order = options->q_order;
    req.threads = options->threads;
    if (options->xi) req.equivariant = qtg::IntVector(options->xi, options->xi + options->xi_length);
    emit(qtg::genus_report(manifest->value, req), json);
  });
}

qtg_status qtg_verify(const qtg_manifest* manifest, const char* theorem, int q_order, int threads, char** json) {
  return guarded([&] {
    need(theorem, "theorem");
    std::optional<qtg::Manifest> m;
    if (manifest) m = manifest->value;
    emit(qtg::verify_report(m, theorem, q_order, threads), json);
  });
}

qtg_status qtg_census(int n, int k, int entry_bound, int threads, char** json) {
  return guarded([&] { emit(qtg::census_report(n, k, entry_bound, threads), json); });
}

qtg_status qtg_alpha(long l, long* out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = qtg::alpha(l);
  });
}

}  // extern "C"
