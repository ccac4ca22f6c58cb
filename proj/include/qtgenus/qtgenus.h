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

#ifndef QTGENUS_QTGENUS_H
#define QTGENUS_QTGENUS_H

#include <stddef.h>

#if defined(_WIN32)
#define QTG_API __declspec(dllexport)
#else
#define QTG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qtg_status {
  QTG_OK = 0,
  QTG_INVALID_INPUT = 1, /* malformed manifest, bad arguments, non-unimodular lambda */
  QTG_UNMET = 2,         /* a hypothesis or precondition does not hold */
  QTG_COMPUTATION = 3,   /* an internal cross-check failed */
  QTG_INTERNAL = 4
} qtg_status;

typedef struct qtg_manifest qtg_manifest;

/* Library version, e.g. "0.1.0". */
QTG_API const char* qtg_version(void);

/* Message of the last failed call on this thread; empty after success. */
QTG_API const char* qtg_last_error(void);

QTG_API qtg_status qtg_manifest_parse(const char* text, qtg_manifest** out);
QTG_API qtg_status qtg_manifest_load(const char* path, qtg_manifest** out);
QTG_API void qtg_manifest_free(qtg_manifest* manifest);
QTG_API qtg_status qtg_manifest_serialize(const qtg_manifest* manifest, char** out);
/* 1 if both parse to the same structure, 0 otherwise. */
QTG_API int qtg_manifest_equal(const qtg_manifest* a, const qtg_manifest* b);
/* Builds the manifold; QTG_INVALID_INPUT names the failing vertices. */
QTG_API qtg_status qtg_manifest_validate(const qtg_manifest* manifest);

/* Strings returned through char** are owned by the caller. */
QTG_API void qtg_string_free(char* s);

QTG_API qtg_status qtg_describe(const qtg_manifest* manifest, char** json);

typedef struct qtg_genus_options {
  const char* twist;  /* "none", "elliptic", "witten", "signature", "custom"; NULL means "none" */
  int q_order;
  const long* xi;     /* circle for the equivariant index, or NULL */
  size_t xi_length;
  const char* engine; /* "localization" or "cohomological"; NULL means "localization" */
  int threads;
} qtg_genus_options;

QTG_API qtg_status qtg_genus(const qtg_manifest* manifest, const qtg_genus_options* options, char** json);

/* theorem: "circle", "index-I", "thm34", "lemma52", "table1". manifest may
   be NULL for "table1". The report's "outcome" is "pass", "violation" or
   "hypothesis_unmet". */
QTG_API qtg_status qtg_verify(const qtg_manifest* manifest, const char* theorem, int q_order, int threads,
                              char** json);

QTG_API qtg_status qtg_census(int n, int k, int entry_bound, int threads, char** json);

QTG_API qtg_status qtg_alpha(long l, long* out);

#ifdef __cplusplus
}
#endif

#endif
