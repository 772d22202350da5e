/* Copyright 2026 The crossdesc Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CROSSDESC_CROSSDESC_H_
#define CROSSDESC_CROSSDESC_H_

#include <stdint.h>

#if defined(_WIN32)
#define CD_API __declspec(dllexport)
#else
#define CD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the CLI exit codes (0..4). */
typedef enum cd_status {
  CD_OK = 0,
  CD_FAILED = 1,           /* the input was checked and the check failed */
  CD_PARSE = 2,            /* malformed JSON, unknown kind or unresolved id */
  CD_RESOURCE = 3,         /* a size bound would be exceeded */
  CD_PRECONDITION = 4,     /* e.g. lifting along a non weak equivalence */
  CD_INTERNAL = 5,
  CD_INVALID_ARGUMENT = 6
} cd_status;

typedef struct cd_document cd_document;

CD_API const char* cd_version(void);

/* Message for the last failing call on this thread, or "". */
CD_API const char* cd_last_error(void);

/* Frees strings returned through `char** out` parameters. */
CD_API void cd_string_free(char* s);

/* `base_dir` resolves relative references and may be NULL. */
CD_API cd_status cd_document_parse(const char* json, const char* base_dir, cd_document** out);
CD_API cd_status cd_document_load(const char* path, cd_document** out);
CD_API void cd_document_free(cd_document* doc);
CD_API const char* cd_document_kind(const cd_document* doc);

/* Every command writes a JSON report to `*out` whenever it gets far enough
 * to produce one, including CD_FAILED and CD_PRECONDITION outcomes. */

/* Axiom checks for whatever the document describes. */
CD_API cd_status cd_validate(const cd_document* doc, char** out);

/* Descent data of a diagram; with `classes` also gauge classes and
 * witnesses. `bound` 0 means the default. */
CD_API cd_status cd_desc(const cd_document* doc, int classes, uint64_t bound, char** out);

/* Levelwise weak-equivalence checks of a diagram morphism. */
CD_API cd_status cd_weq(const cd_document* doc, char** out);

/* Oracle and constructive verification of the class bijection. CD_FAILED
 * when the routes disagree or the map is not bijective. */
CD_API cd_status cd_transfer(const cd_document* doc, int traces, uint64_t bound, char** out);

/* Lifts one target datum. `target` is a decimal index into the target's
 * enumeration or a JSON array [x, g, a] of labels; NULL means index 0. */
CD_API cd_status cd_lift(const cd_document* doc, const char* target, uint64_t bound, char** out);

/* Materializes a document (typically a fixture spec) as explicit tables. */
CD_API cd_status cd_fixture(const cd_document* doc, char** out);

/* Spec document for a built-in fixture name; NULL lists the names. */
CD_API cd_status cd_fixture_builtin(const char* name, char** out);

/* Canonical re-serialization of a document. */
CD_API cd_status cd_canonicalize(const cd_document* doc, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CROSSDESC_CROSSDESC_H_ */
