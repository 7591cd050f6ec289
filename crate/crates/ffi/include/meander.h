#ifndef MEANDER_H
#define MEANDER_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Largest total order `meander_count` accepts.
 */
#define MEANDER_MAX_COUNT_ORDER 12

typedef enum MeanderStatus {
  MEANDER_STATUS_OK = 0,
  MEANDER_STATUS_NULL_POINTER = 1,
  MEANDER_STATUS_UTF8 = 2,
  MEANDER_STATUS_SYNTAX = 3,
  /**
   * Parsed but the arcs cross.
   */
  MEANDER_STATUS_INVALID_MEANDER = 4,
  MEANDER_STATUS_COLOR_MISMATCH = 5,
  MEANDER_STATUS_LABEL_OUT_OF_RANGE = 6,
  MEANDER_STATUS_EMPTY_MEANDER = 7,
  MEANDER_STATUS_OUT_OF_RANGE = 8,
  MEANDER_STATUS_INTERNAL = 9,
} MeanderStatus;

typedef enum MeanderClass {
  MEANDER_CLASS_EMPTY = 0,
  MEANDER_CLASS_SNAKE = 1,
  MEANDER_CLASS_ITERATED_SNAKE = 2,
  MEANDER_CLASS_IRREDUCIBLE = 3,
  MEANDER_CLASS_COMPOSITE = 4,
} MeanderClass;

typedef enum MeanderSlotKind {
  MEANDER_SLOT_KIND_CROSSING = 0,
  MEANDER_SLOT_KIND_TOUCH = 1,
} MeanderSlotKind;

typedef enum MeanderRenderFormat {
  MEANDER_RENDER_FORMAT_ASCII = 0,
  MEANDER_RENDER_FORMAT_SVG = 1,
  MEANDER_RENDER_FORMAT_TIKZ = 2,
} MeanderRenderFormat;

/**
 * Which count table `meander_count` reads.
 */
typedef enum MeanderCountClass {
  MEANDER_COUNT_CLASS_ALL = 0,
  MEANDER_COUNT_CLASS_SNAKE = 1,
  /**
   * Snakes included.
   */
  MEANDER_COUNT_CLASS_ITERATED_SNAKE = 2,
  MEANDER_COUNT_CLASS_IRREDUCIBLE = 3,
} MeanderCountClass;

/**
 * A valid or invalid meander code.
 */
typedef struct MeanderHandle MeanderHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call on the same thread.
 */
const char *meander_last_error(void);

/**
 * Parses the text form `TYPES|VISIT` or JSON. The code need not be planar.
 *
 * # Safety
 * `text` is a nul-terminated string and `out` is writable.
 */
enum MeanderStatus meander_parse(const char *text, struct MeanderHandle **out);

/**
 * # Safety
 * `h` is null or came from this library and was not freed yet.
 */
void meander_free(struct MeanderHandle *h);

/**
 * # Safety
 * `s` is null or a string returned by this library and not freed yet.
 */
void meander_string_free(char *s);

/**
 * Text form of the code.
 *
 * # Safety
 * `h` is a live handle and `out` is writable.
 */
enum MeanderStatus meander_to_string(const struct MeanderHandle *h, char **out);

/**
 * # Safety
 * `h` is a live handle and `out` is writable.
 */
enum MeanderStatus meander_is_valid(const struct MeanderHandle *h, bool *out);

/**
 * Numbers of crossings and touches.
 *
 * # Safety
 * `h` is a live handle; `n` and `k` are writable.
 */
enum MeanderStatus meander_order(const struct MeanderHandle *h, uint32_t *n, uint32_t *k);

/**
 * # Safety
 * `h` is a live handle and `out` is writable.
 */
enum MeanderStatus meander_classify(const struct MeanderHandle *h, enum MeanderClass *out);

/**
 * Inserts `piece` at the slot of `host` with the given kind and 1-based
 * label. The result is a new handle.
 *
 * # Safety
 * `host` and `piece` are live handles and `out` is writable.
 */
enum MeanderStatus meander_insert(const struct MeanderHandle *host,
                                  enum MeanderSlotKind kind,
                                  uint32_t label,
                                  const struct MeanderHandle *piece,
                                  struct MeanderHandle **out);

/**
 * Canonical decomposition as JSON.
 *
 * # Safety
 * `h` is a live handle and `out` is writable.
 */
enum MeanderStatus meander_decompose_json(const struct MeanderHandle *h, char **out);

/**
 * # Safety
 * `h` is a live handle and `out` is writable.
 */
enum MeanderStatus meander_render(const struct MeanderHandle *h,
                                  enum MeanderRenderFormat format,
                                  char **out);

/**
 * Number of meanders of order `(n, k)` in a class. `n + k` is at most
 * `MEANDER_MAX_COUNT_ORDER`.
 *
 * # Safety
 * `out` is writable.
 */
enum MeanderStatus meander_count(uint32_t n,
                                 uint32_t k,
                                 enum MeanderCountClass class_,
                                 uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MEANDER_H */
