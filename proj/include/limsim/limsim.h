/*
 * Copyright 2026 The limsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of liblimsim.
 *
 * Every function returns a lim_status; on failure a message describing the
 * last error of the calling thread is available from lim_last_error().
 * Handles are opaque and owned by the caller, who releases them with the
 * matching *_destroy function. Strings returned through `char**` are
 * allocated by the library and released with lim_string_free().
 *
 * Bit buffers are arrays of uint8_t holding 0 or 1, index 0 = MSB.
 */

#ifndef LIMSIM_LIMSIM_H
#define LIMSIM_LIMSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LIMSIM_BUILDING)
#    define LIMSIM_API __declspec(dllexport)
#  else
#    define LIMSIM_API __declspec(dllimport)
#  endif
#else
#  define LIMSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lim_status {
  LIM_OK = 0,
  LIM_ERR_INVALID_WIDTH = 1,
  LIM_ERR_INDEX_OUT_OF_RANGE = 2,
  LIM_ERR_WIDTH_MISMATCH = 3,
  LIM_ERR_UNSUPPORTED_OPERATION = 4,
  LIM_ERR_EMPTY_SET = 5,
  LIM_ERR_UNCALIBRATED_POINT = 6,
  LIM_ERR_NON_POSITIVE_EDP = 7,
  LIM_ERR_GEOMETRY_NOT_BLOCK_ALIGNED = 8,
  LIM_ERR_MISSING_PRIMITIVE = 9,
  LIM_ERR_INVALID_CONFIG = 10,
  LIM_ERR_INVALID_ARGUMENT = 11,
  LIM_ERR_IO = 12,
  LIM_ERR_INTERNAL = 99
} lim_status;

typedef enum lim_variant {
  LIM_SRAM_6T = 0,
  LIM_CAM_NOR = 1,
  LIM_AND_DYNAMIC = 2,
  LIM_AND_STATIC = 3,
  LIM_AND_SPECIAL = 4
} lim_variant;

typedef enum lim_op {
  LIM_OP_READ = 0,
  LIM_OP_WRITE = 1,
  LIM_OP_SEARCH = 2,
  LIM_OP_AND = 3
} lim_op;

typedef enum lim_mode { LIM_MAX = 0, LIM_MIN = 1 } lim_mode;
typedef enum lim_encoding { LIM_UNSIGNED = 0, LIM_TWOS_COMPLEMENT = 1 } lim_encoding;

typedef enum lim_comparison {
  LIM_CMP_READ = 0,
  LIM_CMP_WRITE,
  LIM_CMP_SEARCH,
  LIM_CMP_AND,
  LIM_CMP_WRITE_VS_READ,
  LIM_CMP_SEARCH_VS_WRITE,
  LIM_CMP_SEARCH_VS_READ,
  LIM_CMP_AND_VS_SEARCH,
  LIM_CMP_AND_VS_WRITE,
  LIM_CMP_AND_VS_READ,
  LIM_CMP_COUNT
} lim_comparison;

typedef struct lim_array lim_array;
typedef struct lim_extreme lim_extreme;
typedef struct lim_calibration lim_calibration;
typedef struct lim_primitives lim_primitives;

/* Per-operation line activity. The per-row result bits are returned through
 * the caller's buffer of the corresponding call. */
typedef struct lim_event {
  lim_op op;
  uint64_t lines_charged;
  uint64_t lines_discharged;
  uint64_t dummy_window_units;
  uint64_t gate_commutations;
  uint64_t bitline_pairs;
  uint64_t cells_per_bitline;
} lim_event;

typedef struct lim_estimate_coefficients {
  double charge;
  double leak;
  double gate;
  double load;
} lim_estimate_coefficients;

typedef struct lim_estimate {
  uint64_t charge_events;
  uint64_t leak_window_units;
  uint64_t lines_discharged;
  uint64_t gate_commutations;
  uint64_t bitline_load_units;
  double estimate;
} lim_estimate;

typedef struct lim_step_info {
  uint64_t bit_position;
  uint8_t keep;
  uint64_t candidates_before;
  uint64_t candidates_after;
  lim_event event;
} lim_step_info;

typedef struct lim_stimulus_op {
  lim_op op;
  uint32_t row;
  const uint8_t* bits; /* write data, search key or AND mask; NULL for read */
  size_t nbits;
} lim_stimulus_op;

LIMSIM_API const char* lim_last_error(void);
LIMSIM_API const char* lim_status_name(lim_status status);
LIMSIM_API void lim_string_free(char* s);

LIMSIM_API const char* lim_variant_id(lim_variant v);
LIMSIM_API const char* lim_variant_label(lim_variant v);
LIMSIM_API lim_status lim_variant_parse(const char* text, lim_variant* out);
LIMSIM_API const char* lim_op_id(lim_op op);
LIMSIM_API int lim_supports(lim_variant v, lim_op op);

/* --- Memory array -------------------------------------------------------- */

LIMSIM_API lim_status lim_array_create(lim_variant variant, uint32_t rows,
                                       uint32_t cols, lim_array** out);
LIMSIM_API void lim_array_destroy(lim_array* array);
LIMSIM_API uint32_t lim_array_rows(const lim_array* array);
LIMSIM_API uint32_t lim_array_cols(const lim_array* array);

/* `event` may be NULL. */
LIMSIM_API lim_status lim_array_write(lim_array* array, uint32_t row,
                                      const uint8_t* bits, size_t nbits,
                                      lim_event* event);
LIMSIM_API lim_status lim_array_read(const lim_array* array, uint32_t row,
                                     uint8_t* out_bits, size_t nbits,
                                     lim_event* event);
/* out_rows receives one match bit per row; nrows must equal the row count. */
LIMSIM_API lim_status lim_array_search(const lim_array* array,
                                       const uint8_t* key, size_t nbits,
                                       uint8_t* out_rows, size_t nrows,
                                       lim_event* event);
LIMSIM_API lim_status lim_array_and(lim_array* array, const uint8_t* mask,
                                    size_t nbits, uint8_t* out_rows,
                                    size_t nrows, lim_event* event);

/* `coefficients` may be NULL for the defaults (10, 1, 5, 2).
 * bitline_transistors <= 0 selects lim_default_bitline_load(variant). */
LIMSIM_API lim_status lim_structural_estimate(
    const lim_event* event, lim_variant variant, int bitline_transistors,
    double vdd, double t_clk_ns,
    const lim_estimate_coefficients* coefficients, lim_estimate* out);
LIMSIM_API int lim_default_bitline_load(lim_variant variant);

/* --- Maximum / minimum search -------------------------------------------- */

LIMSIM_API lim_status lim_find_extreme(lim_array* array, lim_mode mode,
                                       lim_encoding encoding,
                                       lim_extreme** out);
LIMSIM_API void lim_extreme_destroy(lim_extreme* result);
LIMSIM_API uint32_t lim_extreme_row(const lim_extreme* result);
LIMSIM_API lim_status lim_extreme_value(const lim_extreme* result,
                                        uint8_t* out_bits, size_t nbits);
LIMSIM_API size_t lim_extreme_step_count(const lim_extreme* result);
/* Any of the buffer arguments may be NULL. mask has `cols` entries; the
 * others have one entry per row. */
LIMSIM_API lim_status lim_extreme_step(const lim_extreme* result, size_t index,
                                       lim_step_info* info, uint8_t* mask,
                                       uint8_t* and_results,
                                       uint8_t* candidates_before,
                                       uint8_t* candidates_after);

/* --- Energy-delay calibration and comparison tables ----------------------- */

LIMSIM_API lim_status lim_calibration_create_seeded(lim_calibration** out);
LIMSIM_API lim_status lim_calibration_load(const char* path,
                                           lim_calibration** out);
LIMSIM_API void lim_calibration_destroy(lim_calibration* cal);
LIMSIM_API lim_status lim_calibration_text(const lim_calibration* cal,
                                           char** out);
LIMSIM_API lim_status lim_edp_lookup(const lim_calibration* cal,
                                     lim_variant v, lim_op op, uint32_t size,
                                     double* out);
LIMSIM_API lim_status lim_relative_variation(double edp_row, double edp_col,
                                             double* out);
LIMSIM_API const char* lim_comparison_stem(lim_comparison kind);
LIMSIM_API lim_status lim_comparison_csv(const lim_calibration* cal,
                                         lim_comparison kind, uint32_t size,
                                         char** out);
LIMSIM_API lim_status lim_edp_csv(const lim_calibration* cal, uint32_t size,
                                  char** out);
/* Audit of the reference comparison tables at 256x256. */
LIMSIM_API lim_status lim_audit(const lim_calibration* cal, char** csv,
                                char** summary, uint32_t* total,
                                uint32_t* unexplained);

/* --- Netlists -------------------------------------------------------------- */

LIMSIM_API lim_status lim_primitives_create_placeholder(
    lim_variant variant, const char* include_path, lim_primitives** out);
LIMSIM_API lim_status lim_primitives_parse(const char* text,
                                           lim_primitives** out);
LIMSIM_API void lim_primitives_destroy(lim_primitives* lib);
LIMSIM_API lim_status lim_placeholder_primitives_text(char** out);

LIMSIM_API lim_status lim_netlist_emit(lim_variant variant, uint32_t rows,
                                       uint32_t cols,
                                       const lim_primitives* lib, char** out);
/* sa_delay_ns < 0 selects the default of half a clock period. */
LIMSIM_API lim_status lim_stimuli_emit(lim_variant variant, uint32_t rows,
                                       uint32_t cols,
                                       const lim_stimulus_op* ops, size_t nops,
                                       double t_clk_ns, double vdd,
                                       double sa_delay_ns, char** out);
/* Number of closure problems found; a description goes to `report` when
 * non-NULL. */
LIMSIM_API lim_status lim_netlist_lint(const char* netlist,
                                       const char* primitives,
                                       uint32_t* problems, char** report);
/* Stimulus sources driving nodes that are not ports of the array. */
LIMSIM_API lim_status lim_stimuli_lint(const char* netlist, const char* stimuli,
                                       uint32_t* problems, char** report);
LIMSIM_API lim_status lim_netlist_cell_count(const char* netlist,
                                             uint32_t* cells,
                                             uint32_t* dummy_loads);

#ifdef __cplusplus
}
#endif

#endif /* LIMSIM_LIMSIM_H */
