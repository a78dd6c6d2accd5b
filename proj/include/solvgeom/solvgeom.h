/*
 * solvgeom: left-invariant geometry of SL(3,C)/SU(3) as the solvable group
 * S = NA, and of its homogeneous hypersurfaces S_H = N exp(R H),
 * H = cos(alpha) H0 + sin(alpha) H1, alpha in [0, pi/2].
 *
 * C interface. Objects are opaque handles released with the matching
 * *_free function. Every fallible call returns an sg_status; on failure a
 * description is available from sg_last_error() on the calling thread.
 */
#ifndef SOLVGEOM_H
#define SOLVGEOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SOLVGEOM_BUILDING)
#    define SG_API __declspec(dllexport)
#  else
#    define SG_API __declspec(dllimport)
#  endif
#else
#  define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
  SG_OK = 0,
  SG_ERR_NULL_ARGUMENT = 1,
  SG_ERR_INVALID_ARGUMENT = 2,
  SG_ERR_DIMENSION_MISMATCH = 3,
  SG_ERR_OUT_OF_RANGE = 4,
  SG_ERR_NOT_IN_SOLVABLE = 5,
  SG_ERR_NOT_SUBALGEBRA = 6,
  SG_ERR_SINGULAR_GRAM = 7,
  SG_ERR_DEGENERATE_PLANE = 8,
  SG_ERR_INVALID_ALGEBRA = 9,
  SG_ERR_PARSE = 10,
  SG_ERR_INTERNAL = 99
} sg_status;

/* Message of the last failed call on this thread ("" if none). */
SG_API const char* sg_last_error(void);
SG_API const char* sg_status_name(sg_status status);
SG_API const char* sg_version(void);

/* ---- metric Lie algebras ------------------------------------------------ */

typedef struct sg_algebra sg_algebra;

/* The 8-dimensional s = n + a with basis (V, iV, W, iW, Z0, iZ0, H0, H1). */
SG_API sg_status sg_algebra_create_solvable(sg_algebra** out);
/* The 7-dimensional s_H with basis (V, iV, W, iW, Z0, iZ0, H). */
SG_API sg_status sg_algebra_create_hypersurface(double alpha, sg_algebra** out);
/* JSON: {"dim": n, "labels": [...], "structure": [[i,j,k,v],...], "gram": [[...]]}. */
SG_API sg_status sg_algebra_from_json(const char* json, sg_algebra** out);
SG_API sg_status sg_algebra_load(const char* path, sg_algebra** out);
SG_API sg_status sg_algebra_save(const sg_algebra* algebra, const char* path);
/* Caller releases *out with sg_string_free. */
SG_API sg_status sg_algebra_to_json(const sg_algebra* algebra, char** out);
SG_API void sg_string_free(char* s);
SG_API void sg_algebra_free(sg_algebra* algebra);

SG_API sg_status sg_algebra_dim(const sg_algebra* algebra, size_t* out);
/* Pointer stays valid for the lifetime of the algebra. */
SG_API sg_status sg_algebra_label(const sg_algebra* algebra, size_t index, const char** out);

/* Vectors are coordinate arrays of length dim in the algebra's basis. */
SG_API sg_status sg_algebra_bracket(const sg_algebra* algebra, const double* x, const double* y, double* out);
SG_API sg_status sg_algebra_connection(const sg_algebra* algebra, const double* x, const double* y, double* out);
SG_API sg_status sg_algebra_curvature(const sg_algebra* algebra, const double* x, const double* y,
                                      const double* z, double* out);
SG_API sg_status sg_algebra_sectional(const sg_algebra* algebra, const double* x, const double* y, double* out);
SG_API sg_status sg_algebra_ricci(const sg_algebra* algebra, const double* x, double* out);
/* dim*dim row-major matrix of the Ricci form in the algebra's basis. */
SG_API sg_status sg_algebra_ricci_form(const sg_algebra* algebra, double* out);
SG_API sg_status sg_algebra_trace_form_vector(const sg_algebra* algebra, double* out);
SG_API sg_status sg_algebra_cheeger(const sg_algebra* algebra, double* out);

typedef struct sg_einstein_result {
  int is_einstein;
  double constant;
  double spread;
} sg_einstein_result;

SG_API sg_status sg_algebra_einstein(const sg_algebra* algebra, double tol, sg_einstein_result* out);

typedef struct sg_damek_ricci_report {
  int axiom_passed[5];
  double axiom_residual[5];
  double j_squared_residual;
  int is_two_step_nilpotent;
  int overall;
} sg_damek_ricci_report;

SG_API sg_status sg_algebra_damek_ricci_check(const sg_algebra* algebra, const size_t* v_indices, size_t v_count,
                                              const size_t* z_indices, size_t z_count, size_t a_index,
                                              sg_damek_ricci_report* out);
SG_API sg_status sg_algebra_j_operator(const sg_algebra* algebra, const double* z, const double* u,
                                       const size_t* v_indices, size_t v_count, double* out);

/* ---- hypersurfaces S_H ------------------------------------------------- */

/* X = aV + bW + cZ0 + tH. */
typedef struct sg_tangent_vector {
  double a_re, a_im;
  double b_re, b_im;
  double c_re, c_im;
  double t;
} sg_tangent_vector;

typedef struct sg_hypersurface sg_hypersurface;

SG_API sg_status sg_hypersurface_create(double alpha, sg_hypersurface** out);
SG_API void sg_hypersurface_free(sg_hypersurface* model);
SG_API sg_status sg_hypersurface_alpha(const sg_hypersurface* model, double* out);

SG_API sg_status sg_second_fundamental_form(const sg_hypersurface* model, const sg_tangent_vector* x1,
                                            const sg_tangent_vector* x2, double* out);
/* 7 values, basis order (V, iV, W, iW, Z0, iZ0, H). */
SG_API sg_status sg_shape_spectrum(const sg_hypersurface* model, double* out);
SG_API sg_status sg_mean_curvature(const sg_hypersurface* model, double* out);
SG_API sg_status sg_gauss_sectional(const sg_hypersurface* model, const sg_tangent_vector* x1,
                                    const sg_tangent_vector* x2, double* out);
SG_API sg_status sg_ricci_gauss(const sg_hypersurface* model, const sg_tangent_vector* x, double* out);
SG_API sg_status sg_k_sigma(const sg_hypersurface* model, double* out);

SG_API sg_status sg_ricci_closed(double alpha, const sg_tangent_vector* x, double* out);
SG_API sg_status sg_ricci_extremes(double alpha, double* min, double* max);

typedef enum sg_regime {
  SG_REGIME_NEGATIVE_RICCI = 0,
  SG_REGIME_RICCI_NULL_DIRECTION = 1,
  SG_REGIME_MIXED_RICCI = 2
} sg_regime;

SG_API const char* sg_regime_name(sg_regime regime);

typedef struct sg_curvature_report {
  double alpha;
  double mean_curvature;
  double cheeger;
  double shape_eigenvalues[7];
  double ricci_min;
  double ricci_max;
  double k_sigma;
  sg_regime regime;
  int is_minimal;
  int is_einstein;
  int is_horosphere_range;
  double cross_pipeline_residual;
} sg_curvature_report;

/* `samples` random unit vectors feed cross_pipeline_residual. */
SG_API sg_status sg_classify(double alpha, size_t samples, uint64_t seed, sg_curvature_report* out);

typedef struct sg_plane_scan {
  double max_k;
  double argmax[2][7];
} sg_plane_scan;

SG_API sg_status sg_nonpositivity_scan(double alpha, size_t samples, uint64_t seed, sg_plane_scan* out);

/* ---- foliation --------------------------------------------------------- */

/* [[1, x, z], [0, 1, y], [0, 0, 1]] * exp(t H + normal T_H). */
typedef struct sg_group_element {
  double x_re, x_im;
  double y_re, y_im;
  double z_re, z_im;
  double t;
  double normal;
  double alpha;
} sg_group_element;

SG_API sg_status sg_flow_point(const sg_group_element* q, double s, sg_group_element* out);
SG_API sg_status sg_leaf_conjugate(const sg_group_element* q, double s, sg_group_element* out);
SG_API sg_status sg_foliation_residual(const sg_group_element* q, double s, double* out);
SG_API sg_status sg_volume_distortion(double alpha, double s, double* out);

/* ---- self verification ------------------------------------------------- */

typedef struct sg_verify_report sg_verify_report;

typedef struct sg_check {
  const char* name; /* valid while the report lives */
  int passed;
  double residual;
  double tolerance;
  int upper_bound; /* 1: residual <= tolerance required; 0: residual >= tolerance */
} sg_check;

SG_API sg_status sg_verify_run(size_t samples, uint64_t seed, sg_verify_report** out);
SG_API size_t sg_verify_count(const sg_verify_report* report);
SG_API sg_status sg_verify_get(const sg_verify_report* report, size_t index, sg_check* out);
SG_API void sg_verify_free(sg_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SOLVGEOM_H */
