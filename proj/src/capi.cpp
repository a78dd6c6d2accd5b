#include "solvgeom/solvgeom.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "algebra_io.hpp"
#include "ambient.hpp"
#include "error.hpp"
#include "foliation.hpp"
#include "hypersurface.hpp"
#include "lie_algebra.hpp"
#include "verification.hpp"

struct sg_algebra {
  solvgeom::MetricLieAlgebra algebra;
};

struct sg_hypersurface {
  solvgeom::HypersurfaceModel model;
};

struct sg_verify_report {
  std::vector<solvgeom::CheckResult> checks;
};

namespace {

using namespace solvgeom;

thread_local std::string g_last_error;

sg_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return SG_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return SG_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotInSolvable: return SG_ERR_NOT_IN_SOLVABLE;
    case ErrorCode::NotSubalgebra: return SG_ERR_NOT_SUBALGEBRA;
    case ErrorCode::SingularGram: return SG_ERR_SINGULAR_GRAM;
    case ErrorCode::DegeneratePlane: return SG_ERR_DEGENERATE_PLANE;
    case ErrorCode::OutOfRange: return SG_ERR_OUT_OF_RANGE;
    case ErrorCode::InvalidAlgebra: return SG_ERR_INVALID_ALGEBRA;
    case ErrorCode::Parse: return SG_ERR_PARSE;
  }
  return SG_ERR_INTERNAL;
}

template <class F>
sg_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return SG_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SG_ERR_INTERNAL;
  }
}

sg_status null_argument() {
  g_last_error = "null argument";
  return SG_ERR_NULL_ARGUMENT;
}

template <class... P>
bool any_null(const P*... p) {
  return ((p == nullptr) || ...);
}

CoefficientVector read_vector(const sg_algebra* a, const double* v) {
  CoefficientVector out(static_cast<Eigen::Index>(a->algebra.dim()));
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = v[i];
  return out;
}

void write_vector(const CoefficientVector& v, double* out) {
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v(i);
}

TangentVector read_tangent(const sg_tangent_vector& x) {
  return {{x.a_re, x.a_im}, {x.b_re, x.b_im}, {x.c_re, x.c_im}, x.t};
}

GroupElement read_group(const sg_group_element& q) {
  return {{q.x_re, q.x_im}, {q.y_re, q.y_im}, {q.z_re, q.z_im}, q.t, q.normal, q.alpha};
}

sg_group_element write_group(const GroupElement& q) {
  return {q.x.real(), q.x.imag(), q.y.real(), q.y.imag(), q.z.real(), q.z.imag(), q.t, q.normal, q.alpha};
}

sg_status wrap_algebra(MetricLieAlgebra&& L, sg_algebra** out) {
  *out = new sg_algebra{std::move(L)};
  return SG_OK;
}

}  // namespace

extern "C" {

const char* sg_last_error(void) { return g_last_error.c_str(); }

const char* sg_status_name(sg_status status) {
  switch (status) {
    case SG_OK: return "ok";
    case SG_ERR_NULL_ARGUMENT: return "null argument";
    case SG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SG_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case SG_ERR_OUT_OF_RANGE: return "out of range";
    case SG_ERR_NOT_IN_SOLVABLE: return "not in s";
    case SG_ERR_NOT_SUBALGEBRA: return "not a subalgebra";
    case SG_ERR_SINGULAR_GRAM: return "singular gram matrix";
    case SG_ERR_DEGENERATE_PLANE: return "degenerate plane";
    case SG_ERR_INVALID_ALGEBRA: return "invalid algebra";
    case SG_ERR_PARSE: return "parse error";
    case SG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sg_version(void) { return "0.1.0"; }

sg_status sg_algebra_create_solvable(sg_algebra** out) {
  if (!out) return null_argument();
  return guarded([&] {
    const auto basis = ambient::solvable_basis();
    std::vector<std::string> labels(ambient::kSolvableLabels.begin(), ambient::kSolvableLabels.end());
    wrap_algebra(from_matrix_basis(basis, InnerProduct::Solvable, std::move(labels)), out);
  });
}

sg_status sg_algebra_create_hypersurface(double alpha, sg_algebra** out) {
  if (!out) return null_argument();
  return guarded([&] { wrap_algebra(build_hypersurface_algebra(alpha), out); });
}

sg_status sg_algebra_from_json(const char* json, sg_algebra** out) {
  if (any_null(json, out)) return null_argument();
  return guarded([&] { wrap_algebra(algebra_from_json(json), out); });
}

sg_status sg_algebra_load(const char* path, sg_algebra** out) {
  if (any_null(path, out)) return null_argument();
  return guarded([&] { wrap_algebra(load_algebra(path), out); });
}

sg_status sg_algebra_save(const sg_algebra* algebra, const char* path) {
  if (any_null(algebra, path)) return null_argument();
  return guarded([&] { save_algebra(algebra->algebra, path); });
}

sg_status sg_algebra_to_json(const sg_algebra* algebra, char** out) {
  if (any_null(algebra, out)) return null_argument();
  return guarded([&] {
    const std::string s = algebra_to_json(algebra->algebra);
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
  });
}

void sg_string_free(char* s) { std::free(s); }

void sg_algebra_free(sg_algebra* algebra) { delete algebra; }

sg_status sg_algebra_dim(const sg_algebra* algebra, size_t* out) {
  if (any_null(algebra, out)) return null_argument();
  *out = algebra->algebra.dim();
  return SG_OK;
}

sg_status sg_algebra_label(const sg_algebra* algebra, size_t index, const char** out) {
  if (any_null(algebra, out)) return null_argument();
  if (index >= algebra->algebra.dim()) {
    g_last_error = "label index out of range";
    return SG_ERR_OUT_OF_RANGE;
  }
  *out = algebra->algebra.labels()[index].c_str();
  return SG_OK;
}

sg_status sg_algebra_bracket(const sg_algebra* algebra, const double* x, const double* y, double* out) {
  if (any_null(algebra, x, y, out)) return null_argument();
  return guarded([&] { write_vector(algebra->algebra.bracket(read_vector(algebra, x), read_vector(algebra, y)), out); });
}

sg_status sg_algebra_connection(const sg_algebra* algebra, const double* x, const double* y, double* out) {
  if (any_null(algebra, x, y, out)) return null_argument();
  return guarded([&] { write_vector(koszul(algebra->algebra, read_vector(algebra, x), read_vector(algebra, y)), out); });
}

sg_status sg_algebra_curvature(const sg_algebra* algebra, const double* x, const double* y, const double* z,
                               double* out) {
  if (any_null(algebra, x, y, z, out)) return null_argument();
  return guarded([&] {
    write_vector(curvature(algebra->algebra, read_vector(algebra, x), read_vector(algebra, y), read_vector(algebra, z)),
                 out);
  });
}

sg_status sg_algebra_sectional(const sg_algebra* algebra, const double* x, const double* y, double* out) {
  if (any_null(algebra, x, y, out)) return null_argument();
  return guarded([&] { *out = sectional(algebra->algebra, read_vector(algebra, x), read_vector(algebra, y)); });
}

sg_status sg_algebra_ricci(const sg_algebra* algebra, const double* x, double* out) {
  if (any_null(algebra, x, out)) return null_argument();
  return guarded([&] { *out = ricci(algebra->algebra, read_vector(algebra, x)); });
}

sg_status sg_algebra_ricci_form(const sg_algebra* algebra, double* out) {
  if (any_null(algebra, out)) return null_argument();
  return guarded([&] {
    // Ric(e_i, e_j) = (Q^-T Ric_onb Q^-1)_ij for the orthonormal columns Q
    const auto& L = algebra->algebra;
    const Eigen::MatrixXd q = orthonormal_basis(L);
    const Eigen::MatrixXd ric_onb = ricci_matrix(L, q);
    const Eigen::MatrixXd qinv = q.inverse();
    const Eigen::MatrixXd ric = qinv.transpose() * ric_onb * qinv;
    const auto n = static_cast<Eigen::Index>(L.dim());
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) out[i * n + j] = ric(i, j);
  });
}

sg_status sg_algebra_trace_form_vector(const sg_algebra* algebra, double* out) {
  if (any_null(algebra, out)) return null_argument();
  return guarded([&] { write_vector(trace_form_vector(algebra->algebra), out); });
}

sg_status sg_algebra_cheeger(const sg_algebra* algebra, double* out) {
  if (any_null(algebra, out)) return null_argument();
  return guarded([&] { *out = cheeger(algebra->algebra); });
}

sg_status sg_algebra_einstein(const sg_algebra* algebra, double tol, sg_einstein_result* out) {
  if (any_null(algebra, out)) return null_argument();
  return guarded([&] {
    const auto r = einstein_check(algebra->algebra, tol);
    *out = {r.is_einstein ? 1 : 0, r.constant, r.spread};
  });
}

sg_status sg_algebra_damek_ricci_check(const sg_algebra* algebra, const size_t* v_indices, size_t v_count,
                                       const size_t* z_indices, size_t z_count, size_t a_index,
                                       sg_damek_ricci_report* out) {
  if (any_null(algebra, v_indices, z_indices, out)) return null_argument();
  return guarded([&] {
    const auto r = damek_ricci_check(algebra->algebra, std::span(v_indices, v_count), std::span(z_indices, z_count),
                                     a_index);
    for (int i = 0; i < 5; ++i) {
      out->axiom_passed[i] = r.axiom[i].passed ? 1 : 0;
      out->axiom_residual[i] = r.axiom[i].residual;
    }
    out->j_squared_residual = r.j_squared_residual;
    out->is_two_step_nilpotent = r.is_two_step_nilpotent ? 1 : 0;
    out->overall = r.overall ? 1 : 0;
  });
}

sg_status sg_algebra_j_operator(const sg_algebra* algebra, const double* z, const double* u,
                                const size_t* v_indices, size_t v_count, double* out) {
  if (any_null(algebra, z, u, v_indices, out)) return null_argument();
  return guarded([&] {
    write_vector(j_operator(algebra->algebra, read_vector(algebra, z), read_vector(algebra, u),
                            std::span(v_indices, v_count)),
                 out);
  });
}

sg_status sg_hypersurface_create(double alpha, sg_hypersurface** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new sg_hypersurface{HypersurfaceModel(alpha)}; });
}

void sg_hypersurface_free(sg_hypersurface* model) { delete model; }

sg_status sg_hypersurface_alpha(const sg_hypersurface* model, double* out) {
  if (any_null(model, out)) return null_argument();
  *out = model->model.alpha();
  return SG_OK;
}

sg_status sg_second_fundamental_form(const sg_hypersurface* model, const sg_tangent_vector* x1,
                                     const sg_tangent_vector* x2, double* out) {
  if (any_null(model, x1, x2, out)) return null_argument();
  return guarded([&] { *out = second_fundamental_form(model->model, read_tangent(*x1), read_tangent(*x2)); });
}

sg_status sg_shape_spectrum(const sg_hypersurface* model, double* out) {
  if (any_null(model, out)) return null_argument();
  return guarded([&] {
    const auto s = shape_spectrum(model->model);
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i];
  });
}

sg_status sg_mean_curvature(const sg_hypersurface* model, double* out) {
  if (any_null(model, out)) return null_argument();
  return guarded([&] { *out = mean_curvature(model->model); });
}

sg_status sg_gauss_sectional(const sg_hypersurface* model, const sg_tangent_vector* x1,
                             const sg_tangent_vector* x2, double* out) {
  if (any_null(model, x1, x2, out)) return null_argument();
  return guarded([&] { *out = gauss_sectional(model->model, read_tangent(*x1), read_tangent(*x2)); });
}

sg_status sg_ricci_gauss(const sg_hypersurface* model, const sg_tangent_vector* x, double* out) {
  if (any_null(model, x, out)) return null_argument();
  return guarded([&] { *out = ricci_gauss(model->model, read_tangent(*x)); });
}

sg_status sg_k_sigma(const sg_hypersurface* model, double* out) {
  if (any_null(model, out)) return null_argument();
  return guarded([&] { *out = k_sigma(model->model); });
}

sg_status sg_ricci_closed(double alpha, const sg_tangent_vector* x, double* out) {
  if (any_null(x, out)) return null_argument();
  return guarded([&] { *out = ricci_closed(alpha, read_tangent(*x)); });
}

sg_status sg_ricci_extremes(double alpha, double* min, double* max) {
  if (any_null(min, max)) return null_argument();
  return guarded([&] {
    const auto e = ricci_extremes(alpha);
    *min = e.min;
    *max = e.max;
  });
}

const char* sg_regime_name(sg_regime regime) {
  switch (regime) {
    case SG_REGIME_NEGATIVE_RICCI: return "NegativeRicci";
    case SG_REGIME_RICCI_NULL_DIRECTION: return "RicciNullDirection";
    case SG_REGIME_MIXED_RICCI: return "MixedRicci";
  }
  return "unknown";
}

sg_status sg_classify(double alpha, size_t samples, uint64_t seed, sg_curvature_report* out) {
  if (!out) return null_argument();
  return guarded([&] {
    const auto r = classify(alpha, samples, seed);
    out->alpha = r.alpha;
    out->mean_curvature = r.mean_curvature;
    out->cheeger = r.cheeger;
    for (std::size_t i = 0; i < r.shape_eigenvalues.size(); ++i) out->shape_eigenvalues[i] = r.shape_eigenvalues[i];
    out->ricci_min = r.ricci_min;
    out->ricci_max = r.ricci_max;
    out->k_sigma = r.k_sigma;
    switch (r.regime) {
      case RicciRegime::NegativeRicci: out->regime = SG_REGIME_NEGATIVE_RICCI; break;
      case RicciRegime::RicciNullDirection: out->regime = SG_REGIME_RICCI_NULL_DIRECTION; break;
      case RicciRegime::MixedRicci: out->regime = SG_REGIME_MIXED_RICCI; break;
    }
    out->is_minimal = r.is_minimal;
    out->is_einstein = r.is_einstein;
    out->is_horosphere_range = r.is_horosphere_range;
    out->cross_pipeline_residual = r.cross_pipeline_residual;
  });
}

sg_status sg_nonpositivity_scan(double alpha, size_t samples, uint64_t seed, sg_plane_scan* out) {
  if (!out) return null_argument();
  return guarded([&] {
    const auto scan = nonpositivity_scan(alpha, samples, seed);
    out->max_k = scan.max_k;
    for (Eigen::Index i = 0; i < 7; ++i) {
      out->argmax[0][i] = scan.argmax.first(i);
      out->argmax[1][i] = scan.argmax.second(i);
    }
  });
}

sg_status sg_flow_point(const sg_group_element* q, double s, sg_group_element* out) {
  if (any_null(q, out)) return null_argument();
  return guarded([&] { *out = write_group(flow_point(read_group(*q), s)); });
}

sg_status sg_leaf_conjugate(const sg_group_element* q, double s, sg_group_element* out) {
  if (any_null(q, out)) return null_argument();
  return guarded([&] { *out = write_group(leaf_conjugate(read_group(*q), s)); });
}

sg_status sg_foliation_residual(const sg_group_element* q, double s, double* out) {
  if (any_null(q, out)) return null_argument();
  return guarded([&] { *out = foliation_residual(read_group(*q), s); });
}

sg_status sg_volume_distortion(double alpha, double s, double* out) {
  if (!out) return null_argument();
  return guarded([&] { *out = volume_distortion(alpha, s); });
}

sg_status sg_verify_run(size_t samples, uint64_t seed, sg_verify_report** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new sg_verify_report{run_verification({samples, seed})}; });
}

size_t sg_verify_count(const sg_verify_report* report) { return report ? report->checks.size() : 0; }

sg_status sg_verify_get(const sg_verify_report* report, size_t index, sg_check* out) {
  if (any_null(report, out)) return null_argument();
  if (index >= report->checks.size()) {
    g_last_error = "check index out of range";
    return SG_ERR_OUT_OF_RANGE;
  }
  const auto& c = report->checks[index];
  *out = {c.name.c_str(), c.passed ? 1 : 0, c.residual, c.tolerance, c.upper_bound ? 1 : 0};
  return SG_OK;
}

void sg_verify_free(sg_verify_report* report) { delete report; }

}  // extern "C"
