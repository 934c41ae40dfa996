#pragma once

#include "bchlab/cmatrix.h"

#include <array>
#include <functional>
#include <vector>

namespace bchlab {

/// e^A by scaling and squaring around a degree-18 Taylor polynomial, with
/// the scaled matrix kept at 1-norm <= 0.5.
CMatrix matrix_exp(CMatrix const &a);

/// Spectral norm (largest singular value). Closed forms for dim <= 3.
double operator_norm(CMatrix const &a);

struct EigenCluster
{
	cplx value;
	int multiplicity = 1;
	bool diagonalizable = true; // geometric multiplicity == algebraic
	/// true when a rank decision fell between the strict and loose
	/// tolerances, so diagonalizable is a judgement call
	bool ambiguous = false;
};

/**
 * Eigenvalues of a matrix with dim <= 3 from the characteristic polynomial
 * (closed-form quadratic / cubic roots, polished by Newton steps). Roots
 * closer than 1e-7 max(1, |A|) are merged into one cluster. Diagonalizability
 * of a cluster is decided from rank(A - lambda I) with tolerance
 * 1e-9 |A|. Throws std::invalid_argument for dim > 3.
 */
std::vector<EigenCluster> eigen_small(CMatrix const &a);

/// Numerical rank by full-pivot elimination; pivots <= tol count as zero.
int numeric_rank(CMatrix const &a, double tol);

/// Value and first two derivatives of a scalar function at z.
using ScalarJet = std::function<std::array<cplx, 3>(cplx)>;

/**
 * Primary matrix function f(A) for dim <= 3 by confluent Hermite
 * interpolation on the eigenvalue clusters (valid for defective A).
 */
CMatrix primary_function(CMatrix const &a, ScalarJet const &f);

/// Principal logarithm jet: Log z, 1/z, -1/z^2.
std::array<cplx, 3> log_jet(cplx z);

} // namespace bchlab
