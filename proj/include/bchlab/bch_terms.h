#pragma once

#include "bchlab/ncpoly.h"

#include <complex>
#include <string_view>
#include <vector>

namespace bchlab {

inline constexpr int kDynkinEnumerationCap = 10;
/// Bernoulli indices needed by the adjoint-relation coefficients reach n-1,
/// and numeric diagnosis runs up to a few hundred terms.
inline constexpr int kAdjointBernoulliCap = 1024;

enum class Presentation
{
	FormalLog,
	DynkinEnumeration
};

std::string_view to_string(Presentation p);
Presentation parse_presentation(std::string_view s); // "log" | "dynkin"

/// Homogeneous BCH terms Z_1..Z_N, each certified as a Lie element.
struct BchTermSet
{
	int max_degree = 0;
	std::vector<NcPoly> z_terms; // z_terms[n-1] = Z_n
	Presentation presentation = Presentation::FormalLog;

	NcPoly const &z(int n) const { return z_terms.at(n - 1); }
};

/// Z_n = degree-n part of log(exp(x) exp(y)).
NcPoly zn_via_log(int n);

/// Z_n by direct enumeration of the Dynkin nested-adjoint formula.
NcPoly zn_dynkin(int n, int cap = kDynkinEnumerationCap);

/**
 * L_{n,k} = ((-1)^{n+1}/n) sum x^{i1} y^{j1} ... x^{in} y^{jn} / (i1! j1! ...)
 * over n pairs (i_t, j_t) != (0,0) of total degree k. The sum over
 * n = 1..k is Z_k.
 */
NcPoly associative_term(int n, int k);

/// All Z_1..Z_N from one formal logarithm (log) or from enumeration
/// (dynkin). Throws if any term fails the Lie-element certificate.
BchTermSet make_term_set(int max_degree, Presentation p);

/// (-1)^{n-1} B_{n-1} / (n-1)!, the exact scalar multiplying v^{n-1} Y.
Rational adjoint_relation_rational(int n);

/**
 * Scalar c_n with Z_n(X, Y) = c_n Y whenever [X, Y] = v Y, for n >= 2:
 * c_n = (-1)^{n-1} B_{n-1} v^{n-1} / (n-1)!. The magnitude is formed in
 * extended precision so large n and |v| do not overflow intermediates.
 */
std::complex<double> zn_under_adjoint_relation(int n, std::complex<double> v);

} // namespace bchlab
