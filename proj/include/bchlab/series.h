#pragma once

#include "bchlab/bch_terms.h"
#include "bchlab/cmatrix.h"

#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace bchlab {

/// Yields T_1, T_2, ...; std::nullopt once the source is exhausted.
using TermGenerator = std::function<std::optional<CMatrix>()>;

/// L_n = ((-1)^{n+1} / n) (W - I)^n, from a running power of (W - I).
TermGenerator mercator_terms(CMatrix const &w);

/// Z_n(X, Y) by evaluating the symbolic terms; exhausted after max_degree.
TermGenerator bch_terms_symbolic(CMatrix const &x, CMatrix const &y,
                                 BchTermSet const &terms);

/**
 * Z_n(X, Y) for arbitrary X, Y by the Lie-bracket recursion
 *
 *   Z_1 = X + Y,
 *   (n+1) Z_{n+1} = 1/2 [X - Y, Z_n]
 *       + sum_{p >= 1, 2p <= n} B_{2p}/(2p)! sum_{k_1+..+k_{2p} = n}
 *             [Z_{k_1}, [ ... [Z_{k_{2p}}, X + Y] ... ]],
 *
 * with the nested sums tabulated incrementally (O(n^2) brackets per term).
 * Unbounded; yields std::nullopt if an intermediate overflows.
 */
TermGenerator bch_terms_recursive(CMatrix const &x, CMatrix const &y);

/// Z_1 = X + Y and Z_n = c_n(v) Y, valid when [X, Y] = v Y.
TermGenerator bch_terms_adjoint(CMatrix const &x, CMatrix const &y,
                                std::complex<double> v);

/// sum_{n=1}^{N} T_n; throws std::out_of_range if the source runs dry.
CMatrix partial_sum(TermGenerator next, int n_terms);

CMatrix mercator_partial(CMatrix const &w, int n_terms);

/// sum_{n=1}^{N} Z_n(X, Y); N must not exceed terms.max_degree.
CMatrix bch_partial(CMatrix const &x, CMatrix const &y, int n_terms,
                    BchTermSet const &terms);

struct DiagnosisConfig
{
	int n_max = 400;
	int window = 50;
	double eps_abs = 1e-10;
	double eps_sum = 1e-9;
	double delta_floor = 1e-3;
	double overflow_guard = 1e12;
	/// the divergence window is cut into blocks of this many terms and the
	/// trend is read off the block maxima, so sparse series (every other
	/// term zero) are handled
	int trend_block = 5;
	/// last block maximum must reach (1 - slack) * first block maximum
	double trend_slack = 1e-9;
};

nlohmann::json to_json(DiagnosisConfig const &c);

enum class Verdict
{
	Converged,
	Diverged,
	Inconclusive
};

enum class Classifier
{
	Numeric,
	ExactEigen,
	ExactAdjointFamily
};

std::string_view to_string(Verdict v);
std::string_view to_string(Classifier c);
/// 'C', 'D', 'I'
char verdict_letter(Verdict v);

struct SeriesDiagnosis
{
	Verdict verdict = Verdict::Inconclusive;
	Classifier classifier = Classifier::Numeric;
	int terms_used = 0;
	std::optional<double> last_term_norm;
	/// sum of term norms over the trailing window
	std::optional<double> tail_window_sum;
	/// smallest block maximum and last/first block-maximum ratio over the
	/// trailing window (numeric classifier only)
	std::optional<double> window_floor;
	std::optional<double> window_trend;
	std::optional<CMatrix> partial_sum;
	std::string note;
};

nlohmann::json to_json(SeriesDiagnosis const &d);
nlohmann::json matrix_to_json(CMatrix const &m);

/// true when the two verdicts are Converged and Diverged in some order
bool contradicts(Verdict a, Verdict b);

/**
 * Converged once every term in a trailing window of `window` terms has
 * norm <= eps_abs and the partial sums over that window stay within eps_sum
 * of the latest one. Diverged when a partial sum or term exceeds
 * overflow_guard, or when over a full trailing window the term norms stay
 * above delta_floor without decaying (block-maximum trend). Otherwise
 * Inconclusive after n_max terms or when the source runs dry.
 */
SeriesDiagnosis diagnose_series(TermGenerator next,
                                DiagnosisConfig const &config = {});

/**
 * Mercator series of W classified from the eigenvalues z of W - I:
 * Converged iff every |z| < 1, or |z| = 1 with z != -1 on a diagonalizable
 * block; the sum is then the principal logarithm of W. |z| = 1 is tested to
 * 1e-10. A defective block on |z| = 1 is reported Diverged with a note that
 * this rule extrapolates the scalar case.
 */
SeriesDiagnosis mercator_classify_exact(CMatrix const &w);

/// BCH series for a pair with [X, Y] = v Y: Converged iff Y = 0 or |v| < 2 pi.
SeriesDiagnosis bch_classify_adjoint_family(std::complex<double> v,
                                            bool y_is_zero);

/// As above, verifying the relation and attaching the sum X + psi(v) Y.
SeriesDiagnosis bch_classify_adjoint_family(CMatrix const &x, CMatrix const &y,
                                            std::complex<double> v);

/// Does a real invertible 2x2 matrix have a real logarithm?
bool real_log_exists_2x2(CMatrix const &a);

} // namespace bchlab
