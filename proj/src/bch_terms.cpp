#include "bchlab/bch_terms.h"

#include "bchlab/bernoulli.h"

#include <fmt/format.h>
#include <mpfr.h>
#include <stdexcept>

namespace bchlab {

std::string_view to_string(Presentation p)
{
	return p == Presentation::FormalLog ? "log" : "dynkin";
}

Presentation parse_presentation(std::string_view s)
{
	if (s == "log")
		return Presentation::FormalLog;
	if (s == "dynkin")
		return Presentation::DynkinEnumeration;
	throw std::invalid_argument(fmt::format("unknown presentation '{}'", s));
}

namespace {

void check_degree(int n, int cap)
{
	if (n < 1)
		throw std::invalid_argument("BCH degree must be at least 1");
	if (n > cap)
		throw DegreeCapExceeded(
		    fmt::format("degree cap exceeded: {} > {}", n, cap));
}

NcPoly log_of_exp_product(int degree)
{
	auto x = NcPoly::gen_x(degree);
	auto y = NcPoly::gen_y(degree);
	return formal_log(formal_exp(x) * formal_exp(y));
}

// x^{i1} y^{j1} ... x^{ik} y^{jk}
Word block_word(std::vector<std::pair<int, int>> const &pairs)
{
	Word w;
	for (auto [i, j] : pairs)
	{
		for (int t = 0; t < i; ++t)
			w = w.append(Letter::x);
		for (int t = 0; t < j; ++t)
			w = w.append(Letter::y);
	}
	return w;
}

/**
 * Visits every sequence of k pairs (i_t, j_t) != (0, 0) with total degree
 * `total`, in lexicographic order of (i1, j1, i2, j2, ...). The callback
 * receives the pairs and 1 / (i1! j1! ... ik! jk!).
 */
template <class F>
void for_each_block_sequence(int k, int total, F &&f)
{
	std::vector<std::pair<int, int>> pairs;
	pairs.reserve(k);
	auto rec = [&](auto &&self, int remaining, Rational weight) -> void {
		int slot = static_cast<int>(pairs.size());
		if (slot == k)
		{
			if (remaining == 0)
				f(pairs, weight);
			return;
		}
		// each later slot needs degree >= 1
		int budget = remaining - (k - slot - 1);
		for (int i = 0; i <= budget; ++i)
			for (int j = 0; i + j <= budget; ++j)
			{
				if (i + j == 0)
					continue;
				pairs.emplace_back(i, j);
				self(self, remaining - i - j,
				     weight / (factorial(i) * factorial(j)));
				pairs.pop_back();
			}
	};
	rec(rec, total, Rational(1));
}

// (Ad g1)(Ad g2)...(Ad g_{n-1})(g_n), built by repeated commutators
NcPoly adjoint_chain(Word w, int degree)
{
	auto gen = [degree](Letter g) {
		return g == Letter::x ? NcPoly::gen_x(degree) : NcPoly::gen_y(degree);
	};
	NcPoly r = gen(w.letter(w.length - 1));
	for (int i = w.length - 2; i >= 0; --i)
	{
		r = commutator(gen(w.letter(i)), r);
		if (r.is_zero())
			break;
	}
	return r;
}

} // namespace

NcPoly zn_via_log(int n)
{
	check_degree(n, kMaxTruncationDegree);
	return homogeneous_component(log_of_exp_product(n), n);
}

NcPoly zn_dynkin(int n, int cap)
{
	check_degree(n, std::min(cap, kMaxTruncationDegree));

	// same word => same nested adjoint chain, so sum weights per word first
	std::map<Word, Rational> weights;
	for (int k = 1; k <= n; ++k)
	{
		Rational sign_k(k % 2 == 1 ? 1 : -1, k);
		for_each_block_sequence(k, n, [&](auto const &pairs, Rational const &w) {
			weights[block_word(pairs)] += sign_k * w;
		});
	}

	NcPoly z(n);
	for (auto const &[word, c] : weights)
		if (!c.is_zero())
			z += adjoint_chain(word, n) * c;
	z *= Rational(1, n);
	return z;
}

NcPoly associative_term(int n, int k)
{
	check_degree(k, kMaxTruncationDegree);
	if (n < 1 || n > k)
		throw std::invalid_argument(
		    fmt::format("associative_term requires 1 <= n <= k, got n={} k={}",
		                n, k));
	NcPoly r(k);
	for_each_block_sequence(n, k, [&](auto const &pairs, Rational const &w) {
		r += NcPoly::monomial(block_word(pairs), w, k);
	});
	r *= Rational(n % 2 == 1 ? 1 : -1, n);
	return r;
}

BchTermSet make_term_set(int max_degree, Presentation p)
{
	BchTermSet set;
	set.max_degree = max_degree;
	set.presentation = p;
	if (p == Presentation::FormalLog)
	{
		check_degree(max_degree, kMaxTruncationDegree);
		auto z = log_of_exp_product(max_degree);
		for (int n = 1; n <= max_degree; ++n)
			set.z_terms.push_back(homogeneous_component(z, n));
	}
	else
	{
		check_degree(max_degree, kDynkinEnumerationCap);
		for (int n = 1; n <= max_degree; ++n)
			set.z_terms.push_back(zn_dynkin(n));
	}
	for (int n = 1; n <= max_degree; ++n)
	{
		auto const &z = set.z(n);
		if (!z.is_homogeneous(n) || dsw_map(z) != z * Rational(n))
			throw std::logic_error(
			    fmt::format("Z_{} failed the Lie-element certificate", n));
	}
	return set;
}

Rational adjoint_relation_rational(int n)
{
	if (n < 2)
		throw std::invalid_argument(
		    "adjoint-relation coefficient needs n >= 2 (Z_1 = X + Y)");
	auto c = bernoulli(n - 1, kAdjointBernoulliCap) / factorial(n - 1);
	return (n - 1) % 2 == 0 ? c : -c;
}

std::complex<double> zn_under_adjoint_relation(int n, std::complex<double> v)
{
	auto q = adjoint_relation_rational(n);
	if (q.is_zero() || v == 0.0)
		return 0.0;

	int m = n - 1;
	double r = std::abs(v);
	mpfr_t t, s;
	mpfr_inits2(128, t, s, static_cast<mpfr_ptr>(nullptr));
	mpfr_set_q(t, abs(q).raw().get_mpq_t(), MPFR_RNDN);
	mpfr_set_d(s, r, MPFR_RNDN);
	mpfr_pow_ui(s, s, static_cast<unsigned long>(m), MPFR_RNDN);
	mpfr_mul(t, t, s, MPFR_RNDN);
	double magnitude = mpfr_get_d(t, MPFR_RNDN);
	mpfr_clears(t, s, static_cast<mpfr_ptr>(nullptr));

	// unit phase (v/|v|)^m by squaring, exact for v on the axes
	std::complex<double> base = v / r, phase = 1.0;
	if (v.imag() == 0.0)
		base = v.real() > 0 ? 1.0 : -1.0;
	else if (v.real() == 0.0)
		base = {0.0, v.imag() > 0 ? 1.0 : -1.0};
	for (int e = m; e > 0; e >>= 1)
	{
		if (e & 1)
			phase *= base;
		base *= base;
	}
	return (q.sign() < 0 ? -magnitude : magnitude) * phase;
}

} // namespace bchlab
