#include "bchlab/bernoulli.h"

#include <algorithm>
#include <fmt/format.h>
#include <mpfr.h>
#include <mutex>
#include <vector>

namespace bchlab {

namespace {

std::mutex memo_mutex;
std::vector<Rational> memo; // memo[j] = B_j

// sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, solved for B_n
void extend_to(int n)
{
	if (memo.empty())
		memo.push_back(Rational(1));
	for (int m = static_cast<int>(memo.size()); m <= n; ++m)
	{
		if (m >= 3 && m % 2 == 1)
		{
			memo.push_back(Rational(0));
			continue;
		}
		Rational s(0);
		for (int j = 0; j < m; ++j)
			if (!memo[j].is_zero())
				s += binomial(m + 1, j) * memo[j];
		memo.push_back(-s / Rational(m + 1));
	}
}

} // namespace

Rational bernoulli(int n, int cap)
{
	if (n < 0)
		throw std::domain_error("bernoulli index must be nonnegative");
	if (n > cap)
		throw DegreeCapExceeded(
		    fmt::format("degree cap exceeded: B_{} requested, cap {}", n, cap));
	std::lock_guard lock(memo_mutex);
	if (static_cast<int>(memo.size()) <= n)
		extend_to(n);
	return memo[n];
}

BoundaryRatio bernoulli_boundary_ratio(int n, int bits)
{
	auto b = bernoulli(2 * n, std::max(2 * n, kDefaultBernoulliCap));
	auto q = abs(b) / factorial(2 * n);

	mpfr_t r, two_pi;
	mpfr_inits2(bits, r, two_pi, static_cast<mpfr_ptr>(nullptr));
	mpfr_const_pi(two_pi, MPFR_RNDN);
	mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
	mpfr_pow_ui(two_pi, two_pi, static_cast<unsigned long>(2 * n), MPFR_RNDN);
	mpfr_set_q(r, q.raw().get_mpq_t(), MPFR_RNDN);
	mpfr_mul(r, r, two_pi, MPFR_RNDN);
	BoundaryRatio out{};
	out.value = mpfr_get_d(r, MPFR_RNDN);
	mpfr_sub_ui(r, r, 2, MPFR_RNDN);
	out.minus_two = mpfr_get_d(r, MPFR_RNDN);
	mpfr_clears(r, two_pi, static_cast<mpfr_ptr>(nullptr));
	return out;
}

} // namespace bchlab
