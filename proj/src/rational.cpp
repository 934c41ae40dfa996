#include "bchlab/rational.h"

#include <mpfr.h>
#include <stdexcept>

namespace bchlab {

Rational::Rational(long num, long den)
{
	if (den == 0)
		throw std::domain_error("rational with zero denominator");
	value_ = mpq_class(num, den);
	value_.canonicalize();
}

Rational::Rational(mpz_class const &num, mpz_class const &den)
{
	if (den == 0)
		throw std::domain_error("rational with zero denominator");
	value_ = mpq_class(num, den);
	value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
	auto slash = text.find('/');
	try
	{
		if (slash == std::string_view::npos)
			return Rational(mpz_class(std::string(text)), mpz_class(1));
		return Rational(mpz_class(std::string(text.substr(0, slash))),
		                mpz_class(std::string(text.substr(slash + 1))));
	}
	catch (std::invalid_argument const &)
	{
		throw std::invalid_argument("malformed rational '" +
		                            std::string(text) + "'");
	}
}

double Rational::to_double() const
{
	mpfr_t t;
	mpfr_init2(t, 53);
	mpfr_set_q(t, value_.get_mpq_t(), MPFR_RNDN);
	double d = mpfr_get_d(t, MPFR_RNDN);
	mpfr_clear(t);
	return d;
}

std::string Rational::str() const
{
	if (value_.get_den() == 1)
		return value_.get_num().get_str();
	return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator/=(Rational const &b)
{
	if (b.is_zero())
		throw std::domain_error("rational division by zero");
	value_ /= b.value_;
	return *this;
}

Rational abs(Rational const &r) { return r.sign() < 0 ? -r : r; }

Rational factorial(int n)
{
	if (n < 0)
		throw std::domain_error("factorial of negative number");
	mpz_class f;
	mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
	return Rational(f, mpz_class(1));
}

Rational binomial(int n, int k)
{
	if (k < 0 || k > n)
		return Rational(0);
	mpz_class c;
	mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n),
	             static_cast<unsigned long>(k));
	return Rational(c, mpz_class(1));
}

} // namespace bchlab
