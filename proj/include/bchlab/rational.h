#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <string>
#include <string_view>

namespace bchlab {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Arbitrary precision (GMP backed).
class Rational
{
	mpq_class value_;

	explicit Rational(mpq_class v) : value_(std::move(v))
	{
		value_.canonicalize();
	}

  public:
	Rational() = default;
	Rational(long n) : value_(n) {}
	Rational(int n) : value_(n) {}
	Rational(long num, long den);
	Rational(mpz_class const &num, mpz_class const &den);

	/// Parses "p" or "p/q" (decimal integers, optional sign on p).
	static Rational parse(std::string_view text);

	mpz_class numerator() const { return value_.get_num(); }
	mpz_class denominator() const { return value_.get_den(); }

	bool is_zero() const { return sgn(value_) == 0; }
	int sign() const { return sgn(value_); }

	/// Correctly rounded (nearest) double. For |p|, q below 2^53 this is
	/// bit-identical to double(p) / double(q).
	double to_double() const;

	mpq_class const &raw() const { return value_; }

	/// "p/q", or "p" when the denominator is 1.
	std::string str() const;

	Rational operator-() const { return Rational(mpq_class(-value_)); }
	Rational &operator+=(Rational const &b)
	{
		value_ += b.value_;
		return *this;
	}
	Rational &operator-=(Rational const &b)
	{
		value_ -= b.value_;
		return *this;
	}
	Rational &operator*=(Rational const &b)
	{
		value_ *= b.value_;
		return *this;
	}
	Rational &operator/=(Rational const &b);

	friend Rational operator+(Rational a, Rational const &b) { return a += b; }
	friend Rational operator-(Rational a, Rational const &b) { return a -= b; }
	friend Rational operator*(Rational a, Rational const &b) { return a *= b; }
	friend Rational operator/(Rational a, Rational const &b) { return a /= b; }

	friend bool operator==(Rational const &a, Rational const &b)
	{
		return a.value_ == b.value_;
	}
	friend std::strong_ordering operator<=>(Rational const &a,
	                                        Rational const &b)
	{
		int c = cmp(a.value_, b.value_);
		return c < 0 ? std::strong_ordering::less
		             : c > 0 ? std::strong_ordering::greater
		                     : std::strong_ordering::equal;
	}

	friend std::ostream &operator<<(std::ostream &os, Rational const &r)
	{
		return os << r.str();
	}
};

Rational abs(Rational const &r);

/// n! as an exact rational.
Rational factorial(int n);

/// Binomial coefficient C(n, k), exact.
Rational binomial(int n, int k);

} // namespace bchlab
