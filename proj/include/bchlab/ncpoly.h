#pragma once

#include "bchlab/cmatrix.h"
#include "bchlab/rational.h"

#include <compare>
#include <cstdint>
#include <map>
#include <json.hpp>
#include <string>
#include <string_view>

namespace bchlab {

inline constexpr int kDefaultWorkingDegree = 10;
inline constexpr int kMaxTruncationDegree = 16;

enum class Letter : uint8_t
{
	x = 0,
	y = 1
};

/**
 * Monomial over {x, y}, packed one bit per letter with the first letter in
 * the most significant position. Ordering is (length, lexicographic with
 * x < y), which is also the serialization order.
 */
struct Word
{
	uint32_t bits = 0;
	uint8_t length = 0;

	static Word unit() { return {}; }
	static Word from_letter(Letter g) { return {static_cast<uint32_t>(g), 1}; }
	/// Parses a string over "xy"; the empty string is the unit word.
	static Word parse(std::string_view s);

	Letter letter(int i) const
	{
		return static_cast<Letter>((bits >> (length - 1 - i)) & 1u);
	}
	Word prepend(Letter g) const
	{
		return {bits | (static_cast<uint32_t>(g) << length),
		        static_cast<uint8_t>(length + 1)};
	}
	Word append(Letter g) const
	{
		return {(bits << 1) | static_cast<uint32_t>(g),
		        static_cast<uint8_t>(length + 1)};
	}
	friend Word concat(Word a, Word b)
	{
		return {(a.bits << b.length) | b.bits,
		        static_cast<uint8_t>(a.length + b.length)};
	}

	std::string str() const;

	friend bool operator==(Word const &, Word const &) = default;
	friend std::strong_ordering operator<=>(Word const &a, Word const &b)
	{
		if (auto c = a.length <=> b.length; c != 0)
			return c;
		return a.bits <=> b.bits;
	}
};

/**
 * Truncated noncommutative polynomial in x, y with exact rational
 * coefficients. Words longer than the truncation degree are never stored,
 * and neither are zero coefficients. Binary operations truncate at the
 * smaller of the two operand degrees.
 */
class NcPoly
{
	std::map<Word, Rational> terms_;
	int degree_ = kDefaultWorkingDegree;

	void add_term(Word w, Rational const &c);

  public:
	explicit NcPoly(int truncation_degree = kDefaultWorkingDegree);

	static NcPoly scalar(Rational const &c,
	                     int truncation_degree = kDefaultWorkingDegree);
	static NcPoly monomial(Word w, Rational const &c,
	                       int truncation_degree = kDefaultWorkingDegree);
	static NcPoly gen_x(int truncation_degree = kDefaultWorkingDegree);
	static NcPoly gen_y(int truncation_degree = kDefaultWorkingDegree);

	int truncation_degree() const { return degree_; }
	std::map<Word, Rational> const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	size_t size() const { return terms_.size(); }
	Rational coeff(Word w) const;
	Rational constant_term() const { return coeff(Word::unit()); }
	/// true when every stored word has length exactly n
	bool is_homogeneous(int n) const;

	/// Same terms, truncated to min(current, n) or re-labelled upward.
	NcPoly with_degree(int n) const;

	NcPoly &operator+=(NcPoly const &b);
	NcPoly &operator-=(NcPoly const &b);
	NcPoly &operator*=(Rational const &s);

	friend NcPoly operator+(NcPoly a, NcPoly const &b) { return a += b; }
	friend NcPoly operator-(NcPoly a, NcPoly const &b) { return a -= b; }
	friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
	friend NcPoly operator*(NcPoly a, Rational const &s) { return a *= s; }
	friend NcPoly operator*(Rational const &s, NcPoly a) { return a *= s; }
	friend NcPoly operator*(NcPoly const &a, NcPoly const &b);

	/// Coefficient equality (truncation degree is not compared).
	friend bool operator==(NcPoly const &a, NcPoly const &b)
	{
		return a.terms_ == b.terms_;
	}

	/// Human readable, e.g. "1/2 xy - 1/2 yx".
	std::string str() const;
};

NcPoly poly_mul(NcPoly const &a, NcPoly const &b);

/// a b - b a
NcPoly commutator(NcPoly const &a, NcPoly const &b);

/// sum_{k=0}^{N} a^k / k!; requires a zero constant term.
NcPoly formal_exp(NcPoly const &a);

/// Mercator series sum_{k>=1} (-1)^{k+1} (w - 1)^k / k; requires constant
/// term 1.
NcPoly formal_log(NcPoly const &w);

/// Words of length exactly n.
NcPoly homogeneous_component(NcPoly const &a, int n);

/// Right-nested bracketing g1 g2 ... gn -> [g1, [g2, ... [g_{n-1}, g_n]...]],
/// extended linearly. Multiplies a homogeneous Lie element of degree n by n.
NcPoly dsw_map(NcPoly const &a);

/// Substitutes x -> X, y -> Y, unit -> I.
CMatrix evaluate(NcPoly const &a, CMatrix const &x, CMatrix const &y);

/// [{"word": "xy", "coeff": "p/q"}, ...] in (degree, lexicographic) order.
nlohmann::json to_json(NcPoly const &a);
NcPoly ncpoly_from_json(nlohmann::json const &j, int truncation_degree);

} // namespace bchlab
