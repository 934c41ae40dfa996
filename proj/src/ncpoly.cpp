#include "bchlab/ncpoly.h"

#include "bchlab/bernoulli.h"

#include <fmt/format.h>
#include <stdexcept>
#include <unordered_map>

namespace bchlab {

Word Word::parse(std::string_view s)
{
	if (s.size() > kMaxTruncationDegree)
		throw DegreeCapExceeded(fmt::format("word '{}' longer than {}", s,
		                                    kMaxTruncationDegree));
	Word w;
	for (char c : s)
	{
		if (c == 'x')
			w = w.append(Letter::x);
		else if (c == 'y')
			w = w.append(Letter::y);
		else
			throw std::invalid_argument(
			    fmt::format("word '{}' contains letters outside {{x,y}}", s));
	}
	return w;
}

std::string Word::str() const
{
	std::string s;
	for (int i = 0; i < length; ++i)
		s += letter(i) == Letter::x ? 'x' : 'y';
	return s;
}

NcPoly::NcPoly(int truncation_degree) : degree_(truncation_degree)
{
	if (truncation_degree < 0)
		throw std::invalid_argument("truncation degree must be nonnegative");
	if (truncation_degree > kMaxTruncationDegree)
		throw DegreeCapExceeded(
		    fmt::format("degree cap exceeded: truncation degree {} > {}",
		                truncation_degree, kMaxTruncationDegree));
}

NcPoly NcPoly::scalar(Rational const &c, int truncation_degree)
{
	return monomial(Word::unit(), c, truncation_degree);
}

NcPoly NcPoly::monomial(Word w, Rational const &c, int truncation_degree)
{
	NcPoly p(truncation_degree);
	p.add_term(w, c);
	return p;
}

NcPoly NcPoly::gen_x(int truncation_degree)
{
	return monomial(Word::from_letter(Letter::x), 1, truncation_degree);
}

NcPoly NcPoly::gen_y(int truncation_degree)
{
	return monomial(Word::from_letter(Letter::y), 1, truncation_degree);
}

void NcPoly::add_term(Word w, Rational const &c)
{
	if (w.length > degree_ || c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(w, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Rational NcPoly::coeff(Word w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Rational(0) : it->second;
}

bool NcPoly::is_homogeneous(int n) const
{
	for (auto const &[w, c] : terms_)
		if (w.length != n)
			return false;
	return true;
}

NcPoly NcPoly::with_degree(int n) const
{
	NcPoly r(n);
	for (auto const &[w, c] : terms_)
		if (w.length <= n)
			r.terms_.emplace_hint(r.terms_.end(), w, c);
	return r;
}

NcPoly &NcPoly::operator+=(NcPoly const &b)
{
	if (b.degree_ < degree_)
		*this = with_degree(b.degree_);
	for (auto const &[w, c] : b.terms_)
		add_term(w, c);
	return *this;
}

NcPoly &NcPoly::operator-=(NcPoly const &b)
{
	if (b.degree_ < degree_)
		*this = with_degree(b.degree_);
	for (auto const &[w, c] : b.terms_)
		add_term(w, -c);
	return *this;
}

NcPoly &NcPoly::operator*=(Rational const &s)
{
	if (s.is_zero())
	{
		terms_.clear();
		return *this;
	}
	for (auto &[w, c] : terms_)
		c *= s;
	return *this;
}

NcPoly operator*(NcPoly const &a, NcPoly const &b)
{
	NcPoly r(std::min(a.degree_, b.degree_));
	// terms are ordered by length, so the inner loop stops at the first
	// word that would overflow the truncation degree
	for (auto const &[wa, ca] : a.terms_)
	{
		if (wa.length > r.degree_)
			break;
		int room = r.degree_ - wa.length;
		for (auto const &[wb, cb] : b.terms_)
		{
			if (wb.length > room)
				break;
			r.add_term(concat(wa, wb), ca * cb);
		}
	}
	return r;
}

std::string NcPoly::str() const
{
	if (terms_.empty())
		return "0";
	std::string s;
	bool first = true;
	for (auto const &[w, c] : terms_)
	{
		Rational mag = abs(c);
		if (first)
			s += c.sign() < 0 ? "-" : "";
		else
			s += c.sign() < 0 ? " - " : " + ";
		first = false;
		if (w.length == 0)
			s += mag.str();
		else if (mag == Rational(1))
			s += w.str();
		else
			s += mag.str() + " " + w.str();
	}
	return s;
}

NcPoly poly_mul(NcPoly const &a, NcPoly const &b) { return a * b; }

NcPoly commutator(NcPoly const &a, NcPoly const &b) { return a * b - b * a; }

NcPoly formal_exp(NcPoly const &a)
{
	if (!a.constant_term().is_zero())
		throw std::domain_error(
		    "exp of non-nilpotent-modulo-truncation element");
	int n = a.truncation_degree();
	NcPoly sum = NcPoly::scalar(1, n);
	NcPoly power = sum;
	for (int k = 1; k <= n; ++k)
	{
		power = power * a;
		power *= Rational(1, k);
		if (power.is_zero())
			break;
		sum += power;
	}
	return sum;
}

NcPoly formal_log(NcPoly const &w)
{
	if (w.constant_term() != Rational(1))
		throw std::domain_error("log requires constant term 1");
	int n = w.truncation_degree();
	NcPoly u = w - NcPoly::scalar(1, n);
	NcPoly sum(n);
	NcPoly power = NcPoly::scalar(1, n);
	for (int k = 1; k <= n; ++k)
	{
		power = power * u;
		if (power.is_zero())
			break;
		sum += power * Rational(k % 2 == 1 ? 1 : -1, k);
	}
	return sum;
}

NcPoly homogeneous_component(NcPoly const &a, int n)
{
	if (n < 0 || n > a.truncation_degree())
		throw std::out_of_range(
		    fmt::format("degree {} outside 0..{}", n, a.truncation_degree()));
	NcPoly r(a.truncation_degree());
	for (auto const &[w, c] : a.terms())
		if (w.length == n)
			r += NcPoly::monomial(w, c, a.truncation_degree());
	return r;
}

namespace {

// [g1, [g2, ... [g_{n-1}, g_n]]] as a signed sum of words
std::map<Word, long> right_nested_bracket(Word w)
{
	std::map<Word, long> cur;
	cur[Word::from_letter(w.letter(w.length - 1))] = 1;
	for (int i = w.length - 2; i >= 0; --i)
	{
		Letter g = w.letter(i);
		std::map<Word, long> next;
		for (auto const &[v, c] : cur)
		{
			next[v.prepend(g)] += c;
			next[v.append(g)] -= c;
		}
		std::erase_if(next, [](auto const &kv) { return kv.second == 0; });
		cur = std::move(next);
	}
	return cur;
}

} // namespace

NcPoly dsw_map(NcPoly const &a)
{
	if (!a.constant_term().is_zero())
		throw std::domain_error("dsw_map requires zero constant term");
	NcPoly r(a.truncation_degree());
	for (auto const &[w, c] : a.terms())
		for (auto const &[v, k] : right_nested_bracket(w))
			r += NcPoly::monomial(v, c * Rational(k), a.truncation_degree());
	return r;
}

CMatrix evaluate(NcPoly const &a, CMatrix const &x, CMatrix const &y)
{
	if (x.dim() != y.dim())
		throw std::invalid_argument("evaluate: X and Y dimensions differ");
	int n = x.dim();

	// products of words, keyed by (length, bits); prefixes are shared
	std::unordered_map<uint64_t, CMatrix> cache;
	auto key = [](Word w) { return (uint64_t(w.length) << 32) | w.bits; };
	cache.emplace(key(Word::unit()), CMatrix::identity(n));

	auto product = [&](auto &&self, Word w) -> CMatrix const & {
		if (auto it = cache.find(key(w)); it != cache.end())
			return it->second;
		Word prefix{w.bits >> 1, static_cast<uint8_t>(w.length - 1)};
		Letter last = w.letter(w.length - 1);
		CMatrix m = self(self, prefix) * (last == Letter::x ? x : y);
		return cache.emplace(key(w), std::move(m)).first->second;
	};

	CMatrix r = CMatrix::zero(n);
	for (auto const &[w, c] : a.terms())
		r += product(product, w) * cplx(c.to_double());
	return r;
}

nlohmann::json to_json(NcPoly const &a)
{
	auto j = nlohmann::json::array();
	for (auto const &[w, c] : a.terms())
		j.push_back({{"word", w.str()}, {"coeff", c.str()}});
	return j;
}

NcPoly ncpoly_from_json(nlohmann::json const &j, int truncation_degree)
{
	NcPoly r(truncation_degree);
	for (auto const &t : j)
		r += NcPoly::monomial(Word::parse(t.at("word").get<std::string>()),
		                      Rational::parse(t.at("coeff").get<std::string>()),
		                      truncation_degree);
	return r;
}

} // namespace bchlab
