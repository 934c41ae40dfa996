#include "bchlab/linalg.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bchlab {

CMatrix matrix_exp(CMatrix const &a)
{
	constexpr int taylor_degree = 18;
	int n = a.dim();
	double norm = a.one_norm();
	int squarings = 0;
	if (norm > 0.5)
		squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
	CMatrix scaled = a * cplx(std::ldexp(1.0, -squarings));

	CMatrix id = CMatrix::identity(n);
	CMatrix r = id;
	for (int k = taylor_degree; k >= 1; --k)
		r = id + (scaled * r) * cplx(1.0 / k);
	for (int s = 0; s < squarings; ++s)
		r = r * r;
	return r;
}

namespace {

// largest eigenvalue of a Hermitian positive semidefinite 3x3 matrix
double hermitian3_max_eigenvalue(CMatrix const &h)
{
	double h00 = h(0, 0).real(), h11 = h(1, 1).real(), h22 = h(2, 2).real();
	double p1 = std::norm(h(0, 1)) + std::norm(h(0, 2)) + std::norm(h(1, 2));
	if (p1 == 0.0)
		return std::max({h00, h11, h22});
	double q = (h00 + h11 + h22) / 3.0;
	double p2 = (h00 - q) * (h00 - q) + (h11 - q) * (h11 - q) +
	            (h22 - q) * (h22 - q) + 2.0 * p1;
	double p = std::sqrt(p2 / 6.0);
	CMatrix b = (h - CMatrix::identity(3) * cplx(q)) * cplx(1.0 / p);
	cplx det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
	           b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
	           b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
	double r = std::clamp(det.real() / 2.0, -1.0, 1.0);
	double phi = std::acos(r) / 3.0;
	return q + 2.0 * p * std::cos(phi);
}

double power_iteration_max_eigenvalue(CMatrix const &h)
{
	int n = h.dim();
	std::vector<cplx> v(n, 1.0), w(n);
	double lambda = 0.0;
	for (int it = 0; it < 2000; ++it)
	{
		double nrm = 0.0;
		for (int i = 0; i < n; ++i)
		{
			w[i] = 0.0;
			for (int j = 0; j < n; ++j)
				w[i] += h(i, j) * v[j];
			nrm += std::norm(w[i]);
		}
		nrm = std::sqrt(nrm);
		if (nrm == 0.0)
			return 0.0;
		double prev = lambda;
		cplx rq = 0.0;
		for (int i = 0; i < n; ++i)
			rq += std::conj(v[i]) * w[i];
		double vv = 0.0;
		for (int i = 0; i < n; ++i)
			vv += std::norm(v[i]);
		lambda = rq.real() / vv;
		for (int i = 0; i < n; ++i)
			v[i] = w[i] / nrm;
		if (it > 10 && std::abs(lambda - prev) <= 1e-15 * lambda)
			break;
	}
	return lambda;
}

} // namespace

double operator_norm(CMatrix const &a)
{
	int n = a.dim();
	if (n == 1)
		return std::abs(a(0, 0));
	CMatrix h = a.adjoint() * a;
	double lambda;
	if (n == 2)
	{
		double h00 = h(0, 0).real(), h11 = h(1, 1).real();
		double half = 0.5 * (h00 - h11);
		lambda = 0.5 * (h00 + h11) + std::sqrt(half * half + std::norm(h(0, 1)));
	}
	else if (n == 3)
		lambda = hermitian3_max_eigenvalue(h);
	else
		lambda = power_iteration_max_eigenvalue(h);
	return std::sqrt(std::max(lambda, 0.0));
}

namespace {

struct RankDetail
{
	int rank;
	bool ambiguous;
};

RankDetail rank_detail(CMatrix m, double tol, double loose_tol)
{
	int n = m.dim();
	std::vector<int> rows(n), cols(n);
	int rank = 0;
	bool ambiguous = false;
	for (int step = 0; step < n; ++step)
	{
		int pr = -1, pc = -1;
		double best = -1.0;
		for (int i = step; i < n; ++i)
			for (int j = step; j < n; ++j)
				if (std::abs(m(i, j)) > best)
				{
					best = std::abs(m(i, j));
					pr = i;
					pc = j;
				}
		if (best > tol && best <= loose_tol)
			ambiguous = true;
		if (best <= tol)
		{
			if (best > tol * 1e-3)
				ambiguous = true;
			break;
		}
		++rank;
		for (int j = 0; j < n; ++j)
			std::swap(m(step, j), m(pr, j));
		for (int i = 0; i < n; ++i)
			std::swap(m(i, step), m(i, pc));
		for (int i = step + 1; i < n; ++i)
		{
			cplx f = m(i, step) / m(step, step);
			for (int j = step; j < n; ++j)
				m(i, j) -= f * m(step, j);
		}
	}
	return {rank, ambiguous};
}

std::vector<cplx> characteristic_roots(CMatrix const &a)
{
	int n = a.dim();
	if (n == 1)
		return {a(0, 0)};
	if (n == 2)
	{
		cplx m = 0.5 * (a(0, 0) + a(1, 1));
		cplx h = 0.5 * (a(0, 0) - a(1, 1));
		cplx s = std::sqrt(h * h + a(0, 1) * a(1, 0));
		return {m + s, m - s};
	}

	// lambda^3 + c2 lambda^2 + c1 lambda + c0
	cplx c2 = -a.trace();
	cplx c1 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) + a(0, 0) * a(2, 2) -
	          a(0, 2) * a(2, 0) + a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
	cplx det = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
	           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
	           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
	cplx c0 = -det;

	cplx shift = -c2 / 3.0;
	cplx p = c1 - c2 * c2 / 3.0;
	cplx q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
	cplx sd = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
	cplx u3 = -q / 2.0 + sd;
	if (std::abs(-q / 2.0 - sd) > std::abs(u3))
		u3 = -q / 2.0 - sd;

	std::vector<cplx> roots;
	if (std::abs(u3) == 0.0)
		roots = {shift, shift, shift};
	else
	{
		cplx c = std::pow(u3, 1.0 / 3.0);
		cplx omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
		for (int k = 0; k < 3; ++k)
		{
			roots.push_back(c - p / (3.0 * c) + shift);
			c *= omega;
		}
	}

	auto poly = [&](cplx z) { return ((z + c2) * z + c1) * z + c0; };
	auto dpoly = [&](cplx z) { return (3.0 * z + 2.0 * c2) * z + c1; };
	for (auto &r : roots)
		for (int it = 0; it < 4; ++it)
		{
			cplx d = dpoly(r);
			if (std::abs(d) == 0.0)
				break;
			cplx next = r - poly(r) / d;
			if (std::abs(poly(next)) >= std::abs(poly(r)))
				break;
			r = next;
		}
	return roots;
}

} // namespace

int numeric_rank(CMatrix const &a, double tol)
{
	return rank_detail(a, tol, tol).rank;
}

std::vector<EigenCluster> eigen_small(CMatrix const &a)
{
	if (a.dim() > 3)
		throw std::invalid_argument("eigen_small supports dim <= 3 only");
	double scale = operator_norm(a);
	double merge_tol = 1e-7 * std::max(1.0, scale);

	std::vector<EigenCluster> clusters;
	for (cplx r : characteristic_roots(a))
	{
		auto it = std::find_if(clusters.begin(), clusters.end(), [&](auto &c) {
			return std::abs(c.value - r) <= merge_tol;
		});
		if (it == clusters.end())
			clusters.push_back({r, 1, true, false});
		else
		{
			it->value = (it->value * double(it->multiplicity) + r) /
			            double(it->multiplicity + 1);
			++it->multiplicity;
		}
	}

	double tol = 1e-9 * scale;
	for (auto &c : clusters)
	{
		if (c.multiplicity == 1)
			continue;
		auto rd = rank_detail(a - CMatrix::identity(a.dim()) * c.value, tol,
		                      1e3 * tol);
		c.diagonalizable = a.dim() - rd.rank == c.multiplicity;
		c.ambiguous = rd.ambiguous;
	}
	return clusters;
}

CMatrix primary_function(CMatrix const &a, ScalarJet const &f)
{
	auto clusters = eigen_small(a);
	std::vector<cplx> nodes;
	std::vector<std::array<cplx, 3>> jets;
	for (auto const &c : clusters)
	{
		auto jet = f(c.value);
		for (int k = 0; k < c.multiplicity; ++k)
		{
			nodes.push_back(c.value);
			jets.push_back(jet);
		}
	}

	// confluent Newton divided differences; dd[i][j] = f[z_i .. z_{i+j}]
	int d = static_cast<int>(nodes.size());
	std::vector<std::vector<cplx>> dd(d, std::vector<cplx>(d));
	for (int i = 0; i < d; ++i)
		dd[i][0] = jets[i][0];
	for (int j = 1; j < d; ++j)
		for (int i = 0; i + j < d; ++i)
		{
			if (nodes[i] == nodes[i + j])
				dd[i][j] = jets[i][j] / (j == 2 ? 2.0 : 1.0);
			else
				dd[i][j] =
				    (dd[i + 1][j - 1] - dd[i][j - 1]) / (nodes[i + j] - nodes[i]);
		}

	int n = a.dim();
	CMatrix id = CMatrix::identity(n);
	CMatrix result = CMatrix::zero(n);
	CMatrix basis = id;
	for (int j = 0; j < d; ++j)
	{
		result += basis * dd[0][j];
		basis = basis * (a - id * nodes[j]);
	}
	return result;
}

std::array<cplx, 3> log_jet(cplx z)
{
	return {std::log(z), 1.0 / z, -1.0 / (z * z)};
}

} // namespace bchlab
