#include "bchlab/cmatrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bchlab {

void CMatrix::check_finite() const
{
	for (auto const &z : a_)
		if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
			throw std::domain_error("non-finite matrix entry");
}

CMatrix::CMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim * dim))
{
	if (dim < 1)
		throw std::invalid_argument("matrix dimension must be positive");
}

CMatrix::CMatrix(int dim, std::span<cplx const> row_major) : CMatrix(dim)
{
	if (row_major.size() != a_.size())
		throw std::invalid_argument("matrix data size mismatch");
	std::copy(row_major.begin(), row_major.end(), a_.begin());
	check_finite();
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : CMatrix(static_cast<int>(rows.size()))
{
	int i = 0;
	for (auto const &row : rows)
	{
		if (static_cast<int>(row.size()) != dim_)
			throw std::invalid_argument("matrix must be square");
		std::copy(row.begin(), row.end(), a_.begin() + i * dim_);
		++i;
	}
	check_finite();
}

CMatrix CMatrix::identity(int dim)
{
	CMatrix m(dim);
	for (int i = 0; i < dim; ++i)
		m(i, i) = 1.0;
	return m;
}

CMatrix CMatrix::diagonal(std::span<cplx const> d)
{
	CMatrix m(static_cast<int>(d.size()));
	for (int i = 0; i < m.dim_; ++i)
		m(i, i) = d[i];
	m.check_finite();
	return m;
}

bool CMatrix::is_real(double tol) const
{
	return std::all_of(a_.begin(), a_.end(),
	                   [tol](cplx z) { return std::abs(z.imag()) <= tol; });
}

bool CMatrix::is_zero() const
{
	return std::all_of(a_.begin(), a_.end(),
	                   [](cplx z) { return z == cplx(0.0); });
}

CMatrix CMatrix::adjoint() const
{
	CMatrix m(dim_);
	for (int i = 0; i < dim_; ++i)
		for (int j = 0; j < dim_; ++j)
			m(j, i) = std::conj((*this)(i, j));
	return m;
}

cplx CMatrix::trace() const
{
	cplx t = 0.0;
	for (int i = 0; i < dim_; ++i)
		t += (*this)(i, i);
	return t;
}

double CMatrix::frobenius_norm() const
{
	double s = 0.0;
	for (auto const &z : a_)
		s += std::norm(z);
	return std::sqrt(s);
}

double CMatrix::one_norm() const
{
	double best = 0.0;
	for (int j = 0; j < dim_; ++j)
	{
		double s = 0.0;
		for (int i = 0; i < dim_; ++i)
			s += std::abs((*this)(i, j));
		best = std::max(best, s);
	}
	return best;
}

double CMatrix::max_abs() const
{
	double best = 0.0;
	for (auto const &z : a_)
		best = std::max(best, std::abs(z));
	return best;
}

CMatrix &CMatrix::operator+=(CMatrix const &b)
{
	if (b.dim_ != dim_)
		throw std::invalid_argument("matrix dimension mismatch");
	for (size_t i = 0; i < a_.size(); ++i)
		a_[i] += b.a_[i];
	check_finite();
	return *this;
}

CMatrix &CMatrix::operator-=(CMatrix const &b)
{
	if (b.dim_ != dim_)
		throw std::invalid_argument("matrix dimension mismatch");
	for (size_t i = 0; i < a_.size(); ++i)
		a_[i] -= b.a_[i];
	check_finite();
	return *this;
}

CMatrix &CMatrix::operator*=(cplx s)
{
	for (auto &z : a_)
		z *= s;
	check_finite();
	return *this;
}

CMatrix operator*(CMatrix const &a, CMatrix const &b)
{
	if (a.dim_ != b.dim_)
		throw std::invalid_argument("matrix dimension mismatch");
	int n = a.dim_;
	CMatrix c(n);
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k)
		{
			cplx aik = a(i, k);
			if (aik == cplx(0.0))
				continue;
			for (int j = 0; j < n; ++j)
				c(i, j) += aik * b(k, j);
		}
	c.check_finite();
	return c;
}

CMatrix commutator(CMatrix const &a, CMatrix const &b)
{
	return a * b - b * a;
}

} // namespace bchlab
