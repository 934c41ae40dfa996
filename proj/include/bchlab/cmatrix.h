#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace bchlab {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Entries are finite: every
/// constructor and arithmetic operation throws std::domain_error on NaN/Inf.
class CMatrix
{
	int dim_ = 0;
	std::vector<cplx> a_;

	void check_finite() const;

  public:
	CMatrix() = default;
	explicit CMatrix(int dim);
	CMatrix(int dim, std::span<cplx const> row_major);
	CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

	static CMatrix identity(int dim);
	static CMatrix zero(int dim) { return CMatrix(dim); }
	static CMatrix diagonal(std::span<cplx const> d);

	int dim() const { return dim_; }
	cplx &operator()(int i, int j) { return a_[i * dim_ + j]; }
	cplx const &operator()(int i, int j) const { return a_[i * dim_ + j]; }
	std::span<cplx const> data() const { return a_; }

	bool is_real(double tol = 0.0) const;
	bool is_zero() const;

	CMatrix adjoint() const;
	cplx trace() const;
	double frobenius_norm() const;
	/// max absolute column sum
	double one_norm() const;
	double max_abs() const;

	CMatrix &operator+=(CMatrix const &b);
	CMatrix &operator-=(CMatrix const &b);
	CMatrix &operator*=(cplx s);

	friend CMatrix operator+(CMatrix a, CMatrix const &b) { return a += b; }
	friend CMatrix operator-(CMatrix a, CMatrix const &b) { return a -= b; }
	friend CMatrix operator-(CMatrix a) { return a *= -1.0; }
	friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
	friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
	friend CMatrix operator*(CMatrix const &a, CMatrix const &b);

	friend bool operator==(CMatrix const &a, CMatrix const &b) = default;
};

/// AB - BA
CMatrix commutator(CMatrix const &a, CMatrix const &b);

} // namespace bchlab
