#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nrange {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/// Malformed or inconsistent input (bad shape, non-finite entry, broken frame).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but violates a mathematical hypothesis of the operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested point lies outside the set the operation works on.
class OutOfRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix column(std::span<const cplx> v);
    static ComplexMatrix diagonal(std::span<const cplx> d, std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const cplx> data() const noexcept { return data_; }

    CVector col(std::size_t j) const;
    void set_col(std::size_t j, std::span<const cplx> v);
    ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    ComplexMatrix cols_range(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
    void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    double frobenius_norm() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& b);
    ComplexMatrix& operator-=(const ComplexMatrix& b);
    ComplexMatrix& operator*=(cplx s);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
CVector operator*(const ComplexMatrix& a, std::span<const cplx> x);

/// Block matrix [[a, b], [c, d]]; blocks must have conforming shapes.
ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                       const ComplexMatrix& d);
ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix vstack(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix zeros(std::size_t rows, std::size_t cols);

/// Throws InputError when any entry is NaN or infinite.
void require_finite(const ComplexMatrix& a, const char* what);

double norm2(std::span<const cplx> v);
cplx dot(std::span<const cplx> x, std::span<const cplx> y);  // x^* y
CVector normalized(std::span<const cplx> v);

/// Matrix with orthonormal columns, H^*H = I_k.
class Isometry {
public:
    Isometry() = default;
    /// Validates ||H^*H - I||_F <= tol.
    explicit Isometry(ComplexMatrix columns, double tol = 1e-10);

    std::size_t ambient() const noexcept { return m_.rows(); }
    std::size_t rank() const noexcept { return m_.cols(); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    ComplexMatrix projector() const { return m_ * m_.adjoint(); }

    static Isometry trusted(ComplexMatrix columns);

private:
    ComplexMatrix m_;
};

double isometry_defect(const ComplexMatrix& h);  // ||H^*H - I||_F

struct SvdResult {
    std::vector<double> sigma;  // descending, length min(m, n)
    Isometry left;              // m x min(m, n)
    Isometry right;             // n x min(m, n)
};

struct HermEig {
    std::vector<double> lambda;  // descending
    Isometry frame;              // columns are eigenvectors in the order of lambda
};

struct QrResult {
    ComplexMatrix q;  // m x m unitary
    ComplexMatrix r;  // m x n upper triangular, real non-negative diagonal
};

/// One-sided (Hestenes) Jacobi SVD. Deterministic for a fixed input.
SvdResult svd(const ComplexMatrix& a);
std::vector<double> singular_values(const ComplexMatrix& a);
double spectral_norm(const ComplexMatrix& a);

/// Cyclic complex Jacobi on a Hermitian matrix; sweeps the upper triangle row by row.
HermEig hermitian_eigen(const ComplexMatrix& h);

/// Eigenvalues of a general square matrix (complex Schur form).
CVector eigenvalues(const ComplexMatrix& a);

/// Householder QR with full unitary Q and r_ii >= 0.
QrResult householder_qr(const ComplexMatrix& a);

/// Unitary m x m matrix whose leading columns are those of h.
ComplexMatrix complete_to_unitary(const Isometry& h);

Isometry random_isometry(std::size_t m, std::size_t k, std::uint64_t seed);
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);
ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// <A, B> = tr(B^* A).
cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& h, double rel_tol = 1e-10);

std::string shape_string(const ComplexMatrix& a);

}  // namespace nrange
