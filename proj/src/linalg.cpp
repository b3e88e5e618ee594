#include "nrange/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "nrange/rng.hpp"

namespace nrange {

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw InputError("matrix entry count " + std::to_string(data_.size()) +
                         " does not match shape " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> v) {
    return ComplexMatrix(v.size(), 1, std::vector<cplx>(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < std::min({d.size(), rows, cols}); ++i) m(i, i) = d[i];
    return m;
}

CVector ComplexMatrix::col(std::size_t j) const {
    CVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void ComplexMatrix::set_col(std::size_t j, std::span<const cplx> v) {
    if (v.size() != rows_) throw InputError("set_col: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw InputError("block out of bounds");
    ComplexMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw InputError("set_block out of bounds");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw InputError("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += b.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw InputError("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= b.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw InputError("matrix product: " + shape_string(a) + " * " + shape_string(b));
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const cplx ail = a(i, l);
            if (ail == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

CVector operator*(const ComplexMatrix& a, std::span<const cplx> x) {
    if (a.cols() != x.size()) throw InputError("matrix-vector product: length mismatch");
    CVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s{};
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                       const ComplexMatrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
        b.cols() != d.cols()) {
        throw InputError("block2x2: non-conforming blocks");
    }
    ComplexMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    m.set_block(a.rows(), 0, c);
    m.set_block(a.rows(), a.cols(), d);
    return m;
}

ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows()) throw InputError("hstack: row mismatch");
    ComplexMatrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

ComplexMatrix vstack(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.cols()) throw InputError("vstack: column mismatch");
    ComplexMatrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

void require_finite(const ComplexMatrix& a, const char* what) {
    if (a.empty()) throw InputError(std::string(what) + ": empty matrix");
    if (!a.all_finite()) throw InputError(std::string(what) + ": non-finite entry");
}

double norm2(std::span<const cplx> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

cplx dot(std::span<const cplx> x, std::span<const cplx> y) {
    if (x.size() != y.size()) throw InputError("dot: length mismatch");
    cplx s{};
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

CVector normalized(std::span<const cplx> v) {
    const double n = norm2(v);
    if (n == 0.0) throw InputError("cannot normalize a zero vector");
    CVector out(v.begin(), v.end());
    for (auto& z : out) z /= n;
    return out;
}

std::string shape_string(const ComplexMatrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

// ---------------------------------------------------------------------------
// Isometry

double isometry_defect(const ComplexMatrix& h) {
    ComplexMatrix g = h.adjoint() * h;
    g -= ComplexMatrix::identity(h.cols());
    return g.frobenius_norm();
}

Isometry::Isometry(ComplexMatrix columns, double tol) : m_(std::move(columns)) {
    require_finite(m_, "isometry");
    if (m_.cols() > m_.rows()) {
        throw InputError("isometry: rank " + std::to_string(m_.cols()) + " exceeds ambient " +
                         std::to_string(m_.rows()));
    }
    const double d = isometry_defect(m_);
    if (!(d <= tol)) {
        std::ostringstream os;
        os << "isometry: ||H*H - I||_F = " << d << " exceeds " << tol;
        throw InputError(os.str());
    }
}

Isometry Isometry::trusted(ComplexMatrix columns) {
    Isometry h;
    h.m_ = std::move(columns);
    return h;
}

// ---------------------------------------------------------------------------
// Jacobi rotations

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Unitary G (row-major 2x2) with G^* [[a, h], [conj(h), b]] G diagonal.
struct Rotation {
    cplx g00, g01, g10, g11;
};

Rotation hermitian_rotation(double a, double b, cplx h) {
    const double ah = std::abs(h);
    const cplx phase = std::conj(h) / ah;  // e^{-i arg h}
    const double tau = (b - a) / (2.0 * ah);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    return {c, s, -s * phase, c * phase};
}

// M <- M G on columns p, q.
void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& g) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const cplx xp = m(r, p);
        const cplx xq = m(r, q);
        m(r, p) = xp * g.g00 + xq * g.g10;
        m(r, q) = xp * g.g01 + xq * g.g11;
    }
}

// M <- G^* M on rows p, q.
void rotate_rows(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& g) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const cplx xp = m(p, c);
        const cplx xq = m(q, c);
        m(p, c) = std::conj(g.g00) * xp + std::conj(g.g10) * xq;
        m(q, c) = std::conj(g.g01) * xp + std::conj(g.g11) * xq;
    }
}

std::vector<std::size_t> descending_order(const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[i] > v[j]; });
    return idx;
}

// Fills columns flagged in `missing` with unit vectors orthogonal to all other columns.
void complete_columns(ComplexMatrix& u, const std::vector<bool>& missing) {
    const std::size_t m = u.rows();
    std::vector<bool> have(missing.size());
    for (std::size_t j = 0; j < missing.size(); ++j) have[j] = !missing[j];
    for (std::size_t j = 0; j < missing.size(); ++j) {
        if (!missing[j]) continue;
        CVector best;
        double best_norm = -1.0;
        for (std::size_t e = 0; e < m; ++e) {
            CVector v(m, cplx{});
            v[e] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t l = 0; l < u.cols(); ++l) {
                    if (!have[l]) continue;
                    const CVector ul = u.col(l);
                    const cplx c = dot(ul, v);
                    for (std::size_t i = 0; i < m; ++i) v[i] -= c * ul[i];
                }
            }
            const double n = norm2(v);
            if (n > best_norm + 1e-12) {
                best_norm = n;
                best = std::move(v);
            }
        }
        u.set_col(j, normalized(best));
        have[j] = true;
    }
}

// One-sided Jacobi for m >= n.
SvdResult svd_tall(const ComplexMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double tol = static_cast<double>(m) * kEps;

    for (int sweep = 0; sweep < 100; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                cplx gamma{};
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += std::norm(w(i, p));
                    beta += std::norm(w(i, q));
                    gamma += std::conj(w(i, p)) * w(i, q);
                }
                if (alpha == 0.0 || beta == 0.0) continue;
                if (std::abs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
                const Rotation g = hermitian_rotation(alpha, beta, gamma);
                rotate_columns(w, p, q, g);
                rotate_columns(v, p, q, g);
                rotated = true;
            }
        }
        if (!rotated) break;
    }

    std::vector<double> s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = norm2(w.col(j));
    const auto order = descending_order(s);

    SvdResult out;
    out.sigma.resize(n);
    ComplexMatrix u(m, n);
    ComplexMatrix vs(n, n);
    std::vector<bool> missing(n, false);
    for (std::size_t jj = 0; jj < n; ++jj) {
        const std::size_t j = order[jj];
        out.sigma[jj] = s[j];
        vs.set_col(jj, v.col(j));
        if (s[j] > std::numeric_limits<double>::min() * 1e4) {
            CVector c = w.col(j);
            for (auto& z : c) z /= s[j];
            u.set_col(jj, c);
        } else {
            out.sigma[jj] = 0.0;
            missing[jj] = true;
        }
    }
    if (std::any_of(missing.begin(), missing.end(), [](bool b) { return b; })) {
        complete_columns(u, missing);
    }
    out.left = Isometry::trusted(std::move(u));
    out.right = Isometry::trusted(std::move(vs));
    return out;
}

}  // namespace

SvdResult svd(const ComplexMatrix& a) {
    require_finite(a, "svd");
    if (a.rows() >= a.cols()) return svd_tall(a);
    SvdResult t = svd_tall(a.adjoint());
    return SvdResult{std::move(t.sigma), std::move(t.right), std::move(t.left)};
}

std::vector<double> singular_values(const ComplexMatrix& a) { return svd(a).sigma; }

double spectral_norm(const ComplexMatrix& a) { return svd(a).sigma.front(); }

bool is_hermitian(const ComplexMatrix& h, double rel_tol) {
    if (!h.is_square()) return false;
    const ComplexMatrix d = h - h.adjoint();
    return d.frobenius_norm() <= rel_tol * std::max(1.0, h.frobenius_norm());
}

HermEig hermitian_eigen(const ComplexMatrix& h_in) {
    require_finite(h_in, "hermitian_eigen");
    if (!h_in.is_square()) throw InputError("hermitian_eigen: matrix is " + shape_string(h_in));
    if (!is_hermitian(h_in)) throw InputError("hermitian_eigen: matrix is not Hermitian");

    const std::size_t n = h_in.rows();
    ComplexMatrix h = h_in;
    for (std::size_t i = 0; i < n; ++i) h(i, i) = h(i, i).real();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(h.frobenius_norm(), std::numeric_limits<double>::min());

    for (int sweep = 0; sweep < 100; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx hpq = h(p, q);
                if (std::abs(hpq) <= kEps * 1e-2 * scale) continue;
                const Rotation g = hermitian_rotation(h(p, p).real(), h(q, q).real(), hpq);
                rotate_columns(h, p, q, g);
                rotate_rows(h, p, q, g);
                h(p, q) = 0.0;
                h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
                rotate_columns(v, p, q, g);
                rotated = true;
            }
        }
        if (!rotated) break;
    }

    std::vector<double> lam(n);
    for (std::size_t i = 0; i < n; ++i) lam[i] = h(i, i).real();
    const auto order = descending_order(lam);
    HermEig out;
    out.lambda.resize(n);
    ComplexMatrix frame(n, n);
    for (std::size_t jj = 0; jj < n; ++jj) {
        out.lambda[jj] = lam[order[jj]];
        frame.set_col(jj, v.col(order[jj]));
    }
    out.frame = Isometry::trusted(std::move(frame));
    return out;
}

CVector eigenvalues(const ComplexMatrix& a) {
    require_finite(a, "eigenvalues");
    if (!a.is_square()) throw InputError("eigenvalues: matrix is " + shape_string(a));
    const auto n = static_cast<Eigen::Index>(a.rows());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    if (solver.info() != Eigen::Success) throw DomainError("eigenvalues: Schur iteration failed");
    CVector out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.begin(), out.end(), [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() > y.real();
        return x.imag() > y.imag();
    });
    return out;
}

QrResult householder_qr(const ComplexMatrix& a) {
    require_finite(a, "householder_qr");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ComplexMatrix r = a;
    ComplexMatrix q = ComplexMatrix::identity(m);
    const std::size_t steps = std::min(m == 0 ? 0 : m - 1, n);
    for (std::size_t j = 0; j < steps; ++j) {
        CVector x(m - j);
        for (std::size_t i = j; i < m; ++i) x[i - j] = r(i, j);
        const double xn = norm2(x);
        if (xn == 0.0) continue;
        const cplx phase = std::abs(x[0]) == 0.0 ? cplx{1.0} : x[0] / std::abs(x[0]);
        CVector vv = x;
        vv[0] += phase * xn;  // v = x - alpha e1 with alpha = -phase * ||x||
        const double vn2 = std::pow(norm2(vv), 2);
        if (vn2 == 0.0) continue;
        // R <- (I - 2 v v^*/|v|^2) R on rows j.., Q <- Q (I - 2 v v^*/|v|^2)
        for (std::size_t c = 0; c < n; ++c) {
            cplx s{};
            for (std::size_t i = j; i < m; ++i) s += std::conj(vv[i - j]) * r(i, c);
            s *= 2.0 / vn2;
            for (std::size_t i = j; i < m; ++i) r(i, c) -= vv[i - j] * s;
        }
        for (std::size_t row = 0; row < m; ++row) {
            cplx s{};
            for (std::size_t i = j; i < m; ++i) s += q(row, i) * vv[i - j];
            s *= 2.0 / vn2;
            for (std::size_t i = j; i < m; ++i) q(row, i) -= s * std::conj(vv[i - j]);
        }
        for (std::size_t i = j + 1; i < m; ++i) r(i, j) = 0.0;
    }
    // Normalize so that r_ii is real and non-negative.
    for (std::size_t j = 0; j < std::min(m, n); ++j) {
        const cplx d = r(j, j);
        if (std::abs(d) == 0.0) continue;
        const cplx ph = d / std::abs(d);
        for (std::size_t c = 0; c < n; ++c) r(j, c) *= std::conj(ph);
        for (std::size_t row = 0; row < m; ++row) q(row, j) *= ph;
        r(j, j) = std::abs(d);
    }
    return {std::move(q), std::move(r)};
}

ComplexMatrix complete_to_unitary(const Isometry& h) {
    QrResult qr = householder_qr(h.matrix());
    ComplexMatrix u = std::move(qr.q);
    u.set_block(0, 0, h.matrix());
    return u;
}

ComplexMatrix random_gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
    return g;
}

Isometry random_isometry(std::size_t m, std::size_t k, std::uint64_t seed) {
    if (k < 1 || k > m) {
        throw InputError("random_isometry: need 1 <= k <= m, got m=" + std::to_string(m) +
                         " k=" + std::to_string(k));
    }
    const QrResult qr = householder_qr(random_gaussian(m, k, seed));
    return Isometry::trusted(qr.q.cols_range(0, k));
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
    return random_isometry(n, n, seed).matrix();
}

cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError("frobenius_inner: shapes " + shape_string(a) + " and " + shape_string(b));
    }
    cplx s{};
    const auto da = a.data();
    const auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) s += std::conj(db[i]) * da[i];
    return s;
}

}  // namespace nrange
