#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jstar {

using Complex = std::complex<double>;

/// Dense rectangular complex matrix in row-major order. Value type: every
/// operation returns a fresh matrix, nothing mutates shared state, so values
/// can be handed across threads freely.
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}

  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("CMatrix: zero dimension");
  }

  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("CMatrix: zero dimension");
    if (a_.size() != rows * cols) throw std::invalid_argument("CMatrix: entry count mismatch");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return a_.size(); }
  bool empty() const { return a_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  const std::vector<Complex>& entries() const { return a_; }
  std::vector<Complex>& entries() { return a_; }

  bool same_shape(const CMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> a_;
};

inline CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

inline CMatrix identity(std::size_t n) {
  CMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) x(i, i) = 1.0;
  return x;
}

/// E_{ij} in an rows x cols ambient space.
inline CMatrix matrix_unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  CMatrix x(rows, cols);
  x(i, j) = 1.0;
  return x;
}

inline bool is_finite(const CMatrix& x) {
  for (const Complex& v : x.entries())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

inline void require_same_shape(const CMatrix& x, const CMatrix& y, const char* op) {
  if (!x.same_shape(y)) throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

inline CMatrix add(const CMatrix& x, const CMatrix& y) {
  require_same_shape(x, y, "add");
  CMatrix z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z.entries()[i] += y.entries()[i];
  return z;
}

inline CMatrix sub(const CMatrix& x, const CMatrix& y) {
  require_same_shape(x, y, "sub");
  CMatrix z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z.entries()[i] -= y.entries()[i];
  return z;
}

inline CMatrix scale(Complex lambda, const CMatrix& x) {
  CMatrix z = x;
  for (Complex& v : z.entries()) v *= lambda;
  return z;
}

inline CMatrix operator+(const CMatrix& x, const CMatrix& y) { return add(x, y); }
inline CMatrix operator-(const CMatrix& x, const CMatrix& y) { return sub(x, y); }
inline CMatrix operator*(Complex lambda, const CMatrix& x) { return scale(lambda, x); }

inline CMatrix matmul(const CMatrix& x, const CMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
  CMatrix z(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Complex xik = x(i, k);
      if (xik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

inline CMatrix operator*(const CMatrix& x, const CMatrix& y) { return matmul(x, y); }

/// Conjugate transpose.
inline CMatrix adjoint(const CMatrix& x) {
  CMatrix z(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) z(j, i) = std::conj(x(i, j));
  return z;
}

/// Plain transpose, no conjugation.
inline CMatrix transpose(const CMatrix& x) {
  CMatrix z(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) z(j, i) = x(i, j);
  return z;
}

/// The triple product x x* x; defined for any rectangular x.
inline CMatrix triple(const CMatrix& x) { return matmul(matmul(x, adjoint(x)), x); }

inline Complex trace(const CMatrix& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("trace: matrix not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) t += x(i, i);
  return t;
}

inline double frobenius_norm(const CMatrix& x) {
  double s = 0.0;
  for (const Complex& v : x.entries()) s += std::norm(v);
  return std::sqrt(s);
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix z(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          z(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return z;
}

/// Exact scaling by 2^n (entrywise ldexp, no rounding).
inline CMatrix scale_pow2(const CMatrix& x, int n) {
  CMatrix z = x;
  for (Complex& v : z.entries())
    v = Complex(std::ldexp(v.real(), n), std::ldexp(v.imag(), n));
  return z;
}

namespace detail {

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations. Unconditionally
// convergent, used both as the spectral-norm fallback and for Gram-matrix
// conditioning checks. Input is consumed by value.
inline std::vector<double> hermitian_eigenvalues(CMatrix b) {
  const std::size_t n = b.rows();
  if (n != b.cols()) throw std::invalid_argument("hermitian_eigenvalues: not square");
  if (n == 1) return {b(0, 0).real()};

  double scale = frobenius_norm(b);
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  const double stop = 1e-15 * scale;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(b(p, q));
    if (std::sqrt(2.0 * off) <= stop) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex bpq = b(p, q);
        const double r = std::abs(bpq);
        if (r <= 1e-300) continue;
        const Complex phase = bpq / r;
        const double tau = (b(p, p).real() - b(q, q).real()) / (2.0 * r);
        // smaller-magnitude root of t^2 - 2 tau t - 1 = 0
        const double sg = tau >= 0.0 ? 1.0 : -1.0;
        const double t = -sg / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex s = (t * c) * phase;
        const Complex sc = std::conj(s);

        // columns p and q: B <- B G
        for (std::size_t k = 0; k < n; ++k) {
          const Complex bkp = b(k, p), bkq = b(k, q);
          b(k, p) = c * bkp - sc * bkq;
          b(k, q) = s * bkp + c * bkq;
        }
        // rows p and q: B <- G* B
        for (std::size_t k = 0; k < n; ++k) {
          const Complex bpk = b(p, k), bqk = b(q, k);
          b(p, k) = c * bpk - s * bqk;
          b(q, k) = sc * bpk + c * bqk;
        }
        b(p, q) = 0.0;
        b(q, p) = 0.0;
        b(p, p) = b(p, p).real();
        b(q, q) = b(q, q).real();
      }
    }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = b(i, i).real();
  return ev;
}

inline double max_eigenvalue_jacobi(const CMatrix& b) {
  double best = 0.0;
  bool first = true;
  for (double ev : hermitian_eigenvalues(b)) {
    if (first || ev > best) best = ev;
    first = false;
  }
  return best;
}

} // namespace detail

/// Largest singular value. Power iteration on x*x from the normalized
/// all-ones vector, Rayleigh-quotient stopping at relative change <= 1e-14
/// plus a residual check; falls back to a cyclic-Jacobi eigensolve of x*x
/// when the iteration caps out, breaks down (x*x maps the start vector to
/// zero, e.g. x = [[1,-1],[-1,1]]), or the converged value fails the
/// max-diagonal dominance certificate.
inline double spectral_norm(const CMatrix& x) {
  if (x.empty()) return 0.0;

  const CMatrix b = matmul(adjoint(x), x);
  const std::size_t m = b.rows();
  const double fro2 = [&] {
    double s = 0.0;
    for (const Complex& v : x.entries()) s += std::norm(v);
    return s;
  }();
  if (fro2 == 0.0) return 0.0;
  if (m == 1) return std::sqrt(std::max(0.0, b(0, 0).real()));

  double max_diag = 0.0;
  for (std::size_t i = 0; i < m; ++i) max_diag = std::max(max_diag, b(i, i).real());

  std::vector<Complex> v(m, Complex(1.0 / std::sqrt(static_cast<double>(m)), 0.0));
  std::vector<Complex> w(m);

  double lambda = 0.0;
  double lambda_prev = -1.0;
  bool converged = false;

  for (int iter = 0; iter < 10000; ++iter) {
    for (std::size_t i = 0; i < m; ++i) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) acc += b(i, j) * v[j];
      w[i] = acc;
    }
    double wn2 = 0.0;
    Complex ray = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      wn2 += std::norm(w[i]);
      ray += std::conj(v[i]) * w[i];
    }
    lambda = ray.real();
    if (wn2 <= 1e-280 * fro2 * fro2) {
      // start vector annihilated; only the Jacobi path can see the spectrum
      return std::sqrt(std::max(0.0, detail::max_eigenvalue_jacobi(b)));
    }
    double resid2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) resid2 += std::norm(w[i] - lambda * v[i]);

    const double wn = std::sqrt(wn2);
    for (std::size_t i = 0; i < m; ++i) v[i] = w[i] / wn;

    if (iter > 0 && std::abs(lambda - lambda_prev) <= 1e-14 * std::abs(lambda) &&
        resid2 <= (1e-12 * fro2) * (1e-12 * fro2)) {
      converged = true;
      break;
    }
    lambda_prev = lambda;
  }

  if (!converged || lambda < max_diag * (1.0 - 1e-12))
    lambda = detail::max_eigenvalue_jacobi(b);

  return std::sqrt(std::max(0.0, lambda));
}

/// Spectral-norm distance.
inline double distance(const CMatrix& x, const CMatrix& y) {
  require_same_shape(x, y, "distance");
  return spectral_norm(sub(x, y));
}

} // namespace jstar
