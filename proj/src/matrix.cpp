#include "tvk/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tvk/errors.hpp"

namespace tvk {

namespace {

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

ComplexMatrix ComplexMatrix::zero(int n) {
  if (n < 1) throw InputError("matrix dimension must be positive");
  return ComplexMatrix(n, std::vector<Complex>(static_cast<std::size_t>(n) * n));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix out = zero(n);
  for (int i = 0; i < n; ++i) out.at(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::from_entries(int n, std::vector<Complex> entries) {
  if (n < 1) throw InputError("matrix dimension must be positive");
  if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw InputError("entry count does not form a square matrix");
  for (Complex z : entries)
    if (!is_finite(z)) throw InputError("matrix entries must be finite");
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out = zero(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = std::conj(at(i, j));
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (Complex z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

double ComplexMatrix::one_norm() const {
  double best = 0.0;
  for (int j = 0; j < n_; ++j) {
    double col = 0.0;
    for (int i = 0; i < n_; ++i) col += std::abs(at(i, j));
    best = std::max(best, col);
  }
  return best;
}

ComplexMatrix ComplexMatrix::inverse() const {
  const int n = n_;
  ComplexMatrix work = *this;
  ComplexMatrix out = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(work.at(r, col)) > std::abs(work.at(pivot, col))) pivot = r;
    if (std::abs(work.at(pivot, col)) < 1e-300)
      throw ConditioningError("matrix is numerically singular");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(out.at(pivot, j), out.at(col, j));
      }
    const Complex inv_pivot = 1.0 / work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) *= inv_pivot;
      out.at(col, j) *= inv_pivot;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex factor = work.at(r, col);
      if (factor == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= factor * work.at(col, j);
        out.at(r, j) -= factor * out.at(col, j);
      }
    }
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw InputError("dimension mismatch");
  ComplexMatrix out = ComplexMatrix::zero(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < a.n_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw InputError("dimension mismatch");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] += b.entries_[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw InputError("dimension mismatch");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] -= b.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
  ComplexMatrix out = *this;
  for (Complex& z : out.entries_) z *= factor;
  return out;
}

double unitarity_defect(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::identity(u.dim())).frobenius_norm();
}

double condition_estimate(const ComplexMatrix& g) {
  return g.one_norm() * g.inverse().one_norm();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a0) {
  const int n = a0.dim();
  ComplexMatrix a = (a0 + a0.adjoint()).scaled(0.5);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), 1e-300);

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q) off += std::norm(a.at(p, q));
    if (std::sqrt(off) <= 1e-14 * scale) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a.at(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-18 * scale) continue;
        const Complex phase = apq / mag;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t =
            tau >= 0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                     : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // a <- U* a U and v <- v U, with U the identity outside rows/cols
        // p, q and U(p,p)=c, U(p,q)=s*phase, U(q,p)=-s*conj(phase), U(q,q)=c.
        for (int i = 0; i < n; ++i) {
          const Complex aip = a.at(i, p);
          const Complex aiq = a.at(i, q);
          a.at(i, p) = c * aip - s * std::conj(phase) * aiq;
          a.at(i, q) = s * phase * aip + c * aiq;
          const Complex vip = v.at(i, p);
          const Complex viq = v.at(i, q);
          v.at(i, p) = c * vip - s * std::conj(phase) * viq;
          v.at(i, q) = s * phase * vip + c * viq;
        }
        for (int j = 0; j < n; ++j) {
          const Complex apj = a.at(p, j);
          const Complex aqj = a.at(q, j);
          a.at(p, j) = c * apj - s * phase * aqj;
          a.at(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return a.at(x, x).real() < a.at(y, y).real();
  });
  HermitianEigen out;
  out.vectors = ComplexMatrix::zero(n);
  for (int j = 0; j < n; ++j) {
    out.values.push_back(a.at(order[j], order[j]).real());
    for (int i = 0; i < n; ++i) out.vectors.at(i, j) = v.at(i, order[j]);
  }
  return out;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& a) {
  const HermitianEigen eigen = hermitian_eigen(a);
  if (eigen.values.front() <= 0.0)
    throw ConditioningError("matrix is not positive definite");
  const int n = a.dim();
  ComplexMatrix scaled_vectors = eigen.vectors;
  for (int j = 0; j < n; ++j) {
    const double root = std::sqrt(eigen.values[static_cast<std::size_t>(j)]);
    for (int i = 0; i < n; ++i) scaled_vectors.at(i, j) *= root;
  }
  return scaled_vectors * eigen.vectors.adjoint();
}

namespace {

void require_well_conditioned(const ComplexMatrix& g) {
  if (condition_estimate(g) > kConditionLimit)
    throw ConditioningError("matrix condition estimate exceeds 1e6");
}

ComplexMatrix newton_unitary_factor(const ComplexMatrix& g) {
  ComplexMatrix u = g;
  for (int iter = 0; iter < kNewtonMaxIterations; ++iter) {
    const ComplexMatrix next = (u + u.adjoint().inverse()).scaled(0.5);
    const double step = (next - u).frobenius_norm();
    u = next;
    if (step <= kNewtonTol * std::max(u.frobenius_norm(), 1e-300)) break;
  }
  return u;
}

}  // namespace

DecompositionResult polar_decompose(const ComplexMatrix& g, double tol) {
  require_well_conditioned(g);
  const ComplexMatrix u = newton_unitary_factor(g);
  ComplexMatrix p = u.adjoint() * g;
  p = (p + p.adjoint()).scaled(0.5);

  DecompositionResult out;
  out.factor1 = u;
  out.factor2 = p;
  out.residual = (g - u * p).frobenius_norm();
  out.relative_residual = out.residual / std::max(g.frobenius_norm(), 1e-300);
  out.unitarity_defect = unitarity_defect(u);
  out.min_eigenvalue = hermitian_eigen(p).values.front();
  out.uniqueness_gap = (p - hermitian_sqrt(g.adjoint() * g)).frobenius_norm();
  out.passed = out.relative_residual <= tol && out.unitarity_defect <= tol &&
               out.min_eigenvalue > 0.0 && *out.uniqueness_gap <= 10.0 * tol;
  return out;
}

DecompositionResult polar_decompose_right(const ComplexMatrix& g, double tol) {
  require_well_conditioned(g);
  const int n = g.dim();
  const HermitianEigen eigen = hermitian_eigen(g * g.adjoint());
  if (eigen.values.front() <= 0.0)
    throw ConditioningError("matrix is not positive definite");
  ComplexMatrix root_vectors = eigen.vectors;
  ComplexMatrix inv_root_vectors = eigen.vectors;
  for (int j = 0; j < n; ++j) {
    const double root = std::sqrt(eigen.values[static_cast<std::size_t>(j)]);
    for (int i = 0; i < n; ++i) {
      root_vectors.at(i, j) *= root;
      inv_root_vectors.at(i, j) /= root;
    }
  }
  const ComplexMatrix p_right = root_vectors * eigen.vectors.adjoint();
  const ComplexMatrix u_right =
      (inv_root_vectors * eigen.vectors.adjoint()) * g;

  // Consistency against the Newton route: u' = u and p' = u p u*.
  const DecompositionResult left = polar_decompose(g, tol);
  const double gap_u = (u_right - left.factor1).frobenius_norm();
  const double gap_p =
      (p_right - left.factor1 * left.factor2 * left.factor1.adjoint())
          .frobenius_norm();

  DecompositionResult out;
  out.factor1 = p_right;
  out.factor2 = u_right;
  out.residual = (g - p_right * u_right).frobenius_norm();
  out.relative_residual = out.residual / std::max(g.frobenius_norm(), 1e-300);
  out.unitarity_defect = unitarity_defect(u_right);
  out.min_eigenvalue = std::sqrt(eigen.values.front());
  out.uniqueness_gap = std::max(gap_u, gap_p);
  out.passed = out.relative_residual <= tol && out.unitarity_defect <= tol &&
               out.min_eigenvalue > 0.0 && *out.uniqueness_gap <= 10.0 * tol;
  return out;
}

DecompositionResult qr_positive(const ComplexMatrix& g, double tol) {
  require_well_conditioned(g);
  const int n = g.dim();
  ComplexMatrix r = g;
  ComplexMatrix q = ComplexMatrix::identity(n);

  for (int col = 0; col < n; ++col) {
    // Householder vector for column col, rows col..n-1.
    double norm_sq = 0.0;
    for (int i = col; i < n; ++i) norm_sq += std::norm(r.at(i, col));
    const double norm = std::sqrt(norm_sq);
    if (norm < 1e-300) throw ConditioningError("matrix is numerically singular");
    const Complex pivot = r.at(col, col);
    const Complex phase =
        std::abs(pivot) < 1e-300 ? Complex(1.0, 0.0) : pivot / std::abs(pivot);
    const Complex alpha = -phase * norm;
    std::vector<Complex> v(static_cast<std::size_t>(n), 0.0);
    for (int i = col; i < n; ++i) v[static_cast<std::size_t>(i)] = r.at(i, col);
    v[static_cast<std::size_t>(col)] -= alpha;
    double v_norm_sq = 0.0;
    for (Complex z : v) v_norm_sq += std::norm(z);
    if (v_norm_sq < 1e-300) continue;  // column already reduced

    // r <- (I - 2 v v* / |v|^2) r ; q <- q (I - 2 v v* / |v|^2)
    for (int j = 0; j < n; ++j) {
      Complex dot = 0.0;
      for (int i = col; i < n; ++i)
        dot += std::conj(v[static_cast<std::size_t>(i)]) * r.at(i, j);
      dot *= 2.0 / v_norm_sq;
      for (int i = col; i < n; ++i)
        r.at(i, j) -= dot * v[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < n; ++i) {
      Complex dot = 0.0;
      for (int j = col; j < n; ++j)
        dot += q.at(i, j) * v[static_cast<std::size_t>(j)];
      dot *= 2.0 / v_norm_sq;
      for (int j = col; j < n; ++j)
        q.at(i, j) -= dot * std::conj(v[static_cast<std::size_t>(j)]);
    }
  }

  // Defect before cleanup, so the certificate reflects the actual reduction.
  double lower_sq = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) lower_sq += std::norm(r.at(i, j));
  const double triangularity = std::sqrt(lower_sq);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) r.at(i, j) = 0.0;

  // Phase normalization: make the diagonal strictly positive real.
  for (int i = 0; i < n; ++i) {
    const Complex d = r.at(i, i);
    if (std::abs(d) < 1e-300)
      throw ConditioningError("matrix is numerically singular");
    const Complex phase = d / std::abs(d);
    for (int j = i; j < n; ++j) r.at(i, j) *= std::conj(phase);
    for (int k = 0; k < n; ++k) q.at(k, i) *= phase;
    r.at(i, i) = std::abs(d);  // exactly real
  }

  DecompositionResult out;
  out.factor1 = q;
  out.factor2 = r;
  out.residual = (g - q * r).frobenius_norm();
  out.relative_residual = out.residual / std::max(g.frobenius_norm(), 1e-300);
  out.unitarity_defect = unitarity_defect(q);
  double min_diag = r.at(0, 0).real();
  for (int i = 1; i < n; ++i) min_diag = std::min(min_diag, r.at(i, i).real());
  out.min_eigenvalue = min_diag;
  out.triangularity_defect =
      triangularity / std::max(g.frobenius_norm(), 1e-300);
  out.passed = out.relative_residual <= tol && out.unitarity_defect <= tol &&
               *out.triangularity_defect <= tol && min_diag > 0.0;
  return out;
}

TransversalCertificate transversal_certificate(const ComplexMatrix& g,
                                               DecompositionMode mode,
                                               double tol) {
  require_well_conditioned(g);
  const int n = g.dim();
  TransversalCertificate cert;
  cert.mode = mode;
  if (mode == DecompositionMode::Polar) {
    cert.right_element = hermitian_sqrt(g.adjoint() * g);  // in U(n) g
    cert.left_element = hermitian_sqrt(g * g.adjoint());   // in g U(n)
    cert.left_membership_defect =
        (cert.left_element - cert.left_element.adjoint()).frobenius_norm();
    cert.right_membership_defect =
        (cert.right_element - cert.right_element.adjoint()).frobenius_norm();
    cert.left_positivity = hermitian_eigen(cert.left_element).values.front();
    cert.right_positivity = hermitian_eigen(cert.right_element).values.front();
  } else {
    cert.right_element = qr_positive(g, tol).factor2;              // r
    cert.left_element = qr_positive(g.inverse(), tol).factor2.inverse();
    auto upper_defect = [n](const ComplexMatrix& m) {
      double sq = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) sq += std::norm(m.at(i, j));
      return std::sqrt(sq);
    };
    auto min_diag = [n](const ComplexMatrix& m) {
      double best = m.at(0, 0).real();
      for (int i = 1; i < n; ++i) best = std::min(best, m.at(i, i).real());
      return best;
    };
    cert.left_membership_defect = upper_defect(cert.left_element);
    cert.right_membership_defect = upper_defect(cert.right_element);
    cert.left_positivity = min_diag(cert.left_element);
    cert.right_positivity = min_diag(cert.right_element);
  }
  cert.left_coset_defect = unitarity_defect(cert.left_element.inverse() * g);
  cert.right_coset_defect = unitarity_defect(g * cert.right_element.inverse());
  const double scale = std::max(g.frobenius_norm(), 1.0);
  cert.passed = cert.left_membership_defect <= tol * scale &&
                cert.right_membership_defect <= tol * scale &&
                cert.left_positivity > 0.0 && cert.right_positivity > 0.0 &&
                cert.left_coset_defect <= 100.0 * tol &&
                cert.right_coset_defect <= 100.0 * tol;
  return cert;
}

ComplexMatrix random_matrix(int n, std::mt19937_64& engine) {
  auto draw = [&engine]() {
    return (static_cast<double>(engine() >> 11) * 0x1.0p-53) * 2.0 - 1.0;
  };
  std::vector<Complex> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) {
    const double re = draw();
    const double im = draw();
    entries.emplace_back(re, im);
  }
  return ComplexMatrix::from_entries(n, std::move(entries));
}

ComplexMatrix random_unitary(int n, std::mt19937_64& engine) {
  return qr_positive(random_well_conditioned(n, engine)).factor1;
}

ComplexMatrix random_well_conditioned(int n, std::mt19937_64& engine,
                                      double limit) {
  for (;;) {
    ComplexMatrix candidate = random_matrix(n, engine);
    try {
      if (condition_estimate(candidate) <= limit) return candidate;
    } catch (const ConditioningError&) {
      // singular sample; draw again
    }
  }
}

}  // namespace tvk
