#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace tvk {

using Complex = std::complex<double>;

inline constexpr double kDefaultMatrixTol = 1e-10;
inline constexpr double kConditionLimit = 1e6;
inline constexpr double kNewtonTol = 1e-14;
inline constexpr int kNewtonMaxIterations = 100;

// Dense square complex matrix, row-major. Entries are required finite at
// every construction boundary.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  static ComplexMatrix zero(int n);
  static ComplexMatrix identity(int n);
  // entries.size() must be n*n (a different count is the "non-square" input
  // error) and all entries finite.
  static ComplexMatrix from_entries(int n, std::vector<Complex> entries);

  int dim() const { return n_; }
  Complex& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const Complex& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;
  double one_norm() const;  // max absolute column sum

  // Gauss-Jordan with partial pivoting; ConditioningError when singular.
  ComplexMatrix inverse() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  ComplexMatrix scaled(Complex factor) const;

 private:
  ComplexMatrix(int n, std::vector<Complex> entries)
      : n_(n), entries_(std::move(entries)) {}
  int n_ = 0;
  std::vector<Complex> entries_;
};

double unitarity_defect(const ComplexMatrix& u);  // ||u* u - I||_F

// ||g||_1 * ||g^-1||_1; ConditioningError when singular.
double condition_estimate(const ComplexMatrix& g);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unitary, a = vectors diag(values) vectors*
};

// Cyclic Jacobi rotations; input is symmetrized first. Self-contained by
// design: the decompositions below cross-check against it, so it must not
// share code with them.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);

// Spectral square root; ConditioningError unless positive definite.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& a);

struct DecompositionResult {
  ComplexMatrix factor1;
  ComplexMatrix factor2;
  double residual;           // ||g - factor1 factor2||_F
  double relative_residual;  // residual / ||g||_F
  double unitarity_defect;   // of the unitary factor
  double min_eigenvalue;     // positive factor (polar) or min R diagonal (qr)
  std::optional<double> triangularity_defect;  // qr only, pre-normalization
  // polar: ||p - sqrt(g* g)||_F; right polar: max consistency gap against the
  // left decomposition; absent for qr.
  std::optional<double> uniqueness_gap;
  bool passed;
};

// g = u p with u unitary (scaled Newton iteration u <- (u + u^-*)/2) and
// p = u* g Hermitian positive definite. Cross-checked against the
// eigendecomposition route p = sqrt(g* g) within 10*tol.
DecompositionResult polar_decompose(const ComplexMatrix& g,
                                    double tol = kDefaultMatrixTol);

// g = p' u' with p' = sqrt(g g*); additionally checks u' = u and
// p' = u p u* against polar_decompose within 10*tol.
DecompositionResult polar_decompose_right(const ComplexMatrix& g,
                                          double tol = kDefaultMatrixTol);

// g = q r, Householder reflections, diagonal phases normalized so r has a
// strictly positive real diagonal.
DecompositionResult qr_positive(const ComplexMatrix& g,
                                double tol = kDefaultMatrixTol);

enum class DecompositionMode { Polar, Iwasawa };

// The unique element of the claimed transversal set (positive definite
// matrices, or positive-diagonal upper triangulars) in g's left coset
// g U(n) and in g's right coset U(n) g, with membership and coset
// certificates.
struct TransversalCertificate {
  DecompositionMode mode;
  ComplexMatrix left_element;   // in g U(n)
  ComplexMatrix right_element;  // in U(n) g
  double left_membership_defect;
  double right_membership_defect;
  double left_positivity;   // min eigenvalue / min diagonal entry
  double right_positivity;
  double left_coset_defect;   // unitarity defect of left_element^-1 g
  double right_coset_defect;  // unitarity defect of g right_element^-1
  bool passed;
};

TransversalCertificate transversal_certificate(const ComplexMatrix& g,
                                               DecompositionMode mode,
                                               double tol = kDefaultMatrixTol);

// Deterministic random matrices: entries have real and imaginary parts
// (u >> 11) * 2^-53 * 2 - 1 for successive engine outputs u, filled row by
// row, real part first. This mapping is fixed so reports are reproducible
// bit for bit for a given seed.
ComplexMatrix random_matrix(int n, std::mt19937_64& engine);

// Q factor of a random matrix; resamples until the sample is well
// conditioned.
ComplexMatrix random_unitary(int n, std::mt19937_64& engine);

// Resamples until condition_estimate <= limit.
ComplexMatrix random_well_conditioned(int n, std::mt19937_64& engine,
                                      double limit = kConditionLimit);

}  // namespace tvk
