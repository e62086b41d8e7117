#pragma once

#include "urlab/types.hpp"

namespace urlab::linalg {

bool is_hermitian(const ComplexMatrix& m, double tol);

// Hermitian check plus eigenvalue floor: smallest eigenvalue >= -tol.
bool is_psd(const ComplexMatrix& m, double tol);

// Determinant by partial-pivoted Gaussian elimination. Deliberately not
// delegated to the eigensolver so it can cross-check the eigenvalue route.
Complex determinant(const ComplexMatrix& m);

// Principal minor M(i_1..i_r): determinant of the submatrix selected by a
// strictly increasing 1-based index set.
Complex principal_minor(const ComplexMatrix& m, const IndexSet& idx);

// Characteristic coefficients C_1..C_n, where C_r is the sum of all order-r
// principal minors. Two independent routes:
//   char_coeffs          - direct minor summation (any square matrix)
//   char_coeffs_hermitian - elementary symmetric polynomials of the
//                           eigenvalues (Hermitian input only)
// C_n equals the determinant; C_1 equals the trace.
std::vector<Complex> char_coeffs(const ComplexMatrix& m);
std::vector<double> char_coeffs_hermitian(const ComplexMatrix& m);

// Ascending eigenvalues of a Hermitian matrix.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in
// [-eps_clamp, 0) with eps_clamp = 1e-10 * trace are clamped to zero;
// anything below -eps_clamp raises InputError.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& rho);

// All order-r index sets over 1..n, lexicographic. Used by the coefficient
// route and by minor-sum consistency tests.
std::vector<IndexSet> index_sets_of_order(int n, int r);

} // namespace urlab::linalg
