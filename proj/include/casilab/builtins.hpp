#pragma once

#include <vector>

#include "casilab/algebra.hpp"
#include "casilab/invariants_types.hpp"

namespace casilab {

/// su(2) with cyclic brackets [X1,X2]=X3, [X2,X3]=X1, [X3,X1]=X2.
LieAlgebra build_su2();

/// Abelian algebra of the given dimension.
LieAlgebra build_abelian(uint32_t dim);

/// sp(6,R) in the Racah realization: generators X(i,j), -3<=i,j<=3, with
/// X(i,j) + eps_i eps_j X(-j,-i) = 0. The 21 stored representatives are
/// X(i,j) with i,j>0 (9), X(-i,j) with 0<i<=j (6), X(i,-j) with 0<i<=j (6),
/// in that order, each family enumerated lexicographically.
LieAlgebra build_sp6();

/// su(2,2): basis E(m,n) m<n (6), F(m,n) m<n (6), H1,H2,H3, ordered with
/// the Cartan generators FIRST: H1,H2,H3,E(1,2),...,E(3,4),F(1,2),...,F(3,4).
/// Metric g = diag(1,1,-1,-1); H_m = g_{m+1,m+1}F(m,m) - g_{mm}F(m+1,m+1).
LieAlgebra build_su22();

/// Chain sp(6) > su(3) x u(1): basis change to
/// {H1,H2,H3, X(1,2),X(1,3),X(2,1),X(2,3),X(3,1),X(3,2), 12 mixed-sign
/// generators}, sub_dim 9. H1=X(1,1)-X(2,2), H2=X(2,2)-X(3,3),
/// H3=X(1,1)+X(2,2)+X(3,3).
ChainSpec sp6_unitary_chain();
std::vector<std::string> sp6_unitary_names();

/// Chain su(2,2) > Cartan: the built-in basis already leads with H1,H2,H3,
/// so no basis change; sub_dim 3.
ChainSpec su22_cartan_chain();

/// 6x6 matrix of linear polynomials whose characteristic polynomial
/// |A - T Id| = T^6 + C2 T^4 + C4 T^2 + C6 yields the sp(6) Casimirs.
/// One entry of the published matrix is corrected (see data file comment);
/// the correction is certified by the invariance gate in the tests.
MatrixTemplate sp6_charpoly_template();

/// 4x4 matrix M = I*A with |M - L Id| = L^4 + D2 L^2 + D3 L + D4 yielding
/// the su(2,2) Casimirs of degrees 2, 3, 4.
MatrixTemplate su22_charpoly_template();

/// Casimir degrees extracted from the templates.
std::vector<uint32_t> sp6_casimir_degrees();    // {2, 4, 6}
std::vector<uint32_t> su22_casimir_degrees();   // {2, 3, 4}

}  // namespace casilab
