#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twalg/model.hpp"

namespace twalg {

// X_t -> lambda(t)^* X_t, from S(f) onto S(f * delta(lambda)).
Morphism lambda_isomorphism(const CocyclePtr& f, const Lambda& lambda);

// Z/2: X -> (X_0 + x X_1, X_0 - x X_1) with x central unitary, x^2 = f(1,1).
Morphism z2_split(const CocyclePtr& f, const RingValue& x, double tol = kExactTol);
// Real Z/2 with f(1,1) = -1: X -> X_0 + i X_1.
Morphism z2_complexify(const CocyclePtr& f, double tol = kExactTol);

// Parameters of the Klein-four table; see klein_table.
struct KleinParams {
    RingValue alpha, beta, gamma, eps;
};
CocyclePtr klein_cocycle(const KleinParams& p);

// eps = 1, x^2 = beta gamma, y^2 = alpha gamma; target E^4.
Morphism klein_split4(const KleinParams& p, const RingValue& x, const RingValue& y, double tol = kExactTol);
// Real, eps = 1, x^2 = -beta gamma, y^2 = +-alpha gamma; target two copies of the complexification.
Morphism klein_complex_pair(const KleinParams& p, const RingValue& x, const RingValue& y, double tol = kExactTol);
// Real, eps = -1, x^2 = -beta gamma, y^2 = alpha gamma; target H x E.
Morphism klein_quaternion(const KleinParams& p, const RingValue& x, const RingValue& y, double tol = kExactTol);
// eps = -1, x^2 = beta gamma, y unitary; target E_{2,2}.
Morphism klein_matrix(const KleinParams& p, const RingValue& x, const RingValue& y, double tol = kExactTol);
// eps = -1, x^2 = alpha beta, delta unitary; target E_{2,2}.
Morphism klein_matrix_alt(const KleinParams& p, const RingValue& x, const RingValue& delta, double tol = kExactTol);

// Pairing <t,s> = (-1)^{sum t(i)s(i)} on an elementary abelian 2-group.
int z2n_pairing(int t, int s);
// f = 1 on (Z/2)^n: X -> (sum_s <t,s> X_s)_t into E^{2^n}.
Morphism char_decompose_z2n(const CocyclePtr& f, double tol = kExactTol);
// max_r |sum_t <r,t> phi_t X - 2^n X_r|.
double char_inverse_residual(const Morphism& m, const AlgebraElement& x);

// f_alpha over a complex ring, b^n = prod alpha_j: X -> (w_k X)_k into E^n.
Morphism cyclic_decompose(int n, const std::vector<RingValue>& alpha, const RingValue& b, double tol = kExactTol);

struct TensorReport {
    int pairs = 0;
    double max_residual = 0.0;
    bool ok(double tol = kExactTol) const { return max_residual <= tol; }
};
// Regular matrix of V^h_{(t,s)} against the Kronecker product of V^f_t and V^g_s.
TensorReport tensor_structure_check(const SchurFunction& f, const SchurFunction& g);
// S(f) with f over C and S(amplify(f,k)) -> M_k(S(f)), X -> [sum_t (X_t)_{ij} V_t]; residuals on random pairs.
TensorReport amplification_check(const CocyclePtr& f, int k, int trials, unsigned seed);

struct RewriteReport {
    int basis = 0, pairs = 0;
    double mult_residual = 0.0, star_residual = 0.0;
    bool injective = false;
    bool ok() const { return mult_residual == 0.0 && star_residual == 0.0 && injective; }
};
// Z/2 over Laurent m=1 with f(1,1) = z: X -> X_0(z^2) + z X_1(z^2).
RewriteReport laurent_z2_rewrite(const CocyclePtr& f, int degree);
// f(I,J) = prod_{i in I cap J} z_i on subsets of {1..n} over Laurent m = n.
CocyclePtr torus_cocycle(int n);
// X -> sum_I lambda_I(z) X_I(z^2).
RewriteReport z2n_torus_rewrite(int n, int degree);
RingValue torus_substitute(const AlgebraElement& x);

// Z/2 x Z/4 table with parameters alpha, beta, gamma, delta.
CocyclePtr z2z4_cocycle(const RingValue& alpha, const RingValue& beta, const RingValue& gamma, const RingValue& delta);
// Matrix block plus the four functionals phi_{j,k}; target E_{2,2} + E^4.
Morphism z2z4_decompose(const CocyclePtr& f);

struct CornerReport {
    AlgebraElement plus, minus;
    bool plus_projection = false, minus_projection = false;
    double sum_residual = 0.0, product_residual = 0.0;
    int plus_rank = 0, minus_rank = 0, dim_e = 0;
    bool ok() const {
        return plus_projection && minus_projection && plus_rank == dim_e && minus_rank == dim_e;
    }
};
// P+- = 1/2 (V_1 +- gamma V_c), gamma = alpha_1^* beta_1^* beta_2, and the corner ranks.
CornerReport z2z4_corner_check(const CocyclePtr& f, const RingValue& beta1, const RingValue& beta2,
                               double tol = kExactTol);

}  // namespace twalg
