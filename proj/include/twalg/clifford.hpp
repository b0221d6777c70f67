#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twalg/model.hpp"

namespace twalg {

inline constexpr int kMaxCliffordLabels = 8;

// Ordered label set S with rho: S -> central unitaries of E.
struct CliffordSpec {
    SubsetGroup base;
    std::vector<RingValue> rho;
    DescPtr desc;

    int size() const { return base.size(); }
};

// d fixes E when the label list is empty.
CliffordSpec make_clifford_spec(std::vector<std::string> labels, std::vector<RingValue> rho, DescPtr d = nullptr,
                                double tol = kExactTol);
// Appends labels for extra generators with the given rho values.
CliffordSpec extend_spec(const CliffordSpec& spec, const std::vector<RingValue>& extra);

// (-1)^tau, tau = #{(x,y) : x in a, y in b, y < x}.
int transposition_sign(std::uint32_t a, std::uint32_t b);
CocyclePtr clifford_cocycle(const CliffordSpec& spec);
// tilde f_rho of the full set.
RingValue clifford_tilde_full(const CliffordSpec& spec);

// V_A -> x_{s_1} ... x_{s_m} (s_1 < ... < s_m).  Throws DomainError naming the
// generator or pair that violates a relation.
Morphism universal_map(const CliffordSpec& spec, const std::vector<ModelElement>& images, const ModelPtr& target,
                       double tol = kExactTol);

// P = 1/2 V_1 + sum_t eps_t X_t V_t after checking the hypotheses.
AlgebraElement projection_family(const CocyclePtr& f, const std::vector<int>& elements, const std::vector<RingValue>& eps,
                                 const std::vector<RingValue>& coeffs, double tol = kExactTol);

struct Periodicity {
    CliffordSpec extended;
    CocyclePtr source;  // f_{rho'}
    Morphism morphism;
    double projection_residual = 0.0;  // distinguished projections vs their images
};

// rho'(n+1) = a1^2, rho'(n+2) = -a2^2; target M_2(S(rho)).
Periodicity extend_two_matrix(const CliffordSpec& spec, const RingValue& a1, const RingValue& a2);
// Real, |S| even: rho'(n+l) = -a_l^2 tilde(S); target H x S(rho).
Periodicity extend_two_quaternion(const CliffordSpec& spec, const RingValue& a1, const RingValue& a2);
// Real, |S| even: rho'(n+1) = -tilde(S); target complexification of S(rho).
Periodicity complexify_odd(const CliffordSpec& spec);

struct SplitOdd {
    CliffordSpec extended;
    CocyclePtr source;
    AlgebraElement plus, minus;
    EMatrix theta_plus, theta_minus;
    Morphism morphism;  // Y -> (theta+^* Y theta+, theta-^* Y theta-)
    double isometry_residual = 0.0;      // theta^* theta - 1
    double range_residual = 0.0;         // theta theta^* - P
    double intertwine_residual = 0.0;    // theta V_A theta^* - V_A P
    double extraction_residual = 0.0;    // compressed matrices vs regular matrices
    double central_residual = 0.0;       // V_{S'} P = +-P, P+ + P- = 1, P+ P- = 0
};
// |S| even: rho'(n+1) = tilde(S), P+- = 1/2 (V_0 +- V_{S'}).
SplitOdd split_odd(const CliffordSpec& spec);

struct EvenProjection {
    CliffordSpec extended;
    CocyclePtr source;
    AlgebraElement projection;
    Morphism morphism;  // into the corner P S(rho') P
    bool is_projection = false;
    double commute_residual = 0.0;  // P V_s - V_s P
    double bc_residual = 0.0;       // corner coefficients at B + {n+1, n+2} (m = 2)
};
// |S| even, rho'(n+i) = a_i^2 tilde(S), P = 1/2 V_0 + 1/(2 sqrt m) sum a_i^* V_{S_i}.
EvenProjection extend_even_projection(const CliffordSpec& spec, const std::vector<RingValue>& alphas,
                                      double tol = kExactTol);

}  // namespace twalg
