#pragma once

#include <vector>

#include "twalg/cocycle.hpp"

namespace twalg {

// Element X = sum_t X_t V_t of S(f).
class AlgebraElement {
public:
    AlgebraElement(CocyclePtr f, std::vector<RingValue> coeffs);

    const CocyclePtr& cocycle() const { return f_; }
    const SchurFunction& f() const { return *f_; }
    const std::vector<RingValue>& coeffs() const { return coeffs_; }
    const RingValue& operator[](int t) const { return coeffs_[t]; }
    int size() const { return static_cast<int>(coeffs_.size()); }

private:
    CocyclePtr f_;
    std::vector<RingValue> coeffs_;
};

// Matrix with entries in E.
struct EMatrix {
    int rows = 0, cols = 0;
    std::vector<RingValue> data;
    const RingValue& operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
    RingValue& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
};

EMatrix ematrix_zero(const DescPtr& d, int rows, int cols);
EMatrix ematrix_mul(const EMatrix& a, const EMatrix& b);
EMatrix ematrix_adjoint(const EMatrix& a);
double ematrix_distance(const EMatrix& a, const EMatrix& b);
// Complex block flattening of every entry.
Eigen::MatrixXcd ematrix_flatten(const EMatrix& a, const std::vector<cplx>* point = nullptr);

AlgebraElement alg_zero(const CocyclePtr& f);
AlgebraElement generator(const CocyclePtr& f, int t);
AlgebraElement embed_scalar(const CocyclePtr& f, const RingValue& x, bool require_central = true);
AlgebraElement alg_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement alg_sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement alg_scale(const AlgebraElement& x, cplx c);
// x * X for x in E (left action of the embedded scalar).
AlgebraElement alg_left(const RingValue& x, const AlgebraElement& X);
AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement alg_star(const AlgebraElement& x);
double alg_distance(const AlgebraElement& x, const AlgebraElement& y);

RingValue coefficient(const AlgebraElement& x, int s, int t);
EMatrix regular_matrix(const AlgebraElement& x);
Eigen::MatrixXcd regular_matrix_flat(const AlgebraElement& x, const std::vector<cplx>* point = nullptr);
// Flattened regular matrix, one line per row, columns as re,im pairs.
std::string regular_matrix_csv(const AlgebraElement& x, const std::vector<cplx>* point = nullptr);
double alg_norm(const AlgebraElement& x, int grid = kDefaultGrid);
// Norm of the coefficient family, sqrt(||sum_t X_t^* X_t||).
double coefficient_norm(const AlgebraElement& x, int grid = kDefaultGrid);

// (X^*X)_1, checked against sum_t X_t^* X_t.
RingValue coefficient_positivity(const AlgebraElement& x, double tol = kExactTol);

bool is_projection(const AlgebraElement& x, double tol = kExactTol);

struct ProjectionPair {
    AlgebraElement plus, minus;
    bool constraint_holds = false;  // alpha^2 = tilde(t)
    bool plus_is_projection = false, minus_is_projection = false;
    double constraint_residual = 0.0;
};
ProjectionPair projection_pair(const CocyclePtr& f, int t, const RingValue& alpha, double tol = kExactTol);

struct CenterReport {
    bool criterion = false;    // coefficient conditions
    bool commutation = false;  // commutes with all V_t and embedded E
    bool agree() const { return criterion == commutation; }
};
CenterReport center_check(const AlgebraElement& x, double tol = kExactTol);

RingValue trace_functional(const AlgebraElement& x);

// Restriction of an element supported on a subgroup to S(f|SxS).
AlgebraElement restrict_to_subgroup(const AlgebraElement& x, const std::vector<int>& subgroup,
                                    std::vector<int>* index = nullptr, double tol = kExactTol);
// Image of an element of the restricted algebra in the ambient algebra.
AlgebraElement extend_from_subgroup(const AlgebraElement& y, const CocyclePtr& ambient, const std::vector<int>& index);

}  // namespace twalg
