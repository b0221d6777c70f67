#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twalg/group.hpp"
#include "twalg/ring.hpp"

namespace twalg {

// A table T x T -> Un(E) with central values.
class SchurFunction {
public:
    SchurFunction(GroupPtr group, DescPtr desc, std::vector<RingValue> table);

    const GroupPtr& group() const { return group_; }
    const GroupTable& G() const { return *group_; }
    const DescPtr& desc() const { return desc_; }
    int order() const { return group_->order(); }
    const RingValue& operator()(int s, int t) const { return table_[static_cast<size_t>(s) * order() + t]; }
    const std::vector<RingValue>& table() const { return table_; }
    void set(int s, int t, RingValue v);

private:
    GroupPtr group_;
    DescPtr desc_;
    std::vector<RingValue> table_;
};

using CocyclePtr = std::shared_ptr<const SchurFunction>;

struct Violation {
    std::string kind;  // "unit", "unitary", "central", "cocycle", "normalized", "inverse-symmetry"
    std::vector<int> elements;
    double residual = 0.0;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const SchurFunction& f, double tol = kExactTol, int grid = kDefaultGrid);
std::string describe(const Violation& v, const GroupTable& g);

// Normalized family lambda: T -> Un(E) with lambda(1) = 1.
struct Lambda {
    GroupPtr group;
    DescPtr desc;
    std::vector<RingValue> values;
};

SchurFunction trivial_cocycle(GroupPtr g, DescPtr d);
RingValue tilde(const SchurFunction& f, int t);
SchurFunction hat(const SchurFunction& f);
SchurFunction cocycle_mul(const SchurFunction& f, const SchurFunction& g);
SchurFunction cocycle_inverse(const SchurFunction& f);
SchurFunction coboundary(const Lambda& lambda);
Lambda lambda_mul(const Lambda& a, const Lambda& b);
Lambda lambda_hat(const Lambda& a);
bool cocycles_equal(const SchurFunction& f, const SchurFunction& g, double tol);

// Closed-form product for f(t^m, t^n) with m >= 0; throws if it disagrees
// with the table beyond tol.
RingValue cyclic_power_value(const SchurFunction& f, int t, long long m, long long n, double tol = kExactTol);

// Cocycle on the integer window [-N,N]; entries with |m+n| > N are unused.
struct ZWindow {
    int N = 0;
    DescPtr desc;
    std::vector<RingValue> values;  // (2N+1)^2, row m, column n
    const RingValue& at(int m, int n) const {
        return values[static_cast<size_t>(m + N) * (2 * N + 1) + (n + N)];
    }
};

struct ZLambda {
    int N = 0;
    std::vector<RingValue> values;  // 2N+1 entries for -N..N
    const RingValue& at(int n) const { return values[static_cast<size_t>(n + N)]; }
};

ZWindow z_window_from(int N, const DescPtr& d, const std::function<RingValue(int, int)>& f);
ZWindow z_coboundary_window(const ZLambda& lambda, const DescPtr& d);
ZLambda z_coboundary_witness(const ZWindow& f);
// Largest residual of delta(lambda) against f over |m|,|n|,|m+n| <= N.
double z_window_residual(const ZWindow& f, const ZLambda& lambda);

SchurFunction make_f_alpha(int n, const std::vector<RingValue>& alpha, const DescPtr& d, double tol = kExactTol);

// gamma with gamma^n = u for a central unitary u, or nullopt when Un(E)
// has no such root (real sign obstruction, Laurent winding).
std::optional<RingValue> nth_root(const RingValue& u, int n, double tol = kExactTol);
int winding(const RingValue& u, int var);
bool is_unimodular_monomial(const RingValue& u, double tol = kExactTol);

// lambda with f_alpha = f_beta * delta(lambda), or nullopt.
std::optional<Lambda> equivalent_cyclic(const std::vector<RingValue>& alpha, const std::vector<RingValue>& beta,
                                        const DescPtr& d, double tol = kExactTol);

SchurFunction tensor_cocycle(const SchurFunction& f, const SchurFunction& g);
// g(s,t) = f(s,t) * I_k over k x k matrices.
SchurFunction amplify(const SchurFunction& f, int k);

// Z/2 x Z/2 with a=(1,0), b=(0,1), c=(1,1) in row-major product indexing.
struct KleinLabels {
    static constexpr int a = 2, b = 1, c = 3;
};
SchurFunction klein_table(const RingValue& alpha, const RingValue& beta, const RingValue& gamma,
                          const RingValue& eps);

}  // namespace twalg
