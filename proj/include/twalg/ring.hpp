#pragma once

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "twalg/error.hpp"

namespace twalg {

using cplx = std::complex<double>;
using Exponent = std::vector<int>;
using LaurentTerms = std::map<Exponent, cplx>;
using Quat = std::array<double, 4>;

enum class Field { Real, Complex };
enum class RingKind { ComplexScalar, RealScalar, Laurent, Matrix, Quaternion, Product };

struct RingDescriptor;
using DescPtr = std::shared_ptr<const RingDescriptor>;

struct RingDescriptor {
    RingKind kind = RingKind::ComplexScalar;
    int m = 0;  // Laurent variables
    int k = 0;  // matrix size
    Field field = Field::Complex;
    std::vector<DescPtr> parts;

    bool is_real() const;
    std::string name() const;
};

bool same_ring(const DescPtr& a, const DescPtr& b);

namespace desc {
DescPtr complex_scalar();
DescPtr real_scalar();
DescPtr laurent(int m, Field field = Field::Complex);
DescPtr matrix(int k, Field field = Field::Complex);
DescPtr quaternion();
DescPtr product(std::vector<DescPtr> parts);
}  // namespace desc

class RingValue {
public:
    using Payload = std::variant<cplx, LaurentTerms, Eigen::MatrixXcd, Quat, std::vector<RingValue>>;

    RingValue() = default;
    RingValue(DescPtr d, Payload p);

    const DescPtr& desc() const { return desc_; }
    RingKind kind() const { return desc_->kind; }

    const cplx& scalar() const { return std::get<cplx>(data_); }
    const LaurentTerms& terms() const { return std::get<LaurentTerms>(data_); }
    const Eigen::MatrixXcd& matrix() const { return std::get<Eigen::MatrixXcd>(data_); }
    const Quat& quat() const { return std::get<Quat>(data_); }
    const std::vector<RingValue>& parts() const { return std::get<std::vector<RingValue>>(data_); }
    const Payload& payload() const { return data_; }

private:
    DescPtr desc_;
    Payload data_;
};

// Constructors.
RingValue ring_zero(const DescPtr& d);
RingValue ring_unit(const DescPtr& d);
// c times the unit; real kinds reject non-real c.
RingValue ring_central(const DescPtr& d, cplx c);
RingValue complex_value(cplx c);
RingValue real_value(double x);
RingValue laurent_value(const DescPtr& d, LaurentTerms terms);
RingValue laurent_monomial(const DescPtr& d, const Exponent& e, cplx c = 1.0);
RingValue matrix_value(const DescPtr& d, Eigen::MatrixXcd m);
RingValue quaternion_value(double a, double b, double c, double d);
RingValue product_value(const DescPtr& d, std::vector<RingValue> parts);

// Algebra operations; mismatched descriptors throw DomainError.
RingValue ring_add(const RingValue& a, const RingValue& b);
RingValue ring_sub(const RingValue& a, const RingValue& b);
RingValue ring_neg(const RingValue& a);
RingValue ring_mul(const RingValue& a, const RingValue& b);
RingValue ring_star(const RingValue& a);
// Multiplication by a field scalar.
RingValue ring_scale(const RingValue& a, cplx c);

inline RingValue operator+(const RingValue& a, const RingValue& b) { return ring_add(a, b); }
inline RingValue operator-(const RingValue& a, const RingValue& b) { return ring_sub(a, b); }
inline RingValue operator-(const RingValue& a) { return ring_neg(a); }
inline RingValue operator*(const RingValue& a, const RingValue& b) { return ring_mul(a, b); }

// Exact upper bound for the norm of a-b: Frobenius for matrices, sum of
// coefficient moduli for Laurent values.  Used for all residuals.
double ring_distance(const RingValue& a, const RingValue& b);
double ring_size(const RingValue& a);
bool ring_approx_equal(const RingValue& a, const RingValue& b, double tol);
bool ring_is_zero(const RingValue& a, double tol);

double ring_norm(const RingValue& a, int grid = kDefaultGrid);
bool is_unitary(const RingValue& a, double tol, int grid = kDefaultGrid);
bool is_central(const RingValue& a, double tol);
// Field scalar c with a = c*1 when a is central; throws otherwise.
cplx central_scalar(const RingValue& a, double tol = kExactTol);

// Complex block representation; Laurent values need a torus point.
int complex_block_size(const DescPtr& d);
Eigen::MatrixXcd to_complex_matrix(const RingValue& a, const std::vector<cplx>* point = nullptr);
cplx evaluate_laurent(const RingValue& a, const std::vector<cplx>& point);
std::vector<std::vector<cplx>> torus_grid(int m, int grid);

// Real-linear structure.  Laurent kinds use the exponent window [-window,window]^m.
bool finite_dimensional(const DescPtr& d);
int real_dim(const DescPtr& d);
std::vector<RingValue> real_basis(const DescPtr& d, int window = 0);
using FlatKey = std::vector<int>;
void flatten_into(const RingValue& a, FlatKey& prefix, std::vector<std::pair<FlatKey, double>>& out);

// Promotions between kinds.
RingValue promote_to_complex(const RingValue& a);
RingValue scalar_to_matrix(const RingValue& a, int k);

// Kronecker-style tensor of values with combinable descriptors.
DescPtr tensor_descriptor(const DescPtr& a, const DescPtr& b);
RingValue ring_tensor(const RingValue& a, const RingValue& b, const DescPtr& target);

std::string format_value(const RingValue& a);
std::string format_scalar(cplx c);

}  // namespace twalg
