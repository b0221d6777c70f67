#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twalg/algebra.hpp"

namespace twalg {

enum class ModelKind { Twisted, Ring, Matrix, DirectSum, Complexify, QuatTensor };

struct AlgebraModel;
using ModelPtr = std::shared_ptr<const AlgebraModel>;

// Concrete E-algebras used as targets of morphisms.  Every model is a free
// left E-module; its elements are flat arrays of E-valued slots.
struct AlgebraModel {
    ModelKind kind = ModelKind::Ring;
    DescPtr desc;                // E
    CocyclePtr f;                // Twisted
    int k = 0;                   // Matrix size
    std::vector<ModelPtr> parts; // DirectSum
    ModelPtr inner;              // Matrix, Complexify, QuatTensor

    int slots() const;
    std::string name() const;
};

namespace model {
ModelPtr twisted(CocyclePtr f);
ModelPtr ring(DescPtr d);
ModelPtr matrix(int k, ModelPtr inner);
ModelPtr direct_sum(std::vector<ModelPtr> parts);
ModelPtr complexify(ModelPtr inner);
ModelPtr quat_tensor(ModelPtr inner);
}  // namespace model

struct ModelElement {
    ModelPtr model;
    std::vector<RingValue> slots;
};

ModelElement model_zero(const ModelPtr& m);
ModelElement model_unit(const ModelPtr& m);
// y acting on the left of every slot; model_embed(y) = y * unit.
ModelElement model_left(const RingValue& y, const ModelElement& a);
ModelElement model_embed(const ModelPtr& m, const RingValue& y);
ModelElement model_add(const ModelElement& a, const ModelElement& b);
ModelElement model_sub(const ModelElement& a, const ModelElement& b);
ModelElement model_scale(const ModelElement& a, cplx c);
ModelElement model_mul(const ModelElement& a, const ModelElement& b);
ModelElement model_star(const ModelElement& a);
double model_distance(const ModelElement& a, const ModelElement& b);

ModelElement from_algebra(const AlgebraElement& x);
AlgebraElement to_algebra(const ModelElement& a);

// Helpers for building elements of structured models.
ModelElement matrix_element(const ModelPtr& m, const std::vector<ModelElement>& entries);  // row-major
ModelElement sum_element(const ModelPtr& m, const std::vector<ModelElement>& parts);
ModelElement complex_element(const ModelPtr& m, const ModelElement& re, const ModelElement& im);
ModelElement quat_element(const ModelPtr& m, const std::vector<ModelElement>& comps);  // 1, i, j, k
ModelElement sub_element(const ModelElement& a, int part);  // DirectSum part, matrix entry or component

// E-linear map fixed by the images of the generators V_t.
struct Morphism {
    std::string name;
    CocyclePtr source;
    ModelPtr target;
    std::vector<ModelElement> images;
    // Unit of a corner algebra P*target*P when the map is not unital in the target.
    std::optional<ModelElement> corner;
};

ModelElement apply(const Morphism& m, const AlgebraElement& x);
Morphism identity_morphism(const CocyclePtr& f);
// second o first; first must land in Twisted(second.source).
Morphism compose(const Morphism& first, const Morphism& second);
// Apply inner to every entry of a matrix-valued outer morphism and merge the
// block structure when inner lands in a matrix model as well.
Morphism compose_entrywise(const Morphism& outer, const Morphism& inner);

struct MorphismReport {
    std::string name, source, target;
    double mult_residual = 0.0, star_residual = 0.0, unit_residual = 0.0, ecomm_residual = 0.0;
    int source_dim = 0, image_rank = 0, target_dim = -1;
    bool injective = false, surjective = false;
    bool window_only = false;
    int window = 0;
    std::string surjectivity_method;  // rank, determinant, none
    double tol = kExactTol;

    bool homomorphism() const;
    bool bijective() const { return injective && surjective; }
    bool verified() const { return homomorphism() && bijective(); }
};

MorphismReport verify_morphism(const Morphism& m, double tol = kExactTol);

// Real rank of a set of model elements after flattening.
int real_rank(const std::vector<ModelElement>& elems, double rel_tol = 1e-9);
double max_exponent(const ModelElement& a);

}  // namespace twalg
