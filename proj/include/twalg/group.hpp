#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "twalg/error.hpp"

namespace twalg {

inline constexpr int kMaxGroupOrder = 4096;

// Finite group on dense indices 0..order-1 with 0 as the identity.
class GroupTable {
public:
    GroupTable(int order, std::vector<int> mul, std::vector<int> inv,
               std::vector<std::string> labels);

    int order() const { return order_; }
    int identity() const { return 0; }
    int mul(int s, int t) const { return mul_[static_cast<size_t>(s) * order_ + t]; }
    int inv(int t) const { return inv_[t]; }
    const std::string& label(int t) const { return labels_[t]; }
    const std::vector<std::string>& labels() const { return labels_; }

    int power(int t, long long k) const;
    int element_order(int t) const;
    // -1 if absent.
    int find_label(const std::string& label) const;

    // Factor orders for direct products, row-major (first factor major).
    const std::vector<int>& factor_orders() const { return factors_; }
    void set_factor_orders(std::vector<int> f) { factors_ = std::move(f); }

    // Exhaustive associativity/unit/inverse checks; returns a description of
    // the first failure or an empty string.
    std::string check_axioms() const;

    bool is_abelian() const;

private:
    int order_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::vector<int> factors_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

GroupPtr make_cyclic(int n);
GroupPtr direct_product(const GroupTable& g, const GroupTable& h);

// Subsets of an ordered label list under symmetric difference.  Element index
// equals the bitmask; bit i stands for labels[i], and the list order is the
// total order used by the Clifford sign.
class SubsetGroup {
public:
    explicit SubsetGroup(std::vector<std::string> labels);

    const GroupPtr& group() const { return group_; }
    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& base() const { return labels_; }
    int singleton(int i) const { return 1 << i; }
    int full() const { return (1 << labels_.size()) - 1; }

private:
    std::vector<std::string> labels_;
    GroupPtr group_;
};

SubsetGroup make_subset_group(std::vector<std::string> labels);
std::string subset_label(std::uint32_t mask, const std::vector<std::string>& labels);

// Elements listed must form a subgroup; returns the table and, via `index`,
// the ambient index of every subgroup element (identity first).
GroupPtr make_subgroup(const GroupTable& g, const std::vector<int>& elements,
                       std::vector<int>& index);

}  // namespace twalg
