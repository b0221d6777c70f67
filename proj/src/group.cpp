#include "twalg/group.hpp"

#include <algorithm>
#include <set>

namespace twalg {

GroupTable::GroupTable(int order, std::vector<int> mul, std::vector<int> inv,
                       std::vector<std::string> labels)
    : order_(order), mul_(std::move(mul)), inv_(std::move(inv)), labels_(std::move(labels)) {
    if (order_ < 1) throw DomainError("group order must be positive");
    if (order_ > kMaxGroupOrder)
        throw DomainError("group order " + std::to_string(order_) + " exceeds cap " +
                          std::to_string(kMaxGroupOrder));
    const size_t n = static_cast<size_t>(order_);
    if (mul_.size() != n * n || inv_.size() != n || labels_.size() != n)
        throw DomainError("group table has inconsistent sizes");
    for (int v : mul_)
        if (v < 0 || v >= order_) throw DomainError("group table entry out of range");
}

int GroupTable::power(int t, long long k) const {
    if (k < 0) {
        t = inv(t);
        k = -k;
    }
    int r = identity();
    int base = t;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

int GroupTable::element_order(int t) const {
    int k = 1;
    for (int x = t; x != identity(); x = mul(x, t)) ++k;
    return k;
}

int GroupTable::find_label(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

std::string GroupTable::check_axioms() const {
    for (int t = 0; t < order_; ++t) {
        if (mul(0, t) != t || mul(t, 0) != t) return "identity fails at " + label(t);
        if (mul(t, inv(t)) != 0 || mul(inv(t), t) != 0) return "inverse fails at " + label(t);
    }
    for (int r = 0; r < order_; ++r)
        for (int s = 0; s < order_; ++s) {
            const int rs = mul(r, s);
            for (int t = 0; t < order_; ++t)
                if (mul(rs, t) != mul(r, mul(s, t)))
                    return "associativity fails at (" + label(r) + "," + label(s) + "," +
                           label(t) + ")";
        }
    return {};
}

bool GroupTable::is_abelian() const {
    for (int s = 0; s < order_; ++s)
        for (int t = s + 1; t < order_; ++t)
            if (mul(s, t) != mul(t, s)) return false;
    return true;
}

GroupPtr make_cyclic(int n) {
    if (n < 1) throw DomainError("cyclic group needs n >= 1");
    if (n > kMaxGroupOrder) throw DomainError("cyclic group order exceeds cap");
    std::vector<int> mul(static_cast<size_t>(n) * n), inv(n);
    std::vector<std::string> labels(n);
    for (int p = 0; p < n; ++p) {
        inv[p] = (n - p) % n;
        labels[p] = std::to_string(p);
        for (int q = 0; q < n; ++q) mul[static_cast<size_t>(p) * n + q] = (p + q) % n;
    }
    return std::make_shared<GroupTable>(n, std::move(mul), std::move(inv), std::move(labels));
}

GroupPtr direct_product(const GroupTable& g, const GroupTable& h) {
    const long long order = static_cast<long long>(g.order()) * h.order();
    if (order > kMaxGroupOrder) throw DomainError("direct product order exceeds cap");
    const int n = static_cast<int>(order), m = h.order();
    std::vector<int> mul(static_cast<size_t>(n) * n), inv(n);
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) {
        const int g1 = x / m, h1 = x % m;
        inv[x] = g.inv(g1) * m + h.inv(h1);
        labels[x] = "(" + g.label(g1) + "," + h.label(h1) + ")";
        for (int y = 0; y < n; ++y)
            mul[static_cast<size_t>(x) * n + y] = g.mul(g1, y / m) * m + h.mul(h1, y % m);
    }
    auto out = std::make_shared<GroupTable>(n, std::move(mul), std::move(inv), std::move(labels));
    out->set_factor_orders({g.order(), h.order()});
    return out;
}

std::string subset_label(std::uint32_t mask, const std::vector<std::string>& labels) {
    std::string s = "{";
    bool first = true;
    for (size_t i = 0; i < labels.size(); ++i)
        if (mask & (1u << i)) {
            if (!first) s += ",";
            s += labels[i];
            first = false;
        }
    return s + "}";
}

SubsetGroup::SubsetGroup(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw DomainError("duplicate labels in subset group");
    if (labels_.size() > 12) throw DomainError("subset group base exceeds cap");
    const int n = 1 << labels_.size();
    std::vector<int> mul(static_cast<size_t>(n) * n), inv(n);
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        inv[a] = a;
        names[a] = subset_label(static_cast<std::uint32_t>(a), labels_);
        for (int b = 0; b < n; ++b) mul[static_cast<size_t>(a) * n + b] = a ^ b;
    }
    group_ = std::make_shared<GroupTable>(n, std::move(mul), std::move(inv), std::move(names));
}

SubsetGroup make_subset_group(std::vector<std::string> labels) {
    return SubsetGroup(std::move(labels));
}

GroupPtr make_subgroup(const GroupTable& g, const std::vector<int>& elements,
                       std::vector<int>& index) {
    std::vector<int> elems;
    elems.push_back(g.identity());
    for (int e : elements) {
        if (e < 0 || e >= g.order()) throw DomainError("subgroup element out of range");
        if (std::find(elems.begin(), elems.end(), e) == elems.end()) elems.push_back(e);
    }
    const int n = static_cast<int>(elems.size());
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < n; ++i) local[elems[i]] = i;
    std::vector<int> mul(static_cast<size_t>(n) * n), inv(n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = g.label(elems[i]);
        const int vi = local[g.inv(elems[i])];
        if (vi < 0) throw DomainError("element list is not closed under inverses");
        inv[i] = vi;
        for (int j = 0; j < n; ++j) {
            const int v = local[g.mul(elems[i], elems[j])];
            if (v < 0) throw DomainError("element list is not closed under multiplication");
            mul[static_cast<size_t>(i) * n + j] = v;
        }
    }
    index = elems;
    return std::make_shared<GroupTable>(n, std::move(mul), std::move(inv), std::move(labels));
}

}  // namespace twalg
