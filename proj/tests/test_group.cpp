#include <gtest/gtest.h>

#include "twalg/group.hpp"

using namespace twalg;

TEST(Cyclic, MatchesModularArithmetic) {
    for (int n = 1; n <= 12; ++n) {
        auto g = make_cyclic(n);
        ASSERT_EQ(g->order(), n);
        for (int a = 0; a < n; ++a) {
            EXPECT_EQ(g->inv(a), (n - a) % n);
            EXPECT_EQ(g->label(a), std::to_string(a));
            for (int b = 0; b < n; ++b) EXPECT_EQ(g->mul(a, b), (a + b) % n);
        }
        EXPECT_EQ(g->check_axioms(), "");
        EXPECT_TRUE(g->is_abelian());
    }
}

TEST(Cyclic, PowerAndOrder) {
    auto g = make_cyclic(12);
    EXPECT_EQ(g->element_order(0), 1);
    EXPECT_EQ(g->element_order(8), 3);
    EXPECT_EQ(g->element_order(5), 12);
    EXPECT_EQ(g->power(5, 3), 3);
    EXPECT_EQ(g->power(5, -1), 7);
    EXPECT_EQ(g->power(1, 1'000'000'000'001LL), 1'000'000'000'001LL % 12);
}

TEST(Cyclic, RejectsBadOrders) {
    EXPECT_THROW(make_cyclic(0), DomainError);
    EXPECT_THROW(make_cyclic(kMaxGroupOrder + 1), DomainError);
}

TEST(DirectProduct, RowMajorIndexing) {
    auto g = direct_product(*make_cyclic(2), *make_cyclic(4));
    ASSERT_EQ(g->order(), 8);
    EXPECT_EQ(g->factor_orders(), (std::vector<int>{2, 4}));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            const int i = (x / 4 + y / 4) % 2, j = (x % 4 + y % 4) % 4;
            EXPECT_EQ(g->mul(x, y), 4 * i + j);
        }
    EXPECT_EQ(g->label(6), "(1,2)");
    EXPECT_EQ(g->find_label("(0,3)"), 3);
    EXPECT_EQ(g->find_label("nope"), -1);
    EXPECT_EQ(g->check_axioms(), "");
}

TEST(DirectProduct, OrderCap) {
    auto big = make_cyclic(100);
    EXPECT_THROW(direct_product(*big, *big), DomainError);
}

TEST(Subsets, SymmetricDifference) {
    SubsetGroup s = make_subset_group({"x", "y", "z"});
    const auto& g = *s.group();
    ASSERT_EQ(g.order(), 8);
    for (int a = 0; a < 8; ++a) {
        EXPECT_EQ(g.inv(a), a);
        for (int b = 0; b < 8; ++b) EXPECT_EQ(g.mul(a, b), a ^ b);
    }
    EXPECT_EQ(g.label(0), "{}");
    EXPECT_EQ(g.label(5), "{x,z}");
    EXPECT_EQ(s.full(), 7);
    EXPECT_EQ(s.singleton(1), 2);
    EXPECT_THROW(make_subset_group({"a", "a"}), DomainError);
}

TEST(GroupTable, DetectsBrokenTables) {
    // Non-associative loop of order 3 with a valid identity row and column.
    std::vector<int> mul = {0, 1, 2, 1, 1, 0, 2, 0, 2};
    GroupTable t(3, mul, {0, 2, 1}, {"e", "p", "q"});
    EXPECT_NE(t.check_axioms(), "");
    EXPECT_THROW(GroupTable(2, {0, 1, 1}, {0, 1}, {"a", "b"}), DomainError);
    EXPECT_THROW(GroupTable(2, {0, 1, 1, 5}, {0, 1}, {"a", "b"}), DomainError);
}

TEST(Subgroup, ExtractsAndIndexes) {
    auto g = make_cyclic(12);
    std::vector<int> index;
    auto h = make_subgroup(*g, {4, 8}, index);
    ASSERT_EQ(h->order(), 3);
    EXPECT_EQ(index[0], 0);
    EXPECT_EQ(h->check_axioms(), "");
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) EXPECT_EQ(index[h->mul(a, b)], g->mul(index[a], index[b]));
    EXPECT_THROW(make_subgroup(*g, {4}, index), DomainError);
    EXPECT_THROW(make_subgroup(*g, {3, 9}, index), DomainError);
}
