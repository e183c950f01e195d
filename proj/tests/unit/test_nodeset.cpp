#include <doctest.h>

#include "vulnet/nodeset.hpp"

using namespace vulnet;

TEST_CASE("nodeset works across word boundaries") {
    NodeSet s(130);
    CHECK(s.universe() == 130);
    CHECK(s.empty());
    CHECK(s.count() == 0);
    CHECK(s.first() == -1);
    s.set(0);
    s.set(64);
    s.set(129);
    CHECK(s.count() == 3);
    CHECK(s.test(64));
    CHECK_FALSE(s.test(63));
    s.reset(64);
    CHECK(s.count() == 2);
    CHECK(s.first() == 0);
    CHECK(s.members() == std::vector<int>{0, 129});
}

TEST_CASE("nodeset for_each visits ascending") {
    auto s = NodeSet::of(200, {5, 0, 199, 77, 64});
    std::vector<int> seen;
    s.for_each([&](int i) { seen.push_back(i); });
    CHECK(seen == std::vector<int>{0, 5, 64, 77, 199});
}

TEST_CASE("nodeset set algebra") {
    auto a = NodeSet::of(10, {1, 3, 5});
    auto b = NodeSet::of(10, {3, 4});
    CHECK((a | b).members() == std::vector<int>{1, 3, 4, 5});
    CHECK((a & b).members() == std::vector<int>{3});
    CHECK((a - b).members() == std::vector<int>{1, 5});
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(NodeSet::of(10, {0, 2})));
    CHECK(a == NodeSet::of(10, {5, 3, 1}));
    CHECK_FALSE(a == b);

    NodeSet c = a;
    c |= b;
    CHECK(c.count() == 4);
    c &= a;
    CHECK(c == a);
    c -= b;
    CHECK(c.members() == std::vector<int>{1, 5});
}

TEST_CASE("nodeset rejects bad indices and mixed universes") {
    NodeSet s(5);
    CHECK_THROWS_AS(s.set(5), contract_error);
    CHECK_THROWS_AS(s.set(-1), contract_error);
    CHECK_THROWS_AS((void)s.test(7), contract_error);
    NodeSet t(6);
    CHECK_THROWS_AS((void)(s | t), contract_error);
    CHECK_THROWS_AS((void)(s & t), contract_error);
    CHECK_THROWS_AS((void)s.intersects(t), contract_error);
}
