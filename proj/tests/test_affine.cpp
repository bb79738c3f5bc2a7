#include "helpers.hpp"
#include "qgrass/affine.hpp"
#include "qgrass/weyl.hpp"

#include <doctest.h>

using namespace qgrass;
using namespace qtest;

TEST_CASE("affine relations match the derivation relations")
{
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 0}, {0, 3}}) {
        const relation_report r = affine_correspondence(m, n, 4);
        INFO(m, "|", n, "\n", failures(r));
        CHECK(r.all_pass());
    }
    const relation_report root = affine_correspondence(2, 1, 3, root_field(5));
    CHECK(root.all_pass());
}

TEST_CASE("affine report structure at (2,2)")
{
    const relation_report r = affine_correspondence(2, 2, 4);
    // 6 pairs x 3 checks, 2 odd squares x 2, 5 degrees x 2
    CHECK(r.relations.size() == 18 + 4 + 10);
    CHECK(r.find("v2 v1 = q v1 v2") != nullptr);
    CHECK(r.find("v4 v3 = -q v3 v4") != nullptr);
    CHECK(r.find("v3^2 = 0") != nullptr);
}

TEST_CASE("the reversed coefficient is rejected")
{
    const field g = generic_field();
    const space_spec a(family::affine, 2, 0, g);
    const space_spec om(family::omega, 2, 0, g);
    const auto v1 = super_vector::monomial(a, multi_index(2, {1, 0}));
    const auto v2 = super_vector::monomial(a, multi_index(2, {0, 1}));
    const scalar_q qi = scalar_q::q_power(g, -1);
    CHECK_FALSE(multiply(v2, v1) == multiply(v1, v2).scaled(qi));
    const auto d12 = operator_expr::of(om, {atom::partial(2), atom::partial(1)});
    const auto d21 = operator_expr::of(om, {atom::partial(1), atom::partial(2)});
    CHECK_FALSE(operators_equal(d12, d21.scaled(qi), 3).equal);
    CHECK(operators_equal(d12, d21.scaled(scalar_q::q_power(g, 1)), 3).equal);
}
