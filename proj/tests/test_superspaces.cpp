#include "helpers.hpp"
#include "qgrass/superspaces.hpp"

#include <doctest.h>

using namespace qgrass;
using namespace qtest;

namespace
{

super_vector mono(const space_spec &s, std::vector<int> e)
{
    return super_vector::monomial(s, multi_index(s.m(), std::move(e)));
}

// independent count: tuples of the right degree with per-position caps
long long brute_count(int m, int n, int t, int even_cap, int odd_cap, bool dual)
{
    const int N = m + n;
    std::vector<int> caps(N);
    for (int p = 0; p < N; ++p) {
        const bool exterior = dual ? p < m : p >= m;
        caps[p] = exterior ? 1 : (dual ? odd_cap : even_cap);
    }
    long long count = 0;
    std::vector<int> a(N, 0);
    std::function<void(int, int)> rec = [&](int p, int left) {
        if (p == N) {
            count += left == 0;
            return;
        }
        const int hi = caps[p] < 0 ? left : std::min(left, caps[p]);
        for (int k = 0; k <= hi; ++k) {
            rec(p + 1, left - k);
        }
    };
    rec(0, t);
    return count;
}

} // namespace

TEST_CASE("multiplication examples")
{
    const field g = generic_field();
    const space_spec om(family::omega, 1, 2, g);
    CHECK(multiply(mono(om, {1, 0, 0}), mono(om, {1, 0, 0})) == mono(om, {2, 0, 0}).scaled(q_int(2, g)));
    CHECK(multiply(mono(om, {0, 1, 0}), mono(om, {1, 0, 0})) == mono(om, {1, 1, 0}).scaled(scalar_q::q_power(g, 1)));
    CHECK(multiply(mono(om, {0, 0, 1}), mono(om, {0, 1, 0})) ==
          mono(om, {0, 1, 1}).scaled(scalar_q::q_power(g, 1, -1)));
    CHECK(multiply(mono(om, {0, 1, 0}), mono(om, {0, 1, 0})).is_zero());

    const space_spec aff(family::affine, 1, 2, g);
    CHECK(multiply(mono(aff, {1, 0, 0}), mono(aff, {1, 0, 0})) == mono(aff, {2, 0, 0}));
    CHECK(multiply(mono(aff, {0, 0, 1}), mono(aff, {0, 1, 0})) ==
          mono(aff, {0, 1, 1}).scaled(scalar_q::q_power(g, 1, -1)));

    const space_spec rs(family::omega_restricted, 1, 1, root_field(3));
    CHECK(multiply(mono(rs, {2, 0}), mono(rs, {1, 0})).is_zero());
}

TEST_CASE("parity map")
{
    const space_spec om(family::omega, 1, 2, generic_field());
    CHECK(parity_map(mono(om, {3, 0, 0})) == mono(om, {3, 0, 0}));
    CHECK(parity_map(mono(om, {3, 1, 0})) == mono(om, {3, 1, 0}).scaled(scalar_q(om.ctx, -1)));
    CHECK(parity_map(mono(om, {3, 1, 1})) == mono(om, {3, 1, 1}));
    const space_spec du(family::dual, 1, 2, generic_field());
    CHECK(parity_map(mono(du, {1, 2, 1})) == mono(du, {1, 2, 1}).scaled(scalar_q(du.ctx, -1)));
    CHECK(parity_map(mono(du, {1, 2, 0})) == mono(du, {1, 2, 0}));
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        super_vector u(om);
        for (const auto &a : basis_of_degree(om, 3)) {
            u.add_term(a, random_scalar(rng, om.ctx));
        }
        CHECK(parity_map(parity_map(u)) == u);
    }
}

TEST_CASE("basis enumeration")
{
    CHECK(basis_of_degree(space_spec(family::omega, 2, 1, generic_field()), 2).size() == 5);
    const auto r = basis_of_degree(space_spec(family::omega_restricted, 1, 1, root_field(3)), 2);
    REQUIRE(r.size() == 2);
    CHECK(r[0].to_string() == "(1 | 1)");
    CHECK(r[1].to_string() == "(2 | 0)");
    for (auto f : {family::affine, family::omega, family::dual}) {
        const space_spec s(f, 2, 2, generic_field());
        const auto b = basis_of_degree(s, 0);
        REQUIRE(b.size() == 1);
        CHECK(b[0] == multi_index::zero(s.sh));
    }
    const space_spec top(family::omega_restricted, 2, 1, root_field(3));
    CHECK(top.top_degree() == 5);
    CHECK(basis_of_degree(top, 6).empty());
}

TEST_CASE("basis sizes against a brute-force count")
{
    for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 3; ++n) {
            if (m + n == 0) {
                continue;
            }
            for (int t = 0; t <= 6; ++t) {
                CHECK(basis_of_degree(space_spec(family::omega, m, n, generic_field()), t).size() ==
                      brute_count(m, n, t, -1, -1, false));
                CHECK(basis_of_degree(space_spec(family::affine, m, n, generic_field()), t).size() ==
                      brute_count(m, n, t, -1, -1, false));
                CHECK(basis_of_degree(space_spec(family::dual, m, n, generic_field()), t).size() ==
                      brute_count(m, n, t, -1, -1, true));
            }
            for (int d : {3, 5, 8}) {
                const int ell = char_of(root_field(d)).ell;
                const space_spec ro(family::omega_restricted, m, n, root_field(d));
                const space_spec rd(family::dual_restricted, m, n, root_field(d));
                for (int t = 0; t <= ro.top_degree() + 1; ++t) {
                    CHECK(basis_of_degree(ro, t).size() == brute_count(m, n, t, ell - 1, -1, false));
                }
                for (int t = 0; t <= rd.top_degree() + 1; ++t) {
                    CHECK(basis_of_degree(rd, t).size() == brute_count(m, n, t, -1, ell - 1, true));
                }
            }
        }
    }
}

TEST_CASE("associativity, unit and grading on monomial triples")
{
    std::vector<space_spec> spaces;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        for (auto f : {family::affine, family::omega, family::dual}) {
            spaces.emplace_back(f, m, n, generic_field());
        }
        spaces.emplace_back(family::omega_restricted, m, n, root_field(3));
        spaces.emplace_back(family::dual_restricted, m, n, root_field(3));
    }
    for (const auto &s : spaces) {
        INFO(s.describe());
        std::vector<multi_index> low;
        for (int t = 0; t <= 4; ++t) {
            for (const auto &a : basis_of_degree(s, t)) {
                low.push_back(a);
            }
        }
        const super_vector one = super_vector::monomial(s, multi_index::zero(s.sh));
        bool assoc = true, unit = true, graded = true;
        for (const auto &a : low) {
            const super_vector u = super_vector::monomial(s, a);
            unit = unit && multiply(one, u) == u && multiply(u, one) == u;
            for (const auto &b : low) {
                if (a.degree() + b.degree() > 4) {
                    continue;
                }
                const super_vector v = super_vector::monomial(s, b);
                const super_vector uv = multiply(u, v);
                graded = graded && (uv.is_zero() || uv.homogeneous_degree() == a.degree() + b.degree());
                for (const auto &c : low) {
                    if (a.degree() + b.degree() + c.degree() > 4) {
                        continue;
                    }
                    const super_vector w = super_vector::monomial(s, c);
                    assoc = assoc && multiply(uv, w) == multiply(u, multiply(v, w));
                }
            }
        }
        CHECK(assoc);
        CHECK(unit);
        CHECK(graded);
    }
}

TEST_CASE("super-commutation through theta on Omega and affine")
{
    for (auto [f, ctx] : {std::pair{family::omega, generic_field()}, std::pair{family::affine, generic_field()},
                          std::pair{family::omega_restricted, root_field(3)}}) {
        const space_spec s(f, 2, 2, ctx);
        INFO(s.describe());
        bool ok = true;
        for (int da = 0; da <= 2; ++da) {
            for (int db = 0; db <= 2; ++db) {
                for (const auto &a : basis_of_degree(s, da)) {
                    for (const auto &b : basis_of_degree(s, db)) {
                        const super_vector u = super_vector::monomial(s, a), v = super_vector::monomial(s, b);
                        ok = ok && multiply(u, v) == multiply(v, u).scaled(theta(a, b, ctx));
                    }
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("space validation")
{
    CHECK_THROWS_AS(space_spec(family::omega_restricted, 1, 1, generic_field()), std::invalid_argument);
    CHECK_THROWS_AS(space_spec(family::omega, 0, 0, generic_field()), std::invalid_argument);
    CHECK_THROWS_AS(space_spec(family::dual_restricted, 1, 1, root_field(4)), std::invalid_argument);
    const space_spec a(family::omega, 1, 1, generic_field()), b(family::dual, 1, 1, generic_field());
    CHECK_THROWS(multiply(super_vector::monomial(a, multi_index::zero(a.sh)),
                          super_vector::monomial(b, multi_index::zero(b.sh))));
}
