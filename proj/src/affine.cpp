#include "qgrass/affine.hpp"

#include "qgrass/linalg.hpp"
#include "qgrass/weyl.hpp"

#include <stdexcept>

namespace qgrass
{

namespace
{

multi_index unit_index(const shape &sh, int i)
{
    multi_index a = multi_index::zero(sh);
    a[i] = 1;
    return a;
}

// all words of length t in the letters 1..N
void words_of_length(int N, int t, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (static_cast<int>(cur.size()) == t) {
        out.push_back(cur);
        return;
    }
    for (int i = 1; i <= N; ++i) {
        cur.push_back(i);
        words_of_length(N, t, cur, out);
        cur.pop_back();
    }
}

// word w = d_{w[0]} ... d_{w[k-1]} as a functional on omega degree t
super_vector functional(const space_spec &omega, const std::vector<int> &w, const std::vector<multi_index> &basis)
{
    std::vector<atom> atoms;
    for (int i : w) {
        atoms.push_back(atom::partial(i));
    }
    const operator_expr op = operator_expr::of(omega, atoms);
    const multi_index one = multi_index::zero(omega.sh);
    super_vector f(omega);
    for (const auto &b : basis) {
        const scalar_q c = apply(op, super_vector::monomial(omega, b)).coeff(one);
        if (!c.is_zero()) {
            f.add_term(b, c);
        }
    }
    return f;
}

} // namespace

relation_report affine_correspondence(int m, int n, int t_max, field ctx)
{
    if (t_max < 0) {
        throw std::invalid_argument("affine_correspondence: t_max must be non-negative");
    }
    const space_spec aff(family::affine, m, n, ctx);
    const space_spec omega(family::omega, m, n, ctx);
    const int N = aff.sh.size();
    relation_report rep;
    rep.suite = "affine superspace vs derivation algebra";
    rep.params = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"t_max", std::to_string(t_max)},
                  {"field", describe(ctx)}};

    auto v = [&](int i) { return super_vector::monomial(aff, unit_index(aff.sh, i)); };
    auto d = [&](int i) { return operator_expr::of(omega, {atom::partial(i)}); };
    const int rel_t = std::max(t_max, 2);

    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            const bool both_odd = aff.sh.odd(i) && aff.sh.odd(j);
            const scalar_q c = scalar_q::q_power(ctx, 1, both_odd ? -1 : 1);
            const std::string cs = both_odd ? "-q" : "q";
            const std::string ij = std::to_string(i) + std::to_string(j);
            const std::string ji = std::to_string(j) + std::to_string(i);
            {
                const super_vector lhs = multiply(v(j), v(i));
                const super_vector rhs = multiply(v(i), v(j)).scaled(c);
                rep.add({"v" + std::to_string(j) + " v" + std::to_string(i) + " = " + cs + " v" + std::to_string(i) +
                             " v" + std::to_string(j),
                         lhs == rhs, lhs == rhs ? "" : lhs.to_string() + " vs " + rhs.to_string()});
            }
            {
                const equality_result r = operators_equal(d(j) * d(i), (d(i) * d(j)).scaled(c), rel_t);
                rep.add({"d" + std::to_string(j) + " d" + std::to_string(i) + " = " + cs + " d" + std::to_string(i) +
                             " d" + std::to_string(j),
                         r.equal, r.describe()});
            }
            const scalar_q th = theta(unit_index(aff.sh, j), unit_index(aff.sh, i), ctx);
            rep.add({"coefficient of relation " + ji + "/" + ij + " equals theta(e_j, e_i)", th == c,
                     th == c ? "" : th.to_string()});
        }
        if (aff.sh.odd(i)) {
            const super_vector sq = multiply(v(i), v(i));
            rep.add({"v" + std::to_string(i) + "^2 = 0", sq.is_zero(), sq.is_zero() ? "" : sq.to_string()});
            const equality_result r = operators_equal(d(i) * d(i), operator_expr(omega), rel_t);
            rep.add({"d" + std::to_string(i) + "^2 = 0", r.equal, r.describe()});
        }
    }

    for (int t = 0; t <= t_max; ++t) {
        const auto aff_basis = basis_of_degree(aff, t);
        const long long expect = static_cast<long long>(aff_basis.size());
        const auto om_basis = basis_of_degree(omega, t);

        // PBW-ordered words d_1^{a_1} ... d_N^{a_N}, one per affine basis monomial
        std::vector<super_vector> pbw;
        for (const auto &a : aff_basis) {
            std::vector<int> w;
            for (int i = 1; i <= N; ++i) {
                for (int k = 0; k < a[i]; ++k) {
                    w.push_back(i);
                }
            }
            pbw.push_back(functional(omega, w, om_basis));
        }
        const int r_pbw = exact_rank(pbw).rank;
        rep.add({"degree " + std::to_string(t) + ": rank of ordered derivation monomials = dim of affine component (" +
                     std::to_string(expect) + ")",
                 r_pbw == expect, r_pbw == expect ? "" : "rank " + std::to_string(r_pbw)});

        std::vector<std::vector<int>> words;
        std::vector<int> cur;
        words_of_length(N, t, cur, words);
        std::vector<super_vector> all;
        for (const auto &w : words) {
            all.push_back(functional(omega, w, om_basis));
        }
        const int r_all = exact_rank(all).rank;
        rep.add({"degree " + std::to_string(t) + ": rank of all derivation words = dim of affine component (" +
                     std::to_string(expect) + ")",
                 r_all == expect, r_all == expect ? "" : "rank " + std::to_string(r_all)});
    }
    return rep;
}

} // namespace qgrass
