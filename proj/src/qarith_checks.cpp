#include "qgrass/qarith_checks.hpp"

#include <functional>
#include <sstream>

namespace qgrass
{

namespace
{

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

// runs body over a family; the first counterexample becomes the witness
struct sweep {
    relation_report &rep;

    void run(const std::string &name, const std::function<void(std::function<bool(bool, const std::string &)>)> &body,
             bool diagnostic = false)
    {
        check_result c{name, true, ""};
        body([&](bool ok, const std::string &where) {
            if (!ok && c.pass) {
                c.pass = false;
                c.witness = where;
            }
            return c.pass;
        });
        if (diagnostic) {
            rep.add_diagnostic(std::move(c));
        } else {
            rep.add(std::move(c));
        }
    }
};

std::string at(int s, int r)
{
    return "s = " + std::to_string(s) + ", r = " + std::to_string(r);
}

} // namespace

relation_report qarith_property_sweep(field f, int n_max)
{
    relation_report rep;
    rep.suite = "q-combinatorics";
    rep.params = {{"field", describe(f)}, {"n_max", std::to_string(n_max)}};
    sweep sw{rep};
    const scalar_q zero(f, 0), one(f, 1);

    sw.run("Pascal: [n,r] = q^{r-n}[n-1,r-1] + q^r[n-1,r]", [&](auto check) {
        for (int n = 1; n <= n_max; ++n) {
            for (int r = 0; r <= n; ++r) {
                const scalar_q rhs = q_binom(n - 1, r - 1, f).times_q_power(r - n) + q_binom(n - 1, r, f).times_q_power(r);
                if (!check(q_binom(n, r, f) == rhs, at(n, r))) {
                    return;
                }
            }
        }
    });
    sw.run("[s,r] = [s]!/([r]![s-r]!) for 0 <= r <= s", [&](auto check) {
        for (int s = 0; s <= n_max; ++s) {
            for (int r = 0; r <= s; ++r) {
                const scalar_q den = q_factorial(r, f) * q_factorial(s - r, f);
                if (den.is_zero()) {
                    continue; // factorial form undefined at a root of unity
                }
                if (!check(q_binom(s, r, f) == q_factorial(s, f) / den, at(s, r))) {
                    return;
                }
            }
        }
    });
    sw.run("q_int(-n) = -q_int(n)", [&](auto check) {
        for (int n = 0; n <= n_max; ++n) {
            if (!check(q_int(-n, f) == -q_int(n, f), "n = " + std::to_string(n))) {
                return;
            }
        }
    });
    sw.run("[s,r] = 0 for r < 0", [&](auto check) {
        for (int s = -n_max; s <= n_max; ++s) {
            for (int r = -3; r < 0; ++r) {
                if (!check(q_binom(s, r, f).is_zero(), at(s, r))) {
                    return;
                }
            }
        }
    });
    sw.run("[s,r] = 0 for 0 <= s < r", [&](auto check) {
        for (int r = 1; r <= n_max; ++r) {
            for (int s = 0; s < r; ++s) {
                if (!check(q_binom(s, r, f).is_zero(), at(s, r))) {
                    return;
                }
            }
        }
    });
    sw.run(
        "[s,r] = 0 for 0 <= s <= r (as printed)",
        [&](auto check) {
            for (int r = 0; r <= n_max; ++r) {
                for (int s = 0; s <= r; ++s) {
                    if (!check(q_binom(s, r, f).is_zero(), at(s, r))) {
                        return;
                    }
                }
            }
        },
        true);
    sw.run("[s,r] = (-1)^r [-s+r-1, r] for s < 0", [&](auto check) {
        for (int s = -n_max; s < 0; ++s) {
            for (int r = 0; r <= n_max; ++r) {
                const scalar_q rhs = q_binom(-s + r - 1, r, f) * scalar_q(f, r % 2 == 0 ? 1 : -1);
                if (!check(q_binom(s, r, f) == rhs, at(s, r))) {
                    return;
                }
            }
        }
    });
    sw.run("Laurent forms invariant under v -> v^-1", [&](auto check) {
        for (int s = -n_max; s <= n_max; ++s) {
            for (int r = 0; r <= n_max; ++r) {
                const laurent_poly &p = q_binom_poly(s, r);
                if (!check(p.inverted_variable() == p, at(s, r))) {
                    return;
                }
            }
        }
    });

    const char_profile cp = char_of(f);
    sw.run("char(q) equals the least ell with [ell] = 0", [&](auto check) {
        int scan = 0;
        if (!f->generic()) {
            for (int k = 1; k <= 2 * f->d; ++k) {
                if (q_int(k, f).is_zero()) {
                    scan = k;
                    break;
                }
            }
        } else {
            for (int k = 1; k <= 4 * n_max; ++k) {
                if (q_int(k, f).is_zero()) {
                    scan = k;
                    break;
                }
            }
        }
        check(scan == cp.ell, "char_of = " + std::to_string(cp.ell) + ", scan = " + std::to_string(scan));
    });

    if (cp.ell >= 3) {
        const int ell = cp.ell;
        const bool odd = cp.parity == q_parity::odd_root;
        sw.run("[s,r] = sign * [s0,r0] * C(s1,r1) for 0 <= r <= s <= 3 ell", [&](auto check) {
            for (int s = 0; s <= 3 * ell; ++s) {
                for (int r = 0; r <= s; ++r) {
                    const int s0 = s % ell, s1 = s / ell, r0 = r % ell, r1 = r / ell;
                    int sign = 1;
                    if (!odd) {
                        const long long e = (static_cast<long long>(s1) + 1) * r1 * ell + s0 * r1 - r0 * s1;
                        sign = (e % 2 == 0) ? 1 : -1;
                    }
                    const scalar_q rhs = q_binom(s0, r0, f) * scalar_q(f, sign * binom(s1, r1));
                    if (!check(q_binom(s, r, f) == rhs, at(s, r))) {
                        return;
                    }
                }
            }
        });
        sw.run("[s,ell] = sign * s1 for -3 ell <= s <= 3 ell", [&](auto check) {
            for (int s = -3 * ell; s <= 3 * ell; ++s) {
                const int s1 = floor_div(s, ell), s0 = s - s1 * ell;
                int sign = 1;
                if (!odd) {
                    const long long e = (static_cast<long long>(s1) + 1) * ell + s0;
                    sign = (((e % 2) + 2) % 2 == 0) ? 1 : -1;
                }
                if (!check(q_binom(s, ell, f) == scalar_q(f, sign * s1), "s = " + std::to_string(s))) {
                    return;
                }
            }
        });
    }
    return rep;
}

} // namespace qgrass
