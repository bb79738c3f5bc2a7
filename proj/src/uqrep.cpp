#include "qgrass/uqrep.hpp"

#include "qgrass/linalg.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qgrass
{

std::string generator_symbol::to_string() const
{
    const std::string i = std::to_string(index);
    switch (kind) {
        case gen_kind::E:
            return "E" + i;
        case gen_kind::F:
            return "F" + i;
        case gen_kind::K:
            return "K" + i;
        case gen_kind::K_inv:
            return "Kinv" + i;
        case gen_kind::script_K:
            return "KK" + i;
        case gen_kind::script_K_inv:
            return "KKinv" + i;
        case gen_kind::parity:
            return "sigma";
    }
    return "?";
}

generator_symbol parse_generator_symbol(const std::string &text)
{
    if (text == "sigma") {
        return {gen_kind::parity, 0};
    }
    static const std::vector<std::pair<std::string, gen_kind>> prefixes = {
        {"KKinv", gen_kind::script_K_inv}, {"KK", gen_kind::script_K}, {"Kinv", gen_kind::K_inv},
        {"K", gen_kind::K},                {"E", gen_kind::E},          {"F", gen_kind::F}};
    for (const auto &[p, k] : prefixes) {
        if (text.rfind(p, 0) == 0 && text.size() > p.size()) {
            const std::string rest = text.substr(p.size());
            if (rest.find_first_not_of("0123456789") != std::string::npos) {
                break;
            }
            return {k, std::stoi(rest)};
        }
    }
    throw std::invalid_argument("unknown generator symbol: " + text);
}

std::string to_string(uq_variant v)
{
    return v == uq_variant::gl ? "gl" : "sl";
}

namespace
{

int p_of(const space_spec &s, int j)
{
    return j == s.m() ? 1 : 0;
}

// K_i = q_i^{...}: +1 on I0, -1 on I1
int q_sign(const space_spec &s, int i)
{
    return s.sh.even(i) ? 1 : -1;
}

} // namespace

operator_expr generator_word(const generator_symbol &g, const space_spec &s)
{
    if (s.fam == family::affine) {
        throw std::invalid_argument("generators act on the Omega and dual spaces only");
    }
    const int N = s.sh.size();
    const int m = s.m();
    const int i = g.index;
    auto need_j = [&] {
        if (i < 1 || i > N - 1) {
            throw std::invalid_argument(g.to_string() + ": index outside J for " + s.describe());
        }
    };
    auto need_i = [&] {
        if (i < 1 || i > N) {
            throw std::invalid_argument(g.to_string() + ": index outside I for " + s.describe());
        }
    };
    switch (g.kind) {
        case gen_kind::E:
            need_j();
            return operator_expr::of(s, {atom::mult_x(i), atom::partial(i + 1), atom::sigma(i)});
        case gen_kind::F:
            need_j();
            return operator_expr::of(s, {atom::sigma(i, -1), atom::mult_x(i + 1), atom::partial(i)});
        case gen_kind::K:
        case gen_kind::K_inv: {
            need_i();
            const int e = g.kind == gen_kind::K ? 1 : -1;
            if (s.is_omega() && s.sh.odd(i)) {
                return operator_expr::of(s, {atom::tau(i), atom::sigma(i, -e)});
            }
            return operator_expr::of(s, {atom::sigma(i, e)});
        }
        case gen_kind::script_K:
        case gen_kind::script_K_inv: {
            need_j();
            const int e = g.kind == gen_kind::script_K ? 1 : -1;
            if (s.is_dual() || i < m) {
                return operator_expr::of(s, {atom::sigma(i, e), atom::sigma(i + 1, -e)});
            }
            if (i == m) {
                return operator_expr::of(s, {atom::sigma(m, e), atom::sigma(m + 1, e), atom::tau(m + 1)});
            }
            return operator_expr::of(s, {atom::sigma(i, -e), atom::sigma(i + 1, e), atom::tau(i), atom::tau(i + 1)});
        }
        case gen_kind::parity:
            return operator_expr::of(s, {atom::parity()});
    }
    throw std::invalid_argument("unknown generator");
}

std::vector<generator_symbol> generator_list(const space_spec &s, uq_variant v)
{
    const int N = s.sh.size();
    std::vector<generator_symbol> out;
    for (int j = 1; j < N; ++j) {
        out.push_back({gen_kind::E, j});
    }
    for (int j = 1; j < N; ++j) {
        out.push_back({gen_kind::F, j});
    }
    if (v == uq_variant::gl) {
        for (int i = 1; i <= N; ++i) {
            out.push_back({gen_kind::K, i});
            out.push_back({gen_kind::K_inv, i});
        }
    }
    for (int j = 1; j < N; ++j) {
        out.push_back({gen_kind::script_K, j});
        out.push_back({gen_kind::script_K_inv, j});
    }
    out.push_back({gen_kind::parity, 0});
    return out;
}

// ---------------------------------------------------------------- relations

namespace
{

struct checker {
    const space_spec &s;
    int t_max;
    relation_report &rep;

    operator_expr g(gen_kind k, int i) const { return generator_word({k, i}, s); }
    operator_expr one() const { return operator_expr::identity(s); }
    operator_expr zero() const { return operator_expr(s); }
    scalar_q q_pow(int e, int sign = 1) const { return scalar_q::q_power(s.ctx, e, sign); }

    void check(const std::string &name, const operator_expr &lhs, const operator_expr &rhs, bool diagnostic = false)
    {
        const equality_result r = operators_equal(lhs, rhs, t_max);
        check_result c{name, r.equal, r.describe()};
        if (diagnostic) {
            rep.add_diagnostic(std::move(c));
        } else {
            rep.add(std::move(c));
        }
    }
};

// exponent of K_k E_j K_k^-1 = q^{a} E_j, as a power of q
int k_on_e(const space_spec &s, int k, int j)
{
    return q_sign(s, k) * ((k == j ? 1 : 0) - (k == j + 1 ? 1 : 0));
}

} // namespace

relation_report verify_uq_relations(const space_spec &s, int t_max, uq_variant v)
{
    relation_report rep;
    rep.suite = "Uq(" + to_string(v) + "(m|n)) relations";
    rep.params = {{"space", s.describe()}, {"t_max", std::to_string(t_max)}, {"variant", to_string(v)}};
    if (s.fam == family::affine) {
        throw std::invalid_argument("verify_uq_relations: the affine superspace carries no action");
    }
    checker c{s, t_max, rep};
    const int N = s.sh.size();
    const int m = s.m();
    const bool gl = v == uq_variant::gl;
    using gk = gen_kind;
    auto K = [&](int i) { return c.g(gk::K, i); };
    auto Ki = [&](int i) { return c.g(gk::K_inv, i); };
    auto KK = [&](int j) { return c.g(gk::script_K, j); };
    auto KKi = [&](int j) { return c.g(gk::script_K_inv, j); };
    auto E = [&](int j) { return c.g(gk::E, j); };
    auto F = [&](int j) { return c.g(gk::F, j); };
    const operator_expr sig = c.g(gk::parity, 0);
    const std::string si = "sigma";
    auto nm = [](const std::string &a, int i) { return a + std::to_string(i); };

    if (N < 2) {
        rep.notes.push_back("J is empty; the E/F relations are vacuous");
    }

    // (R1)
    if (gl) {
        for (int i = 1; i <= N; ++i) {
            c.check("R1: " + nm("K", i) + " " + nm("Kinv", i) + " = 1", K(i) * Ki(i), c.one());
            c.check("R1: " + nm("Kinv", i) + " " + nm("K", i) + " = 1", Ki(i) * K(i), c.one());
            for (int k = i + 1; k <= N; ++k) {
                c.check("R1: " + nm("K", i) + " " + nm("K", k) + " = " + nm("K", k) + " " + nm("K", i), K(i) * K(k),
                        K(k) * K(i));
            }
        }
        for (int j = 1; j < N; ++j) {
            c.check("KK" + std::to_string(j) + " = " + nm("K", j) + " " + nm("Kinv", j + 1), KK(j), K(j) * Ki(j + 1));
            if (j == m) {
                c.check("KK" + std::to_string(j) + " = " + nm("K", j) + " " + nm("K", j + 1) + " (product as printed)",
                        KK(j), K(j) * K(j + 1), true);
            } else if (j > m) {
                c.check("KK" + std::to_string(j) + " = " + nm("Kinv", j) + " " + nm("K", j + 1) +
                            " (product as printed)",
                        KK(j), Ki(j) * K(j + 1), true);
            }
        }
    }
    for (int j = 1; j < N; ++j) {
        c.check("R1: " + nm("KK", j) + " " + nm("KKinv", j) + " = 1", KK(j) * KKi(j), c.one());
        for (int k = j + 1; k < N; ++k) {
            c.check("R1: " + nm("KK", j) + " " + nm("KK", k) + " = " + nm("KK", k) + " " + nm("KK", j), KK(j) * KK(k),
                    KK(k) * KK(j));
        }
    }

    // (R2)
    for (int j = 1; j < N; ++j) {
        if (gl) {
            for (int i = 1; i <= N; ++i) {
                const int a = k_on_e(s, i, j);
                c.check("R2: " + nm("K", i) + " " + nm("E", j) + " = q^" + std::to_string(a) + " " + nm("E", j) + " " +
                            nm("K", i),
                        K(i) * E(j), (E(j) * K(i)).scaled(c.q_pow(a)));
                c.check("R2: " + nm("K", i) + " " + nm("F", j) + " = q^" + std::to_string(-a) + " " + nm("F", j) +
                            " " + nm("K", i),
                        K(i) * F(j), (F(j) * K(i)).scaled(c.q_pow(-a)));
                if (i == j + 1) {
                    const int lit = 0;
                    c.check("R2 as printed: " + nm("K", i) + " " + nm("E", j) + " = q_i^{delta_ij} " + nm("E", j) +
                                " " + nm("K", i),
                            K(i) * E(j), (E(j) * K(i)).scaled(c.q_pow(lit)), true);
                }
            }
        }
        for (int i = 1; i < N; ++i) {
            const int a = k_on_e(s, i, j) - k_on_e(s, i + 1, j);
            c.check("R2: " + nm("KK", i) + " " + nm("E", j) + " = q^" + std::to_string(a) + " " + nm("E", j) + " " +
                        nm("KK", i),
                    KK(i) * E(j), (E(j) * KK(i)).scaled(c.q_pow(a)));
            c.check("R2: " + nm("KK", i) + " " + nm("F", j) + " = q^" + std::to_string(-a) + " " + nm("F", j) + " " +
                        nm("KK", i),
                    KK(i) * F(j), (F(j) * KK(i)).scaled(c.q_pow(-a)));
        }
    }

    // (R3)
    for (int i = 1; i < N; ++i) {
        for (int j = 1; j < N; ++j) {
            const bool anti = p_of(s, i) * p_of(s, j) == 1;
            const operator_expr lhs = anti ? E(i) * F(j) + F(j) * E(i) : E(i) * F(j) - F(j) * E(i);
            operator_expr rhs = c.zero();
            if (i == j) {
                const scalar_q qi = c.q_pow(q_sign(s, i));
                rhs = (KK(i) - KKi(i)).scaled((qi - qi.inverse()).inverse());
            }
            c.check("R3: " + nm("E", i) + " " + nm("F", j) + (anti ? " + " : " - ") + nm("F", j) + " " + nm("E", i) +
                        (i == j ? " = (KK - KKinv)/(q_i - q_i^-1)" : " = 0"),
                    lhs, rhs);
        }
    }

    // (R4)
    for (int i = 1; i < N; ++i) {
        for (int j = i + 2; j < N; ++j) {
            c.check("R4: " + nm("E", i) + " " + nm("E", j) + " = " + nm("E", j) + " " + nm("E", i), E(i) * E(j),
                    E(j) * E(i));
            c.check("R4: " + nm("F", i) + " " + nm("F", j) + " = " + nm("F", j) + " " + nm("F", i), F(i) * F(j),
                    F(j) * F(i));
        }
    }

    // (R5)
    const scalar_q qq = c.q_pow(1) + c.q_pow(-1);
    for (int i = 1; i < N; ++i) {
        if (i == m) {
            continue;
        }
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j >= N) {
                continue;
            }
            for (auto [kind, name] : {std::pair{gk::E, "E"}, std::pair{gk::F, "F"}}) {
                const operator_expr Xi = c.g(kind, i), Xj = c.g(kind, j);
                c.check("R5: " + nm(name, i) + "^2 " + nm(name, j) + " - (q+q^-1) " + nm(name, i) + " " +
                            nm(name, j) + " " + nm(name, i) + " + " + nm(name, j) + " " + nm(name, i) + "^2 = 0",
                        Xi * Xi * Xj - (Xi * Xj * Xi).scaled(qq) + Xj * Xi * Xi, c.zero());
            }
        }
    }

    // (R6)
    if (m >= 1 && m < N) {
        c.check("R6: " + nm("E", m) + "^2 = 0", E(m) * E(m), c.zero());
        c.check("R6: " + nm("F", m) + "^2 = 0", F(m) * F(m), c.zero());
    }

    // (R7)
    if (m >= 2 && m + 1 < N) {
        for (auto [kind, name] : {std::pair{gk::E, "E"}, std::pair{gk::F, "F"}}) {
            const operator_expr a = c.g(kind, m - 1), b = c.g(kind, m), d = c.g(kind, m + 1);
            const operator_expr lhs =
                a * b * d * b + b * a * b * d + d * b * a * b + b * d * b * a - (b * a * d * b).scaled(qq);
            c.check(std::string("R7: quartic relation in ") + name + std::to_string(m - 1) + ", " + name +
                        std::to_string(m) + ", " + name + std::to_string(m + 1),
                    lhs, c.zero());
        }
    }

    // bosonization by the parity element
    c.check("sigma^2 = 1", sig * sig, c.one());
    for (int j = 1; j < N; ++j) {
        const scalar_q sgn(s.ctx, p_of(s, j) ? -1 : 1);
        c.check("sigma " + nm("E", j) + " sigma = (-1)^p " + nm("E", j), sig * E(j) * sig, E(j).scaled(sgn));
        c.check("sigma " + nm("F", j) + " sigma = (-1)^p " + nm("F", j), sig * F(j) * sig, F(j).scaled(sgn));
        c.check("sigma " + nm("KK", j) + " = " + nm("KK", j) + " sigma", sig * KK(j), KK(j) * sig);
    }
    if (gl) {
        for (int i = 1; i <= N; ++i) {
            c.check("sigma " + nm("K", i) + " = " + nm("K", i) + " sigma", sig * K(i), K(i) * sig);
        }
    }

    // truncation relations of the restricted quotient
    if (s.is_restricted()) {
        const int ell = s.ell();
        for (int j = 1; j < N; ++j) {
            if (j == m) {
                continue;
            }
            c.check(nm("E", j) + "^" + std::to_string(ell) + " = 0", E(j).power(ell), c.zero());
            c.check(nm("F", j) + "^" + std::to_string(ell) + " = 0", F(j).power(ell), c.zero());
        }
        if (gl) {
            for (int i = 1; i <= N; ++i) {
                c.check(nm("K", i) + "^" + std::to_string(2 * ell) + " = 1", K(i).power(2 * ell), c.one());
                c.check(nm("K", i) + "^" + std::to_string(ell) + " = 1", K(i).power(ell), c.one(), true);
            }
        }
        for (int j = 1; j < N; ++j) {
            c.check(nm("KK", j) + "^" + std::to_string(2 * ell) + " = 1", KK(j).power(2 * ell), c.one());
            c.check(nm("KK", j) + "^" + std::to_string(ell) + " = 1", KK(j).power(ell), c.one(), true);
        }
    }
    return rep;
}

// ---------------------------------------------------------------- module algebra

namespace
{

// images of one operator on basis monomials, computed on demand
class image_cache
{
public:
    image_cache(const space_spec &s, operator_expr op) : m_space(s), m_op(std::move(op)) {}

    const super_vector &operator()(const multi_index &a)
    {
        auto it = m_images.find(a);
        if (it == m_images.end()) {
            it = m_images.emplace(a, apply(m_op, super_vector::monomial(m_space, a))).first;
        }
        return it->second;
    }

private:
    space_spec m_space;
    operator_expr m_op;
    std::map<multi_index, super_vector> m_images;
};

} // namespace

relation_report verify_module_algebra(const space_spec &s, int t_max, uq_variant v)
{
    relation_report rep;
    rep.suite = "module-algebra law";
    rep.params = {{"space", s.describe()}, {"t_max", std::to_string(t_max)}, {"variant", to_string(v)}};
    if (s.fam == family::affine) {
        throw std::invalid_argument("verify_module_algebra: the affine superspace carries no action");
    }
    const int top = s.top_degree();
    const int hi = top >= 0 ? std::min(t_max, top) : t_max;
    std::vector<std::vector<multi_index>> by_degree;
    for (int t = 0; t <= hi; ++t) {
        by_degree.push_back(basis_of_degree(s, t));
    }
    const super_vector unit = super_vector::monomial(s, multi_index::zero(s.sh));
    image_cache parity(s, generator_word({gen_kind::parity, 0}, s));

    for (const auto &g : generator_list(s, v)) {
        image_cache act(s, generator_word(g, s));
        // second tensor factor for E, first tensor factor for F
        std::optional<image_cache> kk, kk_inv;
        const int j = g.index;
        const bool odd_here = (g.kind == gen_kind::E || g.kind == gen_kind::F) && p_of(s, j) == 1;
        if (g.kind == gen_kind::E) {
            kk.emplace(s, generator_word({gen_kind::script_K, j}, s));
        }
        if (g.kind == gen_kind::F) {
            kk_inv.emplace(s, generator_word({gen_kind::script_K_inv, j}, s));
        }
        std::string law;
        switch (g.kind) {
            case gen_kind::E:
                law = "E(uv) = E(u) KK(v) + sigma^p(u) E(v)";
                break;
            case gen_kind::F:
                law = "F(uv) = F(u) v + sigma^p KKinv(u) F(v)";
                break;
            default:
                law = "g(uv) = g(u) g(v)";
                break;
        }
        check_result res{g.to_string() + ": " + law, true, ""};
        for (int da = 0; da <= hi && res.pass; ++da) {
            for (const auto &a : by_degree[da]) {
                if (!res.pass) {
                    break;
                }
                const super_vector u = super_vector::monomial(s, a);
                for (int db = 0; da + db <= hi && res.pass; ++db) {
                    for (const auto &b : by_degree[db]) {
                        const super_vector w = super_vector::monomial(s, b);
                        super_vector lhs(s);
                        const super_vector uw = multiply(u, w);
                        for (const auto &[k, c] : uw.terms()) {
                            lhs += act(k).scaled(c);
                        }
                        super_vector rhs(s);
                        switch (g.kind) {
                            case gen_kind::E:
                                rhs = multiply(act(a), (*kk)(b)) +
                                      multiply(odd_here ? parity(a) : u, act(b));
                                break;
                            case gen_kind::F: {
                                super_vector first = (*kk_inv)(a);
                                if (odd_here) {
                                    super_vector t(s);
                                    for (const auto &[k, c] : first.terms()) {
                                        t += parity(k).scaled(c);
                                    }
                                    first = t;
                                }
                                rhs = multiply(act(a), w) + multiply(first, act(b));
                                break;
                            }
                            default:
                                rhs = multiply(act(a), act(b));
                                break;
                        }
                        if (lhs != rhs) {
                            res.pass = false;
                            res.witness = "u = " + a.to_string() + ", v = " + b.to_string() + ": " + lhs.to_string() +
                                          " vs " + rhs.to_string();
                            break;
                        }
                    }
                }
            }
        }
        rep.add(res);
        // counit: g(1) = eps(g) 1
        const super_vector g1 = act(multi_index::zero(s.sh));
        const bool grouplike = g.kind != gen_kind::E && g.kind != gen_kind::F;
        const bool ok = grouplike ? g1 == unit : g1.is_zero();
        rep.add({g.to_string() + ": g(1) = eps(g) 1", ok, ok ? "" : g1.to_string()});
    }
    return rep;
}

// ---------------------------------------------------------------- weights and components

std::string weight_vector::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < q_exp.size(); ++i) {
        os << (i ? "," : "") << q_exp[i];
    }
    os << ";" << (parity > 0 ? "+" : "-") << ")";
    return os.str();
}

weight_vector weight_of(const space_spec &s, const multi_index &a, uq_variant v)
{
    const int N = s.sh.size();
    std::vector<int> e(N);
    for (int i = 1; i <= N; ++i) {
        e[i - 1] = q_sign(s, i) * a[i];
    }
    weight_vector w;
    w.parity = a.odd_degree() % 2 == 0 ? 1 : -1;
    if (v == uq_variant::gl) {
        w.q_exp = e;
    } else {
        for (int j = 1; j < N; ++j) {
            w.q_exp.push_back(e[j - 1] - e[j]);
        }
    }
    return w;
}

std::string to_string(simplicity s)
{
    switch (s) {
        case simplicity::simple:
            return "true";
        case simplicity::not_simple:
            return "false";
        case simplicity::inconclusive:
            return "inconclusive";
    }
    return "?";
}

namespace
{

void check_range(const space_spec &s, int t)
{
    if (s.fam == family::affine && t >= 0) {
        return;
    }
    if (t < 0 || (s.top_degree() >= 0 && t > s.top_degree())) {
        throw std::invalid_argument("degree " + std::to_string(t) + " out of range for " + s.describe());
    }
}

std::string term(int c, const std::string &w)
{
    if (c == 0) {
        return "";
    }
    return (c == 1 ? "" : std::to_string(c)) + w;
}

std::string join_terms(const std::vector<std::string> &parts)
{
    std::string out;
    for (const auto &p : parts) {
        if (p.empty()) {
            continue;
        }
        out += (out.empty() ? "" : "+") + p;
    }
    return out.empty() ? "0" : out;
}

// t - offset = (i-1)(ell-1) + t_i with 1 <= t_i <= ell-1 (t > offset)
void split_block(int r, int ell, int &i, int &ti)
{
    i = (r - 1) / (ell - 1) + 1;
    ti = r - (i - 1) * (ell - 1);
}

} // namespace

hw_claim expected_highest_weight(const space_spec &s, int t)
{
    check_range(s, t);
    hw_claim c;
    const int m = s.m(), n = s.n(), N = s.sh.size();
    multi_index a = multi_index::zero(s.sh);
    const std::string w = "w";
    switch (s.fam) {
        case family::omega:
            if (m == 0 && t > 0) {
                return c;
            }
            a[1 <= N ? 1 : 1] = m >= 1 ? t : 0;
            c.label = t == 0 ? "0" : term(t, "w1");
            break;
        case family::omega_restricted: {
            const int ell = s.ell();
            const int top0 = m * (ell - 1);
            if (t == 0) {
                c.label = "0";
            } else if (t <= top0) {
                int i = 0, ti = 0;
                split_block(t, ell, i, ti);
                for (int k = 1; k < i; ++k) {
                    a[k] = ell - 1;
                }
                a[i] = ti;
                c.label = join_terms({i > 1 ? term(ell - 1 - ti, w + std::to_string(i - 1)) : "",
                                      term(ti, w + std::to_string(i))});
            } else {
                const int p = t - top0;
                for (int k = 1; k <= m; ++k) {
                    a[k] = ell - 1;
                }
                for (int k = 1; k <= p; ++k) {
                    a[m + k] = 1;
                }
                c.label = join_terms({m >= 1 ? term(ell - 2, w + std::to_string(m)) : "",
                                      term(1, w + std::to_string(m + p))});
            }
            break;
        }
        case family::dual:
            if (t <= m) {
                for (int k = 1; k <= t; ++k) {
                    a[k] = 1;
                }
                c.label = t == 0 ? "0" : w + std::to_string(t);
            } else {
                if (n == 0) {
                    return c;
                }
                for (int k = 1; k <= m; ++k) {
                    a[k] = 1;
                }
                a[m + 1] = t - m;
                c.label = join_terms({m >= 1 ? w + std::to_string(m) : "", term(t - m, "e" + std::to_string(m + 1))});
            }
            break;
        case family::dual_restricted: {
            const int ell = s.ell();
            if (t <= m) {
                for (int k = 1; k <= t; ++k) {
                    a[k] = 1;
                }
                c.label = t == 0 ? "0" : w + std::to_string(t);
            } else {
                for (int k = 1; k <= m; ++k) {
                    a[k] = 1;
                }
                int i = 0, ti = 0;
                split_block(t - m, ell, i, ti);
                std::vector<std::string> parts{m >= 1 ? w + std::to_string(m) : ""};
                for (int k = 1; k < i; ++k) {
                    a[m + k] = ell - 1;
                    parts.push_back(term(ell - 1, "e" + std::to_string(m + k)));
                }
                a[m + i] = ti;
                parts.push_back(term(ti, "e" + std::to_string(m + i)));
                c.label = join_terms(parts);
            }
            break;
        }
        case family::affine:
            return c;
    }
    c.available = true;
    c.vector = a;
    c.weight = a.e;
    return c;
}

component_report analyze_component(const space_spec &s, int t, uq_variant v)
{
    if (s.fam == family::affine) {
        throw std::invalid_argument("analyze_component: the affine superspace carries no action");
    }
    check_range(s, t);
    component_report r;
    r.space = s;
    r.t = t;
    const std::vector<multi_index> basis = basis_of_degree(s, t);
    r.dim = static_cast<long long>(basis.size());
    const int N = s.sh.size();
    const int d = s.ctx->generic() ? 0 : s.ctx->d;

    // weights, confirmed against the K action
    std::vector<operator_expr> kops;
    if (v == uq_variant::gl) {
        for (int i = 1; i <= N; ++i) {
            kops.push_back(generator_word({gen_kind::K, i}, s));
        }
    } else {
        for (int j = 1; j < N; ++j) {
            kops.push_back(generator_word({gen_kind::script_K, j}, s));
        }
    }
    const operator_expr par = generator_word({gen_kind::parity, 0}, s);
    std::map<std::vector<int>, multi_index> seen;
    r.weights_separated = true;
    for (const auto &a : basis) {
        const weight_vector w = weight_of(s, a, v);
        const super_vector u = super_vector::monomial(s, a);
        for (std::size_t k = 0; k < kops.size(); ++k) {
            if (apply(kops[k], u) != u.scaled(scalar_q::q_power(s.ctx, w.q_exp[k]))) {
                throw std::logic_error("weight bookkeeping disagrees with the K action at " + a.to_string());
            }
        }
        if (apply(par, u) != u.scaled(scalar_q(s.ctx, w.parity))) {
            throw std::logic_error("parity bookkeeping disagrees with the sigma action at " + a.to_string());
        }
        std::vector<int> key = w.q_exp;
        if (d > 0) {
            for (auto &x : key) {
                x = ((x % d) + d) % d;
            }
        }
        key.push_back(w.parity);
        auto [it, fresh] = seen.emplace(key, a);
        if (!fresh) {
            r.weights_separated = false;
            r.witnesses.push_back("weight collision: " + it->second.to_string() + " and " + a.to_string());
        }
    }

    // joint kernel of the E_j
    std::vector<operator_expr> eops, fops;
    for (int j = 1; j < N; ++j) {
        eops.push_back(generator_word({gen_kind::E, j}, s));
        fops.push_back(generator_word({gen_kind::F, j}, s));
    }
    using key_t = std::pair<int, multi_index>;
    std::vector<std::map<key_t, scalar_q>> cols;
    for (const auto &a : basis) {
        std::map<key_t, scalar_q> col;
        const super_vector u = super_vector::monomial(s, a);
        for (std::size_t j = 0; j < eops.size(); ++j) {
            const super_vector img = apply(eops[j], u);
            for (const auto &[k, c] : img.terms()) {
                col.emplace(key_t{static_cast<int>(j), k}, c);
            }
        }
        cols.push_back(std::move(col));
    }
    for (const auto &kv : kernel(cols, s.ctx)) {
        super_vector h(s);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            h.add_term(basis[i], kv[i]);
        }
        std::set<weight_vector> ws;
        for (const auto &[k, c] : h.terms()) {
            ws.insert(weight_of(s, k, uq_variant::gl));
        }
        r.hw_weight.push_back(ws.size() == 1 ? h.terms().begin()->first.e : std::vector<int>{});
        r.hw_basis.push_back(std::move(h));
    }

    r.claim = expected_highest_weight(s, t);
    r.claim_matches = r.claim.available && r.hw_basis.size() == 1 && r.hw_basis[0].terms().size() == 1 &&
                      r.hw_basis[0].terms().begin()->first == r.claim.vector && r.hw_weight[0] == r.claim.weight;

    if (!r.weights_separated) {
        r.simple = simplicity::inconclusive;
        return r;
    }
    // every basis monomial must generate the component
    r.simple = simplicity::simple;
    for (const auto &a : basis) {
        echelon<multi_index> span;
        std::deque<super_vector> todo;
        const super_vector seed = super_vector::monomial(s, a);
        span.insert(seed.terms());
        todo.push_back(seed);
        while (!todo.empty() && span.rank() < r.dim) {
            const super_vector u = todo.front();
            todo.pop_front();
            for (const auto *ops : {&eops, &fops}) {
                for (const auto &op : *ops) {
                    super_vector w = apply(op, u);
                    if (!w.is_zero() && span.insert(w.terms())) {
                        todo.push_back(std::move(w));
                    }
                }
            }
        }
        if (span.rank() < r.dim) {
            r.simple = simplicity::not_simple;
            r.witnesses.push_back(a.to_string() + " generates a submodule of dimension " + std::to_string(span.rank()) +
                                  " < " + std::to_string(r.dim));
        }
    }
    return r;
}

// ---------------------------------------------------------------- dimensions

long long restricted_divided_dim(int k, int s, int ell)
{
    if (s < 0) {
        return 0;
    }
    if (k == 0) {
        return s == 0 ? 1 : 0;
    }
    long long total = 0;
    for (int i = 0; i <= s / ell; ++i) {
        const long long term = binom(k, i) * binom(k + s - i * ell - 1, k - 1);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

long long dim_formula(const space_spec &s, int t)
{
    check_range(s, t);
    const int m = s.m(), n = s.n();
    long long total = 0;
    switch (s.fam) {
        case family::affine:
        case family::omega:
            for (int j = 0; j <= std::min(t, n); ++j) {
                total += binom(m + t - j - 1, t - j) * binom(n, j);
            }
            break;
        case family::omega_restricted:
            for (int j = 0; j <= std::min(t, n); ++j) {
                total += binom(n, j) * restricted_divided_dim(m, t - j, s.ell());
            }
            break;
        case family::dual:
            for (int j = 0; j <= std::min(t, m); ++j) {
                total += binom(m, j) * binom(n + t - j - 1, t - j);
            }
            break;
        case family::dual_restricted:
            for (int j = 0; j <= std::min(t, m); ++j) {
                total += binom(m, j) * restricted_divided_dim(n, t - j, s.ell());
            }
            break;
    }
    return total;
}

// ---------------------------------------------------------------- rank

rank_result exact_rank(const std::vector<super_vector> &vectors)
{
    rank_result r;
    if (vectors.empty()) {
        return r;
    }
    const space_spec &s = vectors.front().space();
    int deg = -1;
    echelon<multi_index> e;
    for (const auto &v : vectors) {
        if (!(v.space() == s)) {
            throw std::invalid_argument("exact_rank: vectors from different spaces");
        }
        const int d = v.homogeneous_degree();
        if (d >= 0) {
            if (deg >= 0 && d != deg) {
                throw std::invalid_argument("exact_rank: mixed degrees");
            }
            deg = d;
        }
        e.insert(v.terms());
    }
    r.rank = e.rank();
    for (const auto &[p, row] : e.rows()) {
        super_vector b(s);
        for (const auto &[k, c] : row) {
            b.add_term(k, c);
        }
        r.basis.push_back(std::move(b));
    }
    return r;
}

} // namespace qgrass
