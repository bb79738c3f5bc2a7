#include "qgrass/weyl.hpp"

#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qgrass
{

// ---------------------------------------------------------------- atoms

int atom::net_degree() const
{
    switch (kind) {
        case atom_kind::partial:
            return -1;
        case atom_kind::mult_x:
            return 1;
        case atom_kind::mult_x_divpow:
            return p;
        default:
            return 0;
    }
}

std::string atom::to_string() const
{
    switch (kind) {
        case atom_kind::partial:
            return "d" + std::to_string(i);
        case atom_kind::mult_x:
            return "x" + std::to_string(i);
        case atom_kind::mult_x_divpow:
            return "x" + std::to_string(i) + "^(" + std::to_string(p) + ")";
        case atom_kind::sigma:
            return "sigma" + std::to_string(i) + (p == 1 ? "" : "^" + std::to_string(p));
        case atom_kind::tau:
            return "tau" + std::to_string(i);
        case atom_kind::parity:
            return "tau";
        case atom_kind::theta:
            return "Theta" + label.to_string();
    }
    return "?";
}

void validate_atom(const space_spec &s, const atom &a)
{
    auto fail = [&](const std::string &why) {
        throw std::invalid_argument("atom " + a.to_string() + " invalid on " + s.describe() + ": " + why);
    };
    if (s.fam == family::affine) {
        fail("no operators are defined on the affine superspace");
    }
    switch (a.kind) {
        case atom_kind::partial:
        case atom_kind::mult_x:
        case atom_kind::sigma:
            if (!s.sh.in_range(a.i)) {
                fail("index out of range");
            }
            break;
        case atom_kind::mult_x_divpow:
            if (!s.sh.in_range(a.i) || s.exterior_pos(a.i - 1)) {
                fail("divided powers live on the divided-power coordinates");
            }
            if (s.ctx->generic()) {
                fail("divided-power multiplication atoms need a root-of-unity field");
            }
            if (a.p < 0) {
                fail("negative divided power");
            }
            break;
        case atom_kind::tau:
            if (!s.is_omega() || !s.sh.odd(a.i)) {
                fail("tau_i exists only for i in I1 on the Omega side");
            }
            break;
        case atom_kind::parity:
            break;
        case atom_kind::theta:
            if (!s.is_omega()) {
                fail("Theta labels act on the Omega side only");
            }
            if (a.label.m != s.m() || a.label.size() != s.sh.size()) {
                fail("label shape mismatch");
            }
            break;
    }
}

namespace
{

int prefix_sum(const multi_index &a, int lo, int hi)
{
    int r = 0;
    for (int k = lo; k < hi; ++k) {
        r += a.e[k];
    }
    return r;
}

void signed_q(int &sign, int &qexp, int k)
{
    // multiply by (-q)^k
    qexp += k;
    if (k % 2 != 0) {
        sign = -sign;
    }
}

bool step(const space_spec &s, const atom &at, multi_index &idx, int &sign, int &qexp, scalar_q &coeff)
{
    const int m = s.m();
    const int pos = at.i - 1;
    switch (at.kind) {
        case atom_kind::partial: {
            if (idx.e[pos] == 0) {
                return false;
            }
            if (s.is_omega()) {
                if (pos < m) {
                    qexp -= prefix_sum(idx, 0, pos);
                    idx.e[pos] -= 1;
                } else {
                    qexp -= idx.even_degree();
                    signed_q(sign, qexp, -prefix_sum(idx, m, pos));
                    idx.e[pos] = 0;
                }
            } else {
                if (pos < m) {
                    signed_q(sign, qexp, prefix_sum(idx, 0, pos));
                    idx.e[pos] = 0;
                } else {
                    signed_q(sign, qexp, idx.even_degree());
                    qexp += prefix_sum(idx, m, pos);
                    idx.e[pos] -= 1;
                }
            }
            return true;
        }
        case atom_kind::mult_x:
        case atom_kind::mult_x_divpow: {
            multi_index u = multi_index::zero(s.sh);
            u.e[pos] = at.kind == atom_kind::mult_x ? 1 : at.p;
            monomial_product mp = multiply_monomials(s, u, idx);
            if (mp.zero) {
                return false;
            }
            coeff *= mp.coeff;
            idx = std::move(mp.index);
            return true;
        }
        case atom_kind::sigma: {
            const int k = at.p * idx.e[pos];
            if (s.is_omega()) {
                if (pos < m) {
                    qexp += k;
                } else {
                    signed_q(sign, qexp, k);
                }
            } else {
                qexp += pos < m ? k : -k;
            }
            return true;
        }
        case atom_kind::tau:
            if (idx.e[pos] % 2 != 0) {
                sign = -sign;
            }
            return true;
        case atom_kind::parity:
            if (idx.odd_degree() % 2 != 0) {
                sign = -sign;
            }
            return true;
        case atom_kind::theta: {
            const signed_pow sp = theta_sp(at.label, idx);
            sign *= sp.sign;
            qexp += sp.e;
            return true;
        }
    }
    return false;
}

} // namespace

// ---------------------------------------------------------------- words and expressions

int operator_word::net_degree() const
{
    int d = 0;
    for (const auto &a : atoms) {
        d += a.net_degree();
    }
    return d;
}

std::string operator_word::to_string() const
{
    std::ostringstream os;
    os << "(" << scalar.to_string() << ")";
    for (const auto &a : atoms) {
        os << " " << a.to_string();
    }
    return os.str();
}

operator_expr::operator_expr(const operator_word &w) : m_space(w.space)
{
    for (const auto &a : w.atoms) {
        validate_atom(w.space, a);
    }
    if (!w.scalar.is_zero()) {
        m_terms.push_back(w);
    }
}

operator_expr operator_expr::identity(const space_spec &s)
{
    return of(s, {});
}

operator_expr operator_expr::of(const space_spec &s, std::vector<atom> atoms)
{
    return operator_expr(operator_word{s, std::move(atoms), scalar_q(s.ctx, 1)});
}

operator_expr &operator_expr::operator+=(const operator_expr &o)
{
    if (!(m_space == o.m_space)) {
        throw std::invalid_argument("operator_expr: space mismatch");
    }
    m_terms.insert(m_terms.end(), o.m_terms.begin(), o.m_terms.end());
    return *this;
}

operator_expr &operator_expr::operator-=(const operator_expr &o)
{
    return *this += o.scaled(scalar_q(m_space.ctx, -1));
}

operator_expr operator*(const operator_expr &a, const operator_expr &b)
{
    if (!(a.m_space == b.m_space)) {
        throw std::invalid_argument("operator_expr: space mismatch");
    }
    operator_expr r(a.m_space);
    for (const auto &ta : a.m_terms) {
        for (const auto &tb : b.m_terms) {
            operator_word w{a.m_space, ta.atoms, ta.scalar * tb.scalar};
            w.atoms.insert(w.atoms.end(), tb.atoms.begin(), tb.atoms.end());
            if (!w.scalar.is_zero()) {
                r.m_terms.push_back(std::move(w));
            }
        }
    }
    return r;
}

operator_expr operator_expr::scaled(const scalar_q &c) const
{
    operator_expr r(m_space);
    if (c.is_zero()) {
        return r;
    }
    for (const auto &t : m_terms) {
        r.m_terms.push_back(operator_word{t.space, t.atoms, t.scalar * c});
    }
    return r;
}

operator_expr operator_expr::power(int k) const
{
    if (k < 0) {
        throw std::invalid_argument("operator_expr::power: negative exponent");
    }
    operator_expr r = identity(m_space);
    for (int j = 0; j < k; ++j) {
        r = r * *this;
    }
    return r;
}

std::string operator_expr::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    for (std::size_t k = 0; k < m_terms.size(); ++k) {
        os << (k ? " + " : "") << m_terms[k].to_string();
    }
    return os.str();
}

monomial_product apply_word(const operator_word &w, const multi_index &a)
{
    monomial_product out;
    if (w.scalar.is_zero()) {
        return out;
    }
    multi_index idx = a;
    int sign = 1, qexp = 0;
    scalar_q coeff = w.scalar;
    for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) {
        if (!step(w.space, *it, idx, sign, qexp, coeff)) {
            return out;
        }
    }
    out.zero = false;
    out.coeff = coeff.times_q_power(qexp, sign);
    out.index = std::move(idx);
    return out;
}

super_vector apply(const operator_word &w, const super_vector &u)
{
    if (!(w.space == u.space())) {
        throw std::invalid_argument("apply: space mismatch");
    }
    for (const auto &a : w.atoms) {
        validate_atom(w.space, a);
    }
    super_vector r(u.space());
    for (const auto &[a, c] : u.terms()) {
        monomial_product p = apply_word(w, a);
        if (!p.zero) {
            r.add_term(p.index, p.coeff * c);
        }
    }
    return r;
}

super_vector apply(const operator_expr &w, const super_vector &u)
{
    if (!(w.space() == u.space())) {
        throw std::invalid_argument("apply: space mismatch");
    }
    super_vector r(u.space());
    for (const auto &t : w.terms()) {
        for (const auto &[a, c] : u.terms()) {
            monomial_product p = apply_word(t, a);
            if (!p.zero) {
                r.add_term(p.index, p.coeff * c);
            }
        }
    }
    return r;
}

std::string equality_result::describe() const
{
    if (equal) {
        return "";
    }
    return "on " + witness.to_string() + ": lhs = " + lhs_image + ", rhs = " + rhs_image;
}

equality_result operators_equal(const operator_expr &a, const operator_expr &b, int t_max)
{
    if (!(a.space() == b.space())) {
        throw std::invalid_argument("operators_equal: space mismatch");
    }
    const space_spec &s = a.space();
    const int top = s.top_degree();
    const int hi = top >= 0 ? std::min(t_max, top) : t_max;
    equality_result res;
    for (int t = 0; t <= hi; ++t) {
        for (const auto &idx : basis_of_degree(s, t)) {
            const super_vector u = super_vector::monomial(s, idx);
            const super_vector la = apply(a, u), lb = apply(b, u);
            if (la != lb) {
                res.equal = false;
                res.witness = idx;
                res.lhs_image = la.to_string();
                res.rhs_image = lb.to_string();
                return res;
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------- relation suites

std::string to_string(weyl_suite s)
{
    switch (s) {
        case weyl_suite::dq_super:
            return "DqSuper";
        case weyl_suite::dq_hopf_alg:
            return "DqHopfAlg";
        case weyl_suite::weyl_generic:
            return "WeylGeneric";
        case weyl_suite::weyl_odd_root:
            return "WeylOddRoot";
        case weyl_suite::weyl_even_root:
            return "WeylEvenRoot";
        case weyl_suite::twisted_leibniz:
            return "TwistedLeibniz";
    }
    return "?";
}

weyl_suite parse_weyl_suite(const std::string &name)
{
    for (weyl_suite s : {weyl_suite::dq_super, weyl_suite::dq_hopf_alg, weyl_suite::weyl_generic,
                         weyl_suite::weyl_odd_root, weyl_suite::weyl_even_root, weyl_suite::twisted_leibniz}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown relation suite: " + name);
}

namespace
{

struct suite_builder {
    const space_spec &s;
    int t_max;
    relation_report &rep;

    operator_expr w(std::vector<atom> atoms) const { return operator_expr::of(s, std::move(atoms)); }
    operator_expr one() const { return operator_expr::identity(s); }
    operator_expr zero() const { return operator_expr(s); }
    scalar_q sc(const signed_pow &sp) const { return sp.to_scalar(s.ctx); }
    scalar_q sc(long c) const { return scalar_q(s.ctx, c); }
    multi_index eps(int i) const { return multi_index::unit(s.sh, i); }

    void check(const std::string &name, const operator_expr &lhs, const operator_expr &rhs, bool diagnostic = false)
    {
        equality_result r = operators_equal(lhs, rhs, t_max);
        check_result c{name, r.equal, r.describe()};
        if (diagnostic) {
            rep.add_diagnostic(std::move(c));
        } else {
            rep.add(std::move(c));
        }
    }

    std::vector<multi_index> basis_upto(int t) const
    {
        std::vector<multi_index> out;
        const int top = s.top_degree();
        const int hi = top >= 0 ? std::min(t, top) : t;
        for (int k = 0; k <= hi; ++k) {
            auto b = basis_of_degree(s, k);
            out.insert(out.end(), b.begin(), b.end());
        }
        return out;
    }
};

std::string idx_name(const std::string &base, std::initializer_list<std::pair<const char *, int>> ids)
{
    std::ostringstream os;
    os << base << " [";
    bool first = true;
    for (const auto &[k, v] : ids) {
        os << (first ? "" : ",") << k << "=" << v;
        first = false;
    }
    os << "]";
    return os.str();
}

void require_omega(const space_spec &s, weyl_suite suite)
{
    if (!s.is_omega()) {
        throw std::invalid_argument(to_string(suite) + " acts on the Omega side only, got " + s.describe());
    }
}

// d_i d_j = theta(e_i,e_j) d_j d_i and d_j^2 = 0
void add_dq_super(suite_builder &b)
{
    const shape &sh = b.s.sh;
    for (int i = 1; i <= sh.size(); ++i) {
        for (int j = 1; j <= sh.size(); ++j) {
            if (i == j) {
                continue;
            }
            b.check(idx_name("d_i d_j = theta(e_i,e_j) d_j d_i", {{"i", i}, {"j", j}}),
                    b.w({atom::partial(i), atom::partial(j)}),
                    b.w({atom::partial(j), atom::partial(i)}).scaled(b.sc(theta_sp(b.eps(i), b.eps(j)))));
        }
    }
    for (int j = sh.m + 1; j <= sh.size(); ++j) {
        b.check(idx_name("d_j^2 = 0", {{"j", j}}), b.w({atom::partial(j), atom::partial(j)}), b.zero());
    }
    if (b.s.is_restricted()) {
        for (int i = 1; i <= sh.m; ++i) {
            b.check(idx_name("d_i^ell = 0", {{"i", i}}), b.w({atom::partial(i)}).power(b.s.ell()), b.zero());
        }
    }
}

void add_conjugation_table(suite_builder &b)
{
    const shape &sh = b.s.sh;
    const int N = sh.size();
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            b.check(idx_name("Theta(e_j) d_i Theta(-e_j) = theta(e_i,e_j) d_i", {{"i", i}, {"j", j}}),
                    b.w({atom::theta(b.eps(j)), atom::partial(i), atom::theta(-b.eps(j))}),
                    b.w({atom::partial(i)}).scaled(b.sc(theta_sp(b.eps(i), b.eps(j)))));
            const int sign = (sh.odd(i) && i == j) ? -1 : 1;
            const int e = i == j ? -1 : 0;
            b.check(idx_name("sigma_j d_i sigma_j^-1 = (-1)^{|d_i| delta_ij} q^{-delta_ij} d_i", {{"i", i}, {"j", j}}),
                    b.w({atom::sigma(j, 1), atom::partial(i), atom::sigma(j, -1)}),
                    b.w({atom::partial(i)}).scaled(b.sc(signed_pow{sign, e})));
        }
        b.check(idx_name("tau d_i tau^-1 = (-1)^{|d_i|} d_i", {{"i", i}}),
                b.w({atom::parity(), atom::partial(i), atom::parity()}),
                b.w({atom::partial(i)}).scaled(b.sc(sh.odd(i) ? -1 : 1)));
    }
    for (int j = sh.m + 1; j <= N; ++j) {
        for (int i = 1; i <= N; ++i) {
            b.check(idx_name("tau_j d_i = (-1)^delta_ij d_i tau_j", {{"i", i}, {"j", j}}),
                    b.w({atom::tau(j), atom::partial(i)}),
                    b.w({atom::partial(i), atom::tau(j)}).scaled(b.sc(i == j ? -1 : 1)));
        }
    }
}

void add_theta_roots(suite_builder &b)
{
    const shape &sh = b.s.sh;
    for (int i = 1; i < sh.size(); ++i) {
        const multi_index neg_alpha = b.eps(i + 1) - b.eps(i);
        if (i == sh.m) {
            b.check(idx_name("Theta(-e_m+e_{m+1}) = tau sigma_m sigma_{m+1}", {{"m", i}}),
                    b.w({atom::theta(neg_alpha)}), b.w({atom::parity(), atom::sigma(i), atom::sigma(i + 1)}));
        } else {
            b.check(idx_name("Theta(-e_i+e_{i+1}) = sigma_i sigma_{i+1}", {{"i", i}}), b.w({atom::theta(neg_alpha)}),
                    b.w({atom::sigma(i), atom::sigma(i + 1)}));
        }
    }
}

void add_dq_hopf_alg(suite_builder &b)
{
    const shape &sh = b.s.sh;
    const int N = sh.size();
    for (int i = 1; i <= N; ++i) {
        b.check(idx_name("sigma_i sigma_i^-1 = 1", {{"i", i}}), b.w({atom::sigma(i, 1), atom::sigma(i, -1)}), b.one());
        b.check(idx_name("sigma_i^-1 sigma_i = 1", {{"i", i}}), b.w({atom::sigma(i, -1), atom::sigma(i, 1)}), b.one());
        b.check(idx_name("Theta(e_i) Theta(-e_i) = 1", {{"i", i}}),
                b.w({atom::theta(b.eps(i)), atom::theta(-b.eps(i))}), b.one());
        for (int j = 1; j <= N; ++j) {
            if (i < j) {
                b.check(idx_name("sigma_i sigma_j = sigma_j sigma_i", {{"i", i}, {"j", j}}),
                        b.w({atom::sigma(i), atom::sigma(j)}), b.w({atom::sigma(j), atom::sigma(i)}));
                b.check(idx_name("Theta(e_i) Theta(e_j) = Theta(e_i+e_j)", {{"i", i}, {"j", j}}),
                        b.w({atom::theta(b.eps(i)), atom::theta(b.eps(j))}), b.w({atom::theta(b.eps(i) + b.eps(j))}));
                b.check(idx_name("Theta(e_i) Theta(e_j) = Theta(e_j) Theta(e_i)", {{"i", i}, {"j", j}}),
                        b.w({atom::theta(b.eps(i)), atom::theta(b.eps(j))}),
                        b.w({atom::theta(b.eps(j)), atom::theta(b.eps(i))}));
            }
            b.check(idx_name("sigma_j Theta(e_i) = Theta(e_i) sigma_j", {{"i", i}, {"j", j}}),
                    b.w({atom::sigma(j), atom::theta(b.eps(i))}), b.w({atom::theta(b.eps(i)), atom::sigma(j)}));
        }
    }
    operator_expr tau_product = b.one();
    for (int j = sh.m + 1; j <= N; ++j) {
        tau_product = tau_product * b.w({atom::tau(j)});
        b.check(idx_name("tau_j^2 = 1", {{"j", j}}), b.w({atom::tau(j), atom::tau(j)}), b.one());
        for (int k = j + 1; k <= N; ++k) {
            b.check(idx_name("tau_j tau_k = tau_k tau_j", {{"j", j}, {"k", k}}), b.w({atom::tau(j), atom::tau(k)}),
                    b.w({atom::tau(k), atom::tau(j)}));
        }
        for (int i = 1; i <= N; ++i) {
            b.check(idx_name("sigma_i tau_j = tau_j sigma_i", {{"i", i}, {"j", j}}), b.w({atom::sigma(i), atom::tau(j)}),
                    b.w({atom::tau(j), atom::sigma(i)}));
            b.check(idx_name("tau_j Theta(e_i) = Theta(e_i) tau_j", {{"i", i}, {"j", j}}),
                    b.w({atom::tau(j), atom::theta(b.eps(i))}), b.w({atom::theta(b.eps(i)), atom::tau(j)}));
        }
    }
    b.check("tau = prod_j tau_j", b.w({atom::parity()}), tau_product);
    b.check("tau^2 = 1", b.w({atom::parity(), atom::parity()}), b.one());
    add_theta_roots(b);
    add_conjugation_table(b);
    add_dq_super(b);

    if (!b.s.is_restricted()) {
        return;
    }
    // restricted quotient: group orders ell (odd ell) or 2 ell (even ell)
    const char_profile cp = char_of(b.s.ctx);
    const bool odd = cp.parity == q_parity::odd_root;
    const int ord = odd ? cp.ell : 2 * cp.ell;
    for (int i = 1; i <= N; ++i) {
        const bool literal_only = odd && sh.odd(i);
        const std::string tag = odd ? "ell" : "2ell";
        b.check(idx_name("sigma_i^" + tag + " = 1", {{"i", i}}), b.w({atom::sigma(i, ord)}), b.one(), literal_only);
        b.check(idx_name("Theta(e_i)^" + tag + " = 1", {{"i", i}}), b.w({atom::theta(b.eps(i).scaled(ord))}), b.one(),
                literal_only);
        if (literal_only) {
            b.check(idx_name("sigma_i^2ell = 1", {{"i", i}}), b.w({atom::sigma(i, 2 * ord)}), b.one());
            b.check(idx_name("Theta(e_i)^2ell = 1", {{"i", i}}), b.w({atom::theta(b.eps(i).scaled(2 * ord))}),
                    b.one());
        }
    }
    if (odd && sh.n > 0) {
        b.rep.notes.push_back("odd-index group orders sigma_j^ell, Theta(e_j)^ell are recorded as diagnostics; "
                              "their eigenvalues -q^{+-1} have order 2 ell");
    }
}

void add_weyl_cross(suite_builder &b)
{
    const shape &sh = b.s.sh;
    const int N = sh.size();
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            b.check(idx_name("Theta(e_i) x_j Theta(-e_i) = theta(e_i,e_j) x_j", {{"i", i}, {"j", j}}),
                    b.w({atom::theta(b.eps(i)), atom::mult_x(j), atom::theta(-b.eps(i))}),
                    b.w({atom::mult_x(j)}).scaled(b.sc(theta_sp(b.eps(i), b.eps(j)))));
            const operator_expr conj = b.w({atom::sigma(i, 1), atom::mult_x(j), atom::sigma(i, -1)});
            const int e = i == j ? 1 : 0;
            if (sh.odd(i) && i == j) {
                b.check(idx_name("sigma_i x_j sigma_i^-1 = q^delta_ij x_j", {{"i", i}, {"j", j}}), conj,
                        b.w({atom::mult_x(j)}).scaled(b.sc(signed_pow{1, e})), true);
                b.check(idx_name("sigma_i x_i sigma_i^-1 = -q x_i (odd i)", {{"i", i}}), conj,
                        b.w({atom::mult_x(j)}).scaled(b.sc(signed_pow{-1, 1})));
            } else {
                b.check(idx_name("sigma_i x_j sigma_i^-1 = q^delta_ij x_j", {{"i", i}, {"j", j}}), conj,
                        b.w({atom::mult_x(j)}).scaled(b.sc(signed_pow{1, e})));
            }
            if (i != j) {
                b.check(idx_name("d_i x_j = theta(e_j,e_i) x_j d_i", {{"i", i}, {"j", j}}),
                        b.w({atom::partial(i), atom::mult_x(j)}),
                        b.w({atom::mult_x(j), atom::partial(i)}).scaled(b.sc(theta_sp(b.eps(j), b.eps(i)))));
                b.check(idx_name("x_i x_j = theta(e_i,e_j) x_j x_i", {{"i", i}, {"j", j}}),
                        b.w({atom::mult_x(i), atom::mult_x(j)}),
                        b.w({atom::mult_x(j), atom::mult_x(i)}).scaled(b.sc(theta_sp(b.eps(i), b.eps(j)))));
            }
        }
        if (sh.even(i)) {
            b.check(idx_name("d_i x_i - q x_i d_i = sigma_i^-1", {{"i", i}}),
                    b.w({atom::partial(i), atom::mult_x(i)}) -
                        b.w({atom::mult_x(i), atom::partial(i)}).scaled(b.sc(signed_pow{1, 1})),
                    b.w({atom::sigma(i, -1)}));
        } else {
            b.check(idx_name("d_i x_i + x_i d_i = 1", {{"i", i}}),
                    b.w({atom::partial(i), atom::mult_x(i)}) + b.w({atom::mult_x(i), atom::partial(i)}), b.one());
            b.check(idx_name("x_i^2 = 0", {{"i", i}}), b.w({atom::mult_x(i), atom::mult_x(i)}), b.zero());
        }
    }
    for (int i = sh.m + 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            b.check(idx_name("tau_i x_j tau_i = (-1)^delta_ij x_j", {{"i", i}, {"j", j}}),
                    b.w({atom::tau(i), atom::mult_x(j), atom::tau(i)}),
                    b.w({atom::mult_x(j)}).scaled(b.sc(i == j ? -1 : 1)));
        }
    }
}

void add_weyl_root(suite_builder &b, bool odd)
{
    const shape &sh = b.s.sh;
    const int N = sh.size();
    const int ell = char_of(b.s.ctx).ell;
    auto xl = [&](int j) { return atom::mult_x_divpow(j, ell); };
    const int flip = odd ? 1 : -1; // q^ell
    for (int j = 1; j <= sh.m; ++j) {
        for (int i = 1; i <= N; ++i) {
            const int theta_sign = (odd || i == j) ? 1 : -1;
            b.check(idx_name(odd ? "Theta(e_i) x_j^(ell) = x_j^(ell) Theta(e_i)"
                                 : (i == j ? "Theta(e_i) x_i^(ell) = x_i^(ell) Theta(e_i)"
                                           : "Theta(e_i) x_j^(ell) = -x_j^(ell) Theta(e_i)"),
                             {{"i", i}, {"j", j}}),
                    b.w({atom::theta(b.eps(i)), xl(j)}),
                    b.w({xl(j), atom::theta(b.eps(i))}).scaled(b.sc(theta_sign)));
            const int sigma_sign = (!odd && i == j) ? -1 : 1;
            b.check(idx_name(sigma_sign < 0 ? "sigma_i x_i^(ell) = -x_i^(ell) sigma_i"
                                            : "sigma_i x_j^(ell) = x_j^(ell) sigma_i",
                             {{"i", i}, {"j", j}}),
                    b.w({atom::sigma(i), xl(j)}), b.w({xl(j), atom::sigma(i)}).scaled(b.sc(sigma_sign)));
            if (sh.odd(i)) {
                b.check(idx_name("tau_i x_j^(ell) = x_j^(ell) tau_i", {{"i", i}, {"j", j}}),
                        b.w({atom::tau(i), xl(j)}), b.w({xl(j), atom::tau(i)}));
            }
            if (i != j) {
                b.check(idx_name(odd ? "d_i x_j^(ell) = x_j^(ell) d_i" : "d_i x_j^(ell) = -x_j^(ell) d_i",
                                 {{"i", i}, {"j", j}}),
                        b.w({atom::partial(i), xl(j)}), b.w({xl(j), atom::partial(i)}).scaled(b.sc(flip)));
            }
            const int x_sign = odd ? 1 : (i == j ? 1 : -1);
            b.check(idx_name(odd ? "x_i x_j^(ell) = x_j^(ell) x_i" : "x_i x_j^(ell) = -(-1)^delta_ij x_j^(ell) x_i",
                             {{"i", i}, {"j", j}}),
                    b.w({atom::mult_x(i), xl(j)}), b.w({xl(j), atom::mult_x(i)}).scaled(b.sc(x_sign)));
        }
        b.check(idx_name(odd ? "d_i x_i^(ell) - x_i^(ell) d_i = x_i^(ell-1) sigma_i^-1"
                             : "d_i x_i^(ell) + x_i^(ell) d_i = x_i^(ell-1) sigma_i^-1",
                         {{"i", j}}),
                b.w({atom::partial(j), xl(j)}) - b.w({xl(j), atom::partial(j)}).scaled(b.sc(flip)),
                b.w({atom::mult_x_divpow(j, ell - 1), atom::sigma(j, -1)}));
    }
}

// pairs/triples of basis monomials with bounded total degree
template <typename F>
void for_pairs(const std::vector<multi_index> &basis, int t_max, F &&f)
{
    for (const auto &u : basis) {
        for (const auto &v : basis) {
            if (u.degree() + v.degree() <= t_max) {
                if (!f(u, v)) {
                    return;
                }
            }
        }
    }
}

super_vector mono(const space_spec &s, const multi_index &a)
{
    return super_vector::monomial(s, a);
}

void add_twisted_leibniz(suite_builder &b)
{
    const space_spec &s = b.s;
    const shape &sh = s.sh;
    const int N = sh.size();
    const auto basis = b.basis_upto(b.t_max);

    // (1) twisted Leibniz rules
    for (int i = 1; i <= N; ++i) {
        const operator_expr d = b.w({atom::partial(i)});
        std::vector<std::pair<std::string, std::pair<operator_expr, operator_expr>>> forms;
        if (sh.even(i)) {
            for (int sg : {1, -1}) {
                forms.push_back({idx_name(sg > 0 ? "Leibniz d_i(uv) = d_i(u) sigma_i^-1(v) + Theta(-e_i)sigma_i(u) d_i(v)"
                                                 : "Leibniz d_i(uv) = d_i(u) sigma_i(v) + Theta(-e_i)sigma_i^-1(u) d_i(v)",
                                          {{"i", i}}),
                                 {b.w({atom::sigma(i, -sg)}), b.w({atom::theta(-b.eps(i)), atom::sigma(i, sg)})}});
            }
        } else {
            forms.push_back({idx_name("Leibniz d_i(uv) = d_i(u) v + Theta(-e_i)tau_i(u) d_i(v)", {{"i", i}}),
                             {b.one(), b.w({atom::theta(-b.eps(i)), atom::tau(i)})}});
        }
        for (const auto &[name, ops] : forms) {
            check_result res{name, true, ""};
            for_pairs(basis, b.t_max, [&](const multi_index &u, const multi_index &v) {
                const super_vector U = mono(s, u), V = mono(s, v);
                const super_vector lhs = apply(d, multiply(U, V));
                const super_vector rhs =
                    multiply(apply(d, U), apply(ops.first, V)) + multiply(apply(ops.second, U), apply(d, V));
                if (lhs != rhs) {
                    res.pass = false;
                    res.witness = "u=" + u.to_string() + " v=" + v.to_string() + ": lhs = " + lhs.to_string() +
                                  ", rhs = " + rhs.to_string();
                    return false;
                }
                return true;
            });
            b.rep.add(res);
        }
    }

    // (2) Theta is a character in its label
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    const multi_index a = b.eps(i).scaled(si), c = b.eps(j).scaled(sj);
                    b.check("Theta(" + a.to_string() + ") Theta(" + c.to_string() + ") = Theta(sum)",
                            b.w({atom::theta(a), atom::theta(c)}), b.w({atom::theta(a + c)}));
                }
            }
        }
    }
    add_theta_roots(b);
    // (3)
    add_conjugation_table(b);

    // (4) associativity and the theta-twisted commutation
    {
        check_result assoc{"associativity u(vw) = (uv)w", true, ""};
        check_result twist{"u(vw) = theta(|u|,|v|) v(uw)", true, ""};
        for (const auto &u : basis) {
            for (const auto &v : basis) {
                for (const auto &x : basis) {
                    if (u.degree() + v.degree() + x.degree() > b.t_max) {
                        continue;
                    }
                    const super_vector U = mono(s, u), V = mono(s, v), X = mono(s, x);
                    const super_vector left = multiply(U, multiply(V, X));
                    if (assoc.pass) {
                        const super_vector right = multiply(multiply(U, V), X);
                        if (left != right) {
                            assoc.pass = false;
                            assoc.witness = u.to_string() + "," + v.to_string() + "," + x.to_string();
                        }
                    }
                    if (twist.pass) {
                        const super_vector right = multiply(V, multiply(U, X)).scaled(theta(u, v, s.ctx));
                        if (left != right) {
                            twist.pass = false;
                            twist.witness = u.to_string() + "," + v.to_string() + "," + x.to_string();
                        }
                    }
                }
            }
        }
        b.rep.add(assoc);
        b.rep.add(twist);
    }

    // (5) u d_i is a twisted derivation with twist Theta(|u| - e_i)
    for (int i = 1; i <= N; ++i) {
        std::vector<int> signs = sh.even(i) ? std::vector<int>{1, -1} : std::vector<int>{0};
        for (int sg : signs) {
            std::string name = sh.even(i) ? (sg > 0 ? "u d_i derivation, twists (Theta(|u|-e_i) sigma_i^-1, sigma_i)"
                                                    : "u d_i derivation, twists (Theta(|u|-e_i) sigma_i, sigma_i^-1)")
                                          : "u d_i derivation, twists (Theta(|u|-e_i) tau_i, 1)";
            check_result res{idx_name(name, {{"i", i}}), true, ""};
            const operator_expr d = b.w({atom::partial(i)});
            const operator_expr right_twist = sh.even(i) ? b.w({atom::sigma(i, sg)}) : b.one();
            for (const auto &u : basis) {
                if (!res.pass) {
                    break;
                }
                const super_vector U = mono(s, u);
                const multi_index lab = u - b.eps(i);
                const operator_expr left_twist = sh.even(i) ? b.w({atom::theta(lab), atom::sigma(i, -sg)})
                                                            : b.w({atom::theta(lab), atom::tau(i)});
                auto D = [&](const super_vector &x) { return multiply(U, apply(d, x)); };
                for_pairs(basis, b.t_max - u.degree(), [&](const multi_index &v, const multi_index &x) {
                    const super_vector V = mono(s, v), X = mono(s, x);
                    const super_vector lhs = D(multiply(V, X));
                    const super_vector rhs =
                        multiply(D(V), apply(right_twist, X)) + multiply(apply(left_twist, V), D(X));
                    if (lhs != rhs) {
                        res.pass = false;
                        res.witness = "u=" + u.to_string() + " v=" + v.to_string() + " w=" + x.to_string();
                        return false;
                    }
                    return true;
                });
            }
            b.rep.add(res);
        }
    }
}

} // namespace

relation_report verify_relation_suite(weyl_suite suite, const space_spec &s, int t_max)
{
    relation_report rep;
    rep.suite = to_string(suite);
    rep.params = {{"space", s.describe()}, {"t_max", std::to_string(t_max)}};
    suite_builder b{s, t_max, rep};
    require_omega(s, suite);
    switch (suite) {
        case weyl_suite::dq_super:
            add_dq_super(b);
            break;
        case weyl_suite::dq_hopf_alg:
            add_dq_hopf_alg(b);
            break;
        case weyl_suite::weyl_generic:
            add_weyl_cross(b);
            add_dq_super(b);
            break;
        case weyl_suite::weyl_odd_root:
        case weyl_suite::weyl_even_root: {
            const bool odd = suite == weyl_suite::weyl_odd_root;
            if (s.ctx->generic()) {
                throw std::invalid_argument(rep.suite + " needs a root-of-unity field");
            }
            const char_profile cp = char_of(s.ctx);
            if (odd != (cp.parity == q_parity::odd_root)) {
                throw std::invalid_argument(rep.suite + " does not match q^ell = " + (odd ? "-1" : "1") +
                                            " for d = " + std::to_string(cp.d));
            }
            if (s.is_restricted()) {
                throw std::invalid_argument(rep.suite + " uses x^(ell), which needs the unrestricted Omega space");
            }
            add_weyl_cross(b);
            add_weyl_root(b, odd);
            break;
        }
        case weyl_suite::twisted_leibniz:
            add_twisted_leibniz(b);
            break;
    }
    return rep;
}

// ---------------------------------------------------------------- smash normal form

group_elem group_elem::one(const shape &s)
{
    group_elem g;
    g.sigma.assign(s.size(), 0);
    g.tau.assign(s.size(), 0);
    g.theta.assign(s.size(), 0);
    return g;
}

namespace
{

int rank_of(const letter &l)
{
    switch (l.kind) {
        case letter_kind::x:
            return 0;
        case letter_kind::group:
            return 1;
        case letter_kind::d:
            return 2;
    }
    return 3;
}

group_elem merge(const group_elem &a, const group_elem &b)
{
    group_elem r = a;
    for (std::size_t k = 0; k < r.sigma.size(); ++k) {
        r.sigma[k] += b.sigma[k];
        r.tau[k] = (r.tau[k] + b.tau[k]) % 2;
        r.theta[k] += b.theta[k];
    }
    return r;
}

// g x_j = chi * x_j g
signed_pow chi_group_x(const shape &sh, const group_elem &g, int j)
{
    const int p = j - 1;
    signed_pow r{1, 0};
    const int a = g.sigma[p];
    if (sh.even(j)) {
        r = r * signed_pow{1, a};
    } else {
        r = r * signed_pow{(a % 2 != 0) ? -1 : 1, a};
        if (g.tau[p] % 2 != 0) {
            r.sign = -r.sign;
        }
    }
    multi_index lab(sh.m, g.theta);
    r = r * theta_sp(lab, multi_index::unit(sh, j));
    return r;
}

// d_i g = psi * g d_i
signed_pow psi_d_group(const shape &sh, const group_elem &g, int i)
{
    const int p = i - 1;
    signed_pow r{1, 0};
    // sigma_i d_i sigma_i^-1 = c d_i  =>  d_i sigma_i^a = c^{-a} sigma_i^a d_i
    const int a = g.sigma[p];
    signed_pow c = sh.odd(i) ? signed_pow{-1, -1} : signed_pow{1, -1};
    r = r * c.pow(-a);
    if (sh.odd(i) && g.tau[p] % 2 != 0) {
        r.sign = -r.sign;
    }
    multi_index lab(sh.m, g.theta);
    r = r * theta_sp(lab, multi_index::unit(sh, i));
    return r;
}

struct pending {
    scalar_q c;
    smash_word w;
};

bool is_identity(const group_elem &g)
{
    for (std::size_t k = 0; k < g.sigma.size(); ++k) {
        if (g.sigma[k] != 0 || g.tau[k] != 0 || g.theta[k] != 0) {
            return false;
        }
    }
    return true;
}

} // namespace

smash_element smash_normal_form(const shape &sh, field ctx, const smash_word &w0)
{
    smash_element out;
    out.sh = sh;
    out.ctx = ctx;
    for (const auto &l : w0) {
        if (l.kind != letter_kind::group && !sh.in_range(l.i)) {
            throw std::invalid_argument("smash_normal_form: letter index out of range");
        }
        if (l.kind == letter_kind::group && l.g.sigma.size() != static_cast<std::size_t>(sh.size())) {
            throw std::invalid_argument("smash_normal_form: group element shape mismatch");
        }
    }
    std::deque<pending> work;
    work.push_back({scalar_q(ctx, 1), w0});
    while (!work.empty()) {
        pending cur = std::move(work.front());
        work.pop_front();
        smash_word &w = cur.w;
        bool rewritten = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            const letter &L = w[k], &R = w[k + 1];
            const int rl = rank_of(L), rr = rank_of(R);
            auto replace = [&](const scalar_q &c, std::vector<letter> mid) {
                smash_word nw(w.begin(), w.begin() + k);
                nw.insert(nw.end(), mid.begin(), mid.end());
                nw.insert(nw.end(), w.begin() + k + 2, w.end());
                work.push_back({cur.c * c, std::move(nw)});
            };
            if (L.kind == letter_kind::group && R.kind == letter_kind::group) {
                replace(scalar_q(ctx, 1), {letter::group(merge(L.g, R.g))});
                rewritten = true;
            } else if (L.kind == R.kind && L.kind != letter_kind::group && L.i == R.i && sh.odd(L.i)) {
                rewritten = true; // x_j^2 = 0 and d_j^2 = 0 for odd j
            } else if (L.kind == R.kind && L.kind != letter_kind::group && L.i > R.i) {
                const signed_pow c = theta_sp(multi_index::unit(sh, L.i), multi_index::unit(sh, R.i));
                replace(c.to_scalar(ctx), {R, L});
                rewritten = true;
            } else if (rl > rr) {
                if (L.kind == letter_kind::group) { // group before x
                    replace(chi_group_x(sh, L.g, R.i).to_scalar(ctx), {R, L});
                } else if (R.kind == letter_kind::group) { // d before group
                    replace(psi_d_group(sh, R.g, L.i).to_scalar(ctx), {R, L});
                } else { // d_i x_j
                    const int i = L.i, j = R.i;
                    if (i != j) {
                        const signed_pow c = theta_sp(multi_index::unit(sh, j), multi_index::unit(sh, i));
                        replace(c.to_scalar(ctx), {R, L});
                    } else if (sh.even(i)) {
                        group_elem g = group_elem::one(sh);
                        g.sigma[i - 1] = -1;
                        replace(scalar_q(ctx, 1), {letter::group(g)});
                        replace(scalar_q::q_power(ctx, 1), {R, L});
                    } else {
                        replace(scalar_q(ctx, 1), {});
                        replace(scalar_q(ctx, -1), {R, L});
                    }
                }
                rewritten = true;
            }
            if (rewritten) {
                break;
            }
        }
        if (rewritten) {
            continue;
        }
        smash_key key;
        key.x.assign(sh.size(), 0);
        key.d.assign(sh.size(), 0);
        key.g = group_elem::one(sh);
        for (const auto &l : w) {
            if (l.kind == letter_kind::x) {
                key.x[l.i - 1] += 1;
            } else if (l.kind == letter_kind::d) {
                key.d[l.i - 1] += 1;
            } else {
                key.g = merge(key.g, l.g);
            }
        }
        auto [it, fresh] = out.terms.emplace(key, cur.c);
        if (!fresh) {
            it->second += cur.c;
            if (it->second.is_zero()) {
                out.terms.erase(it);
            }
        }
    }
    return out;
}

namespace
{

smash_word letters_of(const shape &sh, const smash_key &k)
{
    smash_word w;
    for (int p = 0; p < sh.size(); ++p) {
        for (int c = 0; c < k.x[p]; ++c) {
            w.push_back(letter::x(p + 1));
        }
    }
    if (!is_identity(k.g)) {
        w.push_back(letter::group(k.g));
    }
    for (int p = 0; p < sh.size(); ++p) {
        for (int c = 0; c < k.d[p]; ++c) {
            w.push_back(letter::d(p + 1));
        }
    }
    return w;
}

std::vector<atom> atoms_of(const shape &sh, const smash_word &w)
{
    std::vector<atom> out;
    for (const auto &l : w) {
        switch (l.kind) {
            case letter_kind::x:
                out.push_back(atom::mult_x(l.i));
                break;
            case letter_kind::d:
                out.push_back(atom::partial(l.i));
                break;
            case letter_kind::group:
                for (int p = 0; p < sh.size(); ++p) {
                    if (l.g.sigma[p] != 0) {
                        out.push_back(atom::sigma(p + 1, l.g.sigma[p]));
                    }
                    if (l.g.tau[p] % 2 != 0) {
                        out.push_back(atom::tau(p + 1));
                    }
                }
                if (!is_identity(group_elem{std::vector<int>(sh.size(), 0), std::vector<int>(sh.size(), 0), l.g.theta})) {
                    out.push_back(atom::theta(multi_index(sh.m, l.g.theta)));
                }
                break;
        }
    }
    return out;
}

} // namespace

smash_element smash_multiply(const smash_element &a, const smash_element &b)
{
    if (!(a.sh == b.sh) || a.ctx != b.ctx) {
        throw std::invalid_argument("smash_multiply: shape or field mismatch");
    }
    smash_element out;
    out.sh = a.sh;
    out.ctx = a.ctx;
    for (const auto &[ka, ca] : a.terms) {
        for (const auto &[kb, cb] : b.terms) {
            smash_word w = letters_of(a.sh, ka);
            smash_word wb = letters_of(a.sh, kb);
            w.insert(w.end(), wb.begin(), wb.end());
            smash_element part = smash_normal_form(a.sh, a.ctx, w);
            const scalar_q c = ca * cb;
            for (const auto &[k, v] : part.terms) {
                auto [it, fresh] = out.terms.emplace(k, v * c);
                if (!fresh) {
                    it->second += v * c;
                    if (it->second.is_zero()) {
                        out.terms.erase(it);
                    }
                }
            }
        }
    }
    return out;
}

operator_expr smash_word_operator(const space_spec &s, const smash_word &w)
{
    return operator_expr::of(s, atoms_of(s.sh, w));
}

operator_expr smash_to_operator(const space_spec &s, const smash_element &e)
{
    operator_expr r(s);
    for (const auto &[k, c] : e.terms) {
        r += smash_word_operator(s, letters_of(e.sh, k)).scaled(c);
    }
    return r;
}

std::string smash_element::to_string() const
{
    if (terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : terms) {
        os << (first ? "" : " + ") << "(" << c.to_string() << ")";
        first = false;
        bool any = false;
        for (int p = 0; p < sh.size(); ++p) {
            if (k.x[p]) {
                os << " x" << p + 1 << (k.x[p] > 1 ? "^" + std::to_string(k.x[p]) : "");
                any = true;
            }
        }
        for (int p = 0; p < sh.size(); ++p) {
            if (k.g.sigma[p]) {
                os << " sigma" << p + 1 << (k.g.sigma[p] != 1 ? "^" + std::to_string(k.g.sigma[p]) : "");
                any = true;
            }
        }
        for (int p = 0; p < sh.size(); ++p) {
            if (k.g.tau[p]) {
                os << " tau" << p + 1;
                any = true;
            }
        }
        bool theta_any = false;
        for (int p = 0; p < sh.size(); ++p) {
            theta_any = theta_any || k.g.theta[p] != 0;
        }
        if (theta_any) {
            os << " Theta" << multi_index(sh.m, k.g.theta).to_string();
            any = true;
        }
        for (int p = 0; p < sh.size(); ++p) {
            if (k.d[p]) {
                os << " d" << p + 1 << (k.d[p] > 1 ? "^" + std::to_string(k.d[p]) : "");
                any = true;
            }
        }
        if (!any) {
            os << " 1";
        }
    }
    return os.str();
}

} // namespace qgrass
