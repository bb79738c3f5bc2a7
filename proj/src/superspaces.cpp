#include "qgrass/superspaces.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qgrass
{

std::string to_string(family f)
{
    switch (f) {
        case family::affine:
            return "affine";
        case family::omega:
            return "omega";
        case family::omega_restricted:
            return "omega-restricted";
        case family::dual:
            return "dual";
        case family::dual_restricted:
            return "dual-restricted";
    }
    return "?";
}

family parse_family(const std::string &name)
{
    for (family f : {family::affine, family::omega, family::omega_restricted, family::dual, family::dual_restricted}) {
        if (to_string(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown space family: " + name);
}

space_spec::space_spec(family f, int m, int n, field ctx_) : fam(f), ctx(ctx_)
{
    if (m < 0 || n < 0) {
        throw std::invalid_argument("space_spec: negative rank");
    }
    if (m + n < 1) {
        throw std::invalid_argument("space_spec: m + n must be at least 1");
    }
    sh.m = m;
    sh.n = n;
    if (f == family::omega_restricted || f == family::dual_restricted) {
        if (ctx->generic()) {
            throw std::invalid_argument("restricted family " + to_string(f) + " needs a root-of-unity field");
        }
        const char_profile cp = char_of(ctx);
        if (cp.ell < 3) {
            throw std::invalid_argument("restricted family needs char(q) >= 3");
        }
        sh.restricted_ell = cp.ell;
    }
}

int space_spec::cap(int p) const
{
    if (exterior_pos(p)) {
        return 1;
    }
    return is_restricted() ? sh.restricted_ell - 1 : -1;
}

int space_spec::top_degree() const
{
    if (!is_restricted()) {
        return -1;
    }
    const int ell = sh.restricted_ell;
    return is_dual() ? sh.m + sh.n * (ell - 1) : sh.m * (ell - 1) + sh.n;
}

bool space_spec::valid_index(const multi_index &a) const
{
    if (a.m != sh.m || a.size() != sh.size()) {
        return false;
    }
    for (int p = 0; p < a.size(); ++p) {
        const int c = cap(p);
        if (a.e[p] < 0 || (c >= 0 && a.e[p] > c)) {
            return false;
        }
    }
    return true;
}

std::string space_spec::describe() const
{
    std::ostringstream os;
    os << to_string(fam) << "(" << sh.m << "|" << sh.n << ")";
    os << " over " << qgrass::describe(ctx);
    if (is_restricted()) {
        os << " ell=" << sh.restricted_ell;
    }
    return os.str();
}

// ---------------------------------------------------------------- super_vector

super_vector super_vector::monomial(const space_spec &s, const multi_index &a)
{
    return monomial(s, a, scalar_q(s.ctx, 1));
}

super_vector super_vector::monomial(const space_spec &s, const multi_index &a, const scalar_q &c)
{
    if (!s.valid_index(a)) {
        throw std::invalid_argument("not a basis index of " + s.describe() + ": " + a.to_string());
    }
    super_vector v(s);
    v.add_term(a, c);
    return v;
}

scalar_q super_vector::coeff(const multi_index &a) const
{
    auto it = m_terms.find(a);
    return it == m_terms.end() ? scalar_q(m_space.ctx) : it->second;
}

void super_vector::add_term(const multi_index &a, const scalar_q &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, fresh] = m_terms.emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

void super_vector::check_space(const super_vector &o) const
{
    if (!(m_space == o.m_space)) {
        throw std::invalid_argument("super_vector: space mismatch " + m_space.describe() + " vs " +
                                    o.m_space.describe());
    }
}

super_vector &super_vector::operator+=(const super_vector &o)
{
    check_space(o);
    for (const auto &[a, c] : o.m_terms) {
        add_term(a, c);
    }
    return *this;
}

super_vector &super_vector::operator-=(const super_vector &o)
{
    check_space(o);
    for (const auto &[a, c] : o.m_terms) {
        add_term(a, -c);
    }
    return *this;
}

super_vector super_vector::scaled(const scalar_q &c) const
{
    super_vector r(m_space);
    if (c.is_zero()) {
        return r;
    }
    for (const auto &[a, x] : m_terms) {
        r.m_terms.emplace_hint(r.m_terms.end(), a, x * c);
    }
    return r;
}

super_vector super_vector::degree_part(int t) const
{
    super_vector r(m_space);
    for (const auto &[a, c] : m_terms) {
        if (a.degree() == t) {
            r.m_terms.emplace_hint(r.m_terms.end(), a, c);
        }
    }
    return r;
}

int super_vector::homogeneous_degree() const
{
    int d = -1;
    for (const auto &[a, c] : m_terms) {
        if (d < 0) {
            d = a.degree();
        } else if (a.degree() != d) {
            throw std::invalid_argument("super_vector is not homogeneous");
        }
    }
    return d;
}

std::string super_vector::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[a, c] : m_terms) {
        os << (first ? "" : " + ") << "(" << c.to_string() << ")*" << a.to_string();
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- multiplication

namespace
{

// divided-power factor q^{sign * a*b} prod [a_p + b_p over a_p] over positions [lo, hi)
bool divided_part(const space_spec &s, const multi_index &a, const multi_index &b, int lo, int hi, int sign,
                  int &qexp, scalar_q &coeff)
{
    for (int p = lo; p < hi; ++p) {
        const int sum = a.e[p] + b.e[p];
        if (s.is_restricted() && sum >= s.ell()) {
            return false;
        }
        if (a.e[p] > 0 && b.e[p] > 0) {
            coeff *= q_binom(sum, a.e[p], s.ctx);
            if (coeff.is_zero()) {
                return false;
            }
        }
    }
    qexp += sign * star_range(a, b, lo, hi);
    return true;
}

bool exterior_overflow(const multi_index &a, const multi_index &b, int lo, int hi)
{
    for (int p = lo; p < hi; ++p) {
        if (a.e[p] + b.e[p] > 1) {
            return true;
        }
    }
    return false;
}

} // namespace

monomial_product multiply_monomials(const space_spec &s, const multi_index &a, const multi_index &b)
{
    monomial_product out;
    const int m = s.m(), size = s.sh.size();
    int sign = 1, qexp = 0;
    scalar_q coeff(s.ctx, 1);
    switch (s.fam) {
        case family::affine: {
            if (exterior_overflow(a, b, m, size)) {
                return out;
            }
            if (star_range(a, b, m, size) % 2 != 0) {
                sign = -sign;
            }
            qexp = star(a, b);
            break;
        }
        case family::omega:
        case family::omega_restricted: {
            if (exterior_overflow(a, b, m, size)) {
                return out;
            }
            // q^{|mu||beta|}
            qexp += a.odd_degree() * b.even_degree();
            if (!divided_part(s, a, b, 0, m, 1, qexp, coeff)) {
                return out;
            }
            // (-q)^{mu*nu}
            const int mn = star_range(a, b, m, size);
            qexp += mn;
            if (mn % 2 != 0) {
                sign = -sign;
            }
            break;
        }
        case family::dual:
        case family::dual_restricted: {
            if (exterior_overflow(a, b, 0, m)) {
                return out;
            }
            // (-q)^{-|alpha||nu|}, alpha the divided part of a, nu the exterior part of b
            const int an = a.odd_degree() * b.even_degree();
            qexp -= an;
            if (an % 2 != 0) {
                sign = -sign;
            }
            const int mn = star_range(a, b, 0, m);
            qexp -= mn;
            if (mn % 2 != 0) {
                sign = -sign;
            }
            if (!divided_part(s, a, b, m, size, -1, qexp, coeff)) {
                return out;
            }
            break;
        }
    }
    out.zero = false;
    out.coeff = coeff.times_q_power(qexp, sign);
    out.index = a + b;
    return out;
}

super_vector multiply(const super_vector &u, const super_vector &v)
{
    if (!(u.space() == v.space())) {
        throw std::invalid_argument("multiply: space mismatch");
    }
    const space_spec &s = u.space();
    super_vector r(s);
    for (const auto &[a, ca] : u.terms()) {
        for (const auto &[b, cb] : v.terms()) {
            monomial_product p = multiply_monomials(s, a, b);
            if (!p.zero) {
                r.add_term(p.index, p.coeff * ca * cb);
            }
        }
    }
    return r;
}

super_vector parity_map(const super_vector &u)
{
    const space_spec &s = u.space();
    if (s.fam == family::affine) {
        throw std::invalid_argument("parity_map: unsupported family affine");
    }
    super_vector r(s);
    for (const auto &[a, c] : u.terms()) {
        // I1 positions hold mu on the Omega side and the divided part alpha on the dual side
        r.add_term(a, a.odd_degree() % 2 ? -c : c);
    }
    return r;
}

std::vector<multi_index> basis_of_degree(const space_spec &s, int t)
{
    std::vector<multi_index> out;
    if (t < 0) {
        return out;
    }
    const int size = s.sh.size();
    multi_index cur = multi_index::zero(s.sh);
    std::function<void(int, int)> rec = [&](int p, int left) {
        if (p == size) {
            if (left == 0) {
                out.push_back(cur);
            }
            return;
        }
        const int c = s.cap(p);
        const int hi = c < 0 ? left : std::min(c, left);
        for (int x = 0; x <= hi; ++x) {
            cur.e[p] = x;
            rec(p + 1, left - x);
        }
        cur.e[p] = 0;
    };
    rec(0, t);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qgrass
