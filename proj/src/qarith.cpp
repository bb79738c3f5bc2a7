#include "qgrass/qarith.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qgrass
{

// ---------------------------------------------------------------- laurent_poly

laurent_poly laurent_poly::constant(const rational &c)
{
    return monomial(0, c);
}

laurent_poly laurent_poly::monomial(int e, const rational &c)
{
    laurent_poly p;
    if (c != 0) {
        p.m_terms.emplace(e, c);
    }
    return p;
}

bool laurent_poly::is_constant() const
{
    return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first == 0);
}

int laurent_poly::low_degree() const
{
    if (m_terms.empty()) {
        throw std::domain_error("laurent_poly: degree of zero");
    }
    return m_terms.begin()->first;
}

int laurent_poly::high_degree() const
{
    if (m_terms.empty()) {
        throw std::domain_error("laurent_poly: degree of zero");
    }
    return m_terms.rbegin()->first;
}

rational laurent_poly::coeff(int e) const
{
    auto it = m_terms.find(e);
    return it == m_terms.end() ? rational(0) : it->second;
}

void laurent_poly::add_term(int e, const rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, fresh] = m_terms.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

laurent_poly laurent_poly::operator-() const
{
    laurent_poly r = *this;
    for (auto &[e, c] : r.m_terms) {
        c = -c;
    }
    return r;
}

laurent_poly &laurent_poly::operator+=(const laurent_poly &o)
{
    for (const auto &[e, c] : o.m_terms) {
        add_term(e, c);
    }
    return *this;
}

laurent_poly &laurent_poly::operator-=(const laurent_poly &o)
{
    for (const auto &[e, c] : o.m_terms) {
        add_term(e, -c);
    }
    return *this;
}

laurent_poly operator*(const laurent_poly &a, const laurent_poly &b)
{
    laurent_poly r;
    for (const auto &[ea, ca] : a.m_terms) {
        for (const auto &[eb, cb] : b.m_terms) {
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

laurent_poly laurent_poly::scaled(const rational &c) const
{
    if (c == 0) {
        return {};
    }
    laurent_poly r = *this;
    for (auto &[e, x] : r.m_terms) {
        x *= c;
    }
    return r;
}

laurent_poly laurent_poly::shifted(int k) const
{
    laurent_poly r;
    for (const auto &[e, c] : m_terms) {
        r.m_terms.emplace_hint(r.m_terms.end(), e + k, c);
    }
    return r;
}

laurent_poly laurent_poly::inverted_variable() const
{
    laurent_poly r;
    for (const auto &[e, c] : m_terms) {
        r.m_terms.emplace(-e, c);
    }
    return r;
}

std::string laurent_poly::to_string(const std::string &var) const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
        const int e = it->first;
        rational c = it->second;
        const bool neg = c < 0;
        if (neg) {
            c = -c;
        }
        if (first) {
            os << (neg ? "-" : "");
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) {
            os << c.get_str() << "*";
        }
        os << var;
        if (e != 1) {
            os << "^" << e;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- dense helpers

namespace
{

using dpoly = std::vector<rational>;

void trim(dpoly &p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

// p must have no negative exponents after shifting by -low
dpoly to_dense(const laurent_poly &p, int shift)
{
    dpoly r;
    for (const auto &[e, c] : p.terms()) {
        const int k = e + shift;
        if (k < 0) {
            throw std::logic_error("to_dense: negative exponent");
        }
        if (static_cast<int>(r.size()) <= k) {
            r.resize(k + 1);
        }
        r[k] = c;
    }
    trim(r);
    return r;
}

laurent_poly from_dense(const dpoly &p, int shift = 0)
{
    laurent_poly r;
    for (std::size_t k = 0; k < p.size(); ++k) {
        r.add_term(static_cast<int>(k) + shift, p[k]);
    }
    return r;
}

dpoly dmul(const dpoly &a, const dpoly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    dpoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

dpoly dsub(dpoly a, const dpoly &b)
{
    if (a.size() < b.size()) {
        a.resize(b.size());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
    return a;
}

void ddivmod(const dpoly &a, const dpoly &b, dpoly &quo, dpoly &rem)
{
    if (b.empty()) {
        throw std::domain_error("polynomial division by zero");
    }
    rem = a;
    trim(rem);
    quo.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, rational(0));
    const rational &lead = b.back();
    while (rem.size() >= b.size()) {
        const std::size_t shift = rem.size() - b.size();
        const rational c = rem.back() / lead;
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            rem[i + shift] -= c * b[i];
        }
        rem.pop_back();
        trim(rem);
    }
    trim(quo);
}

dpoly make_monic(dpoly p)
{
    if (p.empty()) {
        return p;
    }
    const rational lead = p.back();
    for (auto &c : p) {
        c /= lead;
    }
    return p;
}

dpoly dgcd(dpoly a, dpoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        dpoly q, r;
        ddivmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// returns s with s*a = g (mod m), g = gcd(a, m) made monic
dpoly dinverse_mod(const dpoly &a, const dpoly &m)
{
    dpoly r0 = m, r1 = a, s0, s1 = {rational(1)};
    trim(r1);
    while (!r1.empty()) {
        dpoly q, r;
        ddivmod(r0, r1, q, r);
        dpoly s = dsub(s0, dmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) {
        throw std::domain_error("residue is not invertible");
    }
    for (auto &c : s0) {
        c /= r0[0];
    }
    return s0;
}

int positive_mod(int a, int d)
{
    const int r = a % d;
    return r < 0 ? r + d : r;
}

// Phi_d = (v^d - 1) / prod_{e | d, e < d} Phi_e
dpoly cyclotomic(int d)
{
    dpoly num(d + 1);
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) {
            continue;
        }
        dpoly q, r;
        ddivmod(num, cyclotomic(e), q, r);
        if (!r.empty()) {
            throw std::logic_error("cyclotomic division left a remainder");
        }
        num = std::move(q);
    }
    return num;
}

std::unique_ptr<field_ctx> make_root_field(int d)
{
    auto f = std::make_unique<field_ctx>();
    f->d = d;
    dpoly num = cyclotomic(d);
    f->phi = num;
    f->phi_deg = static_cast<int>(num.size()) - 1;
    f->vpow.resize(d);
    for (int k = 0; k < d; ++k) {
        dpoly vk(k + 1);
        vk[k] = 1;
        dpoly q, r;
        ddivmod(vk, f->phi, q, r);
        r.resize(f->phi_deg);
        f->vpow[k] = std::move(r);
    }
    return f;
}

std::mutex &field_mutex()
{
    static std::mutex mtx;
    return mtx;
}

std::map<int, std::unique_ptr<field_ctx>> &field_table()
{
    static std::map<int, std::unique_ptr<field_ctx>> table;
    return table;
}

// residue of an arbitrary Laurent polynomial in Q[v]/Phi_d
laurent_poly reduce_root(field f, const laurent_poly &p)
{
    dpoly acc(f->phi_deg);
    for (const auto &[e, c] : p.terms()) {
        const auto &row = f->vpow[positive_mod(e, f->d)];
        for (int k = 0; k < f->phi_deg; ++k) {
            if (row[k] != 0) {
                acc[k] += c * row[k];
            }
        }
    }
    return from_dense(acc);
}

// reduced fraction num/den in Q(v): den a monic polynomial with nonzero constant term
void normalize_generic(laurent_poly &num, laurent_poly &den)
{
    if (den.is_zero()) {
        throw std::domain_error("division by zero in Q(v)");
    }
    if (num.is_zero()) {
        den = laurent_poly::constant(1);
        return;
    }
    if (den.terms().size() == 1) {
        const auto &[e, c] = *den.terms().begin();
        num = num.shifted(-e).scaled(1 / c);
        den = laurent_poly::constant(1);
        return;
    }
    const int dlow = den.low_degree();
    const int nlow = num.low_degree();
    dpoly dd = to_dense(den, -dlow);
    dpoly nd = to_dense(num, -nlow);
    int nshift = nlow - dlow;
    dpoly g = dgcd(nd, dd);
    if (g.size() > 1) {
        dpoly q, r;
        ddivmod(nd, g, q, r);
        nd = std::move(q);
        ddivmod(dd, g, q, r);
        dd = std::move(q);
    }
    const rational lead = dd.back();
    for (auto &c : dd) {
        c /= lead;
    }
    for (auto &c : nd) {
        c /= lead;
    }
    num = from_dense(nd, nshift);
    den = from_dense(dd);
}

} // namespace

field generic_field()
{
    static const field_ctx g{};
    return &g;
}

field root_field(int d)
{
    if (d < 3) {
        throw std::invalid_argument("root of unity order must be >= 3 (q = +-1 excluded), got " + std::to_string(d));
    }
    {
        std::lock_guard<std::mutex> lock(field_mutex());
        auto it = field_table().find(d);
        if (it != field_table().end()) {
            return it->second.get();
        }
    }
    auto made = make_root_field(d);
    std::lock_guard<std::mutex> lock(field_mutex());
    auto [it, fresh] = field_table().emplace(d, std::move(made));
    return it->second.get();
}

std::string describe(field f)
{
    return f->generic() ? "generic" : "root(d=" + std::to_string(f->d) + ")";
}

// ---------------------------------------------------------------- scalar_q

scalar_q::scalar_q() : m_field(generic_field()), m_den(laurent_poly::constant(1)) {}

scalar_q::scalar_q(field f, long c) : scalar_q(f, rational(c)) {}

scalar_q::scalar_q(field f, const rational &c)
    : m_field(f), m_num(laurent_poly::constant(c)), m_den(laurent_poly::constant(1))
{
}

scalar_q scalar_q::from_poly(field f, const laurent_poly &p)
{
    scalar_q r(f);
    r.m_num = f->generic() ? p : reduce_root(f, p);
    return r;
}

scalar_q scalar_q::fraction(field f, const laurent_poly &num, const laurent_poly &den)
{
    if (!f->generic()) {
        return from_poly(f, num) / from_poly(f, den);
    }
    scalar_q r(f);
    r.m_num = num;
    r.m_den = den;
    normalize_generic(r.m_num, r.m_den);
    return r;
}

scalar_q scalar_q::q_power(field f, int e, int sign)
{
    return from_poly(f, laurent_poly::monomial(e, sign));
}

bool scalar_q::is_one() const
{
    return m_den.is_constant() && m_num == laurent_poly::constant(1);
}

void scalar_q::check_same(const scalar_q &o) const
{
    if (m_field != o.m_field) {
        throw std::invalid_argument("scalar_q: mixed coefficient fields " + describe(m_field) + " and " +
                                    describe(o.m_field));
    }
}

scalar_q scalar_q::operator-() const
{
    scalar_q r = *this;
    r.m_num = -r.m_num;
    return r;
}

scalar_q &scalar_q::operator+=(const scalar_q &o)
{
    check_same(o);
    if (m_den == o.m_den) {
        m_num += o.m_num;
        if (!m_den.is_constant()) {
            normalize_generic(m_num, m_den);
        }
        return *this;
    }
    m_num = m_num * o.m_den + o.m_num * m_den;
    m_den = m_den * o.m_den;
    normalize_generic(m_num, m_den);
    return *this;
}

scalar_q &scalar_q::operator-=(const scalar_q &o)
{
    return *this += -o;
}

scalar_q &scalar_q::operator*=(const scalar_q &o)
{
    check_same(o);
    if (!m_field->generic()) {
        m_num = reduce_root(m_field, m_num * o.m_num);
        return *this;
    }
    m_num = m_num * o.m_num;
    if (m_den.is_constant() && o.m_den.is_constant()) {
        return *this;
    }
    m_den = m_den * o.m_den;
    normalize_generic(m_num, m_den);
    return *this;
}

scalar_q scalar_q::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("scalar_q: inverse of zero");
    }
    if (!m_field->generic()) {
        const int low = 0;
        dpoly inv = dinverse_mod(to_dense(m_num, low), m_field->phi);
        scalar_q r(m_field);
        r.m_num = from_dense(inv);
        return r;
    }
    scalar_q r(m_field);
    r.m_num = m_den;
    r.m_den = m_num;
    normalize_generic(r.m_num, r.m_den);
    return r;
}

scalar_q &scalar_q::operator/=(const scalar_q &o)
{
    check_same(o);
    return *this *= o.inverse();
}

scalar_q scalar_q::pow(int k) const
{
    if (k < 0) {
        return inverse().pow(-k);
    }
    scalar_q r(m_field, 1);
    scalar_q b = *this;
    while (k > 0) {
        if (k & 1) {
            r *= b;
        }
        b *= b;
        k >>= 1;
    }
    return r;
}

scalar_q scalar_q::times_q_power(int e, int sign) const
{
    scalar_q r = *this;
    if (m_field->generic()) {
        r.m_num = r.m_num.shifted(e);
        if (sign < 0) {
            r.m_num = -r.m_num;
        }
        if (!r.m_den.is_constant()) {
            normalize_generic(r.m_num, r.m_den);
        }
        return r;
    }
    laurent_poly p = m_num.shifted(e);
    if (sign < 0) {
        p = -p;
    }
    r.m_num = reduce_root(m_field, p);
    return r;
}

bool scalar_q::operator==(const scalar_q &o) const
{
    return m_field == o.m_field && m_num == o.m_num && m_den == o.m_den;
}

std::string scalar_q::to_string() const
{
    if (!m_field->generic()) {
        std::ostringstream os;
        os << "[";
        for (int k = 0; k < m_field->phi_deg; ++k) {
            os << (k ? "," : "") << m_num.coeff(k).get_str();
        }
        os << "]";
        return os.str();
    }
    if (m_den.is_constant()) {
        return m_num.to_string();
    }
    return "(" + m_num.to_string() + ")/(" + m_den.to_string() + ")";
}

// ---------------------------------------------------------------- signed_pow

bool signed_pow::same_value(const signed_pow &o, field f) const
{
    return to_scalar(f) == o.to_scalar(f);
}

std::string signed_pow::to_string() const
{
    std::string s = sign < 0 ? "-" : "";
    return s + "q^" + std::to_string(e);
}

// ---------------------------------------------------------------- q-combinatorics

namespace
{

template <typename Key>
struct poly_cache {
    std::mutex mtx;
    std::map<Key, std::unique_ptr<laurent_poly>> table;
};

laurent_poly v_minus_vinv(int k)
{
    laurent_poly p = laurent_poly::monomial(k, 1);
    p.add_term(-k, -1);
    return p;
}

// exact quotient a/b of Laurent polynomials, which must divide
laurent_poly exact_divide(const laurent_poly &a, const laurent_poly &b)
{
    if (a.is_zero()) {
        return {};
    }
    const int alow = a.low_degree(), blow = b.low_degree();
    dpoly q, r;
    ddivmod(to_dense(a, -alow), to_dense(b, -blow), q, r);
    if (!r.empty()) {
        throw std::logic_error("exact_divide: not divisible");
    }
    return from_dense(q, alow - blow);
}

scalar_q specialize(const laurent_poly &p, field f)
{
    return scalar_q::from_poly(f, p);
}

} // namespace

scalar_q q_int(int n, field f)
{
    laurent_poly p;
    const int a = n < 0 ? -n : n;
    for (int k = 0; k < a; ++k) {
        p.add_term(a - 1 - 2 * k, n < 0 ? -1 : 1);
    }
    return specialize(p, f);
}

scalar_q q_factorial(int n, field f)
{
    if (n < 0) {
        throw std::invalid_argument("q_factorial of negative integer");
    }
    scalar_q r(f, 1);
    for (int k = 1; k <= n; ++k) {
        r *= q_int(k, f);
    }
    return r;
}

const laurent_poly &q_binom_poly(int s, int r)
{
    static poly_cache<std::pair<int, int>> cache;
    const auto key = std::make_pair(s, r);
    {
        std::lock_guard<std::mutex> lock(cache.mtx);
        auto it = cache.table.find(key);
        if (it != cache.table.end()) {
            return *it->second;
        }
    }
    laurent_poly value;
    if (r == 0) {
        value = laurent_poly::constant(1);
    } else if (r > 0) {
        laurent_poly num = laurent_poly::constant(1), den = laurent_poly::constant(1);
        for (int i = 1; i <= r; ++i) {
            num = num * v_minus_vinv(s - i + 1);
            den = den * v_minus_vinv(i);
        }
        value = exact_divide(num, den);
    }
    std::lock_guard<std::mutex> lock(cache.mtx);
    auto [it, fresh] = cache.table.emplace(key, std::make_unique<laurent_poly>(std::move(value)));
    return *it->second;
}

const laurent_poly &q_binom_unbalanced_poly(int p, int r)
{
    static poly_cache<std::pair<int, int>> cache;
    if (r < 0 || p < 0 || r > p) {
        throw std::invalid_argument("q_binom_unbalanced requires 0 <= r <= p");
    }
    const auto key = std::make_pair(p, r);
    {
        std::lock_guard<std::mutex> lock(cache.mtx);
        auto it = cache.table.find(key);
        if (it != cache.table.end()) {
            return *it->second;
        }
    }
    laurent_poly value;
    if (r == 0 || r == p) {
        value = laurent_poly::constant(1);
    } else {
        value = q_binom_unbalanced_poly(p - 1, r - 1) + q_binom_unbalanced_poly(p - 1, r).shifted(r);
    }
    std::lock_guard<std::mutex> lock(cache.mtx);
    auto [it, fresh] = cache.table.emplace(key, std::make_unique<laurent_poly>(std::move(value)));
    return *it->second;
}

scalar_q q_binom(int s, int r, field f)
{
    if (r < 0) {
        return scalar_q(f);
    }
    if (f->generic()) {
        return specialize(q_binom_poly(s, r), f);
    }
    static std::mutex mtx;
    static std::map<std::tuple<int, int, int>, scalar_q> cache;
    const auto key = std::make_tuple(f->d, s, r);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    scalar_q value = specialize(q_binom_poly(s, r), f);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, value);
    return value;
}

scalar_q q_binom_unbalanced(int p, int r, field f)
{
    return specialize(q_binom_unbalanced_poly(p, r), f);
}

std::string to_string(q_parity p)
{
    switch (p) {
        case q_parity::generic_q:
            return "generic";
        case q_parity::odd_root:
            return "odd_root";
        case q_parity::even_root:
            return "even_root";
    }
    return "?";
}

char_profile char_of(field f)
{
    char_profile c;
    if (f->generic()) {
        return c;
    }
    const int d = f->d;
    if (d <= 2) {
        throw std::invalid_argument("char_of: q = +-1 is excluded");
    }
    int scanned = 0;
    for (int k = 1; k <= d; ++k) {
        if (q_int(k, f).is_zero()) {
            scanned = k;
            break;
        }
    }
    const int expected = (d % 2 == 1) ? d : d / 2;
    if (scanned != expected) {
        throw std::logic_error("char_of: scan gives " + std::to_string(scanned) + ", order rule gives " +
                               std::to_string(expected));
    }
    c.ell = expected;
    c.d = d;
    c.parity = (d % 2 == 1) ? q_parity::odd_root : q_parity::even_root;
    return c;
}

long long binom(long long a, long long b)
{
    if (b < 0) {
        return 0;
    }
    if (b == 0) {
        return 1;
    }
    // falling factorial a(a-1)...(a-b+1)/b!, exact at every step
    long long r = 1;
    for (long long i = 0; i < b; ++i) {
        r = r * (a - i) / (i + 1);
    }
    return r;
}

} // namespace qgrass
