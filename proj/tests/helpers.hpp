#ifndef QGRASS_TEST_HELPERS_HPP
#define QGRASS_TEST_HELPERS_HPP

#include "qgrass/qarith.hpp"
#include "qgrass/report.hpp"

#include <complex>
#include <functional>
#include <random>
#include <string>

namespace qtest
{

using namespace qgrass;

inline laurent_poly lp(std::initializer_list<std::pair<int, long>> terms)
{
    laurent_poly p;
    for (const auto &[e, c] : terms) {
        p.add_term(e, rational(c));
    }
    return p;
}

inline scalar_q sq(field f, std::initializer_list<std::pair<int, long>> terms)
{
    return scalar_q::from_poly(f, lp(terms));
}

// first failing relation, for readable test output
inline std::string failures(const relation_report &r)
{
    std::string out;
    for (const auto &c : r.relations) {
        if (!c.pass) {
            out += c.name + " :: " + c.witness.substr(0, 300) + "\n";
        }
    }
    return out;
}

inline laurent_poly random_poly(std::mt19937 &rng, int span = 3, int coeff = 4)
{
    std::uniform_int_distribution<int> e(-span, span), c(-coeff, coeff), k(1, 3);
    laurent_poly p;
    const int terms = k(rng);
    for (int i = 0; i < terms; ++i) {
        p.add_term(e(rng), rational(c(rng)));
    }
    return p;
}

inline scalar_q random_scalar(std::mt19937 &rng, field f)
{
    laurent_poly num = random_poly(rng);
    if (f->generic()) {
        laurent_poly den = random_poly(rng, 2, 3);
        if (den.is_zero()) {
            den = lp({{0, 1}});
        }
        return scalar_q::fraction(f, num, den);
    }
    return scalar_q::from_poly(f, num);
}

// complex value of a residue at q = exp(2 pi i / d)
inline std::complex<double> at_root(const scalar_q &x, int d)
{
    const std::complex<double> q = std::polar(1.0, 2 * M_PI / d);
    auto eval = [&](const laurent_poly &p) {
        std::complex<double> s = 0;
        for (const auto &[e, c] : p.terms()) {
            s += c.get_d() * std::pow(q, e);
        }
        return s;
    };
    return eval(x.numerator()) / eval(x.denominator());
}

} // namespace qtest

#endif
