#include "qgrass/indices.hpp"

#include <sstream>
#include <stdexcept>

namespace qgrass
{

namespace
{

void check_shapes(const multi_index &a, const multi_index &b)
{
    if (a.m != b.m || a.e.size() != b.e.size()) {
        throw std::invalid_argument("multi_index shape mismatch: " + a.to_string() + " vs " + b.to_string());
    }
}

} // namespace

multi_index multi_index::zero(const shape &s)
{
    return multi_index(s.m, std::vector<int>(s.size(), 0));
}

multi_index multi_index::unit(const shape &s, int i)
{
    if (!s.in_range(i)) {
        throw std::invalid_argument("unit index out of range: " + std::to_string(i));
    }
    multi_index r = zero(s);
    r[i] = 1;
    return r;
}

int multi_index::degree() const
{
    int d = 0;
    for (int x : e) {
        d += x;
    }
    return d;
}

int multi_index::even_degree() const
{
    int d = 0;
    for (int k = 0; k < m; ++k) {
        d += e[k];
    }
    return d;
}

int multi_index::odd_degree() const
{
    return degree() - even_degree();
}

multi_index multi_index::operator+(const multi_index &o) const
{
    check_shapes(*this, o);
    multi_index r = *this;
    for (std::size_t k = 0; k < e.size(); ++k) {
        r.e[k] += o.e[k];
    }
    return r;
}

multi_index multi_index::operator-(const multi_index &o) const
{
    return *this + (-o);
}

multi_index multi_index::operator-() const
{
    return scaled(-1);
}

multi_index multi_index::scaled(int k) const
{
    multi_index r = *this;
    for (auto &x : r.e) {
        x *= k;
    }
    return r;
}

std::string multi_index::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (int k = 0; k < m; ++k) {
        os << (k ? "," : "") << e[k];
    }
    os << " | ";
    for (int k = m; k < size(); ++k) {
        os << (k > m ? "," : "") << e[k];
    }
    os << ")";
    return os.str();
}

multi_index parse_multi_index(const std::string &text)
{
    const auto open = text.find('('), bar = text.find('|'), close = text.find(')');
    if (open == std::string::npos || bar == std::string::npos || close == std::string::npos || !(open < bar && bar < close)) {
        throw std::invalid_argument("multi-index must look like (a1,...,am | f1,...,fn): " + text);
    }
    auto parse_list = [&](const std::string &part) {
        std::vector<int> out;
        std::string tok;
        std::istringstream is(part);
        while (std::getline(is, tok, ',')) {
            const auto b = tok.find_first_not_of(" \t");
            if (b == std::string::npos) {
                continue;
            }
            out.push_back(std::stoi(tok.substr(b)));
        }
        return out;
    };
    auto bos = parse_list(text.substr(open + 1, bar - open - 1));
    auto fer = parse_list(text.substr(bar + 1, close - bar - 1));
    multi_index r;
    r.m = static_cast<int>(bos.size());
    r.e = bos;
    r.e.insert(r.e.end(), fer.begin(), fer.end());
    return r;
}

int star_range(const multi_index &a, const multi_index &b, int lo, int hi)
{
    check_shapes(a, b);
    int total = 0, prefix = 0;
    for (int k = lo; k < hi; ++k) {
        total += a.e[k] * prefix;
        prefix += b.e[k];
    }
    return total;
}

int star(const multi_index &a, const multi_index &b)
{
    return star_range(a, b, 0, a.size());
}

signed_pow theta_sp(const multi_index &a, const multi_index &b)
{
    check_shapes(a, b);
    const int odd_part = star_range(a, b, a.m, a.size()) - star_range(b, a, a.m, a.size());
    return {(odd_part % 2 != 0) ? -1 : 1, star(a, b) - star(b, a)};
}

scalar_q theta(const multi_index &a, const multi_index &b, field f)
{
    return theta_sp(a, b).to_scalar(f);
}

multi_index fundamental_weight(const shape &s, int k)
{
    multi_index r = multi_index::zero(s);
    for (int i = 1; i <= k; ++i) {
        r[i] = 1;
    }
    return r;
}

} // namespace qgrass
