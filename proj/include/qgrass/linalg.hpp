#ifndef QGRASS_LINALG_HPP
#define QGRASS_LINALG_HPP

#include "qgrass/superspaces.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qgrass
{

// Incremental reduced echelon form over sparse rows. The pivot of a row is its
// smallest key, so results follow the fixed key order.
template <class Key>
class echelon
{
public:
    using row = std::map<Key, scalar_q>;

    // reduce v against the stored rows; the remainder is returned
    row reduce(row v) const
    {
        for (const auto &[piv, r] : m_rows) {
            auto it = v.find(piv);
            if (it == v.end()) {
                continue;
            }
            const scalar_q c = it->second;
            for (const auto &[k, x] : r) {
                auto [jt, fresh] = v.emplace(k, -(c * x));
                if (!fresh) {
                    jt->second -= c * x;
                    if (jt->second.is_zero()) {
                        v.erase(jt);
                    }
                }
            }
        }
        return v;
    }

    // true when v enlarged the span
    bool insert(const row &v)
    {
        row r = reduce(v);
        if (r.empty()) {
            return false;
        }
        const Key piv = r.begin()->first;
        const scalar_q inv = r.begin()->second.inverse();
        for (auto &[k, x] : r) {
            x *= inv;
        }
        // keep the stored rows fully reduced
        for (auto &[p, other] : m_rows) {
            auto it = other.find(piv);
            if (it == other.end()) {
                continue;
            }
            const scalar_q c = it->second;
            for (const auto &[k, x] : r) {
                auto [jt, fresh] = other.emplace(k, -(c * x));
                if (!fresh) {
                    jt->second -= c * x;
                    if (jt->second.is_zero()) {
                        other.erase(jt);
                    }
                }
            }
        }
        m_rows.emplace(piv, std::move(r));
        return true;
    }

    int rank() const { return static_cast<int>(m_rows.size()); }
    const std::map<Key, row> &rows() const { return m_rows; }

private:
    std::map<Key, row> m_rows;
};

// Kernel of the linear map sending the j-th domain basis vector to cols[j].
// Returned vectors are coefficient lists over the domain basis.
template <class Key>
std::vector<std::vector<scalar_q>> kernel(const std::vector<std::map<Key, scalar_q>> &cols, field ctx)
{
    const int n = static_cast<int>(cols.size());
    // rows of the matrix, indexed by codomain key, entries by column
    std::map<Key, std::map<int, scalar_q>> rows;
    for (int j = 0; j < n; ++j) {
        for (const auto &[k, x] : cols[j]) {
            rows[k].emplace(j, x);
        }
    }
    echelon<int> e;
    for (const auto &[k, r] : rows) {
        e.insert(r);
    }
    std::vector<bool> pivot(n, false);
    for (const auto &[p, r] : e.rows()) {
        pivot[p] = true;
    }
    std::vector<std::vector<scalar_q>> out;
    for (int f = 0; f < n; ++f) {
        if (pivot[f]) {
            continue;
        }
        std::vector<scalar_q> v(n, scalar_q(ctx));
        v[f] = scalar_q(ctx, 1);
        for (const auto &[p, r] : e.rows()) {
            auto it = r.find(f);
            if (it != r.end()) {
                v[p] = -it->second;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

struct rank_result {
    int rank = 0;
    std::vector<super_vector> basis; // reduced echelon basis of the span
};

// exact rank of homogeneous vectors of one space and one degree
rank_result exact_rank(const std::vector<super_vector> &vectors);

} // namespace qgrass

#endif
