#include "verma/gamma.hpp"

#include <stdexcept>

namespace verma
{

GammaIndex::GammaIndex(const Entries &entries)
{
    for (const auto &[ij, v] : entries)
        set(ij.first, ij.second, v);
}

GammaIndex GammaIndex::unit(unsigned i, unsigned j, unsigned m)
{
    GammaIndex a;
    a.set(i, j, m);
    return a;
}

unsigned GammaIndex::operator()(unsigned i, unsigned j) const
{
    auto it = m_entries.find({i, j});
    return it == m_entries.end() ? 0 : it->second;
}

void GammaIndex::set(unsigned i, unsigned j, unsigned value)
{
    if (j < 1 || i <= j)
        throw std::invalid_argument("eps_{i,j} requires 1 <= j < i");
    if (value == 0)
        m_entries.erase({i, j});
    else
        m_entries[{i, j}] = value;
}

void GammaIndex::add(unsigned i, unsigned j, unsigned value)
{
    set(i, j, (*this)(i, j) + value);
}

unsigned GammaIndex::degree() const
{
    unsigned d = 0;
    for (const auto &[ij, v] : m_entries)
        d += v;
    return d;
}

unsigned GammaIndex::max_row() const
{
    unsigned r = 0;
    for (const auto &[ij, v] : m_entries)
        r = std::max(r, ij.first);
    return r;
}

unsigned long long GammaIndex::factorial_product() const
{
    unsigned long long p = 1;
    for (const auto &[ij, v] : m_entries)
        for (unsigned k = 2; k <= v; ++k)
            p *= k;
    return p;
}

GammaIndex operator+(const GammaIndex &a, const GammaIndex &b)
{
    GammaIndex r = a;
    for (const auto &[ij, v] : b.m_entries)
        r.add(ij.first, ij.second, v);
    return r;
}

std::strong_ordering operator<=>(const GammaIndex &a, const GammaIndex &b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    return a.m_entries <=> b.m_entries;
}

std::string to_string(const GammaIndex &a)
{
    if (a.is_zero())
        return "0";
    std::string s;
    for (const auto &[ij, v] : a.entries()) {
        if (!s.empty())
            s += "+";
        if (v != 1)
            s += std::to_string(v) + "*";
        s += "eps" + std::to_string(ij.first) + std::to_string(ij.second);
    }
    return s;
}

} // namespace verma
