#ifndef VERMA_GAMMA_HPP
#define VERMA_GAMMA_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace verma
{

// An element a of the semigroup spanned by eps_{i,j}, 1 <= j < i <= n:
// the exponent vector of E^a = E_{2,1}^{a_{2,1}} E_{3,1}^{a_{3,1}} E_{3,2}^{a_{3,2}} ...
class GammaIndex
{
public:
    using Entries = std::map<std::pair<unsigned, unsigned>, unsigned>;

    GammaIndex() = default;
    explicit GammaIndex(const Entries &entries);

    // m * eps_{i,j}.
    static GammaIndex unit(unsigned i, unsigned j, unsigned m = 1);

    const Entries &entries() const { return m_entries; }
    unsigned operator()(unsigned i, unsigned j) const;
    void set(unsigned i, unsigned j, unsigned value);
    void add(unsigned i, unsigned j, unsigned value = 1);

    bool is_zero() const { return m_entries.empty(); }
    // |a|.
    unsigned degree() const;
    // Largest row index used; 0 for the zero index.
    unsigned max_row() const;

    // prod a_{i,j}!.
    unsigned long long factorial_product() const;

    friend GammaIndex operator+(const GammaIndex &a, const GammaIndex &b);
    friend bool operator==(const GammaIndex &, const GammaIndex &) = default;
    // Degree first, then lexicographic on the entry list in PBW order.
    friend std::strong_ordering operator<=>(const GammaIndex &a, const GammaIndex &b);

private:
    Entries m_entries;
};

// "eps21+eps32", or "0".
std::string to_string(const GammaIndex &a);

} // namespace verma

#endif
