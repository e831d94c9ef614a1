#ifndef VERMA_POLYSERIES_HPP
#define VERMA_POLYSERIES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "verma/rootdata.hpp"
#include "verma/scalar.hpp"

namespace verma
{

// Raised when an operator would produce an infinite series and no
// truncation bound is available.
class TruncationRequired : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Monomial of A_1: x_{i,j}^{e} with j < i-1 carry natural exponents (the
// polynomial algebra A_0); x_{i+1,i}^{z_i} carry affine exponents.
struct Monomial {
    // (i, j) -> exponent, i - j >= 2, zero entries never stored.
    std::map<std::pair<unsigned, unsigned>, unsigned> off;
    // i -> exponent of x_{i+1,i}, zero entries never stored.
    std::map<unsigned, AffineExponent> sub;

    // Total degree in the off-subdiagonal variables.
    unsigned off_degree() const;

    // Exponent of x_{p,q}, p > q.
    AffineExponent exponent(unsigned p, unsigned q) const;

    // Multiplies by x_{p,q}^power; off-subdiagonal powers must stay natural.
    void multiply(unsigned p, unsigned q, const AffineExponent &power = AffineExponent(1));

    bool is_polynomial() const;

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b);
};

// Finite part of an element of A_1. A precision P means the element is
// exact in every monomial of off-degree <= P and nothing above P is stored;
// no precision means the element is known completely.
class SeriesElement
{
public:
    using TermMap = std::map<Monomial, LambdaPoly>;

    SeriesElement() = default;
    explicit SeriesElement(std::optional<unsigned> precision) : m_precision(precision) {}

    static SeriesElement one();
    static SeriesElement monomial(const Monomial &m, const LambdaPoly &c = LambdaPoly(1));

    const TermMap &terms() const { return m_terms; }
    std::optional<unsigned> precision() const { return m_precision; }
    bool is_complete() const { return !m_precision.has_value(); }
    bool is_zero() const { return m_terms.empty(); }
    std::size_t size() const { return m_terms.size(); }

    // Coefficient of m, zero when absent.
    LambdaPoly coefficient(const Monomial &m) const;

    // Adds c x^m unless m lies above the precision.
    void add_term(const Monomial &m, const LambdaPoly &c);

    // Lowers the precision to min(current, bound), dropping terms above it.
    SeriesElement truncated(std::optional<unsigned> bound) const;

    // Complete and every exponent natural.
    bool is_polynomial() const;

    SeriesElement &operator+=(const SeriesElement &other);
    SeriesElement &operator-=(const SeriesElement &other);
    SeriesElement &operator*=(const LambdaPoly &c);

    friend SeriesElement operator+(SeriesElement a, const SeriesElement &b) { return a += b; }
    friend SeriesElement operator-(SeriesElement a, const SeriesElement &b) { return a -= b; }
    friend SeriesElement operator*(SeriesElement a, const LambdaPoly &c) { return a *= c; }
    friend SeriesElement operator*(const LambdaPoly &c, SeriesElement a) { return a *= c; }

    // Same terms and same precision.
    friend bool operator==(const SeriesElement &, const SeriesElement &) = default;

private:
    TermMap m_terms;
    std::optional<unsigned> m_precision;
};

std::optional<unsigned> min_precision(std::optional<unsigned> a, std::optional<unsigned> b);

// Equality of both elements in every degree both of them know.
bool agree(const SeriesElement &a, const SeriesElement &b);

// eta_i = x_{i+1,i} + sum_{j<i} x_{i+1,j} d/dx_{i,j}.
SeriesElement eta(unsigned i, const SeriesElement &f);

// eta_i^c = sum_p (<c>_p / p!) x_{i+1,i}^{c-p} (sum_{j<i} x_{i+1,j} d/dx_{i,j})^p.
// The result keeps f's precision, lowered to bound when one is given.
// Throws TruncationRequired if the expansion is infinite and neither f nor
// bound fixes a precision.
SeriesElement eta_pow(unsigned i, const AffineExponent &c, const SeriesElement &f,
                      std::optional<unsigned> bound = std::nullopt);

// The realization of E_{i,i+1}; lowers the precision by one.
SeriesElement d_op(unsigned i, const SeriesElement &f, const Weight &lambda);

// The realization of H_i.
SeriesElement zeta(unsigned i, const SeriesElement &f, const Weight &lambda);

// H_i-eigenvalue of x^m in M(lambda): lambda(H_i) + sum_{p>q} m_{p,q} (e_p - e_q)(H_i).
AffineExponent zeta_eigenvalue(unsigned i, const Monomial &m, const Weight &lambda);

// Weight of x^m in shifted coordinates (eigenvalue + 1).
Weight monomial_weight(const Monomial &m, const Weight &lambda);

struct WeightComponent {
    Weight weight;
    SeriesElement part;
};

// Groups the terms of f by weight, ordered by weight.
std::vector<WeightComponent> weight_decompose(const SeriesElement &f, const Weight &lambda);

} // namespace verma

#endif
