#ifndef VERMA_ROOTDATA_HPP
#define VERMA_ROOTDATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "verma/scalar.hpp"

namespace verma
{

// Positive root e_k - e_l of sl(n), 1 <= k < l <= n.
struct Root {
    unsigned k = 1;
    unsigned l = 2;

    bool is_simple() const { return l == k + 1; }
    unsigned height() const { return l - k; }

    // (e_k - e_l)(H_i) for H_i = E_{i,i} - E_{i+1,i+1}.
    int on_coroot(unsigned i) const;

    auto operator<=>(const Root &) const = default;
};

// Throws std::invalid_argument unless 1 <= k < l <= n.
void check_root(const Root &alpha, unsigned n);

std::vector<Root> positive_roots(unsigned n);

std::string to_string(const Root &alpha);

// A weight lambda of sl(n) stored in shifted coordinates
// coords[i-1] = (lambda + rho)(H_i), i = 1..n-1.
class Weight
{
public:
    Weight(unsigned n, std::vector<AffineExponent> coords);

    // Every coordinate equal to the corresponding indeterminate lambda_i.
    static Weight symbolic(unsigned n);
    static Weight numeric(unsigned n, const std::vector<Rational> &coords);
    // From unshifted values lambda(H_i); the shifted coordinate is that plus one.
    static Weight from_unshifted(unsigned n, const std::vector<Rational> &values);
    // All shifted coordinates 1, i.e. lambda = 0.
    static Weight rho(unsigned n);

    unsigned rank() const { return m_n; }
    // 1-based.
    const AffineExponent &operator[](unsigned i) const { return m_coords.at(i - 1); }
    const std::vector<AffineExponent> &coords() const { return m_coords; }

    bool is_numeric() const;
    std::vector<Rational> numeric_coords() const;
    // lambda(H_i) = lambda_i - 1.
    AffineExponent unshifted(unsigned i) const { return (*this)[i] - AffineExponent(1); }

    Weight substitute(const std::map<unsigned, AffineExponent> &images) const;

    friend bool operator==(const Weight &, const Weight &) = default;
    friend std::strong_ordering operator<=>(const Weight &a, const Weight &b);

private:
    unsigned m_n;
    std::vector<AffineExponent> m_coords;
};

std::string to_string(const Weight &w);

using SimpleWord = std::vector<unsigned>;

int cartan_entry(unsigned i, unsigned j, unsigned n);

// <lambda + rho, e_k - e_l> = lambda_k + ... + lambda_{l-1}.
AffineExponent pairing(const Weight &lambda, const Root &alpha);

// s_alpha . lambda = s_alpha(lambda + rho) - rho.
Weight dot_reflect(const Root &alpha, const Weight &lambda);

// sigma . lambda for sigma = s_{w_1} ... s_{w_r}; the rightmost letter acts first.
Weight dot_action(const SimpleWord &word, const Weight &lambda);

// A chain of roots in the order they are applied, starting from lambda:
// mu = s_{chain.back()} ... s_{chain.front()} . lambda, every step having a
// positive integral pairing with the weight it is applied to. Breadth-first,
// so the chain is shortest, and lexicographically least among those.
std::optional<std::vector<Root>> strongly_linked_chain(const Weight &mu, const Weight &lambda);

struct LinkedWeight {
    Weight weight;
    std::vector<Root> chain;
};

// Every weight strongly linked to lambda (lambda itself first), each with
// the chain strongly_linked_chain would return, in breadth-first order.
std::vector<LinkedWeight> strongly_linked_orbit(const Weight &lambda);

// [k, k+1, ..., l-1, ..., k+1, k].
SimpleWord reduced_word(const Root &alpha);

// One-line notation of s_{w_1} ... s_{w_r} as a permutation of 1..n.
std::vector<unsigned> word_permutation(const SimpleWord &word, unsigned n);

void check_word(const SimpleWord &word, unsigned n);

// Coefficients a_i with lambda - mu = sum_i a_i (e_i - e_{i+1}); requires
// the difference to lie in the root lattice.
std::vector<Rational> simple_root_coordinates(const Weight &lambda, const Weight &mu);

} // namespace verma

#endif
