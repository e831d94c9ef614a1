#ifndef VERMA_WEYLACTION_HPP
#define VERMA_WEYLACTION_HPP

#include <optional>
#include <vector>

#include "verma/gamma.hpp"
#include "verma/polyseries.hpp"
#include "verma/rootdata.hpp"

namespace verma
{

// s_i(f) = sum over weight components f_mu of eta_i^{mu_i} f_mu.
// bound caps the off-degree of infinite expansions (see eta_pow).
SeriesElement simple_reflection(unsigned i, const SeriesElement &f, const Weight &lambda,
                                std::optional<unsigned> bound = std::nullopt);

// sigma(1) for sigma = s_{w_1} ... s_{w_r}; s_{w_r} is applied first.
SeriesElement sigma_of_one(const SimpleWord &word, const Weight &lambda, std::optional<unsigned> bound = std::nullopt);

// Gamma_{k,l} restricted to |a| <= bound: a_{i,j} = 0 unless k <= j, i <= l
// and i >= j + 2. Sorted.
std::vector<GammaIndex> enumerate_gamma_kl(unsigned k, unsigned l, unsigned bound);

// Per-index statistics of a in Gamma_{k,l} for i = k..l-1 (stored at i-k):
// r_i = sum_{j <= i, q > i+1} a_{q,j},  t_i = r_i + sum_{j<i} a_{i+1,j}.
struct ColumnStatistics {
    std::vector<unsigned> r;
    std::vector<unsigned> t;
};
ColumnStatistics column_statistics(const GammaIndex &a, unsigned k, unsigned l);

// Closed form of s_alpha(1), alpha = e_k - e_l. The result is complete and
// bound is ignored when alpha is simple or <lambda+rho, alpha> is a natural
// number; otherwise bound is required (throws TruncationRequired) and
// becomes the precision of the result.
SeriesElement s_alpha_closed_form(const Root &alpha, const Weight &lambda, std::optional<unsigned> bound = std::nullopt);

// True iff <lambda+rho, alpha> is a natural number. Refuses symbolic
// weights with std::domain_error.
bool polynomiality_check(const Root &alpha, const Weight &lambda);

} // namespace verma

#endif
