#ifndef VERMA_SINGVEC_HPP
#define VERMA_SINGVEC_HPP

#include <stdexcept>
#include <vector>

#include "verma/gamma.hpp"
#include "verma/pbw.hpp"
#include "verma/rootdata.hpp"

namespace verma
{

// Gamma_{k,l}^m: all a whose root sum sum a_{i,j} (e_i - e_j) equals
// m (e_l - e_k), i.e. sum_{j <= i < q} a_{q,j} = m for k <= i < l and 0 for
// every other column. Sorted.
std::vector<GammaIndex> enumerate_gamma_klm(unsigned k, unsigned l, unsigned m);

// Raised when <lambda+rho, alpha> differs from the requested m, or a chain
// step has no positive integral pairing.
class PairingMismatch : public std::invalid_argument
{
public:
    PairingMismatch(const std::string &what, AffineExponent pairing)
        : std::invalid_argument(what), m_pairing(std::move(pairing))
    {
    }
    const AffineExponent &pairing() const { return m_pairing; }

private:
    AffineExponent m_pairing;
};

struct SingularVector {
    // The weight the vector lives over; in symbolic mode lambda_{l-1} has
    // been replaced by m - lambda_k - ... - lambda_{l-2}.
    Weight lambda;
    PBWVector vector;
    // s_alpha . lambda.
    Weight weight;
};

// sum_{a in Gamma_{k,l}^m} prod_i <u_i>_{r_i} (m - r_i)! / prod a_{i,j}!  E^a v_lambda
// with u_i = lambda_k + ... + lambda_i. Numeric weights must satisfy
// <lambda+rho, e_k - e_l> = m (PairingMismatch otherwise); a weight with
// symbolic coordinates is constrained by eliminating lambda_{l-1}.
SingularVector singular_vector(unsigned k, unsigned l, unsigned m, const Weight &lambda);

// Divides by the coefficient of the unique degree-maximal index.
PBWVector monic_leading(const PBWVector &v);

// The unique index of maximal degree; throws std::domain_error if the
// maximum is attained more than once or v = 0.
GammaIndex leading_index(const PBWVector &v);

struct ComposedVector {
    PBWVector vector;
    Weight weight;
};

// Composes the embeddings along a chain of roots given in the order they
// are applied to lambda. Every step is validated (PairingMismatch with the
// offending pairing).
ComposedVector compose_chain(const std::vector<Root> &chain, const Weight &lambda);

} // namespace verma

#endif
