#ifndef VERMA_PBW_HPP
#define VERMA_PBW_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "verma/gamma.hpp"
#include "verma/polyseries.hpp"
#include "verma/rootdata.hpp"
#include "verma/scalar.hpp"

namespace verma
{

// Matrix unit E_{row,col} of gl(n).
struct Generator {
    unsigned row = 2;
    unsigned col = 1;

    bool is_lowering() const { return row > col; }
    bool is_raising() const { return row < col; }

    // Lowering generators compare in PBW order (2,1) < (3,1) < (3,2) < (4,1) ...
    auto operator<=>(const Generator &) const = default;
};

// sum_a c_a E^a v_lambda.
class PBWVector
{
public:
    using TermMap = std::map<GammaIndex, LambdaPoly>;

    PBWVector() = default;

    // E^a v_lambda.
    static PBWVector basis(const GammaIndex &a, const LambdaPoly &c = LambdaPoly(1));
    static PBWVector highest_weight_vector() { return basis(GammaIndex{}); }

    const TermMap &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    std::size_t size() const { return m_terms.size(); }
    LambdaPoly coefficient(const GammaIndex &a) const;

    void add_term(const GammaIndex &a, const LambdaPoly &c);

    PBWVector &operator+=(const PBWVector &other);
    PBWVector &operator-=(const PBWVector &other);
    PBWVector &operator*=(const LambdaPoly &c);

    friend PBWVector operator+(PBWVector a, const PBWVector &b) { return a += b; }
    friend PBWVector operator-(PBWVector a, const PBWVector &b) { return a -= b; }
    friend PBWVector operator*(PBWVector a, const LambdaPoly &c) { return a *= c; }
    friend PBWVector operator*(const LambdaPoly &c, PBWVector a) { return a *= c; }

    friend bool operator==(const PBWVector &, const PBWVector &) = default;

    // Replaces lambda_s by images[s-1] in every coefficient.
    PBWVector substitute(const std::vector<LambdaPoly> &images) const;

private:
    TermMap m_terms;
};

// The product of lowering generators, left to right, rewritten in the PBW
// basis of U(n-). Throws std::invalid_argument on a non-lowering generator.
PBWVector straighten_lowering(const std::vector<Generator> &word);

// g E^a rewritten in the PBW basis, g lowering.
PBWVector left_multiply(const Generator &g, const GammaIndex &a);

// Product u w in U(n-) where both are read as elements of U(n-) (the
// v_lambda is ignored): the image of w under M(mu) -> M(lambda) when u v_lambda
// is singular of weight mu uses multiply(w, u).
PBWVector multiply(const PBWVector &u, const PBWVector &w);

// E_{i+1,i} v.
PBWVector lower_action(unsigned i, const PBWVector &v);

// E_{i,i+1} v inside M(lambda); h v_lambda = lambda(h) v_lambda with
// lambda(H_j) = lambda_j - 1 and raising operators kill v_lambda.
PBWVector raise_action(unsigned i, const PBWVector &v, const Weight &lambda);

// Weight of E^a v_lambda in shifted coordinates.
Weight pbw_weight(const GammaIndex &a, const Weight &lambda);

class NotWeightVector : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

struct SingularityReport {
    // Terms do not share one weight; nothing else is meaningful then.
    bool weight_vector = true;
    // Present when weight_vector.
    std::optional<Weight> weight;
    // residuals[i-1] = E_{i,i+1} v.
    std::vector<PBWVector> residuals;

    bool singular() const;
};

SingularityReport check_singular(const PBWVector &v, const Weight &lambda);

// True iff E_{i,i+1} v = 0 for every i. Throws NotWeightVector if v is not
// a weight vector and std::invalid_argument if v = 0.
bool is_singular(const PBWVector &v, const Weight &lambda);

// tau(E^a v_lambda) = x^a.
SeriesElement tau(const PBWVector &v);

// Inverse of tau; requires a complete element whose exponents are all natural.
PBWVector tau_inverse(const SeriesElement &f);

} // namespace verma

#endif
