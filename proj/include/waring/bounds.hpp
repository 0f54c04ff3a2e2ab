#ifndef WARING_BOUNDS_HPP
#define WARING_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/certificate.hpp"
#include "waring/form.hpp"

namespace waring {

// Rank of a general degree-d form in n variables (Alexander-Hirschowitz):
// ceil(C(n+d-1, n-1) / n), except n for d = 2 and one more for
// (n,d) in {(3,4), (4,4), (5,4), (5,3)}.
long generic_rank(int n, int d);

using HSeq = std::vector<long>;

// H(n,d)(i) = min(dim T_i, dim T_{d-i}) and the s-capped variant.
HSeq hseq(int n, int d);
HSeq hseq_capped(int n, int d, long s);

// Apolar length of a general form: C(n+floor((d-1)/2), n) + C(n+ceil((d-1)/2), n).
long algen(int n, int d);

// Apolar length of a general sum of s powers: 2*C(n+i, i) + s*(d-2i-1)
// for the i with dim T_i <= s < dim T_{i+1}, i < d/2; falls back to the
// sum of hseq_capped when no such i exists (cap inactive).
long al_capped(int n, int d, long s);

// Exact Waring rank of a monomial: product of (a_i + 1) over all indices
// except one attaining the minimum exponent.
long monomial_rank(const std::vector<int>& exponents);

// Maximum of monomial_rank over monomials of degree d in at most n
// variables (Table rows use monomials in fewer variables for small d).
long max_monomial_rank(int n, int d);

// r(F) >= al(alpha o F) - al(alpha^2 o F), any linear alpha.
BoundCertificate derksen_bound(const Form& f, const Form& alpha);

// If al(F) - al(alpha o F) > al(alpha o F) - al(alpha^2 o F) the bound
// above improves by one.
BoundCertificate improved_bound(const Form& f, const Form& alpha);

// cr(F) >= al(F) - al(alpha o F), valid for rank only when no apolar point
// lies on the hyperplane of alpha; emitted with conditional = true.
BoundCertificate cactus_bound(const Form& f, const Form& alpha);

// Largest improved_bound over the coordinate duals plus extra_alphas random
// linear duals with coefficients in [-9, 9].
BoundCertificate best_bound(const Form& f, int extra_alphas,
                            std::uint64_t rng_seed);

}  // namespace waring

#endif
