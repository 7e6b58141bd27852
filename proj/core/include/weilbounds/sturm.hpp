#ifndef WEILBOUNDS_STURM_HPP
#define WEILBOUNDS_STURM_HPP

#include "weilbounds/polynomial.hpp"
#include "weilbounds/quadratic.hpp"

#include <vector>

namespace weilbounds {

// Canonical Sturm chain of h: S0 = h, S1 = h', S_{k+1} = -rem(S_{k-1}, S_k),
// each element rescaled to a primitive integer polynomial by a positive
// constant.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& h);

// Sign variations of the chain at x, zero entries dropped.
int sign_variations(const std::vector<IntPolynomial>& chain, const QuadExt& x);

// Number of distinct real roots of h in the closed interval [lo, hi], with
// endpoints in a real quadratic extension evaluated exactly.  Endpoint
// roots count once.
long sturm_root_count(const IntPolynomial& h, const QuadExt& lo, const QuadExt& hi);

// Number of real roots of h in [lo, hi] counted with multiplicity
// (squarefree decomposition, then Sturm per squarefree factor).
long real_root_count_with_multiplicity(const IntPolynomial& h, const QuadExt& lo,
                                       const QuadExt& hi);

// h is totally real with every root in [lo, hi].
bool totally_real_in(const IntPolynomial& h, const QuadExt& lo, const QuadExt& hi);

// All real roots of h as doubles, ascending, found by Sturm bisection on
// [lo, hi] followed by floating-point refinement.  Multiple roots appear once.
std::vector<double> isolate_real_roots(const IntPolynomial& h, const Rational& lo,
                                       const Rational& hi);

}  // namespace weilbounds

#endif
