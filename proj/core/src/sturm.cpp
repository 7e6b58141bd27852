#include "weilbounds/sturm.hpp"

#include <algorithm>
#include <cmath>

namespace weilbounds {

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& h) {
  if (h.is_zero()) throw ValidationError("sturm_chain: zero polynomial");
  std::vector<IntPolynomial> chain;
  chain.push_back(h.primitive());
  if (h.degree() == 0) return chain;
  chain.push_back(h.derivative().primitive());
  while (chain.back().degree() > 0) {
    IntPolynomial r = signed_primitive_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations(const std::vector<IntPolynomial>& chain, const QuadExt& x) {
  int variations = 0;
  int last = 0;
  for (const auto& s : chain) {
    int sg = s.evaluate(x).sign();
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++variations;
    last = sg;
  }
  return variations;
}

long sturm_root_count(const IntPolynomial& h, const QuadExt& lo, const QuadExt& hi) {
  if (h.is_zero()) throw ValidationError("sturm_root_count: zero polynomial");
  if ((hi - lo).sign() < 0) throw ValidationError("sturm_root_count: lo > hi");
  IntPolynomial sf = h.is_monic() ? squarefree_part(h) : squarefree_part(h.primitive());
  if (sf.degree() <= 0) return 0;
  auto chain = sturm_chain(sf);
  // var(lo) - var(hi) counts roots in (lo, hi]; a root exactly at lo is
  // added separately so the closed interval counts endpoints once.
  long count = sign_variations(chain, lo) - sign_variations(chain, hi);
  if (sf.evaluate(lo).sign() == 0) ++count;
  return count;
}

long real_root_count_with_multiplicity(const IntPolynomial& h, const QuadExt& lo,
                                       const QuadExt& hi) {
  if (h.degree() <= 0) return 0;
  auto factors = squarefree_decomposition(h.is_monic() ? h : h.primitive());
  long total = 0;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    total += static_cast<long>(i + 1) * sturm_root_count(factors[i], lo, hi);
  }
  return total;
}

bool totally_real_in(const IntPolynomial& h, const QuadExt& lo, const QuadExt& hi) {
  if (h.degree() < 0) return false;
  if (h.degree() == 0) return true;
  return real_root_count_with_multiplicity(h, lo, hi) == h.degree();
}

namespace {

double refine_root(const IntPolynomial& h, double lo, double hi) {
  // Bisection on sign change in double arithmetic; h is squarefree here.
  auto eval = [&](double x) {
    double acc = 0.0;
    for (long i = h.degree(); i >= 0; --i)
      acc = acc * x + h.coeff(i).convert_to<double>();
    return acc;
  };
  double flo = eval(lo), fhi = eval(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * (1.0 + std::fabs(lo)); ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = eval(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0) != (fm < 0)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> isolate_real_roots(const IntPolynomial& h, const Rational& lo,
                                       const Rational& hi) {
  std::vector<double> out;
  if (h.degree() <= 0) return out;
  IntPolynomial sf = squarefree_part(h.is_monic() ? h : h.primitive());
  auto chain = sturm_chain(sf);
  if (sf.evaluate(lo) == 0) out.push_back(lo.convert_to<double>());
  // Subdivide on (lo, hi]: recurse with half-open (a, b] counting.
  struct Seg {
    Rational a, b;
  };
  std::vector<Seg> stack{{lo, hi}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    long n = sign_variations(chain, QuadExt::rational(s.a)) -
             sign_variations(chain, QuadExt::rational(s.b));
    if (n <= 0) continue;
    if (n == 1) {
      if (sf.evaluate(s.b) == 0)
        out.push_back(s.b.convert_to<double>());
      else
        out.push_back(refine_root(sf, s.a.convert_to<double>(), s.b.convert_to<double>()));
      continue;
    }
    Rational mid = (s.a + s.b) / 2;
    stack.push_back({s.a, mid});
    stack.push_back({mid, s.b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace weilbounds
