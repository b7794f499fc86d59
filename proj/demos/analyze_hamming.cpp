// Builds the binary Hamming code of length 7 and walks through the exact
// analysis the library offers for it.

#include <iostream>

#include "qcube/analysis.hpp"
#include "qcube/constructions.hpp"
#include "qcube/structures.hpp"

int main() {
  using namespace qcube;

  const VertexSet code = hamming_code(2, 3);  // n = 7, |C| = 16
  const AnalysisReport rep = theorem_eval(code);

  std::cout << "Hamming code, q=2, n=" << rep.shape.n << ", |C|=" << rep.cardinality << "\n"
            << "  rho   = " << to_string(rep.rho) << "\n"
            << "  nei   = " << to_string(rep.nei) << "\n"
            << "  alpha = " << to_string(rep.alpha) << "\n"
            << "  cor   = " << rep.cor << "\n"
            << "  rho*q*(cor+1) = " << to_string(rep.theorem_lhs)
            << (rep.is_perfect ? "  = alpha: perfect" : "  < alpha: not perfect") << "\n";
  if (rep.matrix)
    std::cout << "  matrix b=" << rep.matrix->b << " c=" << rep.matrix->c << "\n";

  const OAResult oa = oa_check(code);
  std::cout << "  orthogonal array: strength " << oa.strength
            << ", lambda = " << to_string(oa.index_lambda) << "\n";

  // The code and its translate by a weight-1 vector form two disjoint
  // components whose union is a bitrade.
  const MobileResult mobile = mobile_and_components(code, translate(code, Index{1}));
  std::cout << "  component sizes: " << mobile.comp_1_2.cardinality() << " and "
            << mobile.comp_2_1.cardinality() << ", mobile bitrade order "
            << *mobile.certified_order << "\n";
  return 0;
}
