#pragma once

#include <string>
#include <vector>

#include "khcube/bigraded.hpp"
#include "khcube/sparse_matrix.hpp"

namespace khcube {

struct SnfResult {
  std::vector<Integer> diagonal;  // positive, each dividing the next
  int rank = 0;
};

SnfResult smith_normal_form(const SparseIntMatrix& m);

/// Rank over Q (for Z or Q) or over F_p.
int rank_over(const SparseIntMatrix& m, const Ring& ring);

/// Dense Smith form with unimodular transforms, U * A * V = D.
struct DenseSnf {
  std::vector<std::vector<Integer>> U, D, V;
  std::vector<Integer> diagonal;
};
DenseSnf smith_with_transforms(const SparseIntMatrix& m, int max_dim = 50);

/// Splits a positive integer into prime-power factors. A cofactor that is
/// composite but resists trial division and is not a probable prime is kept whole.
std::vector<Integer> prime_power_decomposition(const Integer& n);

/// Requires d^2 = 0 (ContractViolation otherwise). Torsion is attributed to
/// the target block of the incoming differential.
BigradedHomology homology(const BigradedComplex& c, const Ring& ring, int threads = 1);
BigradedHomology homology(const BigradedComplex& c, int threads = 1);

/// Sum of rank * t^h q^q, ordered by h then q. Needs field coefficients.
std::string poincare_polynomial(const BigradedHomology& h);

/// Per q: sum over h of (-1)^h * free rank.
std::map<int, std::int64_t> euler_characteristic(const BigradedHomology& h);
/// Per q: sum over h of (-1)^h * chain rank.
std::map<int, std::int64_t> euler_characteristic(const BigradedComplex& c);

}  // namespace khcube
