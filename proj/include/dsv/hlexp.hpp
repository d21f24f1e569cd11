#pragma once

#include <utility>
#include <vector>

#include "dsv/diagrams.hpp"
#include "dsv/symfunc.hpp"

namespace dsv {

// One summand of the Hall-Littlewood expansion.
struct ExpansionTerm {
    Partition nu;
    long long exponent = 0; // sum_i (s - nu'_i)(nu'_{i+1} - lambda'_{i+1}), nu'_0 = s
    QPoly qbinom_product;   // prod_i qbinom(nu'_i - lambda'_{i+1}, nu'_i - nu'_{i+1})
};

// Terms over nu in Par(n, s) with nu containing lambda, descending lex order.
std::vector<ExpansionTerm> hl_terms(const DeltaInstance& inst);

// The skew exponent appearing in the reversed expansion.
long long n_skew(const Partition& nu, const Partition& lambda, const DeltaInstance& inst);

// Left: sum over alpha in Comp(n,s), alpha containing lambda, sort(alpha)=nu
// of q^coinv(alpha). Right: the q-binomial product. The two agree.
std::pair<QPoly, QPoly> coinv_identity_sides(const Partition& nu, const Partition& lambda,
                                             int s);

// sum_nu q^exponent * product * hl_modified(nu), monomial basis.
SymFunc hl_rhs(const DeltaInstance& inst);

// q-reversal at degree n(lambda) + (s-1)(n-k) of
// sum_nu q^n_skew * product * hl_H(nu), monomial basis.
SymFunc hl_rev_rhs(const DeltaInstance& inst);

// Free pairs (i, j) of labels of the reverse reading filling, sorted with i
// descending (the composition order used by the shift operators).
std::vector<std::pair<int, int>> free_pairs(const Composition& alpha,
                                            const DeltaInstance& inst);

// Closed-form count: sum_i (s - alpha'_i)(alpha'_{i+1} - lambda'_{i+1}) + coinv(alpha).
long long free_pair_count_formula(const Composition& alpha, const DeltaInstance& inst);

} // namespace dsv
