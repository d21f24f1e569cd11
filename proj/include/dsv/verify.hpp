#pragma once

#include <string>
#include <vector>

#include "dsv/diagrams.hpp"
#include "dsv/errors.hpp"

namespace dsv::verify {

struct Report {
    bool ok = true;
    long long cases = 0;
    std::string first_failure; // lex-first counterexample, with both sides

    void merge(const Report& other);
};

// Instances (n, lambda, s) with n <= max_n, |lambda| <= n, l(lambda) <= s <= max_s,
// in lexicographic (n, lambda, s) order.
std::vector<DeltaInstance> instances_upto(int max_n, int max_s);

// frob_delta == hl_rhs (Hall-Littlewood expansion).
Report hl_identity(int max_n, int max_s, long long budget = kDefaultBudget);
// hl_rev_rhs == hl_rhs (reversed expansion).
Report rev_identity(int max_n, int max_s, long long budget = kDefaultBudget);
// coinv generating function == q-binomial product, all lambda inside nu, |nu| <= max_size.
Report coinv_identity(int max_size, int max_s);
// inv_T(w) == dinv(PRD_T(w)) over every admissible word.
Report dinv_inv(int max_n, int max_s);
// Flattening recursion: inv drops by i-1 when w starts at the end of row i.
Report flatten_recursion(int max_n, int max_s);
// Point counts match frob_delta coefficients at q = p.
Report fq_counts(const std::vector<DeltaInstance>& instances, const std::vector<int>& primes,
                 long long budget = kDefaultBudget);
// Steinberg point counts assemble the modified Hall-Littlewood at q = p.
Report steinberg_counts(int max_n, const std::vector<int>& primes,
                        long long budget = kDefaultBudget);
// |free_pairs(alpha)| matches the closed form.
Report free_pair_counts(int max_n, int max_s);
// Zhat = p^l * Z and the Zhat counts partition Y^mu, instances with K <= max_K.
Report z_decomposition(int max_n, int max_s, int max_K, int p,
                       long long budget = kDefaultBudget);
// Top q-degree Schur coefficients equal s_lambda * h_{n-k} when s > l(lambda).
Report pieri_top(int max_n, int max_s, long long budget = kDefaultBudget);
// Reading fillings pass the Schubert-compatibility check.
Report schubert_compat(int max_n, int max_s);

} // namespace dsv::verify
