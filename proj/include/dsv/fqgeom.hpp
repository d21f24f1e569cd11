#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dsv/diagrams.hpp"
#include "dsv/qpoly.hpp"

namespace dsv {

bool prime_allowed(int p);

using FpVec = std::vector<int>; // residues mod p

// Square matrix over F_p, column-action convention: (M v)_r = sum_c M[r][c] v_c.
class FpMatrix {
public:
    FpMatrix(int p, int dim);

    int p() const { return p_; }
    int dim() const { return dim_; }
    int at(int r, int c) const { return a_[r * dim_ + c]; }
    void set(int r, int c, int value) { a_[r * dim_ + c] = ((value % p_) + p_) % p_; }

    FpVec apply(const FpVec& v) const;
    FpMatrix multiply(const FpMatrix& rhs) const;
    FpMatrix power(int e) const;
    static FpMatrix identity(int p, int dim);

private:
    int p_, dim_;
    std::vector<int> a_;
};

// Subspace of F_p^K in canonical reduced echelon form. Pivot of a generator
// is its maximal nonzero index; generators are monic at their pivot, zero at
// every other generator's pivot, and sorted by pivot.
class Subspace {
public:
    static Subspace zero(int p, int ambient);
    static Subspace span(int p, int ambient, const std::vector<FpVec>& vectors);

    int p() const { return p_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(gens_.size()); }
    const std::vector<FpVec>& generators() const { return gens_; }
    // 1-based pivot indices, ascending.
    std::vector<int> pivots() const;

    bool contains_vector(const FpVec& v) const;
    bool contains(const Subspace& other) const;
    Subspace join(const Subspace& other) const;
    Subspace apply(const FpMatrix& M) const;

    bool operator==(const Subspace&) const = default;
    bool operator<(const Subspace& other) const;

private:
    int p_ = 2, ambient_ = 0;
    std::vector<FpVec> gens_;
};

// The set of leading (maximal-index) pivots; determines the Schubert cell.
std::vector<int> cell_of_subspace(const Subspace& V);

struct Flag {
    std::vector<Subspace> parts;
    bool operator==(const Flag&) const = default;
    bool operator<(const Flag& other) const { return parts < other.parts; }
};

enum class FlagMode { stable, strict };

struct FlagConstraints {
    // Required subset of the final part.
    std::optional<Subspace> contain;
    // Exactly one of these may constrain the final part.
    std::optional<std::vector<int>> final_pivots;
    std::optional<Subspace> final_equals;
};

// N_T / N_T^t from a filling: row chains shifted right (or left).
FpMatrix nilpotent_from_filling(const Filling& T, bool transpose, int p);

// Visits every flag of type mu (stable: N V_i <= V_i; strict: N V_i <= V_{i-1})
// satisfying the constraints. A work estimate (product of Gaussian binomial
// bounds) is checked against the budget before enumeration starts.
void for_each_flag(const FpMatrix& N, const Composition& mu, FlagMode mode,
                   const FlagConstraints& constraints, long long budget,
                   const std::function<void(const Flag&)>& visit);

long long count_flags(const FpMatrix& N, const Composition& mu, FlagMode mode,
                      const FlagConstraints& constraints = {},
                      long long budget = kDefaultBudget);

// |Y^mu_{n,lambda,s}(F_p)|.
long long count_Y_mu(const DeltaInstance& inst, const Composition& mu, int p,
                     bool transpose = false, long long budget = kDefaultBudget);

// |Stein^mu_lambda(F_p)|.
long long count_steinberg(const Partition& lambda_type, const Composition& mu, int p,
                          long long budget = kDefaultBudget);

// |Z^mu_alpha(F_p)| (hat = false) or |Zhat^mu_alpha(F_p)| (hat = true).
long long count_z(const DeltaInstance& inst, const Composition& alpha, const Composition& mu,
                  int p, bool hat, long long budget = kDefaultBudget);

// Flags of Z^mu_alpha, for exhaustive checks.
std::vector<Flag> z_flags(const DeltaInstance& inst, const Composition& alpha,
                          const Composition& mu, int p, bool hat,
                          long long budget = kDefaultBudget);

// Row-shift operator U_{i,j}(t) applied to every part of the flag.
Flag apply_U(const DeltaInstance& inst, const Composition& alpha, std::pair<int, int> pair,
             int t, const Flag& V, int p);

// Cardinality of the projection of the strict-mode flag variety of type
// (1^n, (s-1)^{n-k}) onto its first n parts.
long long count_projected_spaltenstein(const DeltaInstance& inst, int p,
                                       long long budget = kDefaultBudget);

} // namespace dsv
