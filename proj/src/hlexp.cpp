#include "dsv/hlexp.hpp"

#include <algorithm>

namespace dsv {

namespace {

// nu'_i with the convention nu'_0 = s.
int conj_with_s(const Partition& nu, int i, int s) {
    return i == 0 ? s : conjugate_part(nu, i);
}

long long exponent_sum(const Partition& nu, const Partition& lambda, int s) {
    long long total = 0;
    for (int i = 0; i <= nu.part(1); ++i)
        total += static_cast<long long>(s - conj_with_s(nu, i, s)) *
                 (conjugate_part(nu, i + 1) - conjugate_part(lambda, i + 1));
    return total;
}

QPoly qbinom_product(const Partition& nu, const Partition& lambda, int s) {
    QPoly prod = QPoly::one();
    for (int i = 0; i <= nu.part(1); ++i) {
        int a = conj_with_s(nu, i, s) - conjugate_part(lambda, i + 1);
        int b = conj_with_s(nu, i, s) - conjugate_part(nu, i + 1);
        prod *= q_binom(a, b);
    }
    return prod;
}

} // namespace

std::vector<ExpansionTerm> hl_terms(const DeltaInstance& inst) {
    std::vector<ExpansionTerm> out;
    for (const auto& nu : partitions_max_len(inst.n(), inst.s())) {
        if (!contains(nu, inst.lambda())) continue;
        ExpansionTerm term;
        term.nu = nu;
        term.exponent = exponent_sum(nu, inst.lambda(), inst.s());
        term.qbinom_product = qbinom_product(nu, inst.lambda(), inst.s());
        if (term.qbinom_product.is_zero()) continue;
        out.push_back(std::move(term));
    }
    std::sort(out.begin(), out.end(),
              [](const ExpansionTerm& a, const ExpansionTerm& b) { return a.nu > b.nu; });
    return out;
}

long long n_skew(const Partition& nu, const Partition& lambda, const DeltaInstance& inst) {
    if (!contains(nu, lambda))
        throw NotContained("n_skew: " + lambda.str() + " is not contained in " + nu.str());
    const int s = inst.s();
    long long cross = 0;
    for (int i = 0; i <= nu.part(1); ++i)
        cross += static_cast<long long>(conj_with_s(nu, i, s) - conjugate_part(nu, i + 1)) *
                 (conjugate_part(nu, i + 1) - conjugate_part(lambda, i + 1));
    long long value = n_stat(lambda) +
                      static_cast<long long>(s - 1) * (inst.n() - inst.k()) -
                      exponent_sum(nu, lambda, s) - cross - n_stat(nu);
    if (value < 0)
        throw Error("n_skew came out negative for nu=" + nu.str() + ", lambda=" + lambda.str());
    return value;
}

std::pair<QPoly, QPoly> coinv_identity_sides(const Partition& nu, const Partition& lambda,
                                             int s) {
    if (nu.length() > s)
        throw InvalidArguments("coinv_identity_sides: l(nu) exceeds s");
    if (!contains(nu, lambda))
        throw InvalidArguments("coinv_identity_sides: lambda not contained in nu");
    QPoly left;
    for (const auto& alpha : compositions(nu.size(), s)) {
        if (!contains(alpha, lambda)) continue;
        if (sort_desc(alpha) != nu) continue;
        left += QPoly::monomial(1, coinv(alpha));
    }
    return {left, qbinom_product(nu, lambda, s)};
}

SymFunc hl_rhs(const DeltaInstance& inst) {
    SymFunc sum(inst.n(), Basis::schur);
    for (const auto& term : hl_terms(inst)) {
        SymFunc piece = hl_modified(term.nu);
        piece.scale(term.qbinom_product * QPoly::monomial(1, static_cast<int>(term.exponent)));
        sum += piece;
    }
    return to_basis(sum, Basis::monomial);
}

SymFunc hl_rev_rhs(const DeltaInstance& inst) {
    SymFunc sum(inst.n(), Basis::schur);
    for (const auto& term : hl_terms(inst)) {
        long long skew = n_skew(term.nu, inst.lambda(), inst);
        SymFunc piece = hl_H(term.nu);
        piece.scale(term.qbinom_product * QPoly::monomial(1, static_cast<int>(skew)));
        sum += piece;
    }
    int degree = static_cast<int>(n_stat(inst.lambda()) +
                                  static_cast<long long>(inst.s() - 1) * (inst.n() - inst.k()));
    return to_basis(sum, Basis::monomial).q_reversed(degree);
}

std::vector<std::pair<int, int>> free_pairs(const Composition& alpha,
                                            const DeltaInstance& inst) {
    if (alpha.length() != inst.s() || alpha.size() != inst.n() ||
        !contains(alpha, inst.lambda()))
        throw NotContaining("free_pairs: alpha must lie in Comp(n,s) and contain lambda");

    Filling T = reverse_filling(inst);
    CellSet left_lambda = inst.lambda_left();

    // Labels i with cell in [alpha] \ [lambda].
    std::vector<int> inner;
    for (int r = 1; r <= inst.rows(); ++r)
        for (int j = 1; j <= std::min(alpha.part(r), inst.row_length(r)); ++j)
            if (!left_lambda.contains({r, j})) inner.push_back(T.label({r, j}));
    // Labels j on the leftmost cell of [Lambda] \ [alpha] per row.
    std::vector<int> border;
    for (int r = 1; r <= inst.rows(); ++r)
        if (alpha.part(r) < inst.row_length(r)) border.push_back(T.label({r, alpha.part(r) + 1}));

    std::vector<std::pair<int, int>> pairs;
    for (int i : inner)
        for (int j : border)
            if (i > j) pairs.emplace_back(i, j);
    std::sort(pairs.begin(), pairs.end(), [](auto a, auto b) {
        return a.first != b.first ? a.first > b.first : a.second > b.second;
    });
    return pairs;
}

long long free_pair_count_formula(const Composition& alpha, const DeltaInstance& inst) {
    auto conj = [&](int i) {
        int count = 0;
        for (int p : alpha.parts())
            if (p >= i) ++count;
        return count;
    };
    long long total = coinv(alpha);
    for (int i = 1; i <= inst.n(); ++i)
        total += static_cast<long long>(inst.s() - conj(i)) *
                 (conj(i + 1) - conjugate_part(inst.lambda(), i + 1));
    return total;
}

} // namespace dsv
