#pragma once

#include <functional>
#include <map>
#include <vector>

#include "dsv/partitions.hpp"
#include "dsv/qpoly.hpp"

namespace dsv {

enum class Basis { monomial, schur, homogeneous };

const char* basis_tag(Basis b);
Basis basis_from_tag(const std::string& tag);

// Orders partitions lexicographically descending; a linear extension of
// dominance order on partitions of equal size.
struct PartitionDescLex {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

// Homogeneous symmetric function of degree n with QPoly coefficients.
// Zero coefficients are dropped; terms iterate in descending lex order.
class SymFunc {
public:
    using TermMap = std::map<Partition, QPoly, PartitionDescLex>;

    SymFunc(int n, Basis basis) : n_(n), basis_(basis) {}

    int n() const { return n_; }
    Basis basis() const { return basis_; }
    const TermMap& terms() const { return terms_; }

    void add_term(const Partition& la, QPoly coeff);
    QPoly coeff(const Partition& la) const;

    SymFunc& operator+=(const SymFunc& rhs); // same degree and basis
    SymFunc& scale(const QPoly& f);

    bool is_zero() const { return terms_.empty(); }
    // Max q-degree over all coefficients; -1 when zero.
    int q_degree() const;
    // Coefficientwise extraction of the q^d piece (integer SymFunc).
    SymFunc q_coefficient(int d) const;
    // Coefficientwise q_reverse at degree d.
    SymFunc q_reversed(int d) const;

    std::string str() const;

private:
    int n_;
    Basis basis_;
    TermMap terms_;
};

// Equality after conversion to the monomial basis.
bool equal_as_symfunc(const SymFunc& a, const SymFunc& b);

// Semistandard tableau: rows weakly increase, columns strictly increase.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    // Rows read left to right, bottom row first.
    std::vector<int> reading_word() const;
};

// Visits every SSYT of the given shape and content.
void for_each_ssyt(const Partition& shape, const Partition& content,
                   const std::function<void(const Tableau&)>& visit);

// Lascoux-Schutzenberger charge of a word whose content is a partition.
long long charge(const std::vector<int>& word);

// Kostka-Foulkes polynomial, generated by charge over SSYT(la, mu). Memoized.
QPoly kostka_foulkes(const Partition& la, const Partition& mu);
// Kostka number K_{la,mu}(1).
long long kostka_number(const Partition& la, const Partition& mu);

// Dual Hall-Littlewood H_nu = sum_la K_{la,nu}(q) s_la.
SymFunc hl_H(const Partition& nu);
// Modified dual Hall-Littlewood: coefficientwise q-reversal at degree n(nu).
SymFunc hl_modified(const Partition& nu);

SymFunc to_basis(const SymFunc& f, Basis target);

// Schur expansion of s_la * h_r (horizontal strips of size r).
SymFunc pieri_h(const Partition& la, int r);

} // namespace dsv
