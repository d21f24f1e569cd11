#pragma once

#include <vector>

#include "dsv/diagrams.hpp"
#include "dsv/symfunc.hpp"

namespace dsv {

// Partial row-decreasing filling: exactly n filled cells, right justified in
// each row, weakly decreasing labels along rows, all of [lambda]^r filled.
class PRDFilling {
public:
    // row_labels[i] holds the labels of row i+1 left to right, occupying the
    // rightmost row_labels[i].size() cells of that row.
    PRDFilling(DeltaInstance inst, std::vector<std::vector<int>> row_labels);

    const DeltaInstance& instance() const { return inst_; }
    int filled_count(int row) const { return static_cast<int>(rows_[row - 1].size()); }
    int first_filled_col(int row) const {
        return inst_.row_length(row) - filled_count(row) + 1;
    }
    bool is_filled(Cell c) const { return c.col >= first_filled_col(c.row); }
    // 0 when the cell is empty.
    int label(Cell c) const;
    const std::vector<std::vector<int>>& row_labels() const { return rows_; }

    std::string str() const;

private:
    DeltaInstance inst_;
    std::vector<std::vector<int>> rows_;
};

// Injective word w : [n] -> [K], stored as the sequence of images.
using Word = std::vector<int>;

// All partial row-decreasing fillings with mu_i many labels i.
std::vector<PRDFilling> enum_prd(const DeltaInstance& inst, const Partition& mu,
                                 long long budget = kDefaultBudget);

// Number of attacking pairs satisfying (D1) or (D2).
long long dinv(const PRDFilling& phi);

bool is_admissible(const Filling& T, const Word& w);

// All mu-increasing admissible words with respect to T.
std::vector<Word> admissible_words(const Filling& T, const Composition& mu);

// The filling placing label i at the cell of w(i).
PRDFilling prd_of_word(const Filling& T, const Word& w);

// Number of pairs (c, i) satisfying (IT1) or (IT2).
long long inv_stat(const Filling& T, const Word& w);

// Graded Frobenius characteristic via the dinv expansion, monomial basis.
SymFunc frob_delta(const DeltaInstance& inst, long long budget = kDefaultBudget);

} // namespace dsv
