#include "dsv/fillings.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace dsv {

PRDFilling::PRDFilling(DeltaInstance inst, std::vector<std::vector<int>> row_labels)
    : inst_(std::move(inst)), rows_(std::move(row_labels)) {
    if (static_cast<int>(rows_.size()) != inst_.rows())
        throw InvalidArguments("PRD filling row count mismatch");
    int filled = 0;
    for (int i = 1; i <= inst_.rows(); ++i) {
        const auto& row = rows_[i - 1];
        if (static_cast<int>(row.size()) > inst_.row_length(i))
            throw InvalidArguments("PRD filling overfills row " + std::to_string(i));
        if (static_cast<int>(row.size()) < inst_.lambda().part(i))
            throw InvalidArguments("PRD filling leaves [lambda]^r unfilled in row " +
                                   std::to_string(i));
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] < row[j + 1])
                throw InvalidArguments("PRD filling row " + std::to_string(i) +
                                       " is not weakly decreasing");
        for (int lab : row)
            if (lab < 1) throw InvalidArguments("PRD labels must be positive");
        filled += static_cast<int>(row.size());
    }
    if (filled != inst_.n())
        throw InvalidArguments("PRD filling must fill exactly n cells");
}

int PRDFilling::label(Cell c) const {
    if (!inst_.in_diagram(c) || !is_filled(c)) return 0;
    return rows_[c.row - 1][c.col - first_filled_col(c.row)];
}

std::string PRDFilling::str() const {
    std::ostringstream os;
    for (int i = 1; i <= inst_.rows(); ++i) {
        for (int j = 1; j <= inst_.row_length(i); ++j) {
            if (j > 1) os << " ";
            int lab = label({i, j});
            if (lab)
                os << lab;
            else
                os << ".";
        }
        os << "\n";
    }
    return os.str();
}

std::vector<PRDFilling> enum_prd(const DeltaInstance& inst, const Partition& mu,
                                 long long budget) {
    if (mu.size() != inst.n())
        throw InvalidArguments("enum_prd: |mu| = " + std::to_string(mu.size()) +
                               " but n = " + std::to_string(inst.n()));
    std::vector<PRDFilling> out;
    const int rows = inst.rows();
    const int m = mu.length();
    std::vector<int> counts(rows, 0);
    std::vector<int> remaining(m + 1, 0);
    for (int v = 1; v <= m; ++v) remaining[v] = mu.part(v);
    std::vector<std::vector<int>> labels(rows);
    long long produced = 0;

    // Fill rows top to bottom; within a row left to right, weakly decreasing.
    std::function<void(int)> fill_row = [&](int r) {
        if (r == rows) {
            if (++produced > budget)
                throw ResourceLimit("enum_prd exceeded budget of " + std::to_string(budget));
            out.emplace_back(inst, labels);
            return;
        }
        std::function<void(int, int)> fill_cell = [&](int pos, int maxv) {
            if (pos == counts[r]) {
                fill_row(r + 1);
                return;
            }
            for (int v = maxv; v >= 1; --v) {
                if (remaining[v] == 0) continue;
                --remaining[v];
                labels[r].push_back(v);
                fill_cell(pos + 1, v);
                labels[r].pop_back();
                ++remaining[v];
            }
        };
        fill_cell(0, m);
    };

    std::function<void(int, int)> choose_counts = [&](int r, int left) {
        if (r == rows) {
            if (left == 0) fill_row(0);
            return;
        }
        int lo = inst.lambda().part(r + 1);
        int hi = std::min(inst.row_length(r + 1), left);
        for (int c = lo; c <= hi; ++c) {
            counts[r] = c;
            choose_counts(r + 1, left - c);
        }
    };
    if (rows == 0) {
        if (inst.n() == 0) out.emplace_back(inst, std::vector<std::vector<int>>{});
        return out;
    }
    choose_counts(0, inst.n());
    return out;
}

long long dinv(const PRDFilling& phi) {
    const DeltaInstance& inst = phi.instance();
    auto cells = inst.cells();
    long long count = 0;
    for (Cell a : cells) {
        for (Cell b : cells) {
            bool attacking = (a.col == b.col && a.row < b.row) ||
                             (a.col == b.col + 1 && a.row > b.row);
            if (!attacking) continue;
            int la = phi.label(a), lb = phi.label(b);
            if (lb == 0) continue;
            if ((la != 0 && la > lb) || la == 0) ++count; // (D1) or (D2)
        }
    }
    return count;
}

bool is_admissible(const Filling& T, const Word& w) {
    const DeltaInstance& inst = T.instance();
    if (static_cast<int>(w.size()) != inst.n()) return false;
    std::vector<bool> seen(inst.K() + 1, false);
    for (int v : w) {
        if (v < 1 || v > inst.K() || seen[v]) return false;
        Cell c = T.cell(v);
        if (c.col != inst.row_length(c.row) && !seen[T.label({c.row, c.col + 1})]) return false;
        seen[v] = true;
    }
    for (int lab = 1; lab <= inst.k(); ++lab)
        if (!seen[lab]) return false;
    return true;
}

std::vector<Word> admissible_words(const Filling& T, const Composition& mu) {
    const DeltaInstance& inst = T.instance();
    if (auto check = check_schubert_compatible(T); !check)
        throw NotSchubertCompatible("admissible_words requires a Schubert-compatible filling (clause " +
                                    std::to_string(check.clause) + ": " + check.witness + ")");
    if (!mu.strong() || mu.size() != inst.n())
        throw InvalidArguments("admissible_words: mu must be a strong composition of n");

    std::vector<Word> out;
    const int n = inst.n();
    std::vector<bool> used(inst.K() + 1, false);
    Word w;
    // block_of[i] = index of the block position i belongs to (1-based positions).
    std::vector<int> block_of(n + 1, 0);
    for (int b = 1, pos = 1; b <= mu.length(); ++b)
        for (int t = 0; t < mu.part(b); ++t) block_of[pos++] = b;

    std::function<void(int)> rec = [&](int pos) {
        if (pos > n) {
            bool covers = true;
            for (int lab = 1; lab <= inst.k() && covers; ++lab)
                if (!used[lab]) covers = false;
            if (covers) out.push_back(w);
            return;
        }
        int lo = 1;
        if (pos > 1 && block_of[pos] == block_of[pos - 1]) lo = w.back() + 1; // mu-increasing
        for (int v = lo; v <= inst.K(); ++v) {
            if (used[v]) continue;
            Cell c = T.cell(v);
            if (c.col != inst.row_length(c.row) && !used[T.label({c.row, c.col + 1})]) continue;
            used[v] = true;
            w.push_back(v);
            rec(pos + 1);
            w.pop_back();
            used[v] = false;
        }
    };
    rec(1);
    return out;
}

PRDFilling prd_of_word(const Filling& T, const Word& w) {
    const DeltaInstance& inst = T.instance();
    if (!is_admissible(T, w)) throw NotAdmissible("word is not admissible for this filling");
    std::vector<std::vector<int>> rows(inst.rows());
    std::vector<std::vector<int>> cols(inst.rows()); // filled columns per row
    for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
        Cell c = T.cell(w[i - 1]);
        cols[c.row - 1].push_back(c.col);
        rows[c.row - 1].push_back(i);
    }
    // Order each row's labels left to right.
    std::vector<std::vector<int>> ordered(inst.rows());
    for (int r = 0; r < inst.rows(); ++r) {
        std::vector<std::size_t> idx(cols[r].size());
        std::iota(idx.begin(), idx.end(), 0u);
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return cols[r][a] < cols[r][b]; });
        for (auto j : idx) ordered[r].push_back(rows[r][j]);
    }
    return PRDFilling(inst, std::move(ordered));
}

long long inv_stat(const Filling& T, const Word& w) {
    const DeltaInstance& inst = T.instance();
    PRDFilling phi = prd_of_word(T, w);
    long long count = 0;
    for (int c = 1; c <= inst.n(); ++c) {
        for (int i = 1; i <= inst.rows(); ++i) {
            bool it1 = false;
            for (int j = phi.first_filled_col(i); j <= inst.row_length(i) && !it1; ++j) {
                int ell = phi.label({i, j});
                if (ell > c && w[ell - 1] < w[c - 1]) it1 = true;
            }
            bool it2 = false;
            if (!it1)
                for (int j = 1; j < phi.first_filled_col(i) && !it2; ++j)
                    if (T.label({i, j}) < w[c - 1]) it2 = true;
            if (it1 || it2) ++count;
        }
    }
    return count;
}

SymFunc frob_delta(const DeltaInstance& inst, long long budget) {
    SymFunc out(inst.n(), Basis::monomial);
    long long used = 0;
    for (const auto& mu : partitions_of(inst.n())) {
        auto fillings = enum_prd(inst, mu, budget - used);
        used += static_cast<long long>(fillings.size());
        QPoly coeff;
        for (const auto& phi : fillings) coeff += QPoly::monomial(1, static_cast<int>(dinv(phi)));
        out.add_term(mu, std::move(coeff));
    }
    return out;
}

} // namespace dsv
