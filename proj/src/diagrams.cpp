#include "dsv/diagrams.hpp"

#include <algorithm>
#include <sstream>

namespace dsv {

CellSet::CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool CellSet::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

DeltaInstance DeltaInstance::build(int n, Partition lambda, int s) {
    if (n < 0) throw InvalidInstance("n must be nonnegative");
    if (lambda.size() > n)
        throw InvalidInstance("|lambda| = " + std::to_string(lambda.size()) + " exceeds n = " +
                              std::to_string(n));
    if (lambda.length() > s)
        throw InvalidInstance("l(lambda) = " + std::to_string(lambda.length()) + " exceeds s = " +
                              std::to_string(s));
    if (s < 1 && n > 0) throw InvalidInstance("s must be at least 1 when n > 0");

    DeltaInstance inst;
    inst.n_ = n;
    inst.s_ = s;
    inst.k_ = lambda.size();
    inst.lambda_ = std::move(lambda);
    std::vector<int> big(s, 0);
    for (int i = 1; i <= s; ++i) big[i - 1] = inst.lambda_.part(i) + (n - inst.k_);
    inst.Lambda_ = Partition(std::move(big));
    inst.K_ = inst.Lambda_.size();
    return inst;
}

DeltaInstance build_instance(int n, Partition lambda, int s) {
    return DeltaInstance::build(n, std::move(lambda), s);
}

std::vector<Cell> DeltaInstance::cells() const {
    std::vector<Cell> out;
    out.reserve(K_);
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
    return out;
}

CellSet DeltaInstance::lambda_left() const {
    std::vector<Cell> out;
    for (int i = 1; i <= lambda_.length(); ++i)
        for (int j = 1; j <= lambda_.part(i); ++j) out.push_back({i, j});
    return CellSet(std::move(out));
}

CellSet DeltaInstance::lambda_right() const {
    std::vector<Cell> out;
    for (int i = 1; i <= lambda_.length(); ++i)
        for (int j = row_length(i) - lambda_.part(i) + 1; j <= row_length(i); ++j)
            out.push_back({i, j});
    return CellSet(std::move(out));
}

std::string DeltaInstance::str() const {
    std::ostringstream os;
    os << "(n=" << n_ << ", lambda=" << lambda_.str() << ", s=" << s_ << ")";
    return os.str();
}

Filling::Filling(DeltaInstance inst, std::vector<std::vector<int>> rows)
    : inst_(std::move(inst)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != inst_.rows())
        throw InvalidArguments("filling row count mismatch");
    cell_of_label_.assign(inst_.K() + 1, Cell{});
    int seen = 0;
    for (int i = 1; i <= inst_.rows(); ++i) {
        if (static_cast<int>(rows_[i - 1].size()) != inst_.row_length(i))
            throw InvalidArguments("filling row length mismatch at row " + std::to_string(i));
        for (int j = 1; j <= inst_.row_length(i); ++j) {
            int lab = rows_[i - 1][j - 1];
            if (lab < 1 || lab > inst_.K() || cell_of_label_[lab].row != 0)
                throw InvalidArguments("filling is not a bijection onto [K]");
            cell_of_label_[lab] = {i, j};
            ++seen;
        }
    }
    if (seen != inst_.K()) throw InvalidArguments("filling does not cover [Lambda]");
}

std::string Filling::str() const {
    std::ostringstream os;
    for (const auto& row : rows_) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "\n";
    }
    return os.str();
}

namespace {

Filling column_filling(const DeltaInstance& inst, bool right_to_left) {
    std::vector<std::vector<int>> rows(inst.rows());
    for (int i = 1; i <= inst.rows(); ++i) rows[i - 1].assign(inst.row_length(i), 0);
    int next = 1;
    int width = inst.rows() ? inst.row_length(1) : 0;
    for (int step = 0; step < width; ++step) {
        int j = right_to_left ? width - step : step + 1;
        for (int i = 1; i <= inst.rows(); ++i)
            if (inst.row_length(i) >= j) rows[i - 1][j - 1] = next++;
    }
    return Filling(inst, std::move(rows));
}

} // namespace

Filling reading_filling(const DeltaInstance& inst) { return column_filling(inst, true); }

Filling reverse_filling(const DeltaInstance& inst) { return column_filling(inst, false); }

SchubertCheck check_schubert_compatible(const Filling& T) {
    const DeltaInstance& inst = T.instance();
    auto fail = [](int clause, std::string witness) {
        return SchubertCheck{false, clause, std::move(witness)};
    };
    auto cellstr = [](Cell c) {
        return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    };

    // 1. T restricts to a bijection between [lambda]^r and [k].
    CellSet lr = inst.lambda_right();
    for (Cell c : lr.cells())
        if (T.label(c) > inst.k())
            return fail(1, "label " + std::to_string(T.label(c)) + " at " + cellstr(c) +
                               " lies in [lambda]^r but exceeds k");
    for (int lab = 1; lab <= inst.k(); ++lab)
        if (!lr.contains(T.cell(lab)))
            return fail(1, "label " + std::to_string(lab) + " at " + cellstr(T.cell(lab)) +
                               " is not in [lambda]^r");

    // 2. Decreasing along each row from left to right.
    for (int i = 1; i <= inst.rows(); ++i)
        for (int j = 1; j < inst.row_length(i); ++j)
            if (T.label({i, j}) <= T.label({i, j + 1}))
                return fail(2, "row " + std::to_string(i) + " does not decrease at " +
                                   cellstr({i, j}));

    // 3. Labels on [lambda]^r exceed every label in the next column.
    for (Cell c : lr.cells())
        for (int i = 1; i <= inst.rows(); ++i)
            if (inst.row_length(i) >= c.col + 1 && T.label({i, c.col + 1}) >= T.label(c))
                return fail(3, "label at " + cellstr(c) + " is not greater than column " +
                                   std::to_string(c.col + 1) + " label at row " +
                                   std::to_string(i));

    // 4. Rightmost labels increase down the rows.
    for (int i = 2; i <= inst.rows(); ++i) {
        Cell above{i - 1, inst.row_length(i - 1)};
        Cell here{i, inst.row_length(i)};
        if (T.label(above) >= T.label(here))
            return fail(4, "rightmost labels do not increase between rows " +
                               std::to_string(i - 1) + " and " + std::to_string(i));
    }

    // 5. T(a,b) > T(c,d) with b,d > 1 implies T(a,b-1) > T(c,d-1).
    for (Cell a : inst.cells()) {
        if (a.col <= 1) continue;
        for (Cell c : inst.cells()) {
            if (c.col <= 1 || a == c) continue;
            if (T.label(a) > T.label(c) &&
                T.label({a.row, a.col - 1}) <= T.label({c.row, c.col - 1}))
                return fail(5, "left shift of " + cellstr(a) + " > " + cellstr(c) +
                                   " breaks order");
        }
    }
    return {};
}

FlattenResult flatten_step(const Filling& T, int i) {
    const DeltaInstance& inst = T.instance();
    if (i < 1 || i > inst.s()) throw InvalidRow("row index out of range: " + std::to_string(i));
    if (inst.row_length(i) == 0) throw InvalidRow("row " + std::to_string(i) + " is empty");
    const int K = inst.K();
    const int ell = inst.lambda().length();

    std::vector<bool> deleted(K + 1, false);
    deleted[T.label({i, inst.row_length(i)})] = true;
    if (i > ell)
        for (int r = 1; r <= inst.rows(); ++r)
            if (r != i) deleted[T.label({r, 1})] = true;

    std::vector<int> label_map(K + 1, 0);
    int next = 1;
    for (int lab = 1; lab <= K; ++lab)
        if (!deleted[lab]) label_map[lab] = next++;

    // Surviving rows with relabeled entries.
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= inst.rows(); ++r) {
        int from = (i > ell && r != i) ? 2 : 1;
        int to = (r == i) ? inst.row_length(r) - 1 : inst.row_length(r);
        std::vector<int> row;
        for (int j = from; j <= to; ++j) row.push_back(label_map[T.label({r, j})]);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.back() < b.back(); });

    Partition new_lambda;
    if (i <= ell) {
        std::vector<int> parts = inst.lambda().parts();
        --parts[i - 1];
        std::sort(parts.rbegin(), parts.rend());
        new_lambda = Partition(std::move(parts));
    } else {
        new_lambda = inst.lambda();
    }
    DeltaInstance next_inst = DeltaInstance::build(inst.n() - 1, new_lambda, inst.s());

    std::vector<int> lengths;
    for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
    if (lengths != next_inst.Lambda().parts())
        throw InvalidArguments("flatten_step: rows do not reassemble into " +
                               next_inst.Lambda().str());

    return FlattenResult{std::move(label_map), Filling(next_inst, std::move(rows))};
}

} // namespace dsv
