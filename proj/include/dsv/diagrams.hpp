#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsv/partitions.hpp"

namespace dsv {

// 1-indexed (row, column), English convention: row 1 on top.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Subset of the cells of a diagram.
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(std::vector<Cell> cells);
    bool contains(Cell c) const;
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

private:
    std::vector<Cell> cells_; // sorted
};

// The triple (n, lambda, s) with the derived data Lambda, K, k.
class DeltaInstance {
public:
    static DeltaInstance build(int n, Partition lambda, int s);

    int n() const { return n_; }
    int s() const { return s_; }
    int k() const { return k_; }
    int K() const { return K_; }
    const Partition& lambda() const { return lambda_; }
    const Partition& Lambda() const { return Lambda_; }

    int rows() const { return Lambda_.length(); }
    int row_length(int i) const { return Lambda_.part(i); }
    bool in_diagram(Cell c) const {
        return c.row >= 1 && c.col >= 1 && c.col <= Lambda_.part(c.row);
    }
    // All cells of [Lambda] (row-major).
    std::vector<Cell> cells() const;
    // Left-justified copy of [lambda].
    CellSet lambda_left() const;
    // Right-justified copy of [lambda].
    CellSet lambda_right() const;

    std::string str() const;

    auto operator<=>(const DeltaInstance&) const = default;

private:
    DeltaInstance() = default;
    int n_ = 0, s_ = 0, k_ = 0, K_ = 0;
    Partition lambda_, Lambda_;
};

DeltaInstance build_instance(int n, Partition lambda, int s);

// Bijective labeling T : [Lambda] -> {1..K}.
class Filling {
public:
    Filling(DeltaInstance inst, std::vector<std::vector<int>> rows);

    const DeltaInstance& instance() const { return inst_; }
    int label(Cell c) const { return rows_[c.row - 1][c.col - 1]; }
    Cell cell(int label) const { return cell_of_label_[label]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    std::string str() const;

private:
    DeltaInstance inst_;
    std::vector<std::vector<int>> rows_;
    std::vector<Cell> cell_of_label_; // index 1..K
};

// Columns right to left, reading down each column.
Filling reading_filling(const DeltaInstance& inst);
// Columns left to right, reading down each column.
Filling reverse_filling(const DeltaInstance& inst);

struct SchubertCheck {
    bool ok = true;
    int clause = 0; // 1..5 when a clause fails
    std::string witness;
    explicit operator bool() const { return ok; }
};

SchubertCheck check_schubert_compatible(const Filling& T);

struct FlattenResult {
    // label_map[old] = new label, or 0 when the old label was deleted.
    std::vector<int> label_map;
    Filling next;
};

// Deletes the last cell of row i (and for i > l(lambda) the first cell of
// every other row), relabels order-preservingly, and reorders rows so the
// rightmost labels increase top to bottom.
FlattenResult flatten_step(const Filling& T, int i);

} // namespace dsv
