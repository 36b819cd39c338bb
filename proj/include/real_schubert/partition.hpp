#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace real_schubert {

/// Integer partition stored in canonical form: weakly decreasing positive
/// parts, no trailing zeros. The empty partition is valid.
class Partition {
public:
    Partition() = default;

    /// Accepts trailing zeros (dropped). Throws std::invalid_argument on
    /// negative parts or an increase.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses the dotted text form "3.1.1"; "" and "0" give the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based row length, 0 beyond the stored parts.
    int part(int row) const {
        return (row >= 1 && row <= length()) ? parts_[static_cast<std::size_t>(row - 1)] : 0;
    }

    bool fits(int rows, int cols) const { return length() <= rows && part(1) <= cols; }
    bool contains(const Partition& other) const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct StrictPartition {
    std::vector<int> parts;

    int sum() const;
    auto operator<=>(const StrictPartition&) const = default;
};

Partition transpose(const Partition& lambda);
bool is_symmetric(const Partition& lambda);

/// |λ|
int weight(const Partition& lambda);
/// ℓ(λ): boxes on the main diagonal, max{i : i ≤ λ_i}.
int diagonal_length(const Partition& lambda);
/// ‖λ‖ = (|λ| + ℓ(λ)) / 2, the codimension of the Lagrangian Schubert variety.
/// Throws std::invalid_argument when λ is not symmetric.
int lagrangian_codim(const Partition& lambda);

StrictPartition to_strict(const Partition& lambda);

/// λ^c with λ^c_i = cols − λ_{rows+1−i}.
Partition complement(const Partition& lambda, int rows, int cols);

/// All partitions inside the rows×cols box, in reverse lexicographic order.
std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<Partition> symmetric_partitions_in_box(int size);

using Cell = std::pair<int, int>;  // (row, column), both 1-based

/// Boxes of outer not in inner, both inside a rows×cols box.
class SkewShape {
public:
    SkewShape() = default;
    /// Throws std::invalid_argument when inner ⊄ outer or outer leaves the box.
    SkewShape(Partition outer, Partition inner, int rows, int cols);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int size() const { return weight(outer_) - weight(inner_); }
    bool contains(Cell cell) const;
    /// Cells in row-reading order (top to bottom, left to right).
    std::vector<Cell> cells() const;
    int boxes_above_diagonal() const;
    /// True when the cell set is stable under (i, j) ↦ (j, i).
    bool is_symmetric() const;

    std::string to_string() const;

private:
    Partition outer_;
    Partition inner_;
    int rows_ = 0;
    int cols_ = 0;
};

/// The skew shape λ^c/μ in the m×m box.
SkewShape complement_skew(const Partition& lambda, const Partition& mu, int m);

}  // namespace real_schubert
