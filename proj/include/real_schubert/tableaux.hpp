#pragma once

#include <functional>
#include <vector>

#include "real_schubert/degrees.hpp"
#include "real_schubert/partition.hpp"

namespace real_schubert {

inline constexpr int kDefaultTableauCap = 16;

/// A standard filling of a skew shape: entries 1..n, increasing along rows
/// and down columns. `entries[i-1][j-1]` holds the entry of cell (i, j), 0
/// off the shape.
struct StandardTableau {
    SkewShape shape;
    std::vector<std::vector<int>> entries;

    int at(Cell cell) const;
    bool operator==(const StandardTableau& other) const { return entries == other.entries; }
};

/// Calls `visit` once per standard tableau. Throws std::length_error when the
/// shape has more than `cap` boxes.
void for_each_syt(const SkewShape& shape, const std::function<void(const StandardTableau&)>& visit,
                  int cap = kDefaultTableauCap);

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape, int cap = kDefaultTableauCap);

/// Aitken's determinant n!·det[1/(outer_i − inner_j − i + j)!], evaluated in
/// exact rational arithmetic.
BigInt count_syt(const SkewShape& shape);

/// Reflects entries across the main diagonal. Requires a symmetric shape.
StandardTableau transpose_tableau(const StandardTableau& tableau);

/// Sign of the permutation taking `reference` (a list of the shape's cells)
/// to the order in which the tableau fills them.
int tableau_sign(const StandardTableau& tableau, const std::vector<Cell>& reference);

/// |Σ sign(T)| over all standard tableaux, signs taken relative to the
/// row-reading filling.
BigInt sign_imbalance(const SkewShape& shape, int cap = kDefaultTableauCap);

}  // namespace real_schubert
