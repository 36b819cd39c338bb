#include "real_schubert/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace real_schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive before trailing zeros");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty() || text == "0" || text == "()") return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t dot = std::min(text.find('.', pos), text.size());
        const std::string_view piece = text.substr(pos, dot - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
            throw std::invalid_argument("malformed partition text: '" + std::string(text) + "'");
        parts.push_back(value);
        pos = dot + 1;
    }
    return Partition(std::move(parts));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int StrictPartition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition transpose(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.part(1)), 0);
    for (int j = 1; j <= lambda.part(1); ++j) {
        int count = 0;
        while (lambda.part(count + 1) >= j) ++count;
        cols[static_cast<std::size_t>(j - 1)] = count;
    }
    return Partition(std::move(cols));
}

bool is_symmetric(const Partition& lambda) { return transpose(lambda) == lambda; }

int weight(const Partition& lambda) {
    return std::accumulate(lambda.parts().begin(), lambda.parts().end(), 0);
}

int diagonal_length(const Partition& lambda) {
    int ell = 0;
    while (lambda.part(ell + 1) >= ell + 1) ++ell;
    return ell;
}

int lagrangian_codim(const Partition& lambda) {
    const int total = weight(lambda) + diagonal_length(lambda);
    if (total % 2 != 0 || !is_symmetric(lambda))
        throw std::invalid_argument("norm requires a symmetric partition, got " + lambda.to_string());
    return total / 2;
}

StrictPartition to_strict(const Partition& lambda) {
    if (!is_symmetric(lambda))
        throw std::invalid_argument("strict form requires a symmetric partition, got " + lambda.to_string());
    StrictPartition kappa;
    for (int i = 1; i <= lambda.length(); ++i) {
        const int v = lambda.part(i) - i + 1;
        if (v <= 0) break;
        kappa.parts.push_back(v);
    }
    return kappa;
}

Partition complement(const Partition& lambda, int rows, int cols) {
    if (!lambda.fits(rows, cols))
        throw std::invalid_argument("partition " + lambda.to_string() + " does not fit the " +
                                    std::to_string(rows) + "x" + std::to_string(cols) + " box");
    std::vector<int> parts(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i) parts[static_cast<std::size_t>(i - 1)] = cols - lambda.part(rows + 1 - i);
    return Partition(std::move(parts));
}

namespace {

void box_partitions(int rows, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (static_cast<int>(prefix.size()) == rows || max_part == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int v = max_part; v >= 0; --v) {
        if (v == 0) {
            out.emplace_back(prefix);
            continue;
        }
        prefix.push_back(v);
        box_partitions(rows, v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    box_partitions(rows, cols, prefix, out);
    return out;
}

std::vector<Partition> symmetric_partitions_in_box(int size) {
    std::vector<Partition> out;
    for (auto& lambda : partitions_in_box(size, size))
        if (is_symmetric(lambda)) out.push_back(std::move(lambda));
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner, int rows, int cols)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(rows), cols_(cols) {
    if (!outer_.fits(rows_, cols_))
        throw std::invalid_argument("outer shape " + outer_.to_string() + " leaves the box");
    if (!outer_.contains(inner_))
        throw std::invalid_argument("inner shape " + inner_.to_string() + " is not contained in " +
                                    outer_.to_string());
}

bool SkewShape::contains(Cell cell) const {
    const auto [i, j] = cell;
    return i >= 1 && j > inner_.part(i) && j <= outer_.part(i);
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 1; i <= outer_.length(); ++i)
        for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.emplace_back(i, j);
    return out;
}

int SkewShape::boxes_above_diagonal() const {
    int count = 0;
    for (const auto& [i, j] : cells())
        if (j > i) ++count;
    return count;
}

bool SkewShape::is_symmetric() const {
    for (const auto& [i, j] : cells())
        if (!contains({j, i})) return false;
    return true;
}

std::string SkewShape::to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

SkewShape complement_skew(const Partition& lambda, const Partition& mu, int m) {
    return SkewShape(complement(lambda, m, m), mu, m, m);
}

}  // namespace real_schubert
