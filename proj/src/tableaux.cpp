#include "real_schubert/tableaux.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace real_schubert {

using Rational = boost::multiprecision::cpp_rational;

int StandardTableau::at(Cell cell) const {
    const auto [i, j] = cell;
    if (i < 1 || j < 1 || i > static_cast<int>(entries.size())) return 0;
    const auto& row = entries[static_cast<std::size_t>(i - 1)];
    return j <= static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j - 1)] : 0;
}

namespace {

class SytWalker {
public:
    SytWalker(const SkewShape& shape, const std::function<void(const StandardTableau&)>& visit)
        : visit_(visit), cells_(shape.cells()) {
        tableau_.shape = shape;
        tableau_.entries.assign(static_cast<std::size_t>(shape.outer().length()),
                                std::vector<int>(static_cast<std::size_t>(shape.outer().part(1)), 0));
    }

    void run() { step(1); }

private:
    bool ready(Cell cell) const {
        const auto [i, j] = cell;
        const auto& s = tableau_.shape;
        if (s.contains({i - 1, j}) && tableau_.at({i - 1, j}) == 0) return false;
        if (s.contains({i, j - 1}) && tableau_.at({i, j - 1}) == 0) return false;
        return true;
    }

    void step(int next) {
        if (next > static_cast<int>(cells_.size())) {
            visit_(tableau_);
            return;
        }
        for (const auto& cell : cells_) {
            int& slot = tableau_.entries[static_cast<std::size_t>(cell.first - 1)][static_cast<std::size_t>(cell.second - 1)];
            if (slot != 0 || !ready(cell)) continue;
            slot = next;
            step(next + 1);
            slot = 0;
        }
    }

    const std::function<void(const StandardTableau&)>& visit_;
    std::vector<Cell> cells_;
    StandardTableau tableau_;
};

void check_cap(const SkewShape& shape, int cap) {
    if (shape.size() > cap)
        throw std::length_error("skew shape " + shape.to_string() + " has " + std::to_string(shape.size()) +
                                " boxes, over the enumeration cap of " + std::to_string(cap));
}

Rational inverse_factorial(int k) {
    if (k < 0) return Rational(0);
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Rational(BigInt(1), f);
}

}  // namespace

void for_each_syt(const SkewShape& shape, const std::function<void(const StandardTableau&)>& visit, int cap) {
    check_cap(shape, cap);
    SytWalker(shape, visit).run();
}

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape, int cap) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&](const StandardTableau& t) { out.push_back(t); }, cap);
    return out;
}

BigInt count_syt(const SkewShape& shape) {
    const int n = shape.size();
    const int rows = shape.outer().length();
    if (rows == 0) return 1;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(rows)));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= rows; ++j)
            a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                inverse_factorial(shape.outer().part(i) - shape.inner().part(j) - i + j);

    Rational det = 1;
    for (int col = 0; col < rows; ++col) {
        int pivot = col;
        while (pivot < rows && a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
        if (pivot == rows) return 0;
        if (pivot != col) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
            det = -det;
        }
        const Rational p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= p;
        for (int r = col + 1; r < rows; ++r) {
            const Rational factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
            if (factor == 0) continue;
            for (int c = col; c < rows; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    BigInt nfact = 1;
    for (int k = 2; k <= n; ++k) nfact *= k;
    const Rational value = det * nfact;
    if (boost::multiprecision::denominator(value) != 1)
        throw std::logic_error("Aitken determinant produced a non-integer for " + shape.to_string());
    return boost::multiprecision::numerator(value);
}

StandardTableau transpose_tableau(const StandardTableau& tableau) {
    const auto& s = tableau.shape;
    StandardTableau out;
    out.shape = SkewShape(transpose(s.outer()), transpose(s.inner()), s.cols(), s.rows());
    out.entries.assign(static_cast<std::size_t>(out.shape.outer().length()),
                       std::vector<int>(static_cast<std::size_t>(out.shape.outer().part(1)), 0));
    for (const auto& [i, j] : s.cells())
        out.entries[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = tableau.at({i, j});
    return out;
}

int tableau_sign(const StandardTableau& tableau, const std::vector<Cell>& reference) {
    std::vector<int> word;
    word.reserve(reference.size());
    for (const auto& cell : reference) word.push_back(tableau.at(cell));
    int inversions = 0;
    for (std::size_t a = 0; a < word.size(); ++a)
        for (std::size_t b = a + 1; b < word.size(); ++b)
            if (word[a] > word[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

BigInt sign_imbalance(const SkewShape& shape, int cap) {
    const auto reference = shape.cells();
    BigInt total = 0;
    for_each_syt(shape, [&](const StandardTableau& t) { total += tableau_sign(t, reference); }, cap);
    return total < 0 ? BigInt(-total) : total;
}

}  // namespace real_schubert
