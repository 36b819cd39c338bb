#include "real_schubert/degrees.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "real_schubert/tableaux.hpp"

namespace real_schubert {

namespace {

BigInt factorial(int n) {
    BigInt out = 1;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

// Row-by-row filling of nu/kappa with content lambda. Within a row labels are
// weakly increasing, so the reading word (right to left, top to bottom) visits
// each row's labels in decreasing order; the lattice condition for label j in
// row r is then used_before[j-1] >= used_before[j] + placed_in_row[j].
class LrEnumerator {
public:
    LrEnumerator(const Partition& kappa, const Partition& lambda, int m, int p)
        : kappa_(kappa), m_(m), p_(p), content_(lambda.parts()) {
        labels_ = static_cast<int>(content_.size());
        used_.assign(static_cast<std::size_t>(labels_) + 1, 0);
        nu_.assign(static_cast<std::size_t>(m) + 1, 0);
        above_.assign(static_cast<std::size_t>(p) + 2, 0);
        remaining_ = weight(lambda);
    }

    std::map<Partition, BigInt> run() {
        if (kappa_.fits(m_, p_)) fill_row(1);
        return std::move(result_);
    }

private:
    void fill_row(int r) {
        if (r > m_) {
            if (remaining_ == 0) result_[Partition(std::vector<int>(nu_.begin() + 1, nu_.end()))] += 1;
            return;
        }
        // Boxes still to place must fit in rows r..m below the previous row.
        const int bound = r == 1 ? p_ : nu_[static_cast<std::size_t>(r - 1)];
        int capacity = 0;
        for (int i = r; i <= m_; ++i) capacity += bound - kappa_.part(i);
        if (capacity < remaining_) return;

        row_counts_.assign(static_cast<std::size_t>(labels_) + 1, 0);
        std::vector<int> row_labels(static_cast<std::size_t>(p_) + 2, 0);
        place(r, kappa_.part(r) + 1, 1, bound, row_labels);
    }

    void place(int r, int col, int min_label, int bound, std::vector<int>& row_labels) {
        // Option: end the row before column `col`.
        {
            const int row_end = col - 1;
            nu_[static_cast<std::size_t>(r)] = row_end;
            const auto saved_above = above_;
            const auto saved_counts = row_counts_;
            for (int c = 1; c <= p_; ++c)
                above_[static_cast<std::size_t>(c)] =
                    (c > kappa_.part(r) && c <= row_end) ? row_labels[static_cast<std::size_t>(c)] : 0;
            for (int j = 1; j <= labels_; ++j) used_[static_cast<std::size_t>(j)] += saved_counts[static_cast<std::size_t>(j)];
            fill_row(r + 1);
            for (int j = 1; j <= labels_; ++j) used_[static_cast<std::size_t>(j)] -= saved_counts[static_cast<std::size_t>(j)];
            above_ = saved_above;
            row_counts_ = saved_counts;
        }
        if (col > bound || remaining_ == 0) return;
        const int max_label = std::min(labels_, r);
        for (int label = min_label; label <= max_label; ++label) {
            const auto l = static_cast<std::size_t>(label);
            if (used_[l] + row_counts_[l] >= content_[l - 1]) continue;
            if (label > 1 && used_[l - 1] < used_[l] + row_counts_[l] + 1) continue;
            const int over = above_[static_cast<std::size_t>(col)];
            if (over != 0 && over >= label) continue;
            row_labels[static_cast<std::size_t>(col)] = label;
            ++row_counts_[l];
            --remaining_;
            place(r, col + 1, label, bound, row_labels);
            ++remaining_;
            --row_counts_[l];
            row_labels[static_cast<std::size_t>(col)] = 0;
        }
    }

    const Partition& kappa_;
    int m_;
    int p_;
    const std::vector<int>& content_;
    int labels_ = 0;
    int remaining_ = 0;
    std::vector<int> used_;
    std::vector<int> row_counts_;
    std::vector<int> nu_;
    std::vector<int> above_;  // labels of new cells in the previous row, 0 elsewhere
    std::map<Partition, BigInt> result_;
};

}  // namespace

CohomologyClass::CohomologyClass(int m, int p) : m_(m), p_(p) {
    if (m < 1 || p < 0) throw std::invalid_argument("Grassmannian needs m >= 1 and p >= 0");
}

CohomologyClass CohomologyClass::schubert(int m, int p, const Partition& lambda) {
    CohomologyClass c(m, p);
    c.add(lambda, 1);
    return c;
}

BigInt CohomologyClass::coefficient(const Partition& lambda) const {
    const auto it = terms_.find(lambda);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void CohomologyClass::add(const Partition& lambda, const BigInt& coeff) {
    if (!lambda.fits(m_, p_))
        throw std::invalid_argument("partition " + lambda.to_string() + " leaves the Grassmannian box");
    if (coeff == 0) return;
    auto& slot = terms_[lambda];
    slot += coeff;
    if (slot == 0) terms_.erase(lambda);
}

std::map<Partition, BigInt> lr_expand(const Partition& kappa, const Partition& lambda, int m, int p) {
    if (!lambda.fits(m, p)) return {};
    return LrEnumerator(kappa, lambda, m, p).run();
}

CohomologyClass lr_multiply(const CohomologyClass& c, const Partition& lambda) {
    CohomologyClass out(c.m(), c.p());
    for (const auto& [kappa, coeff] : c.terms())
        for (const auto& [nu, lr] : lr_expand(kappa, lambda, c.m(), c.p())) out.add(nu, coeff * lr);
    return out;
}

SchubertProblem::SchubertProblem(int m, int p, std::vector<Condition> conditions) : m_(m), p_(p) {
    if (m < 1 || p < 1) throw std::invalid_argument("Schubert problem needs m, p >= 1");
    std::map<Partition, int> merged;
    for (auto& c : conditions) {
        if (c.multiplicity < 1) throw std::invalid_argument("condition multiplicity must be positive");
        if (!c.shape.fits(m, p))
            throw std::invalid_argument("condition " + c.shape.to_string() + " does not fit the " +
                                        std::to_string(m) + "x" + std::to_string(p) + " box");
        if (c.shape.empty()) continue;
        merged[c.shape] += c.multiplicity;
    }
    long total = 0;
    for (const auto& [shape, mult] : merged) total += static_cast<long>(mult) * weight(shape);
    if (total != static_cast<long>(m) * p)
        throw std::invalid_argument("condition weights sum to " + std::to_string(total) + ", expected " +
                                    std::to_string(m * p));
    // Largest shapes first.
    for (auto it = merged.rbegin(); it != merged.rend(); ++it) conditions_.push_back({it->first, it->second});
    std::stable_sort(conditions_.begin(), conditions_.end(),
                     [](const Condition& a, const Condition& b) { return weight(a.shape) > weight(b.shape); });
}

SchubertProblem SchubertProblem::parse(int m, int p, std::string_view text) {
    std::vector<Condition> conditions;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        const auto caret = token.find('^');
        Condition c;
        c.shape = Partition::parse(std::string_view(token).substr(0, caret));
        if (caret != std::string::npos) {
            try {
                std::size_t used = 0;
                c.multiplicity = std::stoi(token.substr(caret + 1), &used);
                if (used != token.size() - caret - 1) throw std::invalid_argument("trailing text");
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed multiplicity in '" + token + "'");
            }
        }
        conditions.push_back(std::move(c));
    }
    return SchubertProblem(m, p, std::move(conditions));
}

std::vector<Partition> SchubertProblem::expanded() const {
    std::vector<Partition> out;
    for (const auto& c : conditions_)
        for (int k = 0; k < c.multiplicity; ++k) out.push_back(c.shape);
    return out;
}

int SchubertProblem::condition_count() const {
    int n = 0;
    for (const auto& c : conditions_) n += c.multiplicity;
    return n;
}

bool SchubertProblem::is_symmetric() const {
    return std::all_of(conditions_.begin(), conditions_.end(),
                       [](const Condition& c) { return real_schubert::is_symmetric(c.shape); });
}

std::string SchubertProblem::to_string() const {
    std::string out;
    for (const auto& c : conditions_) {
        if (!out.empty()) out += ' ';
        out += c.shape.to_string() + "^" + std::to_string(c.multiplicity);
    }
    return out;
}

BigInt problem_degree(const SchubertProblem& problem) {
    const auto shapes = problem.expanded();
    const Partition full(std::vector<int>(static_cast<std::size_t>(problem.m()), problem.p()));
    if (shapes.empty()) return problem.m() * problem.p() == 0 ? 1 : 0;
    auto product = CohomologyClass::schubert(problem.m(), problem.p(), shapes.front());
    for (std::size_t i = 1; i < shapes.size(); ++i) product = lr_multiply(product, shapes[i]);
    return product.coefficient(full);
}

BigInt wronski_degree(int m, int p) {
    if (m < 1 || p < 1) throw std::invalid_argument("degree formula needs m, p >= 1");
    BigInt num = factorial(m * p);
    for (int k = 1; k < p; ++k) num *= factorial(k);
    BigInt den = 1;
    for (int k = m; k < m + p; ++k) den *= factorial(k);
    return num / den;
}

BigInt lagrangian_degree(int m) {
    if (m < 1) throw std::invalid_argument("Lagrangian degree needs m >= 1");
    BigInt num = BigInt(1) << (m * (m - 1) / 2);
    num *= factorial(m * (m + 1) / 2);
    for (int k = 1; k < m; ++k) num *= factorial(k);
    BigInt den = 1;
    for (int k = 1; k <= m; ++k) den *= factorial(2 * k - 1);
    return num / den;
}

BigInt rectangle_hook_count(int rows, int cols) {
    BigInt hooks = 1;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) hooks *= (rows - i) + (cols - j) + 1;
    return factorial(rows * cols) / hooks;
}

IndexSet index_set(const Partition& lambda, int m) {
    if (!lambda.fits(m, m)) throw std::invalid_argument("index set needs a partition in the m x m box");
    IndexSet out;
    for (int i = 1; i <= m; ++i) out.insert(m + i - lambda.part(i));
    return out;
}

IndexSet index_involution(const IndexSet& alpha, int m) {
    IndexSet out;
    for (int i = 1; i <= 2 * m; ++i)
        if (!alpha.contains(i)) out.insert(2 * m + 1 - i);
    return out;
}

namespace {

void require_symmetric_square(const SchubertProblem& problem) {
    if (problem.m() != problem.p())
        throw std::invalid_argument("symmetric checks need a problem on Gr(m, 2m)");
    for (const auto& c : problem.conditions())
        if (!is_symmetric(c.shape))
            throw std::invalid_argument("condition " + c.shape.to_string() + " is not symmetric");
}

std::string half_value(int twice) {
    return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice / 2) + ".5";
}

}  // namespace

std::string TheoremCheck::describe() const {
    std::ostringstream out;
    out << "2 + (sum|nu| + m - l(lambda) - l(mu))/2 = " << half_value(lhs_twice) << (holds || !hypothesis ? " <= " : " > ")
        << "n = " << n;
    if (!hypothesis) out << " (hypothesis fails: lambda = mu does not recur among the nu)";
    out << (holds ? " : holds" : " : does not hold");
    return out.str();
}

TheoremCheck check_theorem_condition(const SchubertProblem& problem, const Partition& lambda,
                                     const Partition& mu) {
    require_symmetric_square(problem);
    if (!is_symmetric(lambda) || !is_symmetric(mu))
        throw std::invalid_argument("designated conditions must be symmetric");
    auto rest = problem.expanded();
    for (const Partition* designated : {&lambda, &mu}) {
        if (designated->empty()) continue;
        const auto it = std::find(rest.begin(), rest.end(), *designated);
        if (it == rest.end())
            throw std::invalid_argument("designated condition " + designated->to_string() + " is not in the problem");
        rest.erase(it);
    }
    TheoremCheck check;
    check.n = static_cast<int>(rest.size());
    int nu_weight = 0;
    for (const auto& nu : rest) nu_weight += weight(nu);
    check.lhs_twice = 4 + nu_weight + problem.m() - diagonal_length(lambda) - diagonal_length(mu);
    // Empty designated conditions impose nothing, so their anchor points
    // never need to stay apart.
    check.hypothesis = lambda != mu || lambda.empty() ||
                       std::find(rest.begin(), rest.end(), lambda) != rest.end();
    check.holds = check.hypothesis && check.lhs_twice <= 2 * check.n;
    return check;
}

std::string ConjectureCheck::describe() const {
    std::ostringstream out;
    out << "sum ||lambda^i|| - dim LG = " << margin << (holds ? " >= 2 : holds" : " < 2 : does not hold");
    return out.str();
}

ConjectureCheck check_conjecture_condition(const SchubertProblem& problem) {
    require_symmetric_square(problem);
    ConjectureCheck check;
    for (const auto& c : problem.conditions()) check.margin += c.multiplicity * lagrangian_codim(c.shape);
    check.margin -= problem.m() * (problem.m() + 1) / 2;
    check.holds = check.margin >= 2;
    return check;
}

bool check_compare_implication(const SchubertProblem& problem, const Partition& lambda, const Partition& mu) {
    return !check_theorem_condition(problem, lambda, mu).holds || check_conjecture_condition(problem).holds;
}

SchubertProblem DegreeZeroProblem::problem(int m) const {
    return SchubertProblem(m, m, {{lambda, 1}, {mu, 1}, {Partition{1}, skew_size}});
}

std::vector<DegreeZeroProblem> enumerate_degree_zero(int m) {
    if (m < 3) throw std::invalid_argument("degree-zero enumeration needs m >= 3");
    const Partition box_cell{1};
    const auto canonical = [&](const Partition& p) { return p == box_cell ? Partition{} : p; };

    std::map<std::pair<Partition, Partition>, DegreeZeroProblem> found;
    const auto symmetric = symmetric_partitions_in_box(m);
    for (const auto& lambda : symmetric) {
        if (lambda.part(1) == m) continue;
        const Partition lambda_c = complement(lambda, m, m);
        for (const auto& mu : symmetric) {
            if (mu.part(1) == m || !lambda_c.contains(mu)) continue;
            const SkewShape skew(lambda_c, mu, m, m);
            if (4 + m > skew.size() + diagonal_length(lambda) + diagonal_length(mu)) continue;
            if (skew.boxes_above_diagonal() % 2 == 0) continue;
            BigInt f = count_syt(skew);
            if (f % 4 != 2) continue;

            Partition a = canonical(lambda);
            Partition b = canonical(mu);
            if (std::make_pair(weight(a), a) < std::make_pair(weight(b), b)) std::swap(a, b);
            auto key = std::make_pair(a, b);
            if (found.contains(key)) continue;
            const SkewShape rep = complement_skew(a, b, m);
            found.emplace(key, DegreeZeroProblem{a, b, rep.size(), rep.boxes_above_diagonal(), std::move(f)});
        }
    }
    std::vector<DegreeZeroProblem> out;
    for (auto& [key, problem] : found) out.push_back(std::move(problem));
    std::sort(out.begin(), out.end(), [](const DegreeZeroProblem& x, const DegreeZeroProblem& y) {
        return std::tie(x.tableaux, x.lambda, x.mu) < std::tie(y.tableaux, y.lambda, y.mu);
    });
    return out;
}

}  // namespace real_schubert
