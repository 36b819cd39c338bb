#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "real_schubert/partition.hpp"

namespace real_schubert {

using BigInt = boost::multiprecision::cpp_int;

/// Element of H*(Gr(m, m+p)) in the Schubert basis, indexed by partitions in
/// the m×p box. Zero coefficients are never stored.
class CohomologyClass {
public:
    CohomologyClass(int m, int p);
    /// The class of a single Schubert variety.
    static CohomologyClass schubert(int m, int p, const Partition& lambda);

    int m() const { return m_; }
    int p() const { return p_; }
    const std::map<Partition, BigInt>& terms() const { return terms_; }
    BigInt coefficient(const Partition& lambda) const;

    void add(const Partition& lambda, const BigInt& coeff);

    bool operator==(const CohomologyClass&) const = default;

private:
    int m_;
    int p_;
    std::map<Partition, BigInt> terms_;
};

/// Littlewood–Richardson coefficient c^nu_{kappa,lambda} for every nu that
/// fits the box, computed by enumerating LR skew tableaux of shape nu/kappa
/// and content lambda.
std::map<Partition, BigInt> lr_expand(const Partition& kappa, const Partition& lambda, int m, int p);

CohomologyClass lr_multiply(const CohomologyClass& c, const Partition& lambda);

struct Condition {
    Partition shape;
    int multiplicity = 1;

    bool operator==(const Condition&) const = default;
};

/// A Schubert problem on Gr(m, m+p): a multiset of conditions whose weights
/// add up to m·p.
class SchubertProblem {
public:
    /// Merges repeated shapes and drops empty conditions. Throws
    /// std::invalid_argument when a shape leaves the box or the weights do not
    /// sum to m·p.
    SchubertProblem(int m, int p, std::vector<Condition> conditions);

    /// Text form "3.2.1^1 3.1.1^1 1^5"; a missing exponent means 1.
    static SchubertProblem parse(int m, int p, std::string_view text);

    int m() const { return m_; }
    int p() const { return p_; }
    const std::vector<Condition>& conditions() const { return conditions_; }
    /// Conditions expanded with repetition, in canonical order.
    std::vector<Partition> expanded() const;
    int condition_count() const;
    bool is_symmetric() const;

    std::string to_string() const;

private:
    int m_;
    int p_;
    std::vector<Condition> conditions_;
};

BigInt problem_degree(const SchubertProblem& problem);

/// Degree of the Wronski map on Gr(m, m+p):
/// (mp)!·1!2!⋯(p−1)! / (m!(m+1)!⋯(m+p−1)!).
BigInt wronski_degree(int m, int p);

/// Number of Lagrangian subspaces meeting C(m+1,2) general osculating
/// Lagrangian planes: 2^C(m,2)·C(m+1,2)!·1!⋯(m−1)! / (1!3!⋯(2m−1)!).
BigInt lagrangian_degree(int m);

/// Number of standard Young tableaux of the rows×cols rectangle by the hook
/// length formula.
BigInt rectangle_hook_count(int rows, int cols);

using IndexSet = std::set<int>;

/// a(λ) = {m+i−λ_i : i = 1..m} ⊂ [2m].
IndexSet index_set(const Partition& lambda, int m);
/// α^∠ = {2m+1−i : i ∉ α}.
IndexSet index_involution(const IndexSet& alpha, int m);

/// Outcome of the sufficient condition for a congruence modulo four on a
/// symmetric problem (λ, μ, ν^1, …, ν^n) on Gr(m, 2m). Twice the left-hand
/// side is kept so the arithmetic stays exact.
struct TheoremCheck {
    bool hypothesis = false;  ///< λ ≠ μ, or λ = μ appears again among the ν^i
    int lhs_twice = 0;        ///< 4 + Σ|ν^i| + m − ℓ(λ) − ℓ(μ)
    int n = 0;                ///< number of remaining conditions ν^i
    bool holds = false;

    std::string describe() const;
};

/// Splits λ and μ off the problem (one copy each, ∅ removes nothing) and
/// evaluates the condition on the rest. Throws std::invalid_argument if the
/// problem is not symmetric on a square Grassmannian or λ/μ are not among
/// its conditions.
TheoremCheck check_theorem_condition(const SchubertProblem& problem, const Partition& lambda,
                                     const Partition& mu);

struct ConjectureCheck {
    int margin = 0;  ///< Σ‖λ^i‖ − C(m+1, 2)
    bool holds = false;

    std::string describe() const;
};

ConjectureCheck check_conjecture_condition(const SchubertProblem& problem);

/// The theorem's condition implies the codimension inequality; this returns
/// the implication itself, which must always be true.
bool check_compare_implication(const SchubertProblem& problem, const Partition& lambda,
                               const Partition& mu);

struct DegreeZeroProblem {
    Partition lambda;  ///< anchored at ∞
    Partition mu;      ///< anchored at 0
    int skew_size = 0;
    int above_diagonal = 0;
    BigInt tableaux;  ///< f(λ^c/μ), also the degree of the problem

    SchubertProblem problem(int m) const;
};

/// Symmetric problems {λ, μ, □^k} on Gr(m, 2m) whose real restricted Wronski
/// map has degree zero while every real fiber still has two real points:
/// 4+m ≤ |λ^c/μ|+ℓ(λ)+ℓ(μ), an odd number of boxes above the diagonal of
/// λ^c/μ, and f(λ^c/μ) ≡ 2 mod 4.
///
/// Pairs are reported once per distinct Schubert problem: □ anchored at 0
/// or ∞ yields the same problem as ∅, and shapes with a full first row
/// (λ_1 = m) are skipped since they reduce to a smaller Grassmannian.
std::vector<DegreeZeroProblem> enumerate_degree_zero(int m);

}  // namespace real_schubert
