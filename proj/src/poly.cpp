#include "real_schubert/poly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace real_schubert {

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(int degree, Complex coeff) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, Complex{});
    c.back() = coeff;
    return Poly(std::move(c));
}

Poly Poly::from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{1.0};
    for (const Complex r : roots) {
        std::vector<Complex> next(c.size() + 1, Complex{});
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return Poly(std::move(c));
}

int Poly::degree() const {
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
        if (coeffs_[static_cast<std::size_t>(i)] != Complex{}) return i;
    return -1;
}

Complex Poly::operator()(Complex t) const {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::derivative(int order) const {
    std::vector<Complex> c = coeffs_;
    for (int k = 0; k < order; ++k) {
        if (c.empty()) break;
        for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * static_cast<double>(i);
        c.pop_back();
    }
    return Poly(std::move(c));
}

Poly& Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
    return *this;
}

Poly Poly::monic() const {
    const int d = degree();
    if (d < 0) return *this;
    return *this * (1.0 / coeffs_[static_cast<std::size_t>(d)]);
}

Poly Poly::operator+(const Poly& other) const {
    std::vector<Complex> c(std::max(coeffs_.size(), other.coeffs_.size()), Complex{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& other) const { return *this + other * Complex(-1.0); }

Poly Poly::operator*(const Poly& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return Poly{};
    std::vector<Complex> c(coeffs_.size() + other.coeffs_.size() - 1, Complex{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(Complex scalar) const {
    std::vector<Complex> c = coeffs_;
    for (auto& v : c) v *= scalar;
    return Poly(std::move(c));
}

std::string Poly::to_string() const {
    if (degree() < 0) return "0";
    std::ostringstream out;
    out.precision(17);
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Complex c = coeffs_[i];
        if (c == Complex{}) continue;
        const bool real = c.imag() == 0.0;
        if (real && c.real() < 0) {
            out << (first ? "-" : " - ");
            c = -c;
        } else if (!first) {
            out << " + ";
        }
        first = false;
        const bool unit = real && c.real() == 1.0 && i > 0;
        if (real && !unit)
            out << c.real();
        else if (!real)
            out << '(' << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
        if (i > 0) out << (unit ? "" : "*") << 't';
        if (i > 1) out << '^' << i;
    }
    return out.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) text_ += ch;
    }

    Poly parse() {
        if (text_.empty()) fail("empty polynomial");
        std::vector<Complex> c;
        bool first = true;
        while (pos_ < text_.size() || first) {
            double sign = 1.0;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1.0 : 1.0;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            const auto [coeff, exponent] = term();
            if (c.size() <= static_cast<std::size_t>(exponent)) c.resize(static_cast<std::size_t>(exponent) + 1);
            c[static_cast<std::size_t>(exponent)] += sign * coeff;
        }
        return Poly(std::move(c));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse polynomial '" + text_ + "': " + why + " at offset " +
                                    std::to_string(pos_));
    }

    double number() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') ++pos_;
        if ((peek() == 'e' || peek() == 'E') && pos_ > start) {
            ++pos_;
            if (peek() == '+' || peek() == '-') ++pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        try {
            return std::stod(text_.substr(start, pos_ - start));
        } catch (const std::exception&) {
            fail("bad number");
        }
    }

    // a, bi, a+bi, a-bi inside parentheses
    Complex complex_literal() {
        Complex value{};
        bool any = false;
        while (peek() != ')') {
            double sign = 1.0;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1.0 : 1.0;
                ++pos_;
            } else if (any) {
                fail("expected sign inside complex literal");
            }
            double mag = 1.0;
            bool has_number = false;
            if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
                mag = number();
                has_number = true;
            }
            if (peek() == 'i') {
                ++pos_;
                value += Complex(0.0, sign * mag);
            } else {
                if (!has_number) fail("expected number");
                value += sign * mag;
            }
            any = true;
            if (pos_ >= text_.size()) fail("unterminated '('");
        }
        ++pos_;
        if (!any) fail("empty complex literal");
        return value;
    }

    std::pair<Complex, int> term() {
        Complex coeff = 1.0;
        bool has_coeff = false;
        if (peek() == '(') {
            ++pos_;
            coeff = complex_literal();
            has_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
            coeff = number();
            has_coeff = true;
            if (peek() == 'i') {
                ++pos_;
                coeff = Complex(0.0, coeff.real());
            }
        } else if (peek() == 'i') {
            ++pos_;
            coeff = Complex(0.0, 1.0);
            has_coeff = true;
        }
        if (peek() == '*') {
            if (!has_coeff) fail("dangling '*'");
            ++pos_;
            if (peek() != 't') fail("expected 't' after '*'");
        }
        int exponent = 0;
        if (peek() == 't') {
            ++pos_;
            exponent = 1;
            if (peek() == '^') {
                ++pos_;
                const std::size_t start = pos_;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                if (pos_ == start) fail("expected exponent");
                exponent = std::stoi(text_.substr(start, pos_ - start));
            }
        } else if (!has_coeff) {
            fail("expected a term");
        }
        return {coeff, exponent};
    }

    std::string text_;
    std::size_t pos_ = 0;
};

void wronskian_terms(std::span<const Poly> polys, std::size_t row, std::vector<int>& exps, Complex weight,
                     std::vector<Complex>& out) {
    const std::size_t m = polys.size();
    if (row == m) {
        double vandermonde = 1.0;
        int total = 0;
        for (std::size_t i = 0; i < m; ++i) {
            total += exps[i];
            for (std::size_t j = i + 1; j < m; ++j) vandermonde *= exps[j] - exps[i];
        }
        const int shift = total - static_cast<int>(m * (m - 1) / 2);
        out[static_cast<std::size_t>(shift)] += weight * vandermonde;
        return;
    }
    const auto& c = polys[row].coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == Complex{}) continue;
        if (std::find(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(row), static_cast<int>(k)) !=
            exps.begin() + static_cast<std::ptrdiff_t>(row))
            continue;
        exps[row] = static_cast<int>(k);
        wronskian_terms(polys, row + 1, exps, weight * c[k], out);
    }
}

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

Poly wronskian(std::span<const Poly> polys) {
    if (polys.empty()) return Poly({1.0});
    std::size_t top = 0;
    for (const auto& p : polys) top += p.coeffs().size();
    std::vector<Complex> out(top + 1, Complex{});
    std::vector<int> exps(polys.size(), 0);
    wronskian_terms(polys, 0, exps, 1.0, out);
    return Poly(std::move(out));
}

Complex symplectic_pairing(const Poly& u, const Poly& v, int r) {
    if (u.degree() > r || v.degree() > r) throw std::invalid_argument("pairing arguments exceed degree r");
    Complex acc{};
    double fact_i = 1.0;
    for (int i = 0; i <= r; ++i) {
        if (i > 0) fact_i *= i;
        double fact_ri = 1.0;
        for (int k = 2; k <= r - i; ++k) fact_ri *= k;
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        acc += sign * (fact_i * u.coeff(i)) * (fact_ri * v.coeff(r - i));
    }
    return acc;
}

std::vector<Complex> roots(const Poly& p) {
    const int d = p.degree();
    if (d <= 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    const Complex lead = p.coeff(d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -p.coeff(i) / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<Complex> out(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
    return out;
}

double relative_distance(const Poly& a, const Poly& b) {
    double scale = 1.0;
    for (const auto& c : b.coeffs()) scale = std::max(scale, std::abs(c));
    const int top = std::max(a.degree(), b.degree());
    double worst = 0.0;
    for (int i = 0; i <= top; ++i) worst = std::max(worst, std::abs(a.coeff(i) - b.coeff(i)));
    return worst / scale;
}

}  // namespace real_schubert
