#pragma once

// Exact integer polynomials in q.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace fpd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Ascending coefficients, trailing zeros trimmed; the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long long> coeffs) {
        for (long long x : coeffs) c_.emplace_back(x);
        trim();
    }

    static Polynomial constant(Integer c) { return Polynomial(std::vector<Integer>{std::move(c)}); }
    static Polynomial monomial(std::size_t k, Integer c = 1) {
        std::vector<Integer> v(k + 1);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }
    /// 1 - q^k
    static Polynomial one_minus_q_pow(std::size_t k) { return constant(1) - monomial(k); }

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
    [[nodiscard]] const std::vector<Integer>& coeffs() const noexcept { return c_; }

    [[nodiscard]] Rational evaluate(const Rational& q) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Rational(*it);
        return acc;
    }
    [[nodiscard]] double evaluate(double q) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + it->convert_to<double>();
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Integer& k) {
        for (auto& x : c_) x *= k;
        trim();
        return *this;
    }
    /// Adds k * o in place.
    void add_scaled(const Polynomial& o, const Integer& k) {
        if (k == 0) return;
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += k * o.c_[i];
        trim();
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Integer& k) { return a *= k; }
    friend Polynomial operator*(const Integer& k, Polynomial a) { return a *= k; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Ascending powers, zero terms suppressed: "7 - 4q - 3q^3".
    [[nodiscard]] std::string to_string(const std::string& var = "q") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const Integer& c = c_[k];
            if (c == 0) continue;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (k == 0 || mag != 1) out += mag.str();
            if (k >= 1) out += var;
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Integer> c_;
};

inline Polynomial pow(const Polynomial& p, std::size_t e) {
    Polynomial out = Polynomial::constant(1);
    for (std::size_t i = 0; i < e; ++i) out *= p;
    return out;
}

/// Binomial coefficient; zero outside 0 <= k <= n.
inline Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace fpd
