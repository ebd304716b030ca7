#ifndef relcut_polynomial_hpp
#define relcut_polynomial_hpp

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace relcut {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept in lexicographic order of exponent vectors; zero coefficients are never
// stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> names) : names_(std::move(names)) {}

    static Polynomial constant(std::vector<std::string> names, const mpq_class& c);
    static Polynomial variable(std::vector<std::string> names, int index);
    static Polynomial monomial(std::vector<std::string> names, const Exponents& e, const mpq_class& c = 1);

    int variable_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::map<Exponents, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponents& e, const mpq_class& c);
    mpq_class coefficient(const Exponents& e) const;
    int total_degree() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const mpq_class& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    mpq_class evaluate(const std::vector<mpq_class>& point) const;
    // replace every variable i by images[i] (all over a common variable set)
    Polynomial compose(const std::vector<Polynomial>& images) const;
    // total-degree grading: all variables sent to a single variable t
    Polynomial z_graded(const std::string& var = "t") const;

    // quotient when d divides this exactly, nullopt otherwise
    std::optional<Polynomial> divide_exact(const Polynomial& d) const;

    std::string to_string() const;

private:
    std::vector<std::string> names_;
    std::map<Exponents, mpq_class> terms_;
};

// Numerator/denominator pair over a common variable set.
struct RationalExpression {
    Polynomial num;
    Polynomial den;

    static RationalExpression of(const Polynomial& p);
    RationalExpression operator+(const RationalExpression& o) const;
    RationalExpression operator*(const RationalExpression& o) const;
    RationalExpression operator/(const RationalExpression& o) const;
    // tries exact division of the numerator by the denominator
    std::optional<Polynomial> as_polynomial() const;
    void cancel();
};

mpq_class parse_rational(const std::string& text);

}

#endif
