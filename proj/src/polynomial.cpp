#include "relcut/polynomial.hpp"

#include <sstream>

#include "relcut/errors.hpp"

namespace relcut {

Polynomial Polynomial::constant(std::vector<std::string> names, const mpq_class& c) {
    Polynomial p(std::move(names));
    p.add_term(Exponents(p.names_.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> names, int index) {
    Polynomial p(std::move(names));
    Exponents e(p.names_.size(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> names, const Exponents& e, const mpq_class& c) {
    Polynomial p(std::move(names));
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const Exponents& e, const mpq_class& c) {
    if (c == 0) {
        return;
    }
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) {
        terms_.erase(it);
    }
}

mpq_class Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int Polynomial::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) {
            d += x;
        }
        best = std::max(best, d);
    }
    return best;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (names_.empty()) {
        names_ = o.names_;
    }
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (names_.empty()) {
        names_ = o.names_;
    }
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) {
        x *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.names_.empty() ? b.names_ : a.names_);
    Exponents e;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& point) const {
    if (point.size() != names_.size()) {
        throw InputError("evaluation point has wrong length");
    }
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) {
                term *= point[i];
            }
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (images.size() != names_.size()) {
        throw InputError("composition needs one image per variable");
    }
    std::vector<std::string> target = images.empty() ? names_ : images.front().names();
    Polynomial out(target);
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            auto& pw = powers[i];
            if (pw.empty()) {
                pw.push_back(constant(target, 1));
            }
            while (static_cast<int>(pw.size()) <= e[i]) {
                pw.push_back(pw.back() * images[i]);
            }
            term = term * pw[e[i]];
        }
        out += term;
    }
    return out;
}

Polynomial Polynomial::z_graded(const std::string& var) const {
    Polynomial out(std::vector<std::string>{var});
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) {
            d += x;
        }
        out.add_term({d}, c);
    }
    return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
    if (d.is_zero()) {
        throw InternalError("division by the zero polynomial");
    }
    Polynomial quotient(names_.empty() ? d.names_ : names_);
    Polynomial rest = *this;
    const auto& [lead_e, lead_c] = *d.terms_.rbegin();
    Exponents e;
    while (!rest.is_zero()) {
        const auto& [re, rc] = *rest.terms_.rbegin();
        e = re;
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= lead_e[i];
            if (e[i] < 0) {
                return std::nullopt;
            }
        }
        Polynomial step = monomial(quotient.names_, e, rc / lead_c);
        quotient += step;
        rest -= step * d;
    }
    return quotient;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) {
                out << "-";
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (any_var) {
                vars << "*";
            }
            vars << names_[i];
            if (e[i] > 1) {
                vars << "^" << e[i];
            }
            any_var = true;
        }
        if (!any_var) {
            out << mag.get_str();
        } else if (mag == 1) {
            out << vars.str();
        } else {
            out << mag.get_str() << "*" << vars.str();
        }
    }
    return out.str();
}

RationalExpression RationalExpression::of(const Polynomial& p) {
    return {p, Polynomial::constant(p.names(), 1)};
}

RationalExpression RationalExpression::operator+(const RationalExpression& o) const {
    RationalExpression r;
    if (den == o.den) {
        r = {num + o.num, den};
    } else {
        r = {num * o.den + o.num * den, den * o.den};
    }
    r.cancel();
    return r;
}

RationalExpression RationalExpression::operator*(const RationalExpression& o) const {
    // cross cancellation before multiplying keeps the expressions small
    Polynomial a = num;
    Polynomial b = o.num;
    Polynomial da = den;
    Polynomial db = o.den;
    if (auto q = a.divide_exact(db)) {
        a = *q;
        db = Polynomial::constant(db.names(), 1);
    }
    if (auto q = b.divide_exact(da)) {
        b = *q;
        da = Polynomial::constant(da.names(), 1);
    }
    RationalExpression r{a * b, da * db};
    r.cancel();
    return r;
}

RationalExpression RationalExpression::operator/(const RationalExpression& o) const {
    if (o.num.is_zero()) {
        throw InternalError("division by a symbolically zero expression");
    }
    return *this * RationalExpression{o.den, o.num};
}

std::optional<Polynomial> RationalExpression::as_polynomial() const {
    return num.divide_exact(den);
}

void RationalExpression::cancel() {
    if (num.is_zero()) {
        den = Polynomial::constant(den.names(), 1);
        return;
    }
    if (auto q = num.divide_exact(den)) {
        num = *q;
        den = Polynomial::constant(den.names(), 1);
        return;
    }
    if (den.size() == 1) {
        // monomial denominator: divide out the common monomial factor
        const auto& [de, dc] = *den.terms().begin();
        Exponents common = de;
        for (const auto& [e, c] : num.terms()) {
            for (std::size_t i = 0; i < common.size(); ++i) {
                common[i] = std::min(common[i], e[i]);
            }
        }
        Polynomial g = Polynomial::monomial(den.names(), common, dc);
        num = *num.divide_exact(g);
        den = *den.divide_exact(g);
    }
}

mpq_class parse_rational(const std::string& text) {
    std::string s = text;
    auto dot = s.find('.');
    mpq_class value;
    try {
        if (dot != std::string::npos) {
            std::string whole = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            bool neg = !whole.empty() && whole[0] == '-';
            if (neg) {
                whole.erase(0, 1);
            }
            if (whole.empty()) {
                whole = "0";
            }
            mpz_class scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) {
                scale *= 10;
            }
            value = mpq_class(mpz_class(whole + frac), scale);
            if (neg) {
                value = -value;
            }
        } else {
            value = mpq_class(s);
        }
    } catch (const std::invalid_argument&) {
        throw InputError("not a rational number: '" + text + "'");
    }
    if (value.get_den() == 0) {
        throw InputError("zero denominator in '" + text + "'");
    }
    value.canonicalize();
    return value;
}

}
