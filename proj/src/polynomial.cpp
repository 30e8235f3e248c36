#include "tropws/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tropws {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same_as(*b.ring()))
        throw domain_error("ring mismatch");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const Term& t : terms_)
        if (t.m.size() != ring_->n())
            throw domain_error("monomial length does not match ring");
    normalize();
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grevlex_greater(a.m, b.m); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
    }
    terms_.clear();
    for (Term& t : out)
        if (t.c != 0) terms_.push_back(std::move(t));
}

Polynomial Polynomial::constant(RingPtr ring, const Rat& c) {
    Monomial one(ring->n(), 0);
    return monomial(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Rat c) {
    Polynomial p(std::move(ring));
    if (m.size() != p.ring_->n()) throw domain_error("monomial length does not match ring");
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.front().m);
    for (const Term& t : terms_)
        if (total_degree(t.m) != d) return false;
    return true;
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, total_degree(t.m));
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r(ring_);
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && grevlex_greater(a->m, b->m))) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || grevlex_greater(b->m, a->m)) {
            r.terms_.push_back(*b++);
        } else {
            Rat c = a->c + b->c;
            if (c != 0) r.terms_.push_back({a->m, c});
            ++a;
            ++b;
        }
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mul_term(const Monomial& m, const Rat& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({mono_mul(t.m, m), t.c * c});
    return r; // monomial multiplication preserves the term order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r(ring_);
    for (const Term& t : o.terms_) r = r + mul_term(t.m, t.c);
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.c *= c;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Polynomial Polynomial::monic_canonical() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / terms_.front().c);
}

Polynomial Polynomial::clear_denominators() const {
    if (is_zero()) return *this;
    Int den = 1;
    for (const Term& t : terms_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
    Int num = 0;
    for (const Term& t : terms_) {
        Rat s = t.c * Rat(den);
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), s.get_num().get_mpz_t());
    }
    Rat scale = Rat(den) / Rat(num);
    if (terms_.front().c < 0) scale = -scale;
    return *this * scale;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rat c = t.c;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
            first = false;
        } else {
            if (c < 0) { os << " - "; c = -c; }
            else os << " + ";
        }
        bool has_factor = total_degree(t.m) > 0;
        bool coeff_shown = !has_factor || c != 1;
        if (coeff_shown) os << rat_string(c);
        bool need_star = coeff_shown;
        for (size_t i = 0; i < t.m.size(); ++i) {
            if (t.m[i] == 0) continue;
            if (need_star) os << "*";
            os << ring_->vars[i];
            if (t.m[i] > 1) os << "^" << t.m[i];
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

Int parse_nat(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.i;
    while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
    if (cur.i == start) throw parse_error("expected a number", start);
    return Int(cur.s.substr(start, cur.i - start));
}

Rat parse_rational(Cursor& cur) {
    Int num = parse_nat(cur);
    if (cur.peek() == '/') {
        ++cur.i;
        size_t at = cur.i;
        Int den = parse_nat(cur);
        if (den == 0) throw parse_error("zero denominator", at);
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    return Rat(num);
}

std::string parse_ident(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.i;
    if (cur.i >= cur.s.size() || !ident_start(cur.s[cur.i]))
        throw parse_error("expected a variable name", cur.i);
    while (cur.i < cur.s.size() && ident_char(cur.s[cur.i])) ++cur.i;
    return cur.s.substr(start, cur.i - start);
}

// term = rational | [rational "*"] factor ("*" factor)*
Term parse_term(Cursor& cur, const RingPtr& ring) {
    Term t{Monomial(ring->n(), 0), Rat(1)};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        t.c = parse_rational(cur);
        any = true;
        if (cur.peek() != '*') return t; // bare constant
        ++cur.i;
    }
    while (true) {
        size_t at = cur.i;
        std::string name = parse_ident(cur);
        int vi = ring->index_of(name);
        if (vi < 0) throw parse_error("unknown variable '" + name + "'", at);
        int e = 1;
        if (cur.peek() == '^') {
            ++cur.i;
            Int ee = parse_nat(cur);
            if (ee > 1000000) throw parse_error("exponent too large", cur.i);
            e = static_cast<int>(ee.get_si());
        }
        t.m[static_cast<size_t>(vi)] += e;
        any = true;
        if (cur.peek() == '*') { ++cur.i; continue; }
        break;
    }
    if (!any) throw parse_error("empty term", cur.i);
    return t;
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    Cursor cur{text};
    std::vector<Term> terms;
    int sign = 1;
    if (cur.peek() == '+') ++cur.i;
    else if (cur.peek() == '-') { sign = -1; ++cur.i; }
    while (true) {
        Term t = parse_term(cur, ring);
        t.c *= sign;
        terms.push_back(std::move(t));
        if (cur.done()) break;
        char op = cur.peek();
        if (op == '+') sign = 1;
        else if (op == '-') sign = -1;
        else throw parse_error(std::string("unexpected character '") + op + "'", cur.i);
        ++cur.i;
    }
    return Polynomial(ring, std::move(terms));
}

Polynomial initial_form(const WeightVector& w, const Polynomial& f) {
    if (f.is_zero()) throw domain_error("initial form of the zero polynomial");
    if (w.size() != f.ring()->n()) throw domain_error("weight vector length mismatch");
    Rat best;
    bool have = false;
    for (const Term& t : f.terms()) {
        Rat s = mono_weight(w, t.m);
        if (!have || s < best) { best = s; have = true; }
    }
    std::vector<Term> keep;
    for (const Term& t : f.terms())
        if (mono_weight(w, t.m) == best) keep.push_back(t);
    return Polynomial(f.ring(), std::move(keep));
}

} // namespace tropws
