#include "folichar/element.hpp"

#include <algorithm>
#include <sstream>

namespace folichar {

using symbols::fn_less;
using symbols::gen_degree;
using symbols::gen_family;
using symbols::gen_less;
using symbols::gen_name;
using symbols::gen_odd;

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const GenPow &gp : word) d += gen_degree(gp.gen) * gp.exp;
    return d;
}

int normalize_word(Word &w) {
    // Insertion sort counting odd-odd transpositions.  Words are short.
    int sign = 1;
    for (size_t i = 1; i < w.size(); ++i) {
        GenPow cur = w[i];
        bool cur_odd = gen_odd(cur.gen);
        size_t j = i;
        while (j > 0 && gen_less(cur.gen, w[j - 1].gen)) {
            if (cur_odd && gen_odd(w[j - 1].gen) && (cur.exp % 2) && (w[j - 1].exp % 2)) sign = -sign;
            w[j] = w[j - 1];
            --j;
        }
        w[j] = cur;
    }
    // Merge equal generators; odd repeats kill the monomial.
    size_t out = 0;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        std::uint64_t exp = 0;
        while (j < w.size() && w[j].gen == w[i].gen) exp += w[j++].exp;
        if (exp > 0) {
            if (gen_odd(w[i].gen) && exp > 1) return 0;
            w[out++] = GenPow{w[i].gen, (std::uint32_t)exp};
        }
        i = j;
    }
    w.resize(out);
    return sign;
}

void normalize_fnpart(FnPart &f) {
    std::sort(f.begin(), f.end(), [](const FnPow &a, const FnPow &b) { return fn_less(a.fn, b.fn); });
    size_t out = 0;
    for (size_t i = 0; i < f.size();) {
        size_t j = i;
        std::uint64_t exp = 0;
        while (j < f.size() && f[j].fn == f[i].fn) exp += f[j++].exp;
        if (exp > 0) f[out++] = FnPow{f[i].fn, (std::uint32_t)exp};
        i = j;
    }
    f.resize(out);
}

bool word_less(const Word &a, const Word &b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i].gen != b[i].gen) return gen_less(a[i].gen, b[i].gen);
        if (a[i].exp != b[i].exp) return a[i].exp > b[i].exp; // higher power first
    }
    return a.size() < b.size();
}

static bool fnpart_less(const FnPart &a, const FnPart &b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i].fn != b[i].fn) return fn_less(a[i].fn, b[i].fn);
        if (a[i].exp != b[i].exp) return a[i].exp > b[i].exp;
    }
    return a.size() < b.size();
}

bool monomial_key_less(const Monomial &a, const Monomial &b) {
    if (a.word != b.word) return word_less(a.word, b.word);
    return fnpart_less(a.funcs, b.funcs);
}

GradedElement::GradedElement(Rational c) {
    if (!c.is_zero()) terms_.push_back(Monomial{c, {}, {}});
}

GradedElement GradedElement::gen(Gen g, Rational c) {
    GradedElement e;
    if (!c.is_zero()) e.terms_.push_back(Monomial{c, {}, {GenPow{g, 1}}});
    return e;
}

GradedElement GradedElement::fn(Fn f, Rational c, std::uint32_t exp) {
    GradedElement e;
    if (!c.is_zero()) {
        FnPart fp;
        if (exp > 0) fp.push_back(FnPow{f, exp});
        e.terms_.push_back(Monomial{c, std::move(fp), {}});
    }
    return e;
}

GradedElement GradedElement::from_raw(std::vector<Monomial> raw) {
    for (Monomial &m : raw) {
        int sign = normalize_word(m.word);
        if (sign == 0)
            m.coeff = Rational(0);
        else if (sign < 0)
            m.coeff = -m.coeff;
        normalize_fnpart(m.funcs);
    }
    std::sort(raw.begin(), raw.end(), monomial_key_less);
    GradedElement e;
    for (size_t i = 0; i < raw.size();) {
        size_t j = i;
        Rational c(0);
        while (j < raw.size() && raw[j].word == raw[i].word && raw[j].funcs == raw[i].funcs)
            c += raw[j++].coeff;
        if (!c.is_zero()) e.terms_.push_back(Monomial{c, std::move(raw[i].funcs), std::move(raw[i].word)});
        i = j;
    }
    return e;
}

bool GradedElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.front().degree();
    for (const Monomial &m : terms_)
        if (m.degree() != d) return false;
    return true;
}

unsigned GradedElement::degree() const {
    if (terms_.empty()) return 0;
    if (!is_homogeneous()) throw std::logic_error("degree() on inhomogeneous element");
    return terms_.front().degree();
}

GradedElement GradedElement::homogeneous_part(unsigned n) const {
    GradedElement e;
    for (const Monomial &m : terms_)
        if (m.degree() == n) e.terms_.push_back(m);
    return e;
}

unsigned GradedElement::max_degree() const {
    unsigned d = 0;
    for (const Monomial &m : terms_) d = std::max(d, m.degree());
    return d;
}

unsigned GradedElement::min_family_count(Family fam) const {
    unsigned best = UINT32_MAX;
    for (const Monomial &m : terms_) {
        unsigned c = 0;
        for (const GenPow &gp : m.word)
            if (gen_family(gp.gen) == fam) c += gp.exp;
        best = std::min(best, c);
    }
    return terms_.empty() ? 0 : best;
}

GradedElement GradedElement::operator-() const {
    GradedElement e(*this);
    for (Monomial &m : e.terms_) m.coeff = -m.coeff;
    return e;
}

GradedElement &GradedElement::operator+=(const GradedElement &o) {
    // Merge two normal forms.
    std::vector<Monomial> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (monomial_key_less(terms_[i], o.terms_[j])) {
            out.push_back(std::move(terms_[i++]));
        } else if (monomial_key_less(o.terms_[j], terms_[i])) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) out.push_back(Monomial{c, terms_[i].funcs, terms_[i].word});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    terms_ = std::move(out);
    return *this;
}

GradedElement &GradedElement::operator-=(const GradedElement &o) { return *this += -o; }

GradedElement GradedElement::scaled(const Rational &c) const {
    if (c.is_zero()) return GradedElement();
    GradedElement e(*this);
    for (Monomial &m : e.terms_) m.coeff *= c;
    return e;
}

Monomial wedge_monomials(const Monomial &a, const Monomial &b) {
    Monomial r;
    r.coeff = a.coeff * b.coeff;
    r.funcs = a.funcs;
    r.funcs.insert(r.funcs.end(), b.funcs.begin(), b.funcs.end());
    normalize_fnpart(r.funcs);

    // Merge the two sorted words; crossing an odd factor of `a` with an odd
    // factor of `b` flips the sign.
    r.word.reserve(a.word.size() + b.word.size());
    size_t i = 0, j = 0;
    unsigned odd_left = 0; // odd-degree factors of `a` not yet emitted
    for (const GenPow &gp : a.word)
        if (gen_odd(gp.gen)) odd_left += gp.exp;
    bool neg = false;
    while (i < a.word.size() && j < b.word.size()) {
        if (a.word[i].gen == b.word[j].gen) {
            if (gen_odd(a.word[i].gen)) {
                r.coeff = Rational(0);
                return r; // odd square
            }
            r.word.push_back(GenPow{a.word[i].gen, a.word[i].exp + b.word[j].exp});
            ++i;
            ++j;
        } else if (gen_less(a.word[i].gen, b.word[j].gen)) {
            if (gen_odd(a.word[i].gen)) odd_left -= a.word[i].exp;
            r.word.push_back(a.word[i++]);
        } else {
            if (gen_odd(b.word[j].gen) && (b.word[j].exp % 2) && (odd_left % 2)) neg = !neg;
            r.word.push_back(b.word[j++]);
        }
    }
    while (i < a.word.size()) r.word.push_back(a.word[i++]);
    while (j < b.word.size()) r.word.push_back(b.word[j++]);
    if (neg) r.coeff = -r.coeff;
    return r;
}

GradedElement wedge(const GradedElement &a, const GradedElement &b) {
    std::vector<Monomial> raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const Monomial &ma : a.terms())
        for (const Monomial &mb : b.terms()) {
            Monomial m = wedge_monomials(ma, mb);
            if (!m.coeff.is_zero()) raw.push_back(std::move(m));
        }
    return GradedElement::from_raw(std::move(raw));
}

GradedElement wedge(std::initializer_list<GradedElement> factors) {
    GradedElement r = GradedElement::one();
    for (const GradedElement &f : factors) r = wedge(r, f);
    return r;
}

std::string GradedElement::dump() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Monomial &m : terms_) {
        if (!first) os << "\n";
        first = false;
        os << m.coeff.str();
        if (!m.funcs.empty()) {
            os << " *";
            for (const FnPow &fp : m.funcs) {
                os << " " << symbols::fn_name(fp.fn);
                if (fp.exp > 1) os << "^" << fp.exp;
            }
        }
        if (!m.word.empty()) {
            os << " *";
            bool fg = true;
            for (const GenPow &gp : m.word) {
                os << (fg ? " " : " ∧ ") << gen_name(gp.gen);
                fg = false;
                if (gp.exp > 1) os << "^" << gp.exp;
            }
        }
    }
    return os.str();
}

} // namespace folichar
