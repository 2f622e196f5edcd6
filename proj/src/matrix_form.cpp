#include "folichar/matrix_form.hpp"

namespace folichar {

MatrixForm MatrixForm::build(unsigned q, const std::function<GradedElement(unsigned, unsigned)> &f) {
    MatrixForm m(q);
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) m.at(a, b) = f(a, b);
    return m;
}

MatrixForm MatrixForm::scalars(unsigned q, const std::vector<std::vector<Rational>> &v) {
    MatrixForm m(q);
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b) m.at(a, b) = GradedElement(v[a][b]);
    return m;
}

MatrixForm MatrixForm::operator-() const {
    MatrixForm m(q_);
    for (size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = -entries_[i];
    return m;
}

MatrixForm &MatrixForm::operator+=(const MatrixForm &o) {
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

MatrixForm &MatrixForm::operator-=(const MatrixForm &o) {
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

MatrixForm MatrixForm::scaled(const Rational &c) const {
    MatrixForm m(q_);
    for (size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].scaled(c);
    return m;
}

MatrixForm MatrixForm::scaled_fn(Fn f) const {
    GradedElement fe = GradedElement::fn(f);
    MatrixForm m(q_);
    for (size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = wedge(fe, entries_[i]);
    return m;
}

MatrixForm MatrixForm::transpose() const {
    MatrixForm m(q_);
    for (unsigned a = 0; a < q_; ++a)
        for (unsigned b = 0; b < q_; ++b) m.at(a, b) = at(b, a);
    return m;
}

GradedElement MatrixForm::trace() const {
    GradedElement t;
    for (unsigned a = 0; a < q_; ++a) t += at(a, a);
    return t;
}

bool MatrixForm::is_zero() const {
    for (const GradedElement &e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

MatrixForm mul(const MatrixForm &a, const MatrixForm &b) {
    MatrixForm m(a.q_);
    for (unsigned i = 0; i < a.q_; ++i)
        for (unsigned j = 0; j < a.q_; ++j) {
            GradedElement e;
            for (unsigned k = 0; k < a.q_; ++k) e += wedge(a.at(i, k), b.at(k, j));
            m.at(i, j) = std::move(e);
        }
    return m;
}

MatrixForm MatrixForm::power(unsigned n) const {
    MatrixForm r = MatrixForm::build(q_, [&](unsigned a, unsigned b) {
        return a == b ? GradedElement::one() : GradedElement::zero();
    });
    for (unsigned i = 0; i < n; ++i) r = mul(r, *this);
    return r;
}

MatrixForm MatrixForm::map(const std::function<GradedElement(const GradedElement &)> &f) const {
    MatrixForm m(q_);
    for (unsigned a = 0; a < q_; ++a)
        for (unsigned b = 0; b < q_; ++b) m.at(a, b) = f(at(a, b));
    return m;
}

MatrixForm apply(const DerivationSpec &D, const MatrixForm &m) {
    return m.map([&](const GradedElement &e) { return derive(D, e); });
}

MatrixForm apply(const AlgebraHom &H, const MatrixForm &m) {
    return m.map([&](const GradedElement &e) { return hom_apply(H, e); });
}

std::pair<MatrixForm, MatrixForm> sym_antisym_split(const MatrixForm &m) {
    MatrixForm t = m.transpose();
    Rational half(1, 2);
    MatrixForm anti = (m - t).scaled(half);
    MatrixForm sym = (m + t).scaled(half);
    return {anti, sym};
}

} // namespace folichar
