#include "cychom/algebra.hpp"

#include <algorithm>
#include <set>

namespace cychom {

// ---------------------------------------------------------------------------
// Element

bool Element::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

Element Element::operator+(const Element& o) const {
    if (alg != o.alg) throw carrier_mismatch();
    Element r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

Element Element::operator-(const Element& o) const {
    if (alg != o.alg) throw carrier_mismatch();
    Element r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
}

Element Element::operator*(const Element& o) const {
    if (alg != o.alg) throw carrier_mismatch();
    return alg->mul(*this, o);
}

Element Element::scaled(const Scalar& s) const {
    Element r = *this;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(FieldSpec fs, std::vector<std::string> labels, std::vector<Scalar> unit,
                 std::vector<std::vector<StructRow>> structure, std::string name)
    : fs_(fs), labels_(std::move(labels)), unit_(std::move(unit)),
      structure_(std::move(structure)), name_(std::move(name)) {
    if (labels_.empty()) throw validation_error("BadAlgebra", "empty basis");
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw validation_error("BadAlgebra", "duplicate basis label '" + l + "'");
    if (unit_.size() != labels_.size())
        throw validation_error("BadUnit", "unit vector has wrong length");
    if (structure_.size() != labels_.size())
        throw validation_error("BadAlgebra", "structure table has wrong shape");
    for (auto& row : structure_) {
        if (row.size() != labels_.size())
            throw validation_error("BadAlgebra", "structure table has wrong shape");
        for (auto& cell : row) {
            std::sort(cell.begin(), cell.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [k, c] : cell) {
                if (k < 0 || k >= dim())
                    throw validation_error("BadAlgebra", "structure index out of range");
                if (!(c.field() == fs_)) throw field_mismatch("structure constant");
            }
        }
    }
    for (const auto& c : unit_)
        if (!(c.field() == fs_)) throw field_mismatch("unit coefficient");
    for (std::size_t i = 0; i < labels_.size(); ++i)
        index_[labels_[i]] = static_cast<int>(i);
    validate();
}

int Algebra::label_index(const std::string& l) const {
    auto it = index_.find(l);
    return it == index_.end() ? -1 : it->second;
}

Element Algebra::zero() const {
    return Element{this, std::vector<Scalar>(static_cast<std::size_t>(dim()), Scalar::zero(fs_))};
}

Element Algebra::one() const { return Element{this, unit_}; }

Element Algebra::basis(int i) const {
    Element e = zero();
    e.coeffs[static_cast<std::size_t>(i)] = Scalar::one(fs_);
    return e;
}

Element Algebra::element(const std::unordered_map<std::string, Scalar>& coeffs) const {
    Element e = zero();
    for (const auto& [l, c] : coeffs) {
        int i = label_index(l);
        if (i < 0) throw validation_error("UnknownLabel", l);
        if (!(c.field() == fs_)) throw field_mismatch("element coefficient");
        e.coeffs[static_cast<std::size_t>(i)] += c;
    }
    return e;
}

Element Algebra::mul(const Element& a, const Element& b) const {
    Element r = zero();
    for (int i = 0; i < dim(); ++i) {
        const Scalar& ai = a.coeffs[static_cast<std::size_t>(i)];
        if (ai.is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            const Scalar& bj = b.coeffs[static_cast<std::size_t>(j)];
            if (bj.is_zero()) continue;
            Scalar f = ai * bj;
            for (const auto& [k, c] : basis_product(i, j))
                r.coeffs[static_cast<std::size_t>(k)] += f * c;
        }
    }
    return r;
}

std::vector<std::vector<Scalar>> Algebra::left_regular(const Element& a) const {
    std::vector<std::vector<Scalar>> m(
        static_cast<std::size_t>(dim()),
        std::vector<Scalar>(static_cast<std::size_t>(dim()), Scalar::zero(fs_)));
    for (int j = 0; j < dim(); ++j) {
        Element col = mul(a, basis(j));
        for (int i = 0; i < dim(); ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                col.coeffs[static_cast<std::size_t>(i)];
    }
    return m;
}

std::int64_t Algebra::commutator_quotient_dim() const {
    SparseMatrix comms(fs_, dim(), static_cast<std::int64_t>(dim()) * dim());
    std::int64_t col = 0;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            Element c = mul(basis(i), basis(j)) - mul(basis(j), basis(i));
            for (int k = 0; k < dim(); ++k)
                comms.add_entry(k, col, c.coeffs[static_cast<std::size_t>(k)]);
            ++col;
        }
    comms.normalize();
    return dim() - sparse_rank(comms);
}

void Algebra::validate() const {
    Element e1{this, unit_};
    for (int i = 0; i < dim(); ++i) {
        Element ei = basis(i);
        if (!(mul(e1, ei) == ei) || !(mul(ei, e1) == ei))
            throw validation_error(
                "BadUnit", "unit law fails at basis '" + labels_[static_cast<std::size_t>(i)] + "'");
    }
    for (int i = 0; i < dim(); ++i) {
        Element ei = basis(i);
        for (int j = 0; j < dim(); ++j) {
            Element eij = mul(ei, basis(j));
            for (int l = 0; l < dim(); ++l) {
                Element lhs = mul(eij, basis(l));
                Element rhs = mul(ei, mul(basis(j), basis(l)));
                if (!(lhs == rhs))
                    throw validation_error(
                        "NotAssociative",
                        "(" + labels_[static_cast<std::size_t>(i)] + ", " +
                            labels_[static_cast<std::size_t>(j)] + ", " +
                            labels_[static_cast<std::size_t>(l)] + ")");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Traces and derivations

Scalar Trace::operator()(const Element& x) const {
    Scalar s = Scalar::zero(alg->field());
    for (std::size_t i = 0; i < values.size(); ++i) s += values[i] * x.coeffs[i];
    return s;
}

Trace validate_trace(const Algebra& a, std::vector<Scalar> values) {
    if (static_cast<int>(values.size()) != a.dim())
        throw validation_error("NotATrace", "value vector has wrong length");
    Trace t{&a, std::move(values)};
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            Scalar lhs = t(a.mul(a.basis(i), a.basis(j)));
            Scalar rhs = t(a.mul(a.basis(j), a.basis(i)));
            if (!(lhs == rhs))
                throw validation_error("NotATrace",
                                       "(" + a.labels()[static_cast<std::size_t>(i)] + ", " +
                                           a.labels()[static_cast<std::size_t>(j)] + ")");
        }
    return t;
}

Element Derivation::operator()(const Element& x) const {
    Element r = alg->zero();
    for (std::size_t j = 0; j < x.coeffs.size(); ++j) {
        if (x.coeffs[j].is_zero()) continue;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i)
            r.coeffs[i] += action[i][j] * x.coeffs[j];
    }
    return r;
}

Derivation validate_derivation(const Algebra& a, std::vector<std::vector<Scalar>> action) {
    if (static_cast<int>(action.size()) != a.dim())
        throw validation_error("NotADerivation", "action matrix has wrong shape");
    for (const auto& row : action)
        if (static_cast<int>(row.size()) != a.dim())
            throw validation_error("NotADerivation", "action matrix has wrong shape");
    Derivation d{&a, std::move(action)};
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Element ei = a.basis(i), ej = a.basis(j);
            Element lhs = d(a.mul(ei, ej));
            Element rhs = a.mul(d(ei), ej) + a.mul(ei, d(ej));
            if (!(lhs == rhs))
                throw validation_error("NotADerivation",
                                       "(" + a.labels()[static_cast<std::size_t>(i)] + ", " +
                                           a.labels()[static_cast<std::size_t>(j)] + ")");
        }
    return d;
}

Derivation derivation_bracket(const Derivation& d1, const Derivation& d2) {
    if (d1.alg != d2.alg) throw carrier_mismatch();
    const Algebra& a = *d1.alg;
    int n = a.dim();
    std::vector<std::vector<Scalar>> m(
        static_cast<std::size_t>(n),
        std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero(a.field())));
    for (int j = 0; j < n; ++j) {
        Element v = d1(d2(a.basis(j))) - d2(d1(a.basis(j)));
        for (int i = 0; i < n; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                v.coeffs[static_cast<std::size_t>(i)];
    }
    return validate_derivation(a, std::move(m));
}

Derivation inner_derivation(const Algebra& a, const Element& x) {
    int n = a.dim();
    std::vector<std::vector<Scalar>> m(
        static_cast<std::size_t>(n),
        std::vector<Scalar>(static_cast<std::size_t>(n), Scalar::zero(a.field())));
    for (int j = 0; j < n; ++j) {
        Element v = a.mul(x, a.basis(j)) - a.mul(a.basis(j), x);
        for (int i = 0; i < n; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                v.coeffs[static_cast<std::size_t>(i)];
    }
    return validate_derivation(a, std::move(m));
}

InvarianceVerdict check_invariant_trace(const Trace& tau, const std::vector<Derivation>& ds) {
    const Algebra& a = *tau.alg;
    for (std::size_t di = 0; di < ds.size(); ++di) {
        if (ds[di].alg != tau.alg) throw carrier_mismatch();
        for (int i = 0; i < a.dim(); ++i) {
            if (!tau(ds[di](a.basis(i))).is_zero())
                return {false, "derivation #" + std::to_string(di) + " at basis '" +
                                   a.labels()[static_cast<std::size_t>(i)] + "'"};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Linear solving

std::optional<std::vector<Scalar>> dense_solve(const FieldSpec& fs,
                                               std::vector<std::vector<Scalar>> a,
                                               std::vector<Scalar> b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < n && pr < m; ++pc) {
        std::size_t sel = pr;
        while (sel < m && a[sel][pc].is_zero()) ++sel;
        if (sel == m) continue;
        std::swap(a[sel], a[pr]);
        std::swap(b[sel], b[pr]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == pr || a[r][pc].is_zero()) continue;
            Scalar f = a[r][pc] / a[pr][pc];
            for (std::size_t c = pc; c < n; ++c) a[r][c] = a[r][c] - f * a[pr][c];
            b[r] = b[r] - f * b[pr];
        }
        pivot_col.push_back(pc);
        ++pr;
    }
    for (std::size_t r = pr; r < m; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<Scalar> x(n, Scalar::zero(fs));
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

std::optional<Element> invert_element(const Element& u) {
    const Algebra& a = *u.alg;
    auto lu = a.left_regular(u);
    auto sol = dense_solve(a.field(), lu, a.unit_coeffs());
    if (!sol) return std::nullopt;
    Element v{&a, std::move(*sol)};
    if (!(a.mul(v, u) == a.one()) || !(a.mul(u, v) == a.one())) return std::nullopt;
    return v;
}

} // namespace cychom
