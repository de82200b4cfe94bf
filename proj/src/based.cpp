#include "cychom/based.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace cychom {

// ---------------------------------------------------------------------------
// BasedElement

Scalar BasedElement::coeff(const BLabel& l) const {
    auto it = coeffs.find(l);
    return it == coeffs.end() ? Scalar::zero(alg->field()) : it->second;
}

void BasedElement::add_term(const BLabel& l, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = coeffs.find(l);
    if (it == coeffs.end()) {
        coeffs.emplace(l, s);
    } else {
        it->second += s;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

BasedElement BasedElement::operator+(const BasedElement& o) const {
    if (alg != o.alg) throw carrier_mismatch();
    BasedElement r = *this;
    for (const auto& [l, c] : o.coeffs) r.add_term(l, c);
    return r;
}

BasedElement BasedElement::operator-(const BasedElement& o) const {
    if (alg != o.alg) throw carrier_mismatch();
    BasedElement r = *this;
    for (const auto& [l, c] : o.coeffs) r.add_term(l, -c);
    return r;
}

BasedElement BasedElement::operator*(const BasedElement& o) const {
    if (alg != o.alg) throw carrier_mismatch();
    return alg->mul(*this, o);
}

BasedElement BasedElement::scaled(const Scalar& s) const {
    BasedElement r{alg, {}};
    if (s.is_zero()) return r;
    for (const auto& [l, c] : coeffs) r.add_term(l, c * s);
    return r;
}

// ---------------------------------------------------------------------------
// BasedAlgebra

BasedElement BasedAlgebra::one() const {
    return monomial(unit_label(), Scalar::one(fs_));
}

BasedElement BasedAlgebra::monomial(const BLabel& l, Scalar c) const {
    BasedElement e = zero();
    e.add_term(l, c);
    return e;
}

BasedElement BasedAlgebra::mul(const BasedElement& a, const BasedElement& b) const {
    BasedElement r = zero();
    for (const auto& [la, ca] : a.coeffs) {
        note_label(la);
        for (const auto& [lb, cb] : b.coeffs) {
            note_label(lb);
            Scalar f = ca * cb;
            for (const auto& [lk, ck] : basis_product(la, lb)) r.add_term(lk, f * ck);
        }
    }
    return r;
}

void BasedAlgebra::note_label(const BLabel& l) const {
    std::lock_guard<std::mutex> lk(log_mu_);
    if (log_.size() >= 512) return;
    auto [it, inserted] = log_seen_.emplace(l, true);
    (void)it;
    if (inserted) log_.push_back(l);
}

std::vector<BLabel> BasedAlgebra::audited_labels() const {
    std::lock_guard<std::mutex> lk(log_mu_);
    return log_;
}

AssocAuditReport BasedAlgebra::audit_associativity(std::vector<BLabel> labels,
                                                   std::int64_t max_triples) const {
    if (labels.empty()) labels = audited_labels();
    AssocAuditReport rep;
    for (const auto& x : labels) {
        for (const auto& y : labels) {
            for (const auto& z : labels) {
                if (rep.triples_checked >= max_triples) return rep;
                BasedElement xy = monomial(x, Scalar::one(field())) *
                                  monomial(y, Scalar::one(field()));
                BasedElement yz = monomial(y, Scalar::one(field())) *
                                  monomial(z, Scalar::one(field()));
                BasedElement lhs = xy * monomial(z, Scalar::one(field()));
                BasedElement rhs = monomial(x, Scalar::one(field())) * yz;
                ++rep.triples_checked;
                if (!(lhs == rhs)) {
                    rep.ok = false;
                    rep.counterexample = "(" + label_str(x) + ", " + label_str(y) + ", " +
                                          label_str(z) + ")";
                    return rep;
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// LatticeAlgebra

LatticeAlgebra::LatticeAlgebra(FieldSpec fs, int rank,
                               std::vector<std::vector<std::int64_t>> twist, std::string name)
    : BasedAlgebra(fs, name.empty() ? ("lattice_Z^" + std::to_string(rank)) : std::move(name)),
      rank_(rank), twist_(std::move(twist)) {
    if (rank_ < 1) throw error("lattice rank must be >= 1");
    if (!twist_.empty()) {
        if (!fs.func_field)
            throw field_mismatch("twisted lattice algebra needs a function field");
        if (static_cast<int>(twist_.size()) != rank_)
            throw error("twist matrix has wrong shape");
        for (const auto& row : twist_)
            if (static_cast<int>(row.size()) != rank_) throw error("twist matrix has wrong shape");
    }
}

std::vector<std::pair<BLabel, Scalar>> LatticeAlgebra::basis_product(const BLabel& a,
                                                                     const BLabel& b) const {
    if (static_cast<int>(a.size()) != rank_ || static_cast<int>(b.size()) != rank_)
        throw error("lattice label has wrong rank");
    BLabel sum(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i)
        sum[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    Scalar c = Scalar::one(field());
    if (!twist_.empty()) {
        long long expo = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                expo += static_cast<long long>(a[static_cast<std::size_t>(i)]) *
                        twist_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                        b[static_cast<std::size_t>(j)];
        c = Scalar::t_power(field(), expo);
    }
    return {{std::move(sum), std::move(c)}};
}

std::string LatticeAlgebra::label_str(const BLabel& l) const {
    std::ostringstream os;
    os << "g:(";
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i) os << ",";
        os << l[i];
    }
    os << ")";
    return os.str();
}

BLabel LatticeAlgebra::parse_label(const std::string& s) const {
    std::string body = s;
    if (body.rfind("g:", 0) == 0) body = body.substr(2);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw parse_error("bad lattice label '" + s + "'");
    body = body.substr(1, body.size() - 2);
    BLabel l;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ','))
        l.push_back(static_cast<std::int32_t>(std::stol(part)));
    if (static_cast<int>(l.size()) != rank_)
        throw parse_error("lattice label '" + s + "' has wrong rank");
    return l;
}

std::vector<BLabel> LatticeAlgebra::window(int w) const {
    std::vector<BLabel> out;
    BLabel cur(static_cast<std::size_t>(rank_), static_cast<std::int32_t>(-w));
    for (;;) {
        out.push_back(cur);
        int i = 0;
        while (i < rank_) {
            if (cur[static_cast<std::size_t>(i)] < w) {
                ++cur[static_cast<std::size_t>(i)];
                break;
            }
            cur[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(-w);
            ++i;
        }
        if (i == rank_) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// RewritingAlgebra

RewritingAlgebra::RewritingAlgebra(FieldSpec fs, std::vector<std::string> generators,
                                   std::vector<Rule> rules, std::int64_t fuel, std::string name)
    : BasedAlgebra(fs, name.empty() ? "rewriting" : std::move(name)),
      gens_(std::move(generators)), fuel_(fuel) {
    for (auto& r : rules) {
        if (r.first < 0 || r.first >= static_cast<std::int32_t>(gens_.size()) || r.second < 0 ||
            r.second >= static_cast<std::int32_t>(gens_.size()))
            throw error("rewrite rule references unknown generator");
        rules_[{r.first, r.second}] = std::move(r.replacement);
    }
}

BasedElement RewritingAlgebra::generator(int i) const {
    return monomial(BLabel{static_cast<std::int32_t>(i)}, Scalar::one(field()));
}

BasedElement RewritingAlgebra::reduce_word(const BLabel& word) const {
    BasedElement out = zero();
    std::deque<std::pair<BLabel, Scalar>> work;
    work.emplace_back(word, Scalar::one(field()));
    std::int64_t steps = 0;
    while (!work.empty()) {
        auto [w, c] = std::move(work.front());
        work.pop_front();
        // leftmost reducible two-letter factor
        std::size_t pos = w.size();
        const std::vector<std::pair<BLabel, Scalar>>* rep = nullptr;
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            auto it = rules_.find({w[p], w[p + 1]});
            if (it != rules_.end()) {
                pos = p;
                rep = &it->second;
                break;
            }
        }
        if (!rep) {
            out.add_term(w, c);
            continue;
        }
        if (++steps > fuel_)
            throw fuel_exhausted("rewriting exceeded " + std::to_string(fuel_) +
                                 " steps (possible non-termination)");
        for (const auto& [rw, rc] : *rep) {
            BLabel nw;
            nw.reserve(w.size() - 2 + rw.size());
            nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
            work.emplace_back(std::move(nw), c * rc);
        }
    }
    return out;
}

std::vector<std::pair<BLabel, Scalar>> RewritingAlgebra::basis_product(const BLabel& a,
                                                                       const BLabel& b) const {
    BLabel cat;
    cat.reserve(a.size() + b.size());
    cat.insert(cat.end(), a.begin(), a.end());
    cat.insert(cat.end(), b.begin(), b.end());
    BasedElement red = reduce_word(cat);
    std::vector<std::pair<BLabel, Scalar>> out;
    out.reserve(red.coeffs.size());
    for (auto& [l, c] : red.coeffs) out.emplace_back(l, c);
    return out;
}

std::string RewritingAlgebra::label_str(const BLabel& l) const {
    bool multi = false;
    for (const auto& g : gens_)
        if (g.size() > 1) multi = true;
    std::string out = "w:";
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (multi && i) out += ".";
        out += gens_[static_cast<std::size_t>(l[i])];
    }
    return out;
}

BLabel RewritingAlgebra::parse_label(const std::string& s) const {
    std::string body = s;
    if (body.rfind("w:", 0) == 0) body = body.substr(2);
    BLabel l;
    if (body.empty()) return l;
    if (body.find('.') != std::string::npos) {
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, '.')) {
            auto it = std::find(gens_.begin(), gens_.end(), part);
            if (it == gens_.end()) throw parse_error("unknown generator '" + part + "'");
            l.push_back(static_cast<std::int32_t>(it - gens_.begin()));
        }
        return l;
    }
    // greedy longest-match tokenization for undotted labels
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t best = 0;
        std::int32_t gi = -1;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            const auto& name = gens_[g];
            if (name.size() > best && body.compare(pos, name.size(), name) == 0) {
                best = name.size();
                gi = static_cast<std::int32_t>(g);
            }
        }
        if (gi < 0) throw parse_error("cannot tokenize word label '" + s + "'");
        l.push_back(gi);
        pos += best;
    }
    return l;
}

// ---------------------------------------------------------------------------
// Rule traces and derivations

Scalar BasedTrace::operator()(const BasedElement& x) const {
    Scalar s = Scalar::zero(alg->field());
    for (const auto& [l, c] : x.coeffs) s += rule(l) * c;
    return s;
}

BasedElement BasedDerivation::operator()(const BasedElement& x) const {
    BasedElement r = alg->zero();
    for (const auto& [l, c] : x.coeffs) {
        BasedElement d = rule(l);
        for (const auto& [dl, dc] : d.coeffs) r.add_term(dl, dc * c);
    }
    return r;
}

BasedTrace validate_based_trace(const BasedAlgebra& a, std::function<Scalar(const BLabel&)> rule,
                                std::vector<BLabel> window) {
    BasedTrace t{&a, std::move(rule), {}};
    for (const auto& x : window) {
        for (const auto& y : window) {
            BasedElement xy = a.monomial(x, Scalar::one(a.field())) *
                              a.monomial(y, Scalar::one(a.field()));
            BasedElement yx = a.monomial(y, Scalar::one(a.field())) *
                              a.monomial(x, Scalar::one(a.field()));
            if (!(t(xy) == t(yx)))
                throw validation_error("NotATrace",
                                       "(" + a.label_str(x) + ", " + a.label_str(y) + ")");
        }
    }
    t.window = std::move(window);
    return t;
}

BasedDerivation validate_based_derivation(const BasedAlgebra& a,
                                          std::function<BasedElement(const BLabel&)> rule,
                                          std::vector<BLabel> window) {
    BasedDerivation d{&a, std::move(rule), {}};
    for (const auto& x : window) {
        for (const auto& y : window) {
            BasedElement ex = a.monomial(x, Scalar::one(a.field()));
            BasedElement ey = a.monomial(y, Scalar::one(a.field()));
            BasedElement lhs = d(ex * ey);
            BasedElement rhs = d(ex) * ey + ex * d(ey);
            if (!(lhs == rhs))
                throw validation_error("NotADerivation",
                                       "(" + a.label_str(x) + ", " + a.label_str(y) + ")");
        }
    }
    d.window = std::move(window);
    return d;
}

InvarianceVerdictBased check_invariant_trace(const BasedTrace& tau,
                                             const std::vector<BasedDerivation>& ds,
                                             const std::vector<BLabel>& window) {
    for (std::size_t di = 0; di < ds.size(); ++di) {
        if (ds[di].alg != tau.alg) throw carrier_mismatch();
        for (const auto& l : window) {
            BasedElement v = ds[di](tau.alg->monomial(l, Scalar::one(tau.alg->field())));
            if (!tau(v).is_zero())
                return {false, "derivation #" + std::to_string(di) + " at " +
                                   tau.alg->label_str(l)};
        }
    }
    return {};
}

} // namespace cychom
