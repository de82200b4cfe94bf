#include "cychom/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cychom {

// ---------------------------------------------------------------------------
// Groups

void validate_group(const FiniteGroup& g) {
    const int n = static_cast<int>(g.labels.size());
    if (n == 0) throw validation_error("NotAGroup", "empty element set");
    if (static_cast<int>(g.mult.size()) != n)
        throw validation_error("NotAGroup", "multiplication table has wrong shape");
    for (const auto& row : g.mult) {
        if (static_cast<int>(row.size()) != n)
            throw validation_error("NotAGroup", "multiplication table has wrong shape");
        for (int v : row)
            if (v < 0 || v >= n) throw validation_error("NotAGroup", "table entry out of range");
    }
    if (g.identity < 0 || g.identity >= n)
        throw validation_error("NotAGroup", "identity index out of range");
    if (static_cast<int>(g.inverses.size()) != n)
        throw validation_error("NotAGroup", "inverse table has wrong length");
    for (int i = 0; i < n; ++i) {
        if (g.mult[static_cast<std::size_t>(g.identity)][static_cast<std::size_t>(i)] != i ||
            g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(g.identity)] != i)
            throw validation_error("NotAGroup", "identity law fails at " + g.labels[static_cast<std::size_t>(i)]);
        int inv = g.inverses[static_cast<std::size_t>(i)];
        if (inv < 0 || inv >= n ||
            g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(inv)] != g.identity ||
            g.mult[static_cast<std::size_t>(inv)][static_cast<std::size_t>(i)] != g.identity)
            throw validation_error("NotAGroup", "inverse law fails at " + g.labels[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int ij = g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                int jk = g.mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                if (g.mult[static_cast<std::size_t>(ij)][static_cast<std::size_t>(k)] !=
                    g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(jk)])
                    throw validation_error("NotAGroup", "associativity fails at (" +
                                                            g.labels[static_cast<std::size_t>(i)] + "," +
                                                            g.labels[static_cast<std::size_t>(j)] + "," +
                                                            g.labels[static_cast<std::size_t>(k)] + ")");
            }
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw error("cyclic group order must be >= 1");
    FiniteGroup g;
    for (int i = 0; i < n; ++i)
        g.labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    g.mult.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    g.inverses.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
        g.inverses[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    g.identity = 0;
    validate_group(g);
    return g;
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5) throw error("symmetric_group supports 1 <= n <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    auto label = [&](const std::vector<int>& p) {
        bool is_id = true;
        for (int i = 0; i < n; ++i)
            if (p[static_cast<std::size_t>(i)] != i) is_id = false;
        if (is_id) return std::string("e");
        std::string s = "s:";
        for (int v : p) s += std::to_string(v);
        return s;
    };
    auto find = [&](const std::vector<int>& p) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    };
    FiniteGroup g;
    const int m = static_cast<int>(perms.size());
    for (const auto& p : perms) g.labels.push_back(label(p));
    g.mult.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    g.inverses.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        std::vector<int> inv(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            inv[static_cast<std::size_t>(perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])] = k;
        g.inverses[static_cast<std::size_t>(i)] = find(inv);
        for (int j = 0; j < m; ++j) {
            std::vector<int> comp(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k)
                comp[static_cast<std::size_t>(k)] =
                    perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                        perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])];
            g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = find(comp);
        }
    }
    g.identity = 0;
    validate_group(g);
    return g;
}

// ---------------------------------------------------------------------------
// Groupoids

void validate_groupoid(const GroupoidData& g) {
    const int nm = static_cast<int>(g.morphisms.size());
    const int no = static_cast<int>(g.objects.size());
    if (no == 0) throw validation_error("NotAGroupoid", "no objects");
    auto in_obj = [&](int x) { return x >= 0 && x < no; };
    auto in_mor = [&](int x) { return x >= 0 && x < nm; };
    if (static_cast<int>(g.source.size()) != nm || static_cast<int>(g.target.size()) != nm ||
        static_cast<int>(g.inverse.size()) != nm || static_cast<int>(g.identity.size()) != no)
        throw validation_error("NotAGroupoid", "structure arrays have wrong shape");
    for (int m = 0; m < nm; ++m)
        if (!in_obj(g.source[static_cast<std::size_t>(m)]) || !in_obj(g.target[static_cast<std::size_t>(m)]) ||
            !in_mor(g.inverse[static_cast<std::size_t>(m)]))
            throw validation_error("NotAGroupoid", "index out of range at morphism " +
                                                       g.morphisms[static_cast<std::size_t>(m)]);
    // composition defined exactly on composable pairs
    for (int a = 0; a < nm; ++a)
        for (int b = 0; b < nm; ++b) {
            bool composable = g.source[static_cast<std::size_t>(a)] == g.target[static_cast<std::size_t>(b)];
            auto it = g.compose.find({a, b});
            if (composable != (it != g.compose.end()))
                throw validation_error("NotAGroupoid",
                                       "composition domain mismatch at (" +
                                           g.morphisms[static_cast<std::size_t>(a)] + ", " +
                                           g.morphisms[static_cast<std::size_t>(b)] + ")");
            if (it != g.compose.end()) {
                int c = it->second;
                if (!in_mor(c) || g.source[static_cast<std::size_t>(c)] != g.source[static_cast<std::size_t>(b)] ||
                    g.target[static_cast<std::size_t>(c)] != g.target[static_cast<std::size_t>(a)])
                    throw validation_error("NotAGroupoid",
                                           "composite has wrong endpoints at (" +
                                               g.morphisms[static_cast<std::size_t>(a)] + ", " +
                                               g.morphisms[static_cast<std::size_t>(b)] + ")");
            }
        }
    // identity laws
    for (int x = 0; x < no; ++x) {
        int id = g.identity[static_cast<std::size_t>(x)];
        if (!in_mor(id) || g.source[static_cast<std::size_t>(id)] != x || g.target[static_cast<std::size_t>(id)] != x)
            throw validation_error("NotAGroupoid", "identity of object " + g.objects[static_cast<std::size_t>(x)] +
                                                       " is not an endomorphism");
    }
    for (int m = 0; m < nm; ++m) {
        int ids = g.identity[static_cast<std::size_t>(g.source[static_cast<std::size_t>(m)])];
        int idt = g.identity[static_cast<std::size_t>(g.target[static_cast<std::size_t>(m)])];
        if (g.compose.at({m, ids}) != m || g.compose.at({idt, m}) != m)
            throw validation_error("NotAGroupoid", "identity law fails at morphism " +
                                                       g.morphisms[static_cast<std::size_t>(m)]);
        int minv = g.inverse[static_cast<std::size_t>(m)];
        if (g.source[static_cast<std::size_t>(minv)] != g.target[static_cast<std::size_t>(m)] ||
            g.target[static_cast<std::size_t>(minv)] != g.source[static_cast<std::size_t>(m)] ||
            g.compose.at({m, minv}) != idt || g.compose.at({minv, m}) != ids)
            throw validation_error("NotAGroupoid", "inverse law fails at morphism " +
                                                       g.morphisms[static_cast<std::size_t>(m)]);
    }
    // associativity on triple-composable chains
    for (int a = 0; a < nm; ++a)
        for (int b = 0; b < nm; ++b) {
            auto ab = g.compose.find({a, b});
            if (ab == g.compose.end()) continue;
            for (int c = 0; c < nm; ++c) {
                auto bc = g.compose.find({b, c});
                if (bc == g.compose.end()) continue;
                if (g.compose.at({ab->second, c}) != g.compose.at({a, bc->second}))
                    throw validation_error("NotAGroupoid",
                                           "associativity fails at (" +
                                               g.morphisms[static_cast<std::size_t>(a)] + ", " +
                                               g.morphisms[static_cast<std::size_t>(b)] + ", " +
                                               g.morphisms[static_cast<std::size_t>(c)] + ")");
            }
        }
}

GroupoidData pairs_groupoid(int n) {
    if (n < 1) throw error("pairs groupoid needs >= 1 object");
    GroupoidData g;
    for (int i = 1; i <= n; ++i) g.objects.push_back(std::to_string(i));
    auto midx = [&](int i, int j) { return (i - 1) * n + (j - 1); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            g.morphisms.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
            g.target.push_back(i - 1);
            g.source.push_back(j - 1);
            g.inverse.push_back(midx(j, i));
        }
    for (int i = 1; i <= n; ++i) g.identity.push_back(midx(i, i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                g.compose[{midx(i, j), midx(j, k)}] = midx(i, k);
    validate_groupoid(g);
    return g;
}

GroupoidData connected_groupoid(int n, const FiniteGroup& grp) {
    validate_group(grp);
    if (n < 1) throw error("connected groupoid needs >= 1 object");
    GroupoidData g;
    for (int i = 1; i <= n; ++i) g.objects.push_back(std::to_string(i));
    const int ng = static_cast<int>(grp.labels.size());
    auto midx = [&](int i, int j, int a) { return ((i - 1) * n + (j - 1)) * ng + a; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int a = 0; a < ng; ++a) {
                g.morphisms.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ";" +
                                      grp.labels[static_cast<std::size_t>(a)] + ")");
                g.target.push_back(i - 1);
                g.source.push_back(j - 1);
                g.inverse.push_back(midx(j, i, grp.inverses[static_cast<std::size_t>(a)]));
            }
    for (int i = 1; i <= n; ++i) g.identity.push_back(midx(i, i, grp.identity));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int a = 0; a < ng; ++a)
                    for (int b = 0; b < ng; ++b)
                        g.compose[{midx(i, j, a), midx(j, k, b)}] =
                            midx(i, k, grp.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    validate_groupoid(g);
    return g;
}

GroupoidData disjoint_union(const GroupoidData& a, const GroupoidData& b) {
    GroupoidData g;
    const int ao = static_cast<int>(a.objects.size());
    const int am = static_cast<int>(a.morphisms.size());
    for (const auto& o : a.objects) g.objects.push_back("1:" + o);
    for (const auto& o : b.objects) g.objects.push_back("2:" + o);
    for (const auto& m : a.morphisms) g.morphisms.push_back("1:" + m);
    for (const auto& m : b.morphisms) g.morphisms.push_back("2:" + m);
    g.source = a.source;
    g.target = a.target;
    g.inverse = a.inverse;
    for (int s : b.source) g.source.push_back(ao + s);
    for (int t : b.target) g.target.push_back(ao + t);
    for (int i : b.inverse) g.inverse.push_back(am + i);
    g.identity = a.identity;
    for (int i : b.identity) g.identity.push_back(am + i);
    g.compose = a.compose;
    for (const auto& [key, val] : b.compose)
        g.compose[{am + key.first, am + key.second}] = am + val;
    validate_groupoid(g);
    return g;
}

// ---------------------------------------------------------------------------
// Basic constructions

namespace {

std::vector<std::vector<StructRow>> empty_structure(int dim) {
    return std::vector<std::vector<StructRow>>(static_cast<std::size_t>(dim),
                                               std::vector<StructRow>(static_cast<std::size_t>(dim)));
}

} // namespace

std::shared_ptr<Algebra> matrix_algebra(const FieldSpec& f, int n) {
    if (n < 1) throw error("matrix algebra needs n >= 1");
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            labels.push_back("E:" + std::to_string(i) + "," + std::to_string(j));
    auto idx = [&](int i, int j) { return (i - 1) * n + (j - 1); };
    auto structure = empty_structure(n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    if (j == k)
                        structure[static_cast<std::size_t>(idx(i, j))]
                                 [static_cast<std::size_t>(idx(k, l))]
                                     .emplace_back(idx(i, l), Scalar::one(f));
    std::vector<Scalar> unit(static_cast<std::size_t>(n * n), Scalar::zero(f));
    for (int i = 1; i <= n; ++i) unit[static_cast<std::size_t>(idx(i, i))] = Scalar::one(f);
    return std::make_shared<Algebra>(f, std::move(labels), std::move(unit), std::move(structure),
                                     "M_" + std::to_string(n));
}

std::shared_ptr<Algebra> group_algebra(const FieldSpec& f, const FiniteGroup& g) {
    validate_group(g);
    const int n = static_cast<int>(g.labels.size());
    auto structure = empty_structure(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].emplace_back(
                g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], Scalar::one(f));
    std::vector<Scalar> unit(static_cast<std::size_t>(n), Scalar::zero(f));
    unit[static_cast<std::size_t>(g.identity)] = Scalar::one(f);
    return std::make_shared<Algebra>(f, g.labels, std::move(unit), std::move(structure),
                                     "k[G_" + std::to_string(n) + "]");
}

std::shared_ptr<LatticeAlgebra> lattice_group_algebra(const FieldSpec& f, int rank) {
    return std::make_shared<LatticeAlgebra>(f, rank);
}

std::shared_ptr<Algebra> groupoid_algebra(const FieldSpec& f, const GroupoidData& g) {
    validate_groupoid(g);
    const int n = static_cast<int>(g.morphisms.size());
    auto structure = empty_structure(n);
    for (const auto& [key, val] : g.compose)
        structure[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(key.second)]
            .emplace_back(val, Scalar::one(f));
    std::vector<Scalar> unit(static_cast<std::size_t>(n), Scalar::zero(f));
    for (int id : g.identity) unit[static_cast<std::size_t>(id)] += Scalar::one(f);
    return std::make_shared<Algebra>(f, g.morphisms, std::move(unit), std::move(structure),
                                     "k[groupoid]");
}

std::shared_ptr<Algebra> truncated_poly(const FieldSpec& f, int m) {
    if (m < 1) throw error("truncated polynomial algebra needs m >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    auto structure = empty_structure(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i + j < m)
                structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].emplace_back(
                    i + j, Scalar::one(f));
    std::vector<Scalar> unit(static_cast<std::size_t>(m), Scalar::zero(f));
    unit[0] = Scalar::one(f);
    return std::make_shared<Algebra>(f, std::move(labels), std::move(unit), std::move(structure),
                                     "k[x]/x^" + std::to_string(m));
}

std::shared_ptr<Algebra> direct_sum(const Algebra& a, const Algebra& b) {
    if (!(a.field() == b.field())) throw field_mismatch("direct sum");
    const int na = a.dim(), nb = b.dim();
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back("1:" + l);
    for (const auto& l : b.labels()) labels.push_back("2:" + l);
    auto structure = empty_structure(na + nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.basis_product(i, j);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            StructRow row = b.basis_product(i, j);
            for (auto& [k, c] : row) k += na;
            structure[static_cast<std::size_t>(na + i)][static_cast<std::size_t>(na + j)] = std::move(row);
        }
    std::vector<Scalar> unit = a.unit_coeffs();
    unit.insert(unit.end(), b.unit_coeffs().begin(), b.unit_coeffs().end());
    return std::make_shared<Algebra>(a.field(), std::move(labels), std::move(unit),
                                     std::move(structure), a.name() + "(+)" + b.name());
}

std::shared_ptr<Algebra> tensor_product(const Algebra& a, const Algebra& b) {
    if (!(a.field() == b.field())) throw field_mismatch("tensor product");
    const int na = a.dim(), nb = b.dim();
    auto idx = [&](int i, int p) { return i * nb + p; };
    std::vector<std::string> labels;
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < nb; ++p)
            labels.push_back("(" + a.labels()[static_cast<std::size_t>(i)] + "," +
                             b.labels()[static_cast<std::size_t>(p)] + ")");
    auto structure = empty_structure(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const StructRow& arow = a.basis_product(i, j);
            for (int p = 0; p < nb; ++p)
                for (int q = 0; q < nb; ++q) {
                    const StructRow& brow = b.basis_product(p, q);
                    StructRow& cell =
                        structure[static_cast<std::size_t>(idx(i, p))][static_cast<std::size_t>(idx(j, q))];
                    for (const auto& [k, ca] : arow)
                        for (const auto& [r, cb] : brow)
                            cell.emplace_back(idx(k, r), ca * cb);
                }
        }
    std::vector<Scalar> unit(static_cast<std::size_t>(na * nb), Scalar::zero(a.field()));
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < nb; ++p)
            unit[static_cast<std::size_t>(idx(i, p))] =
                a.unit_coeffs()[static_cast<std::size_t>(i)] * b.unit_coeffs()[static_cast<std::size_t>(p)];
    return std::make_shared<Algebra>(a.field(), std::move(labels), std::move(unit),
                                     std::move(structure), a.name() + "(x)" + b.name());
}

std::shared_ptr<Algebra> opposite(const Algebra& a) {
    const int n = a.dim();
    auto structure = empty_structure(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.basis_product(j, i);
    return std::make_shared<Algebra>(a.field(), a.labels(), a.unit_coeffs(), std::move(structure),
                                     a.name() + "^op");
}

std::shared_ptr<Algebra> matrix_over(const Algebra& a, int k) {
    if (k < 1) throw error("matrix_over needs k >= 1");
    const int n = a.dim();
    auto idx = [&](int p, int q, int i) { return ((p - 1) * k + (q - 1)) * n + i; };
    std::vector<std::string> labels;
    for (int p = 1; p <= k; ++p)
        for (int q = 1; q <= k; ++q)
            for (int i = 0; i < n; ++i)
                labels.push_back("(E:" + std::to_string(p) + "," + std::to_string(q) + ";" +
                                 a.labels()[static_cast<std::size_t>(i)] + ")");
    auto structure = empty_structure(k * k * n);
    for (int p = 1; p <= k; ++p)
        for (int q = 1; q <= k; ++q)
            for (int r = 1; r <= k; ++r)
                for (int s = 1; s <= k; ++s) {
                    if (q != r) continue;
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                            StructRow& cell = structure[static_cast<std::size_t>(idx(p, q, i))]
                                                       [static_cast<std::size_t>(idx(r, s, j))];
                            for (const auto& [m, c] : a.basis_product(i, j))
                                cell.emplace_back(idx(p, s, m), c);
                        }
                }
    std::vector<Scalar> unit(static_cast<std::size_t>(k * k * n), Scalar::zero(a.field()));
    for (int p = 1; p <= k; ++p)
        for (int i = 0; i < n; ++i)
            unit[static_cast<std::size_t>(idx(p, p, i))] = a.unit_coeffs()[static_cast<std::size_t>(i)];
    return std::make_shared<Algebra>(a.field(), std::move(labels), std::move(unit),
                                     std::move(structure),
                                     "M_" + std::to_string(k) + "(" + a.name() + ")");
}

// ---------------------------------------------------------------------------
// Actions and crossed products

void validate_action(const Algebra& a, const ActionData& act) {
    validate_group(act.group);
    const int ng = static_cast<int>(act.group.labels.size());
    const int n = a.dim();
    if (static_cast<int>(act.maps.size()) != ng)
        throw validation_error("NotAnAction", "one matrix per group element required");
    auto apply = [&](int g, const Element& x) {
        Element r = a.zero();
        for (int j = 0; j < n; ++j) {
            if (x.coeffs[static_cast<std::size_t>(j)].is_zero()) continue;
            for (int i = 0; i < n; ++i)
                r.coeffs[static_cast<std::size_t>(i)] +=
                    act.maps[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)]
                            [static_cast<std::size_t>(j)] *
                    x.coeffs[static_cast<std::size_t>(j)];
        }
        return r;
    };
    for (int g = 0; g < ng; ++g) {
        const auto& m = act.maps[static_cast<std::size_t>(g)];
        if (static_cast<int>(m.size()) != n)
            throw validation_error("NotAnAction", act.group.labels[static_cast<std::size_t>(g)]);
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != n)
                throw validation_error("NotAnAction", act.group.labels[static_cast<std::size_t>(g)]);
        // unital
        if (!(apply(g, a.one()) == a.one()))
            throw validation_error("NotAnAction", act.group.labels[static_cast<std::size_t>(g)] +
                                                      " does not fix the unit");
        // multiplicative
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Element lhs = apply(g, a.mul(a.basis(i), a.basis(j)));
                Element rhs = a.mul(apply(g, a.basis(i)), apply(g, a.basis(j)));
                if (!(lhs == rhs))
                    throw validation_error("NotAnAction",
                                           act.group.labels[static_cast<std::size_t>(g)] +
                                               " is not an algebra map");
            }
    }
    // identity acts as identity, and g -> alpha_g is a homomorphism
    for (int i = 0; i < n; ++i)
        if (!(apply(act.group.identity, a.basis(i)) == a.basis(i)))
            throw validation_error("NotAHomomorphism", "identity does not act trivially");
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) {
            int gh = act.group.mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
            for (int i = 0; i < n; ++i) {
                Element lhs = apply(g, apply(h, a.basis(i)));
                Element rhs = apply(gh, a.basis(i));
                if (!(lhs == rhs))
                    throw validation_error("NotAHomomorphism",
                                           "(" + act.group.labels[static_cast<std::size_t>(g)] + ", " +
                                               act.group.labels[static_cast<std::size_t>(h)] + ")");
            }
        }
}

std::shared_ptr<Algebra> crossed_product(const Algebra& a, const ActionData& act) {
    validate_action(a, act);
    const int n = a.dim();
    const int ng = static_cast<int>(act.group.labels.size());
    auto idx = [&](int i, int g) { return g * n + i; };
    std::vector<std::string> labels;
    for (int g = 0; g < ng; ++g)
        for (int i = 0; i < n; ++i)
            labels.push_back("(" + a.labels()[static_cast<std::size_t>(i)] + ";" +
                             act.group.labels[static_cast<std::size_t>(g)] + ")");
    // reorder: labels were pushed g-major; idx uses the same layout
    auto structure = empty_structure(n * ng);
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) {
            int gh = act.group.mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    // (e_i ⊗ g)(e_j ⊗ h) = e_i * alpha_g(e_j) ⊗ gh
                    Element gj = a.zero();
                    for (int r = 0; r < n; ++r)
                        gj.coeffs[static_cast<std::size_t>(r)] =
                            act.maps[static_cast<std::size_t>(g)][static_cast<std::size_t>(r)]
                                    [static_cast<std::size_t>(j)];
                    Element prod = a.mul(a.basis(i), gj);
                    StructRow& cell = structure[static_cast<std::size_t>(idx(i, g))]
                                               [static_cast<std::size_t>(idx(j, h))];
                    for (int k = 0; k < n; ++k)
                        if (!prod.coeffs[static_cast<std::size_t>(k)].is_zero())
                            cell.emplace_back(idx(k, gh), prod.coeffs[static_cast<std::size_t>(k)]);
                }
        }
    std::vector<Scalar> unit(static_cast<std::size_t>(n * ng), Scalar::zero(a.field()));
    for (int i = 0; i < n; ++i)
        unit[static_cast<std::size_t>(idx(i, act.group.identity))] =
            a.unit_coeffs()[static_cast<std::size_t>(i)];
    return std::make_shared<Algebra>(a.field(), std::move(labels), std::move(unit),
                                     std::move(structure), a.name() + "x|G");
}

// ---------------------------------------------------------------------------
// Tori

std::shared_ptr<Algebra> weyl_torus(int p, int q) {
    if (q < 1 || std::gcd(p, q) != 1) throw validation_error("NotCoprime", std::to_string(p) + "/" + std::to_string(q));
    FieldSpec f = q <= 2 ? FieldSpec::rationals() : FieldSpec::cyclotomic(static_cast<std::uint32_t>(q));
    Scalar zeta = q == 2 ? Scalar::of(f, -1) : (q == 1 ? Scalar::one(f) : Scalar::zeta(f));
    auto zpow = [&](long long e) {
        long long r = ((e % q) + q) % q;
        Scalar s = Scalar::one(f);
        for (long long i = 0; i < r; ++i) s *= zeta;
        return s;
    };
    auto idx = [&](int m, int n) { return m * q + n; };
    std::vector<std::string> labels;
    for (int m = 0; m < q; ++m)
        for (int n = 0; n < q; ++n)
            labels.push_back("U^" + std::to_string(m) + "V^" + std::to_string(n));
    auto structure = empty_structure(q * q);
    for (int m = 0; m < q; ++m)
        for (int n = 0; n < q; ++n)
            for (int r = 0; r < q; ++r)
                for (int s = 0; s < q; ++s)
                    structure[static_cast<std::size_t>(idx(m, n))][static_cast<std::size_t>(idx(r, s))]
                        .emplace_back(idx((m + r) % q, (n + s) % q),
                                      zpow(static_cast<long long>(p) * n * r));
    std::vector<Scalar> unit(static_cast<std::size_t>(q * q), Scalar::zero(f));
    unit[0] = Scalar::one(f);
    return std::make_shared<Algebra>(f, std::move(labels), std::move(unit), std::move(structure),
                                     "weyl_torus(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

Trace weyl_torus_trace(const Algebra& torus) {
    std::vector<Scalar> values(static_cast<std::size_t>(torus.dim()), Scalar::zero(torus.field()));
    int i0 = torus.label_index("U^0V^0");
    if (i0 < 0) throw error("weyl_torus_trace: not a torus algebra");
    values[static_cast<std::size_t>(i0)] = Scalar::one(torus.field());
    return validate_trace(torus, std::move(values));
}

PolynomialTorus polynomial_torus(int validation_window) {
    FieldSpec f = FieldSpec::rational_functions(FieldSpec::rationals());
    auto alg = std::make_shared<LatticeAlgebra>(
        f, 2, std::vector<std::vector<std::int64_t>>{{0, 0}, {1, 0}}, "polynomial_torus");
    auto window = alg->window(validation_window);
    const LatticeAlgebra* raw = alg.get();
    BasedTrace tau = validate_based_trace(
        *alg,
        [raw](const BLabel& l) {
            return (l == raw->unit_label()) ? Scalar::one(raw->field()) : Scalar::zero(raw->field());
        },
        window);
    auto deriv = [raw](int axis) {
        return [raw, axis](const BLabel& l) {
            return raw->monomial(l, Scalar::of(raw->field(), l[static_cast<std::size_t>(axis)]));
        };
    };
    BasedDerivation x1 = validate_based_derivation(*alg, deriv(0), window);
    BasedDerivation x2 = validate_based_derivation(*alg, deriv(1), window);
    return {std::move(alg), std::move(tau), std::move(x1), std::move(x2)};
}

// ---------------------------------------------------------------------------
// Rewriting-presented algebras

std::shared_ptr<RewritingAlgebra> rewriting_algebra(const FieldSpec& f,
                                                    std::vector<std::string> generators,
                                                    std::vector<RewritingAlgebra::Rule> rules,
                                                    std::int64_t fuel, std::string name) {
    return std::make_shared<RewritingAlgebra>(f, std::move(generators), std::move(rules), fuel,
                                              std::move(name));
}

std::shared_ptr<RewritingAlgebra> sphere_algebra() {
    FieldSpec f = FieldSpec::cyclotomic(4);
    Scalar one = Scalar::one(f);
    std::vector<RewritingAlgebra::Rule> rules;
    // commute: x_j x_i -> x_i x_j for j > i
    rules.push_back({1, 0, {{BLabel{0, 1}, one}}});
    rules.push_back({2, 0, {{BLabel{0, 2}, one}}});
    rules.push_back({2, 1, {{BLabel{1, 2}, one}}});
    // sphere relation: x3^2 -> 1 - x1^2 - x2^2
    rules.push_back({2, 2,
                     {{BLabel{}, one},
                      {BLabel{0, 0}, Scalar::of(f, -1)},
                      {BLabel{1, 1}, Scalar::of(f, -1)}}});
    return std::make_shared<RewritingAlgebra>(f, std::vector<std::string>{"x1", "x2", "x3"},
                                              std::move(rules), 100000, "sphere_S2");
}

std::shared_ptr<RewritingAlgebra> podles_algebra() {
    FieldSpec f = FieldSpec::rational_functions(FieldSpec::rationals());
    Scalar one = Scalar::one(f);
    // generators: a = 0, a* = 1 ("as"), b = 2
    std::vector<RewritingAlgebra::Rule> rules;
    rules.push_back({0, 2, {{BLabel{2, 0}, Scalar::t_power(f, -2)}}});        // a b  -> t^-2 b a
    rules.push_back({1, 2, {{BLabel{2, 1}, Scalar::t_power(f, 2)}}});         // a* b -> t^2 b a*
    rules.push_back({0, 1, {{BLabel{}, one}, {BLabel{2, 2}, -Scalar::t_power(f, -4)}}}); // a a* -> 1 - t^-4 b^2
    rules.push_back({1, 0, {{BLabel{}, one}, {BLabel{2, 2}, -one}}});         // a* a -> 1 - b^2
    return std::make_shared<RewritingAlgebra>(f, std::vector<std::string>{"a", "as", "b"},
                                              std::move(rules), 100000, "podles_S2q");
}

// ---------------------------------------------------------------------------
// Abelian extensions from 2-cochains

void validate_bimodule(const Algebra& a, const BimoduleData& m) {
    const int n = a.dim();
    const int dm = static_cast<int>(m.labels.size());
    if (dm == 0) throw validation_error("NotABimodule", "empty module basis");
    if (static_cast<int>(m.left.size()) != n || static_cast<int>(m.right.size()) != n)
        throw validation_error("NotABimodule", "one action matrix per algebra basis element required");
    auto shape_ok = [&](const std::vector<std::vector<Scalar>>& mat) {
        if (static_cast<int>(mat.size()) != dm) return false;
        for (const auto& row : mat)
            if (static_cast<int>(row.size()) != dm) return false;
        return true;
    };
    for (int i = 0; i < n; ++i)
        if (!shape_ok(m.left[static_cast<std::size_t>(i)]) || !shape_ok(m.right[static_cast<std::size_t>(i)]))
            throw validation_error("NotABimodule", "action matrix has wrong shape");

    const FieldSpec& f = a.field();
    auto zero = [&] {
        return std::vector<std::vector<Scalar>>(
            static_cast<std::size_t>(dm), std::vector<Scalar>(static_cast<std::size_t>(dm), Scalar::zero(f)));
    };
    auto lincomb = [&](const std::vector<std::vector<std::vector<Scalar>>>& mats, const StructRow& row) {
        auto r = zero();
        for (const auto& [k, c] : row)
            for (int x = 0; x < dm; ++x)
                for (int y = 0; y < dm; ++y)
                    r[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] +=
                        c * mats[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)]
                               [static_cast<std::size_t>(y)];
        return r;
    };
    auto unit_comb = [&](const std::vector<std::vector<std::vector<Scalar>>>& mats) {
        auto r = zero();
        for (int k = 0; k < n; ++k) {
            const Scalar& c = a.unit_coeffs()[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            for (int x = 0; x < dm; ++x)
                for (int y = 0; y < dm; ++y)
                    r[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] +=
                        c * mats[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)]
                               [static_cast<std::size_t>(y)];
        }
        return r;
    };
    auto matmul = [&](const std::vector<std::vector<Scalar>>& p, const std::vector<std::vector<Scalar>>& q) {
        auto r = zero();
        for (int x = 0; x < dm; ++x)
            for (int k = 0; k < dm; ++k) {
                if (p[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)].is_zero()) continue;
                for (int y = 0; y < dm; ++y)
                    r[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] +=
                        p[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] *
                        q[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)];
            }
        return r;
    };
    auto ident = [&] {
        auto r = zero();
        for (int x = 0; x < dm; ++x)
            r[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = Scalar::one(f);
        return r;
    };
    if (!(unit_comb(m.left) == ident()) || !(unit_comb(m.right) == ident()))
        throw validation_error("NotABimodule", "unit does not act as identity");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto lij = lincomb(m.left, a.basis_product(i, j));
            if (!(matmul(m.left[static_cast<std::size_t>(i)], m.left[static_cast<std::size_t>(j)]) == lij))
                throw validation_error("NotABimodule", "left action is not multiplicative at (" +
                                                           a.labels()[static_cast<std::size_t>(i)] + "," +
                                                           a.labels()[static_cast<std::size_t>(j)] + ")");
            auto rij = lincomb(m.right, a.basis_product(i, j));
            if (!(matmul(m.right[static_cast<std::size_t>(j)], m.right[static_cast<std::size_t>(i)]) == rij))
                throw validation_error("NotABimodule", "right action is not anti-multiplicative at (" +
                                                           a.labels()[static_cast<std::size_t>(i)] + "," +
                                                           a.labels()[static_cast<std::size_t>(j)] + ")");
            if (!(matmul(m.left[static_cast<std::size_t>(i)], m.right[static_cast<std::size_t>(j)]) ==
                  matmul(m.right[static_cast<std::size_t>(j)], m.left[static_cast<std::size_t>(i)])))
                throw validation_error("NotABimodule", "actions do not commute at (" +
                                                           a.labels()[static_cast<std::size_t>(i)] + "," +
                                                           a.labels()[static_cast<std::size_t>(j)] + ")");
        }
}

std::shared_ptr<Algebra> extension_from_2cocycle(const Algebra& a, const BimoduleData& m,
                                                 const TwoCochain& f) {
    validate_bimodule(a, m);
    const int n = a.dim();
    const int dm = static_cast<int>(m.labels.size());
    const FieldSpec& fs = a.field();
    if (static_cast<int>(f.size()) != n)
        throw validation_error("NotACocycle", "cochain table has wrong shape");
    for (const auto& row : f) {
        if (static_cast<int>(row.size()) != n)
            throw validation_error("NotACocycle", "cochain table has wrong shape");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != dm)
                throw validation_error("NotACocycle", "cochain value has wrong length");
    }

    std::vector<std::string> labels = a.labels();
    for (const auto& l : m.labels) labels.push_back("m:" + l);
    auto structure = empty_structure(n + dm);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            StructRow cell = a.basis_product(i, j);
            for (int p = 0; p < dm; ++p)
                if (!f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(p)]
                         .is_zero())
                    cell.emplace_back(n + p, f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                               [static_cast<std::size_t>(p)]);
            structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(cell);
        }
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < dm; ++p) {
            StructRow lcell, rcell;
            for (int x = 0; x < dm; ++x) {
                const Scalar& lv =
                    m.left[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)][static_cast<std::size_t>(p)];
                if (!lv.is_zero()) lcell.emplace_back(n + x, lv);
                const Scalar& rv =
                    m.right[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)][static_cast<std::size_t>(p)];
                if (!rv.is_zero()) rcell.emplace_back(n + x, rv);
            }
            structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + p)] = std::move(lcell);
            structure[static_cast<std::size_t>(n + p)][static_cast<std::size_t>(i)] = std::move(rcell);
        }
    // unit of the extension: (1_A, -f(1,1))
    std::vector<Scalar> unit = a.unit_coeffs();
    std::vector<Scalar> f11(static_cast<std::size_t>(dm), Scalar::zero(fs));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar c = a.unit_coeffs()[static_cast<std::size_t>(i)] *
                       a.unit_coeffs()[static_cast<std::size_t>(j)];
            if (c.is_zero()) continue;
            for (int p = 0; p < dm; ++p)
                f11[static_cast<std::size_t>(p)] +=
                    c * f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(p)];
        }
    for (int p = 0; p < dm; ++p) unit.push_back(-f11[static_cast<std::size_t>(p)]);

    try {
        return std::make_shared<Algebra>(fs, std::move(labels), std::move(unit), std::move(structure),
                                         a.name() + "(+)M_f");
    } catch (const validation_error& e) {
        if (e.kind == "NotAssociative" || e.kind == "BadUnit")
            throw validation_error("NotACocycle", e.detail);
        throw;
    }
}

} // namespace cychom
