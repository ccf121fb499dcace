#include "casilab/builtins.hpp"

#include <array>
#include <sstream>

namespace casilab {

LieAlgebra build_su2() {
    LieAlgebra alg(3, {"X1", "X2", "X3"});
    alg.set_name("su2");
    alg.set_constant(0, 1, 2, Scalar(1));
    alg.set_constant(1, 2, 0, Scalar(1));
    alg.set_constant(2, 0, 1, Scalar(1));
    return alg;
}

LieAlgebra build_abelian(uint32_t dim) {
    LieAlgebra alg(dim, {});
    alg.set_name("abelian" + std::to_string(dim));
    return alg;
}

// ---------------------------------------------------------------------------
// sp(6,R), Racah realization.

namespace {

int sgn(int v) { return v > 0 ? 1 : -1; }

// Index of a stored representative; callers pass canonical index pairs.
int sp6_index(int a, int b) {
    if (a > 0 && b > 0) return 3 * (a - 1) + (b - 1);
    if (a < 0 && b > 0) {
        int i = -a;
        static constexpr int base[4] = {0, 0, 3, 5};  // offsets for i=1,2,3
        return 9 + base[i] + (b - i);
    }
    // a > 0, b < 0
    int j = -b;
    static constexpr int base[4] = {0, 0, 3, 5};
    return 15 + base[a] + (j - a);
}

// Canonical representative of X(a,b) under X(i,j) + eps_i eps_j X(-j,-i) = 0.
// Returns (sign, index).
std::pair<int, int> sp6_canonical(int a, int b) {
    if (a > 0 && b > 0) return {1, sp6_index(a, b)};
    if (a < 0 && b > 0) {
        int i = -a;
        // X(-i,b) = X(-b,i) when i > b.
        if (i <= b) return {1, sp6_index(a, b)};
        return {1, sp6_index(-b, i)};
    }
    if (a > 0 && b < 0) {
        int j = -b;
        if (a <= j) return {1, sp6_index(a, b)};
        return {1, sp6_index(j, -a)};
    }
    // a < 0, b < 0: X(-i,-j) = -X(j,i).
    return {-1, sp6_index(-b, -a)};
}

std::string sp6_name(int a, int b) {
    std::ostringstream os;
    os << "X(" << a << "," << b << ")";
    return os.str();
}

}  // namespace

LieAlgebra build_sp6() {
    std::vector<std::pair<int, int>> gens;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) gens.push_back({i, j});
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) gens.push_back({-i, j});
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) gens.push_back({i, -j});

    std::vector<std::string> names;
    for (auto [a, b] : gens) names.push_back(sp6_name(a, b));

    LieAlgebra alg(21, names);
    alg.set_name("sp6");

    // [X(i,j), X(k,l)] = d_jk X(i,l) - d_il X(k,j)
    //                    + e_i e_j d_{j,-l} X(k,-i) - e_i e_j d_{i,-k} X(-j,l)
    auto add = [&](std::map<uint32_t, Scalar>& acc, int a, int b, int sign) {
        auto [s, idx] = sp6_canonical(a, b);
        Scalar v(sign * s);
        auto it = acc.find(idx);
        if (it == acc.end()) {
            acc.emplace(idx, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) acc.erase(it);
        }
    };

    for (uint32_t p = 0; p < 21; ++p) {
        for (uint32_t q = p + 1; q < 21; ++q) {
            auto [i, j] = gens[p];
            auto [k, l] = gens[q];
            std::map<uint32_t, Scalar> acc;
            if (j == k) add(acc, i, l, 1);
            if (i == l) add(acc, k, j, -1);
            int ee = sgn(i) * sgn(j);
            if (j == -l) add(acc, k, -i, ee);
            if (i == -k) add(acc, -j, l, -ee);
            for (const auto& [idx, c] : acc) alg.set_constant(p, q, idx, c);
        }
    }
    return alg;
}

ChainSpec sp6_unitary_chain() {
    // New basis rows in terms of the build_sp6 enumeration.
    ScalarMat m(21, 21);
    auto i_pos = [](int a, int b) { return 3 * (a - 1) + (b - 1); };
    // H1 = X(1,1) - X(2,2); H2 = X(2,2) - X(3,3); H3 = X(1,1)+X(2,2)+X(3,3).
    m.at(0, i_pos(1, 1)) = Scalar(1);
    m.at(0, i_pos(2, 2)) = Scalar(-1);
    m.at(1, i_pos(2, 2)) = Scalar(1);
    m.at(1, i_pos(3, 3)) = Scalar(-1);
    m.at(2, i_pos(1, 1)) = Scalar(1);
    m.at(2, i_pos(2, 2)) = Scalar(1);
    m.at(2, i_pos(3, 3)) = Scalar(1);
    // Off-diagonal su(3) root vectors.
    const std::array<std::pair<int, int>, 6> roots = {
        {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}};
    for (size_t r = 0; r < roots.size(); ++r)
        m.at(3 + r, i_pos(roots[r].first, roots[r].second)) = Scalar(1);
    // Complement: the 12 mixed-sign generators keep their order.
    for (uint32_t r = 9; r < 21; ++r) m.at(r, r) = Scalar(1);
    return ChainSpec{m, 9};
}

std::vector<std::string> sp6_unitary_names() {
    std::vector<std::string> names = {"H1",     "H2",     "H3",     "X(1,2)", "X(1,3)",
                                      "X(2,1)", "X(2,3)", "X(3,1)", "X(3,2)"};
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) names.push_back(sp6_name(-i, j));
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) names.push_back(sp6_name(i, -j));
    return names;
}

// ---------------------------------------------------------------------------
// su(2,2).

namespace {

constexpr int g_metric[5] = {0, 1, 1, -1, -1};  // 1-based

// Formal u(2,2) basis: E(m,n) m<n -> 0..5, F(m,n) m<=n -> 6..15.
int e_index(int m, int n) {
    static constexpr int base[4] = {0, 0, 3, 5};  // m=1,2,3
    return base[m] + (n - m - 1);
}
int f_index(int m, int n) {
    // (1,1)..(1,4),(2,2)..(2,4),(3,3),(3,4),(4,4)
    static constexpr int base[5] = {0, 0, 4, 7, 9};
    return 6 + base[m] + (n - m);
}

using UVec = std::array<Scalar, 16>;

void uvec_add(UVec& acc, int idx, const Scalar& c) { acc[idx] += c; }

// E with canonical ordering: E(n,m) = -E(m,n), E(m,m) = 0.
void add_e(UVec& acc, int m, int n, const Scalar& c) {
    if (m == n) return;
    if (m < n)
        uvec_add(acc, e_index(m, n), c);
    else
        uvec_add(acc, e_index(n, m), -c);
}
void add_f(UVec& acc, int m, int n, const Scalar& c) {
    if (m > n) std::swap(m, n);
    uvec_add(acc, f_index(m, n), c);
}

enum class UKind { E, F };

struct UBasisElt {
    UKind kind;
    int m, n;
};

// Bracket of two formal basis elements, by (b1)-(b2) and the F-F rule.
UVec u22_bracket(const UBasisElt& x, const UBasisElt& y) {
    UVec acc{};
    auto g = [](int a, int b) { return a == b ? g_metric[a] : 0; };
    int m = x.m, n = x.n, l = y.m, s = y.n;
    if (x.kind == UKind::E && y.kind == UKind::E) {
        // [E_mn, E_ls] = g_ml E_ns + g_ms E_ln - g_nl E_ms - g_ns E_lm
        if (g(m, l)) add_e(acc, n, s, Scalar(g(m, l)));
        if (g(m, s)) add_e(acc, l, n, Scalar(g(m, s)));
        if (g(n, l)) add_e(acc, m, s, Scalar(-g(n, l)));
        if (g(n, s)) add_e(acc, l, m, Scalar(-g(n, s)));
    } else if (x.kind == UKind::E && y.kind == UKind::F) {
        // [E_mn, F_ls] = g_ml F_ns + g_ms F_ln - g_nl F_ms - g_ns F_lm
        if (g(m, l)) add_f(acc, n, s, Scalar(g(m, l)));
        if (g(m, s)) add_f(acc, l, n, Scalar(g(m, s)));
        if (g(n, l)) add_f(acc, m, s, Scalar(-g(n, l)));
        if (g(n, s)) add_f(acc, l, m, Scalar(-g(n, s)));
    } else if (x.kind == UKind::F && y.kind == UKind::E) {
        UVec neg = u22_bracket(y, x);
        for (size_t i = 0; i < neg.size(); ++i) acc[i] = -neg[i];
    } else {
        // [F_mn, F_ls] = g_ml E_ns + g_nl E_ms - g_ns E_lm - g_ms E_ln
        if (g(m, l)) add_e(acc, n, s, Scalar(g(m, l)));
        if (g(n, l)) add_e(acc, m, s, Scalar(g(n, l)));
        if (g(n, s)) add_e(acc, l, m, Scalar(-g(n, s)));
        if (g(m, s)) add_e(acc, l, n, Scalar(-g(m, s)));
    }
    return acc;
}

}  // namespace

LieAlgebra build_su22() {
    // su(2,2) basis as vectors over the formal u(2,2) basis.
    std::vector<UVec> basis(15);
    std::vector<std::string> names = {"H1", "H2", "H3"};
    // H_m = g_{m+1,m+1} F(m,m) - g_{mm} F(m+1,m+1)
    for (int mu = 1; mu <= 3; ++mu) {
        UVec v{};
        uvec_add(v, f_index(mu, mu), Scalar(g_metric[mu + 1]));
        uvec_add(v, f_index(mu + 1, mu + 1), Scalar(-g_metric[mu]));
        basis[mu - 1] = v;
    }
    std::vector<UBasisElt> offdiag;
    for (int m = 1; m <= 4; ++m)
        for (int n = m + 1; n <= 4; ++n) offdiag.push_back({UKind::E, m, n});
    for (int m = 1; m <= 4; ++m)
        for (int n = m + 1; n <= 4; ++n) offdiag.push_back({UKind::F, m, n});
    for (size_t i = 0; i < offdiag.size(); ++i) {
        UVec v{};
        int idx = offdiag[i].kind == UKind::E ? e_index(offdiag[i].m, offdiag[i].n)
                                              : f_index(offdiag[i].m, offdiag[i].n);
        uvec_add(v, idx, Scalar(1));
        basis[3 + i] = v;
        std::ostringstream os;
        os << (offdiag[i].kind == UKind::E ? "E(" : "F(") << offdiag[i].m << "," << offdiag[i].n
           << ")";
        names.push_back(os.str());
    }

    // Express a diagonal-F combination in terms of H1,H2,H3 and the centre
    // Z = g^mm F(m,m); the centre must never appear in su(2,2) brackets.
    // Rows: images of H1,H2,H3,Z in diagonal coordinates (F11,F22,F33,F44).
    ScalarMat diag_basis(std::vector<std::vector<Scalar>>{
        {Scalar(1), Scalar(-1), Scalar(0), Scalar(0)},   // H1
        {Scalar(0), Scalar(-1), Scalar(-1), Scalar(0)},  // H2
        {Scalar(0), Scalar(0), Scalar(-1), Scalar(1)},   // H3
        {Scalar(1), Scalar(1), Scalar(-1), Scalar(-1)},  // Z
    });
    auto diag_inv = diag_basis.inverse();
    if (!diag_inv) throw domain_error("internal: diagonal basis not invertible");

    LieAlgebra alg(15, names);
    alg.set_name("su22");

    // All formal basis elements for bilinear expansion.
    std::vector<UBasisElt> formal;
    for (int m = 1; m <= 4; ++m)
        for (int n = m + 1; n <= 4; ++n) formal.push_back({UKind::E, m, n});
    for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= 4; ++n) formal.push_back({UKind::F, m, n});

    auto formal_at = [&](int idx) { return formal[idx < 6 ? idx : 6 + (idx - 6)]; };

    for (uint32_t p = 0; p < 15; ++p) {
        for (uint32_t q = p + 1; q < 15; ++q) {
            UVec acc{};
            for (int a = 0; a < 16; ++a) {
                if (basis[p][a].is_zero()) continue;
                for (int b = 0; b < 16; ++b) {
                    if (basis[q][b].is_zero()) continue;
                    UVec br = u22_bracket(formal_at(a), formal_at(b));
                    Scalar f = basis[p][a] * basis[q][b];
                    for (int t = 0; t < 16; ++t)
                        if (!br[t].is_zero()) acc[t] += f * br[t];
                }
            }
            // Off-diagonal components map directly onto basis indices.
            for (int m = 1; m <= 4; ++m)
                for (int n = m + 1; n <= 4; ++n) {
                    const Scalar& ce = acc[e_index(m, n)];
                    if (!ce.is_zero()) alg.set_constant(p, q, 3 + e_index(m, n), ce);
                    const Scalar& cf = acc[f_index(m, n)];
                    if (!cf.is_zero()) alg.set_constant(p, q, 9 + e_index(m, n), cf);
                }
            // Diagonal F components resolve against {H1,H2,H3,Z}.
            std::array<Scalar, 4> d{acc[f_index(1, 1)], acc[f_index(2, 2)], acc[f_index(3, 3)],
                                    acc[f_index(4, 4)]};
            if (!(d[0].is_zero() && d[1].is_zero() && d[2].is_zero() && d[3].is_zero())) {
                // coords = d * inv(diag_basis): coefficient of H1,H2,H3,Z.
                std::array<Scalar, 4> coef;
                for (int c = 0; c < 4; ++c) {
                    Scalar v(0);
                    for (int r = 0; r < 4; ++r) v += d[r] * diag_inv->at(r, c);
                    coef[c] = v;
                }
                if (!coef[3].is_zero())
                    throw domain_error("internal: su(2,2) bracket hit the u(2,2) centre");
                for (int h = 0; h < 3; ++h)
                    if (!coef[h].is_zero()) alg.set_constant(p, q, h, coef[h]);
            }
        }
    }
    return alg;
}

ChainSpec su22_cartan_chain() { return ChainSpec{std::nullopt, 3}; }

// ---------------------------------------------------------------------------
// Characteristic-polynomial templates.

MatrixTemplate sp6_charpoly_template() {
    MatrixTemplate t;
    t.size = 6;
    t.dim = 21;
    t.comment =
        "Generic sp(6) element over the Racah coordinates. Entry (6,5) of the "
        "published matrix reads -x(2,3); the invariance gate certifies -x(3,2).";
    t.entries.assign(6, std::vector<Poly>(6, Poly(21)));
    const Scalar I = Scalar::i();
    auto var = [&](int idx) { return Poly::variable(21, idx); };
    auto pos = [&](int a, int b) { return 3 * (a - 1) + (b - 1); };
    for (int r = 1; r <= 3; ++r) {
        for (int c = 1; c <= 3; ++c) {
            // Upper-left: x(c,r).
            t.entries[r - 1][c - 1] = var(pos(c, r));
            // Lower-right: -x(r,c).
            t.entries[3 + r - 1][3 + c - 1] = -var(pos(r, c));
            // Upper-right: -I x(-min,max).
            t.entries[r - 1][3 + c - 1] =
                var(sp6_index(-std::min(r, c), std::max(r, c))) * (-I);
            // Lower-left: I x(min,-max).
            t.entries[3 + r - 1][c - 1] =
                var(sp6_index(std::min(r, c), -std::max(r, c))) * I;
        }
    }
    return t;
}

MatrixTemplate su22_charpoly_template() {
    MatrixTemplate t;
    t.size = 4;
    t.dim = 15;
    t.comment =
        "I*A for the published su(2,2) matrix A over the Cartan-first basis "
        "coordinates (h1,h2,h3,e(m,n),f(m,n)).";
    t.entries.assign(4, std::vector<Poly>(4, Poly(15)));
    const Scalar I = Scalar::i();
    auto var = [&](int idx) { return Poly::variable(15, idx); };
    auto e = [&](int m, int n) { return var(3 + e_index(m, n)); };
    auto f = [&](int m, int n) { return var(9 + e_index(m, n)); };
    auto h = [&](int m) { return var(m - 1); };

    // Diagonal of A: -I(3/4 h1 - 1/2 h2 + 1/4 h3), I(1/4 h1 + 1/2 h2 - 1/4 h3),
    // I(1/4 h1 - 1/2 h2 - 1/4 h3), I(1/4 h1 - 1/2 h2 + 3/4 h3).
    auto q = [](long a, long b) { return Scalar(a, b); };
    Poly d1 = h(1) * q(3, 4) + h(2) * q(-1, 2) + h(3) * q(1, 4);
    Poly d2 = h(1) * q(1, 4) + h(2) * q(1, 2) + h(3) * q(-1, 4);
    Poly d3 = h(1) * q(1, 4) + h(2) * q(-1, 2) + h(3) * q(-1, 4);
    Poly d4 = h(1) * q(1, 4) + h(2) * q(-1, 2) + h(3) * q(3, 4);
    // I*A diagonal: I*(-I d1) = d1; I*(I dk) = -dk.
    t.entries[0][0] = d1;
    t.entries[1][1] = -d2;
    t.entries[2][2] = -d3;
    t.entries[3][3] = -d4;

    // Off-diagonal of A as published: upper (m,n) = s_e e + I s_f f with
    // lower determined by the u(2,2) reality pattern; entries here are I*A.
    // I*(a e + I b f) = -b f + I a e.
    auto set_pair = [&](int m, int n, int se_u, int sf_u, int se_l, int sf_l) {
        t.entries[m - 1][n - 1] = f(m, n) * Scalar(-sf_u) + e(m, n) * (I * Scalar(se_u));
        t.entries[n - 1][m - 1] = f(m, n) * Scalar(-sf_l) + e(m, n) * (I * Scalar(se_l));
    };
    set_pair(1, 2, -1, -1, 1, -1);
    set_pair(1, 3, 1, 1, 1, -1);
    set_pair(1, 4, 1, 1, 1, -1);
    set_pair(2, 3, 1, 1, 1, -1);
    set_pair(2, 4, 1, 1, 1, -1);
    set_pair(3, 4, 1, 1, -1, 1);
    return t;
}

std::vector<uint32_t> sp6_casimir_degrees() { return {2, 4, 6}; }
std::vector<uint32_t> su22_casimir_degrees() { return {2, 3, 4}; }

}  // namespace casilab
