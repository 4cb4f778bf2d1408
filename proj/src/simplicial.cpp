#include "twocat/simplicial.hpp"

#include <algorithm>
#include <string>

namespace twocat {

namespace {

std::string sx(int n, int s) { return "simplex " + std::to_string(s) + " in dim " + std::to_string(n); }

// Simplicial identities for any family given by size, face and degeneracy accessors.
template <class Size, class D, class Dg>
void audit_ops(int cap, Size size, D d, Dg s, ValidationReport& r, const std::string& where) {
    auto bad = [&](const std::string& what, int n, int x) {
        r.add("SimplicialIdentityViolation", where + what + " at " + sx(n, x));
    };
    for (int n = 2; n <= cap; ++n)
        for (int x = 0; x < size(n); ++x)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    if (d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)))
                        bad("d" + std::to_string(i) + "d" + std::to_string(j), n, x);
    for (int n = 0; n + 2 <= cap; ++n)
        for (int x = 0; x < size(n); ++x)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    if (s(n + 1, i, s(n, j, x)) != s(n + 1, j + 1, s(n, i, x)))
                        bad("s" + std::to_string(i) + "s" + std::to_string(j), n, x);
    for (int n = 0; n + 1 <= cap; ++n)
        for (int x = 0; x < size(n); ++x)
            for (int j = 0; j <= n; ++j) {
                int y = s(n, j, x);
                for (int i = 0; i <= n + 1; ++i) {
                    int got = d(n + 1, i, y), want;
                    if (i == j || i == j + 1)
                        want = x;
                    else if (n == 0)
                        continue;
                    else if (i < j)
                        want = s(n - 1, j - 1, d(n, i, x));
                    else
                        want = s(n - 1, j, d(n, i - 1, x));
                    if (got != want) bad("d" + std::to_string(i) + "s" + std::to_string(j), n, x);
                }
            }
}

void build_index(TruncSimplicialSet& S) {
    S.index.assign(S.cap + 1, {});
    for (int n = 0; n <= S.cap; ++n) {
        S.index[n].reserve(S.keys[n].size());
        for (int s = 0; s < S.size(n); ++s) S.index[n].emplace(S.keys[n][s], s);
    }
}

void mark_degenerate(TruncSimplicialSet& S) {
    S.degenerate.assign(S.cap + 1, {});
    for (int n = 0; n <= S.cap; ++n) S.degenerate[n].assign(S.size(n), 0);
    for (int n = 0; n < S.cap; ++n)
        for (const auto& row : S.degen[n])
            for (int y : row) S.degenerate[n + 1][y] = 1;
}

void alloc_ops(TruncSimplicialSet& S) {
    S.face.assign(S.cap + 1, {});
    S.degen.assign(S.cap + 1, {});
    for (int n = 1; n <= S.cap; ++n) S.face[n].assign(n + 1, std::vector<int>(S.size(n), -1));
    for (int n = 0; n < S.cap; ++n) S.degen[n].assign(n + 1, std::vector<int>(S.size(n), -1));
}

}  // namespace

std::vector<int> TruncSimplicialSet::nondegenerate(int n) const {
    std::vector<int> out;
    for (int s = 0; s < size(n); ++s)
        if (!degenerate[n][s]) out.push_back(s);
    return out;
}

TruncSimplicialSet assemble(int cap, std::vector<std::vector<Key>> keys, const KeyOp& face_key,
                            const KeyOp& degen_key) {
    TruncSimplicialSet S;
    S.cap = cap;
    S.keys = std::move(keys);
    build_index(S);
    alloc_ops(S);
    auto locate = [&](int n, const Key& k, const char* what) {
        int t = S.find(n, k);
        if (t < 0) throw Error("TargetSimplexMissing", std::string(what) + " leaves the simplex set in dim " +
                                                           std::to_string(n));
        return t;
    };
    for (int n = 1; n <= cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < S.size(n); ++s) S.face[n][i][s] = locate(n - 1, face_key(n, i, S.keys[n][s]), "face");
    for (int n = 0; n < cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < S.size(n); ++s)
                S.degen[n][i][s] = locate(n + 1, degen_key(n, i, S.keys[n][s]), "degeneracy");
    mark_degenerate(S);
    return S;
}

ValidationReport audit_simplicial(const TruncSimplicialSet& S) {
    ValidationReport r;
    audit_ops(
        S.cap, [&](int n) { return S.size(n); }, [&](int n, int i, int x) { return S.d(n, i, x); },
        [&](int n, int i, int x) { return S.s(n, i, x); }, r, "");
    // degenerate flag must equal membership in the image of some s_i
    for (int n = 1; n <= S.cap; ++n) {
        std::vector<char> img(S.size(n), 0);
        for (const auto& row : S.degen[n - 1])
            for (int y : row) img[y] = 1;
        for (int s = 0; s < S.size(n); ++s)
            if (img[s] != S.degenerate[n][s]) r.add("DegeneracyFlagMismatch", sx(n, s));
    }
    return r;
}

ValidationReport audit_simplicial_family(int cap, const std::function<int(int)>& size,
                                         const std::function<int(int, int, int)>& d,
                                         const std::function<int(int, int, int)>& s) {
    ValidationReport r;
    audit_ops(cap, size, d, s, r, "");
    return r;
}

ValidationReport validate_simplicial_map(const TruncSimplicialSet& S, const TruncSimplicialSet& T,
                                         const SimplicialMap& f) {
    ValidationReport r;
    int cap = std::min(S.cap, T.cap);
    if (static_cast<int>(f.map.size()) < cap + 1) {
        r.add("MapIncomplete", "map does not cover all dimensions");
        return r;
    }
    for (int n = 0; n <= cap; ++n) {
        if (static_cast<int>(f.map[n].size()) != S.size(n)) {
            r.add("MapIncomplete", "dimension " + std::to_string(n));
            return r;
        }
        for (int y : f.map[n])
            if (y < 0 || y >= T.size(n)) {
                r.add("MapIncomplete", "value out of range in dimension " + std::to_string(n));
                return r;
            }
    }
    for (int n = 1; n <= cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < S.size(n); ++s)
                if (f.map[n - 1][S.d(n, i, s)] != T.d(n, i, f.map[n][s]))
                    r.add("MapNotSimplicial", "face d" + std::to_string(i) + " at " + sx(n, s));
    for (int n = 0; n < cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < S.size(n); ++s)
                if (f.map[n + 1][S.s(n, i, s)] != T.s(n, i, f.map[n][s]))
                    r.add("MapNotSimplicial", "degeneracy s" + std::to_string(i) + " at " + sx(n, s));
    return r;
}

SimplicialMap identity_map(const TruncSimplicialSet& S) {
    SimplicialMap f;
    for (int n = 0; n <= S.cap; ++n) {
        f.map.emplace_back(S.size(n));
        for (int s = 0; s < S.size(n); ++s) f.map[n][s] = s;
    }
    return f;
}

SimplicialMap compose_maps(const SimplicialMap& g, const SimplicialMap& f) {
    SimplicialMap h;
    size_t dims = std::min(g.map.size(), f.map.size());
    for (size_t n = 0; n < dims; ++n) {
        h.map.emplace_back();
        for (int y : f.map[n]) h.map[n].push_back(g.map[n][y]);
    }
    return h;
}

bool is_bijective(const SimplicialMap& f, const TruncSimplicialSet& S, const TruncSimplicialSet& T) {
    int cap = std::min(S.cap, T.cap);
    for (int n = 0; n <= cap; ++n) {
        if (S.size(n) != T.size(n)) return false;
        std::vector<char> hit(T.size(n), 0);
        for (int y : f.map[n]) {
            if (y < 0 || hit[y]) return false;
            hit[y] = 1;
        }
    }
    return true;
}

bool same_simplicial_set(const TruncSimplicialSet& S, const TruncSimplicialSet& T) {
    if (S.cap != T.cap) return false;
    for (int n = 0; n <= S.cap; ++n) {
        if (S.size(n) != T.size(n)) return false;
        for (int x = 0; x < S.size(n); ++x) {
            int y = T.find(n, S.keys[n][x]);
            if (y < 0) return false;
            for (int i = 0; n > 0 && i <= n; ++i)
                if (S.keys[n - 1][S.d(n, i, x)] != T.keys[n - 1][T.d(n, i, y)]) return false;
            for (int i = 0; n < S.cap && i <= n; ++i)
                if (S.keys[n + 1][S.s(n, i, x)] != T.keys[n + 1][T.s(n, i, y)]) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

void resize_bisimplicial(TruncBisimplicialSet& S, int cap) {
    S.cap = cap;
    S.keys.assign(cap + 1, std::vector<std::vector<Key>>(cap + 1));
    S.hface.assign(cap + 1, std::vector<std::vector<std::vector<int>>>(cap + 1));
    S.hdeg = S.vface = S.vdeg = S.hface;
}

ValidationReport audit_bisimplicial(const TruncBisimplicialSet& S) {
    ValidationReport r;
    int cap = S.cap;
    for (int q = 0; q <= cap; ++q)
        audit_ops(
            cap, [&](int p) { return S.size(p, q); }, [&](int p, int i, int x) { return S.dh(p, q, i, x); },
            [&](int p, int i, int x) { return S.sh(p, q, i, x); }, r, "horizontal q=" + std::to_string(q) + " ");
    for (int p = 0; p <= cap; ++p)
        audit_ops(
            cap, [&](int q) { return S.size(p, q); }, [&](int q, int j, int x) { return S.dv(p, q, j, x); },
            [&](int q, int j, int x) { return S.sv(p, q, j, x); }, r, "vertical p=" + std::to_string(p) + " ");
    auto bad = [&](const std::string& what, int p, int q, int x) {
        r.add("BisimplicialCommutationViolation",
              what + " at (" + std::to_string(p) + "," + std::to_string(q) + ") #" + std::to_string(x));
    };
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; q <= cap; ++q)
            for (int x = 0; x < S.size(p, q); ++x) {
                for (int i = 0; p >= 1 && i <= p; ++i)
                    for (int j = 0; q >= 1 && j <= q; ++j)
                        if (S.dv(p - 1, q, j, S.dh(p, q, i, x)) != S.dh(p, q - 1, i, S.dv(p, q, j, x)))
                            bad("dh dv", p, q, x);
                for (int i = 0; p >= 1 && i <= p; ++i)
                    for (int j = 0; q < cap && j <= q; ++j)
                        if (S.sv(p - 1, q, j, S.dh(p, q, i, x)) != S.dh(p, q + 1, i, S.sv(p, q, j, x)))
                            bad("dh sv", p, q, x);
                for (int i = 0; p < cap && i <= p; ++i)
                    for (int j = 0; q >= 1 && j <= q; ++j)
                        if (S.dv(p + 1, q, j, S.sh(p, q, i, x)) != S.sh(p, q - 1, i, S.dv(p, q, j, x)))
                            bad("sh dv", p, q, x);
                for (int i = 0; p < cap && i <= p; ++i)
                    for (int j = 0; q < cap && j <= q; ++j)
                        if (S.sv(p + 1, q, j, S.sh(p, q, i, x)) != S.sh(p, q + 1, i, S.sv(p, q, j, x)))
                            bad("sh sv", p, q, x);
            }
    return r;
}

TruncBisimplicialSet transpose(const TruncBisimplicialSet& S) {
    TruncBisimplicialSet T;
    resize_bisimplicial(T, S.cap);
    for (int p = 0; p <= S.cap; ++p)
        for (int q = 0; q <= S.cap; ++q) {
            T.keys[q][p] = S.keys[p][q];
            T.hface[q][p] = S.vface[p][q];
            T.hdeg[q][p] = S.vdeg[p][q];
            T.vface[q][p] = S.hface[p][q];
            T.vdeg[q][p] = S.hdeg[p][q];
        }
    return T;
}

TruncBisimplicialSet external_product(const TruncSimplicialSet& X, const TruncSimplicialSet& Y) {
    if (X.cap != Y.cap) throw Error("CapMismatch", "external product of different caps");
    TruncBisimplicialSet S;
    int cap = X.cap;
    resize_bisimplicial(S, cap);
    for (int p = 0; p <= cap; ++p)
        for (int q = 0; q <= cap; ++q) {
            int nx = X.size(p), ny = Y.size(q);
            for (int a = 0; a < nx; ++a)
                for (int b = 0; b < ny; ++b) S.keys[p][q].push_back({a, b});
            auto idx = [](int a, int b, int ny2) { return a * ny2 + b; };
            if (p >= 1) {
                S.hface[p][q].assign(p + 1, std::vector<int>(nx * ny));
                for (int i = 0; i <= p; ++i)
                    for (int a = 0; a < nx; ++a)
                        for (int b = 0; b < ny; ++b) S.hface[p][q][i][idx(a, b, ny)] = idx(X.d(p, i, a), b, ny);
            }
            if (p < cap) {
                S.hdeg[p][q].assign(p + 1, std::vector<int>(nx * ny));
                for (int i = 0; i <= p; ++i)
                    for (int a = 0; a < nx; ++a)
                        for (int b = 0; b < ny; ++b) S.hdeg[p][q][i][idx(a, b, ny)] = idx(X.s(p, i, a), b, ny);
            }
            if (q >= 1) {
                int ny1 = Y.size(q - 1);
                S.vface[p][q].assign(q + 1, std::vector<int>(nx * ny));
                for (int j = 0; j <= q; ++j)
                    for (int a = 0; a < nx; ++a)
                        for (int b = 0; b < ny; ++b) S.vface[p][q][j][idx(a, b, ny)] = idx(a, Y.d(q, j, b), ny1);
            }
            if (q < cap) {
                int ny1 = Y.size(q + 1);
                S.vdeg[p][q].assign(q + 1, std::vector<int>(nx * ny));
                for (int j = 0; j <= q; ++j)
                    for (int a = 0; a < nx; ++a)
                        for (int b = 0; b < ny; ++b) S.vdeg[p][q][j][idx(a, b, ny)] = idx(a, Y.s(q, j, b), ny1);
            }
        }
    return S;
}

TruncBisimplicialSet vertically_constant(const TruncSimplicialSet& X) {
    return external_product(X, point(X.cap));
}

TruncSimplicialSet diag(const TruncBisimplicialSet& S, bool keep_keys) {
    TruncSimplicialSet D;
    D.cap = S.cap;
    D.keys.assign(S.cap + 1, {});
    for (int n = 0; n <= S.cap; ++n)
        for (int s = 0; s < S.size(n, n); ++s) D.keys[n].push_back(keep_keys ? S.keys[n][n][s] : Key{s});
    build_index(D);
    alloc_ops(D);
    for (int n = 1; n <= S.cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < D.size(n); ++s) D.face[n][i][s] = S.dh(n, n - 1, i, S.dv(n, n, i, s));
    for (int n = 0; n < S.cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < D.size(n); ++s) D.degen[n][i][s] = S.sh(n, n + 1, i, S.sv(n, n, i, s));
    mark_degenerate(D);
    return D;
}

TruncSimplicialSet codiagonal_wbar(const TruncBisimplicialSet& S) {
    int cap = S.cap;
    if (cap < 1) throw Error("CapTooSmall", "codiagonal needs cap >= 1");
    std::vector<std::vector<Key>> keys(cap + 1);
    for (int p = 0; p <= cap; ++p) {
        // pre[m]: d_0^v-preimages in S_{m,p-m}, keyed by the image in S_{m,p-m-1}
        std::vector<std::vector<std::vector<int>>> pre(p);
        for (int m = 0; m < p; ++m) {
            pre[m].assign(S.size(m, p - m - 1), {});
            for (int t = 0; t < S.size(m, p - m); ++t) pre[m][S.dv(m, p - m, 0, t)].push_back(t);
        }
        Key cur(p + 1);
        std::function<void(int)> rec = [&](int m) {
            if (m < 0) {
                keys[p].push_back(cur);
                return;
            }
            int want = S.dh(m + 1, p - m - 1, m + 1, cur[m + 1]);
            for (int t : pre[m][want]) {
                cur[m] = t;
                rec(m - 1);
            }
        };
        for (int t = 0; t < S.size(p, 0); ++t) {
            cur[p] = t;
            rec(p - 1);
        }
        std::sort(keys[p].begin(), keys[p].end());
    }
    auto face = [&](int p, int i, const Key& t) {
        Key out;
        out.reserve(p);
        for (int m = 0; m < i; ++m) out.push_back(S.dv(m, p - m, i - m, t[m]));
        for (int m = i + 1; m <= p; ++m) out.push_back(S.dh(m, p - m, i, t[m]));
        return out;
    };
    auto degen = [&](int p, int i, const Key& t) {
        Key out;
        out.reserve(p + 2);
        for (int m = 0; m <= i; ++m) out.push_back(S.sv(m, p - m, i - m, t[m]));
        for (int m = i; m <= p; ++m) out.push_back(S.sh(m, p - m, i, t[m]));
        return out;
    };
    return assemble(cap, std::move(keys), face, degen);
}

SimplicialMap zisman_eta(const TruncBisimplicialSet& S, const TruncSimplicialSet& diagS,
                         const TruncSimplicialSet& wbarS) {
    SimplicialMap f;
    for (int p = 0; p <= S.cap; ++p) {
        f.map.emplace_back(diagS.size(p));
        for (int s = 0; s < diagS.size(p); ++s) {
            int t = diagS.keys[p][s][0];
            Key k(p + 1);
            int v = t;
            for (int m = 0; m <= p; ++m) {
                // v = (d_0^v)^m t in S_{p, p-m}
                int h = v;
                for (int c = p; c > m; --c) h = S.dh(c, p - m, m + 1, h);
                k[m] = h;
                if (m < p) v = S.dv(p, p - m, 0, v);
            }
            int y = wbarS.find(p, k);
            if (y < 0) throw Error("TargetSimplexMissing", "eta image not in the codiagonal");
            f.map[p][s] = y;
        }
    }
    return f;
}

TruncSimplicialSet product(const TruncSimplicialSet& S, const TruncSimplicialSet& T) {
    if (S.cap != T.cap) throw Error("CapMismatch", "product of different caps");
    TruncSimplicialSet P;
    P.cap = S.cap;
    P.keys.assign(P.cap + 1, {});
    for (int n = 0; n <= P.cap; ++n)
        for (int a = 0; a < S.size(n); ++a)
            for (int b = 0; b < T.size(n); ++b) P.keys[n].push_back({a, b});
    build_index(P);
    alloc_ops(P);
    for (int n = 1; n <= P.cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < P.size(n); ++s) {
                const Key& k = P.keys[n][s];
                P.face[n][i][s] = S.d(n, i, k[0]) * T.size(n - 1) + T.d(n, i, k[1]);
            }
    for (int n = 0; n < P.cap; ++n)
        for (int i = 0; i <= n; ++i)
            for (int s = 0; s < P.size(n); ++s) {
                const Key& k = P.keys[n][s];
                P.degen[n][i][s] = S.s(n, i, k[0]) * T.size(n + 1) + T.s(n, i, k[1]);
            }
    mark_degenerate(P);
    return P;
}

TruncSimplicialSet standard_simplex(int n, int cap) {
    std::vector<std::vector<Key>> keys(cap + 1);
    for (int k = 0; k <= cap; ++k) {
        Key cur(k + 1);
        std::function<void(int, int)> rec = [&](int pos, int lo) {
            if (pos > k) {
                keys[k].push_back(cur);
                return;
            }
            for (int v = lo; v <= n; ++v) {
                cur[pos] = v;
                rec(pos + 1, v);
            }
        };
        rec(0, 0);
    }
    auto face = [](int, int i, const Key& k) {
        Key out = k;
        out.erase(out.begin() + i);
        return out;
    };
    auto degen = [](int, int i, const Key& k) {
        Key out = k;
        out.insert(out.begin() + i, k[i]);
        return out;
    };
    return assemble(cap, std::move(keys), face, degen);
}

TruncSimplicialSet disjoint_union(const TruncSimplicialSet& S, const TruncSimplicialSet& T) {
    if (S.cap != T.cap) throw Error("CapMismatch", "union of different caps");
    std::vector<std::vector<Key>> keys(S.cap + 1);
    for (int n = 0; n <= S.cap; ++n) {
        for (int s = 0; s < S.size(n); ++s) keys[n].push_back({0, s});
        for (int s = 0; s < T.size(n); ++s) keys[n].push_back({1, s});
    }
    auto face = [&](int n, int i, const Key& k) {
        return Key{k[0], k[0] == 0 ? S.d(n, i, k[1]) : T.d(n, i, k[1])};
    };
    auto degen = [&](int n, int i, const Key& k) {
        return Key{k[0], k[0] == 0 ? S.s(n, i, k[1]) : T.s(n, i, k[1])};
    };
    return assemble(S.cap, std::move(keys), face, degen);
}

TruncSimplicialSet point(int cap) {
    std::vector<std::vector<Key>> keys(cap + 1, std::vector<Key>{Key{}});
    auto op = [](int, int, const Key&) { return Key{}; };
    return assemble(cap, std::move(keys), op, op);
}

}  // namespace twocat
