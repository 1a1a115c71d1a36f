#include "dilatekit/bodies.hpp"

#include <algorithm>
#include <cmath>

#include "dilatekit/numkernel.hpp"

namespace dilatekit::bodies {

namespace {

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

void check_p(double p) {
    if (!(p >= 1.0)) throw DomainError("p must lie in [1, inf]");
}

// Solve a square real system by Gaussian elimination with partial pivoting.
// Returns false when the matrix is numerically singular.
bool gauss_solve(std::vector<Vec> m, Vec rhs, Vec& out) {
    const int n = static_cast<int>(rhs.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < 1e-12) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = col + 1; r < n; ++r) {
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    out.assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = rhs[r];
        for (int c = r + 1; c < n; ++c) s -= m[r][c] * out[c];
        out[r] = s / m[r][r];
    }
    return true;
}

// Unit vector spanning the nullspace of a (d-1) x d matrix of rank d-1.
Vec nullspace_direction(std::vector<Vec> m, int d) {
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < d && r < rows; ++c) {
        int piv = r;
        for (int i = r + 1; i < rows; ++i)
            if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
        if (std::abs(m[piv][c]) < 1e-12) continue;
        std::swap(m[piv], m[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const double f = m[i][c] / m[r][c];
            for (int j = 0; j < d; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col[r] = c;
        ++r;
    }
    if (r != d - 1) throw DomainError("degenerate facet: vertex set not affinely independent");
    std::vector<bool> is_pivot(d, false);
    for (int i = 0; i < r; ++i) is_pivot[pivot_col[i]] = true;
    int free_col = -1;
    for (int c = 0; c < d; ++c)
        if (!is_pivot[c]) free_col = c;
    Vec v(d, 0.0);
    v[free_col] = 1.0;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m[i][free_col] / m[i][pivot_col[i]];
    const double nv = norm2(v);
    for (auto& e : v) e /= nv;
    return v;
}

std::vector<Facet> simplex_facets(const Simplex& s) {
    const int d = static_cast<int>(s.vertices.size()) - 1;
    std::vector<Facet> out;
    if (d == 1) {
        const double lo = std::min(s.vertices[0][0], s.vertices[1][0]);
        const double hi = std::max(s.vertices[0][0], s.vertices[1][0]);
        out.push_back({{1.0}, hi});
        out.push_back({{-1.0}, -lo});
        return out;
    }
    for (int skip = 0; skip <= d; ++skip) {
        std::vector<Vec> face;
        for (int i = 0; i <= d; ++i)
            if (i != skip) face.push_back(s.vertices[i]);
        std::vector<Vec> dirs;
        for (std::size_t i = 1; i < face.size(); ++i) dirs.push_back(sub(face[i], face[0]));
        Vec n = nullspace_direction(std::move(dirs), d);
        double off = dot(n, face[0]);
        // orient away from the omitted vertex
        if (dot(n, s.vertices[skip]) > off) {
            for (auto& e : n) e = -e;
            off = -off;
        }
        out.push_back({std::move(n), off});
    }
    return out;
}

std::vector<Facet> polytope_v_facets(const std::vector<Vec>& verts_in, int d) {
    std::vector<Vec> verts;
    for (const auto& v : verts_in) {
        bool dup = false;
        for (const auto& w : verts)
            if (norm2(sub(v, w)) < 1e-12) dup = true;
        if (!dup) verts.push_back(v);
    }
    std::vector<Facet> out;
    auto push_unique = [&](Vec n, double off) {
        for (const auto& f : out) {
            double diff = std::abs(f.offset - off);
            for (int i = 0; i < d; ++i) diff += std::abs(f.normal[i] - n[i]);
            if (diff < 1e-9) return;
        }
        out.push_back({std::move(n), off});
    };
    const int m = static_cast<int>(verts.size());
    if (d == 1) {
        double lo = verts[0][0], hi = verts[0][0];
        for (const auto& v : verts) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        out.push_back({{1.0}, hi});
        out.push_back({{-1.0}, -lo});
        return out;
    }
    if (d == 2) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const Vec e = sub(verts[j], verts[i]);
                const double len = norm2(e);
                if (len < 1e-12) continue;
                Vec n{e[1] / len, -e[0] / len};
                for (int flip = 0; flip < 2; ++flip) {
                    double off = -kInf;
                    bool valid = true;
                    const double base = dot(n, verts[i]);
                    for (const auto& v : verts) {
                        const double s = dot(n, v);
                        off = std::max(off, s);
                        if (s > base + 1e-9) valid = false;
                    }
                    if (valid) push_unique(n, off);
                    for (auto& e2 : n) e2 = -e2;
                }
            }
        if (out.empty()) throw DomainError("polytope_v: all vertices collinear");
        return out;
    }
    if (d == 3) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k) {
                    const Vec u = sub(verts[j], verts[i]);
                    const Vec w = sub(verts[k], verts[i]);
                    Vec n{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
                          u[0] * w[1] - u[1] * w[0]};
                    const double len = norm2(n);
                    if (len < 1e-12) continue;
                    for (auto& e : n) e /= len;
                    for (int flip = 0; flip < 2; ++flip) {
                        double off = -kInf;
                        bool valid = true;
                        const double base = dot(n, verts[i]);
                        for (const auto& v : verts) {
                            const double s = dot(n, v);
                            off = std::max(off, s);
                            if (s > base + 1e-9) valid = false;
                        }
                        if (valid) push_unique(n, off);
                        for (auto& e : n) e = -e;
                    }
                }
        if (out.empty()) throw DomainError("polytope_v: vertices not full-dimensional");
        return out;
    }
    throw Unsupported("polytope_v facet enumeration limited to d <= 3");
}

std::vector<Vec> polytope_h_vertices(const PolytopeH& p) {
    const int d = static_cast<int>(p.a.front().size());
    const int m = static_cast<int>(p.a.size());
    if (d > 3) throw Unsupported("polytope_h vertex enumeration limited to d <= 3");
    auto feasible = [&](const Vec& x) {
        for (int i = 0; i < m; ++i)
            if (dot(p.a[i], x) > p.b[i] + 1e-9) return false;
        return true;
    };
    std::vector<Vec> verts;
    auto consider = [&](const std::vector<int>& rows) {
        std::vector<Vec> mm;
        Vec rhs;
        for (int r : rows) {
            mm.push_back(p.a[r]);
            rhs.push_back(p.b[r]);
        }
        Vec x;
        if (!gauss_solve(std::move(mm), std::move(rhs), x)) return;
        if (!feasible(x)) return;
        for (const auto& v : verts)
            if (norm2(sub(v, x)) < 1e-9) return;
        verts.push_back(std::move(x));
    };
    if (d == 1)
        for (int i = 0; i < m; ++i) consider({i});
    if (d == 2)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) consider({i, j});
    if (d == 3)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k) consider({i, j, k});
    if (verts.empty()) throw DomainError("polytope_h: empty or unbounded");
    return verts;
}

}  // namespace

double conjugate_exponent(double p) {
    check_p(p);
    if (std::isinf(p)) return 1.0;
    if (p == 1.0) return kInf;
    return p / (p - 1.0);
}

double lp_norm(const Vec& v, double p) {
    check_p(p);
    if (std::isinf(p)) {
        double m = 0.0;
        for (double e : v) m = std::max(m, std::abs(e));
        return m;
    }
    if (p == 1.0) {
        double s = 0.0;
        for (double e : v) s += std::abs(e);
        return s;
    }
    if (p == 2.0) return norm2(v);
    double s = 0.0;
    for (double e : v) s += std::pow(std::abs(e), p);
    return std::pow(s, 1.0 / p);
}

BodySpec::BodySpec(Variant v) : v_(std::move(v)) {
    if (const auto* b = std::get_if<LpBall>(&v_)) {
        check_p(b->p);
        if (b->d < 1 || static_cast<int>(b->center.size()) != b->d)
            throw DimensionMismatch("lp_ball: center size != d");
        if (!(b->radius > 0.0)) throw DomainError("lp_ball: radius must be positive");
        dim_ = b->d;
    } else if (const auto* b2 = std::get_if<PositiveLp>(&v_)) {
        check_p(b2->p);
        if (b2->d < 1) throw DomainError("positive_lp: d must be positive");
        dim_ = b2->d;
    } else if (const auto* bx = std::get_if<Box>(&v_)) {
        if (bx->a.empty()) throw DomainError("box: empty weight vector");
        for (double aj : bx->a)
            if (!(aj > 0.0)) throw DomainError("box: weights must be positive");
        dim_ = static_cast<int>(bx->a.size());
    } else if (const auto* dm = std::get_if<Diamond>(&v_)) {
        if (dm->a.empty()) throw DomainError("diamond: empty weight vector");
        for (double aj : dm->a)
            if (!(aj > 0.0)) throw DomainError("diamond: weights must be positive");
        dim_ = static_cast<int>(dm->a.size());
    } else if (const auto* ph = std::get_if<PolytopeH>(&v_)) {
        if (ph->a.empty() || ph->a.size() != ph->b.size())
            throw DimensionMismatch("polytope_h: row/offset count mismatch");
        dim_ = static_cast<int>(ph->a.front().size());
        for (const auto& row : ph->a) {
            if (static_cast<int>(row.size()) != dim_)
                throw DimensionMismatch("polytope_h: ragged rows");
            if (norm2(row) < 1e-12) throw DomainError("polytope_h: zero row");
        }
    } else if (const auto* pv = std::get_if<PolytopeV>(&v_)) {
        if (pv->vertices.empty()) throw DomainError("polytope_v: no vertices");
        dim_ = static_cast<int>(pv->vertices.front().size());
        for (const auto& vtx : pv->vertices)
            if (static_cast<int>(vtx.size()) != dim_)
                throw DimensionMismatch("polytope_v: ragged vertices");
    } else if (const auto* sx = std::get_if<Simplex>(&v_)) {
        dim_ = static_cast<int>(sx->vertices.front().size());
        if (static_cast<int>(sx->vertices.size()) != dim_ + 1)
            throw DimensionMismatch("simplex: needs exactly d+1 vertices");
        for (const auto& vtx : sx->vertices)
            if (static_cast<int>(vtx.size()) != dim_)
                throw DimensionMismatch("simplex: ragged vertices");
        // affine independence via singular values of the difference matrix
        CMat mdiff(dim_, dim_);
        for (int j = 1; j <= dim_; ++j)
            for (int i = 0; i < dim_; ++i)
                mdiff(i, j - 1) = sx->vertices[j][i] - sx->vertices[0][i];
        const Vec sv = herm_eigvals(HermMatrix(mdiff.adjoint() * mdiff, 1e-6));
        const double smin = std::sqrt(std::max(sv.front(), 0.0));
        const double smax = std::sqrt(std::max(sv.back(), 0.0));
        if (smin <= 1e-10 * smax) throw DomainError("simplex: vertices affinely dependent");
    }
}

std::string BodySpec::variant_name() const {
    switch (v_.index()) {
        case 0: return "lp_ball";
        case 1: return "positive_lp";
        case 2: return "box";
        case 3: return "diamond";
        case 4: return "polytope_h";
        case 5: return "polytope_v";
        default: return "simplex";
    }
}

std::vector<Facet> body_facets(const BodySpec& k) {
    const int d = k.dim();
    if (const auto* bx = k.get<Box>()) {
        std::vector<Facet> out;
        for (int j = 0; j < d; ++j) {
            Vec n(d, 0.0);
            n[j] = 1.0;
            out.push_back({n, bx->a[j]});
            n[j] = -1.0;
            out.push_back({n, bx->a[j]});
        }
        return out;
    }
    if (const auto* dm = k.get<Diamond>()) {
        std::vector<Facet> out;
        for (int mask = 0; mask < (1 << d); ++mask) {
            Vec w(d);
            for (int j = 0; j < d; ++j) w[j] = ((mask >> j) & 1 ? 1.0 : -1.0) / dm->a[j];
            const double len = norm2(w);
            for (auto& e : w) e /= len;
            out.push_back({std::move(w), 1.0 / len});
        }
        return out;
    }
    if (const auto* sx = k.get<Simplex>()) return simplex_facets(*sx);
    if (const auto* ph = k.get<PolytopeH>()) {
        std::vector<Facet> out;
        for (std::size_t i = 0; i < ph->a.size(); ++i) {
            Vec n = ph->a[i];
            const double len = norm2(n);
            for (auto& e : n) e /= len;
            out.push_back({std::move(n), ph->b[i] / len});
        }
        return out;
    }
    if (const auto* pv = k.get<PolytopeV>()) return polytope_v_facets(pv->vertices, d);
    throw Unsupported("body_facets: no facet form for " + k.variant_name());
}

double support_value(const BodySpec& k, const Vec& u) {
    if (static_cast<int>(u.size()) != k.dim())
        throw DimensionMismatch("support_value: direction dimension mismatch");
    if (norm2(u) < 1e-300) throw DomainError("support_value: zero direction");
    if (const auto* b = k.get<LpBall>()) {
        return dot(u, b->center) + b->radius * lp_norm(u, conjugate_exponent(b->p));
    }
    if (const auto* b2 = k.get<PositiveLp>()) {
        Vec up(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) up[i] = std::max(u[i], 0.0);
        return lp_norm(up, conjugate_exponent(b2->p));
    }
    if (const auto* bx = k.get<Box>()) {
        double s = 0.0;
        for (std::size_t j = 0; j < u.size(); ++j) s += bx->a[j] * std::abs(u[j]);
        return s;
    }
    if (const auto* dm = k.get<Diamond>()) {
        double s = 0.0;
        for (std::size_t j = 0; j < u.size(); ++j) s = std::max(s, dm->a[j] * std::abs(u[j]));
        return s;
    }
    const std::vector<Vec>* verts = nullptr;
    std::vector<Vec> storage;
    if (const auto* pv = k.get<PolytopeV>()) verts = &pv->vertices;
    if (const auto* sx = k.get<Simplex>()) verts = &sx->vertices;
    if (const auto* ph = k.get<PolytopeH>()) {
        storage = polytope_h_vertices(*ph);
        verts = &storage;
    }
    double best = -kInf;
    for (const auto& v : *verts) best = std::max(best, dot(u, v));
    return best;
}

PointReport point_membership(const BodySpec& k, const Vec& x, double tol) {
    if (static_cast<int>(x.size()) != k.dim())
        throw DimensionMismatch("point_membership: point dimension mismatch");
    double margin;
    if (const auto* b = k.get<LpBall>()) {
        margin = lp_norm(sub(x, b->center), b->p) - b->radius;
    } else if (const auto* b2 = k.get<PositiveLp>()) {
        margin = lp_norm(x, b2->p) - 1.0;
        for (double e : x) margin = std::max(margin, -e);
    } else if (const auto* bx = k.get<Box>()) {
        margin = -kInf;
        for (std::size_t j = 0; j < x.size(); ++j)
            margin = std::max(margin, std::abs(x[j]) - bx->a[j]);
    } else if (const auto* dm = k.get<Diamond>()) {
        double s = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) s += std::abs(x[j]) / dm->a[j];
        margin = s - 1.0;
    } else if (const auto* ph = k.get<PolytopeH>()) {
        margin = -kInf;
        for (std::size_t i = 0; i < ph->a.size(); ++i)
            margin = std::max(margin, dot(ph->a[i], x) - ph->b[i]);
    } else {
        margin = -kInf;
        for (const auto& f : body_facets(k)) margin = std::max(margin, dot(f.normal, x) - f.offset);
    }
    return {margin <= tol, margin};
}

BodySpec polar_dual(const BodySpec& k) {
    if (const auto* pv = k.get<PolytopeV>()) {
        const Vec origin(k.dim(), 0.0);
        if (point_membership(k, origin).margin >= -1e-9)
            throw DomainError("polar_dual: origin not strictly interior");
        PolytopeH h;
        h.a = pv->vertices;
        h.b.assign(pv->vertices.size(), 1.0);
        return BodySpec(std::move(h));
    }
    if (const auto* ph = k.get<PolytopeH>()) {
        PolytopeV v;
        for (std::size_t i = 0; i < ph->a.size(); ++i) {
            if (!(ph->b[i] > 0.0))
                throw DomainError("polar_dual: polytope_h needs strictly positive offsets");
            Vec row = ph->a[i];
            for (auto& e : row) e /= ph->b[i];
            v.vertices.push_back(std::move(row));
        }
        return BodySpec(std::move(v));
    }
    throw Unsupported("polar_dual: only polytope_v / polytope_h");
}

double simplex_base_ratio(double b) {
    if (!(b > 1.0)) throw DomainError("simplex_base_ratio: requires b > 1");
    return std::sqrt((b + 1.0) / (b - 1.0));
}

BodySpec unit_simplex_circumscribed(int d) {
    if (d < 1) throw DomainError("unit_simplex_circumscribed: d >= 1");
    std::vector<Vec> verts{{-1.0}, {1.0}};
    for (int k = 2; k <= d; ++k) {
        const double scale = std::sqrt((k + 1.0) / (k - 1.0));
        std::vector<Vec> next;
        for (const auto& v : verts) {
            Vec w(k);
            for (int i = 0; i < k - 1; ++i) w[i] = scale * v[i];
            w[k - 1] = -1.0;
            next.push_back(std::move(w));
        }
        Vec apex(k, 0.0);
        apex[k - 1] = static_cast<double>(k);
        next.push_back(std::move(apex));
        verts = std::move(next);
    }
    return BodySpec(Simplex{std::move(verts)});
}

bool ballpair_predicate(const BallPair& bp, int d) {
    if (d < 1 || static_cast<int>(bp.x.size()) != d || static_cast<int>(bp.y.size()) != d)
        throw DimensionMismatch("ballpair_predicate: dimension mismatch");
    if (!(bp.c1 > 0.0) || !(bp.c2 > 0.0)) throw DomainError("ballpair: radii must be positive");
    const double shift = norm2(sub(bp.y, bp.x));
    const double threshold = std::sqrt(shift * shift + bp.c1 * bp.c1 * (d - 1.0) * (d - 1.0)) + bp.c1;
    return bp.c2 >= threshold;
}

BodySpec simplex_between_balls(const BallPair& bp, int d) {
    if (!ballpair_predicate(bp, d))
        throw InfeasiblePair("simplex_between_balls: ball pair fails the nesting inequality");
    if (d == 1) return BodySpec(Simplex{{{bp.x[0] - bp.c1}, {bp.x[0] + bp.c1}}});

    const Vec diff = sub(bp.y, bp.x);
    const double a = norm2(diff) / bp.c1;
    const double c = bp.c2 / bp.c1;

    // normalized configuration: unit ball at 0, outer c-ball at (0,..,0,a)
    const double r = (d - 1.0) * simplex_base_ratio(a + c);
    const BodySpec base = unit_simplex_circumscribed(d - 1);
    std::vector<Vec> verts;
    for (const auto& w : base.get<Simplex>()->vertices) {
        Vec v(d);
        for (int i = 0; i < d - 1; ++i) v[i] = (r / (d - 1.0)) * w[i];
        v[d - 1] = -1.0;
        verts.push_back(std::move(v));
    }
    Vec apex(d, 0.0);
    apex[d - 1] = a + c;
    verts.push_back(std::move(apex));

    // orthogonal map sending e_d to (y-x)/||y-x||, as a Householder reflection
    std::vector<Vec> rot(d, Vec(d, 0.0));
    for (int i = 0; i < d; ++i) rot[i][i] = 1.0;
    if (a > 0.0) {
        Vec u = diff;
        const double len = norm2(u);
        for (auto& e : u) e /= len;
        Vec w(d);
        for (int i = 0; i < d; ++i) w[i] = (i == d - 1 ? 1.0 : 0.0) - u[i];
        const double wn2 = dot(w, w);
        if (wn2 > 1e-24)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) rot[i][j] -= 2.0 * w[i] * w[j] / wn2;
    }
    for (auto& v : verts) {
        Vec world(d, 0.0);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) world[i] += rot[i][j] * v[j];
            world[i] = bp.x[i] + bp.c1 * world[i];
        }
        v = std::move(world);
    }
    BodySpec out(Simplex{std::move(verts)});

    // self-check both containments in world coordinates
    const BodySpec outer(LpBall{2.0, d, bp.y, bp.c2});
    for (const auto& v : out.get<Simplex>()->vertices) {
        const double m = point_membership(outer, v).margin;
        if (m > 1e-9)
            throw SelfCheckFailure("simplex_between_balls: vertex escapes the outer ball", m);
    }
    for (const auto& f : body_facets(out)) {
        const double inner_support = dot(f.normal, bp.x) + bp.c1;  // unit facet normals
        if (inner_support > f.offset + 1e-9)
            throw SelfCheckFailure("simplex_between_balls: inner ball escapes a facet",
                                   inner_support - f.offset);
    }
    return out;
}

double banach_mazur_lp_bound(double p, double q, int d) {
    check_p(p);
    check_p(q);
    if (d < 1) throw DomainError("banach_mazur_lp_bound: d >= 1");
    const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
    const double iq = std::isinf(q) ? 0.0 : 1.0 / q;
    return std::pow(static_cast<double>(d), std::abs(ip - iq));
}

}  // namespace dilatekit::bodies
