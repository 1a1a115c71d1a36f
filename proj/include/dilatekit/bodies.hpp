#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "dilatekit/cmat.hpp"
#include "dilatekit/errors.hpp"

// Scalar-level convex geometry: body descriptions, support functions,
// point membership, polar duals, and explicit simplex constructions.
namespace dilatekit::bodies {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct LpBall {
    double p;  // in [1, inf]
    int d;
    Vec center;  // size d
    double radius;
};

// B+_{p,d}: the lp unit ball intersected with the positive orthant.
struct PositiveLp {
    double p;
    int d;
};

// prod_j [-a_j, a_j]
struct Box {
    Vec a;
};

// conv(+-a_j e_j)
struct Diamond {
    Vec a;
};

// { x : A x <= b }
struct PolytopeH {
    std::vector<Vec> a;  // rows
    Vec b;
};

struct PolytopeV {
    std::vector<Vec> vertices;
};

// exactly d+1 affinely independent vertices in R^d
struct Simplex {
    std::vector<Vec> vertices;
};

class BodySpec {
public:
    using Variant = std::variant<LpBall, PositiveLp, Box, Diamond, PolytopeH, PolytopeV, Simplex>;

    explicit BodySpec(Variant v);  // validates invariants

    int dim() const { return dim_; }
    const Variant& v() const { return v_; }

    template <class T>
    const T* get() const {
        return std::get_if<T>(&v_);
    }
    std::string variant_name() const;

private:
    Variant v_;
    int dim_ = 0;
};

// Supporting halfspace <normal, x> <= offset; normals are unit-length for
// facet representations derived from vertex data.
struct Facet {
    Vec normal;
    double offset;
};

// Facet representation of a polytope body (box, diamond, simplex,
// polytope_h, polytope_v with d <= 3). Throws Unsupported otherwise.
std::vector<Facet> body_facets(const BodySpec& k);

// h_K(u) = sup_{x in K} <u, x>
double support_value(const BodySpec& k, const Vec& u);

struct PointReport {
    bool inside;
    double margin;  // max constraint violation; <= 0 means inside
};

PointReport point_membership(const BodySpec& k, const Vec& x, double tol = 0.0);

// Polar dual: polytope_v (origin strictly interior) -> polytope_h with
// rows = vertices, b = 1; polytope_h with b > 0 -> polytope_v with
// vertices = rows/b. Other variants are rejected.
BodySpec polar_dual(const BodySpec& k);

// sqrt((b+1)/(b-1)) for b > 1
double simplex_base_ratio(double b);

// The circumscribed simplex around the unit euclidean ball whose vertices
// all have norm d; base case d=1 is the interval [-1, 1].
BodySpec unit_simplex_circumscribed(int d);

struct BallPair {
    Vec x;
    double c1;
    Vec y;
    double c2;
};

// True iff c2 >= sqrt(||y-x||^2 + c1^2 (d-1)^2) + c1. Exact float
// comparison; callers add their own margins.
bool ballpair_predicate(const BallPair& bp, int d);

// A d-simplex nested between x + c1*B and y + c2*B. Requires the predicate;
// self-verifies both containments before returning.
BodySpec simplex_between_balls(const BallPair& bp, int d);

// d^{|1/p - 1/q|} with 1/inf = 0
double banach_mazur_lp_bound(double p, double q, int d);

// Conjugate exponent with the 1/inf = 0 convention.
double conjugate_exponent(double p);

// ||v||_p over [1, inf]
double lp_norm(const Vec& v, double p);

}  // namespace dilatekit::bodies
