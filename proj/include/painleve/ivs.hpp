#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "painleve/bivar_poly.hpp"
#include "painleve/scalar.hpp"

namespace painleve {

enum class Ambient { P1xP1, P2 };

using CurveId = int;

/// One affine chart of the evolving surface. Root charts cover the ambient
/// space; blow-up charts attach to a parent chart at a center, in one of the
/// two standard branches (x, y) = center + (x1*y1, y1) or center + (x2, x2*y2).
struct Chart {
    int id = -1;
    int parent = -1;
    int branch = 0;     // 0: exceptional coord is y; 1: exceptional coord is x
    int sibling = -1;   // the other branch chart of the same blow-up
    int root_index = 0; // for root charts
    Rational cx, cy;    // center in parent coordinates
    int depth = 0;
    std::string name;
    std::string address;  // geometric, independent of processing order
    BivarPoly A, B;
    std::map<CurveId, BivarPoly> curves;
};

struct PointRef {
    int chart = -1;
    Rational x, y;

    std::string key() const;
};

struct PencilCurve {
    CurveId id;
    std::string label;
    bool exceptional;
};

struct NonrationalReport {
    int chart;
    int degree;
    bool certified;  // genuine nonrational common zeros vs unverified candidates
    std::string detail;
};

struct ChartScanResult {
    std::vector<std::pair<Rational, Rational>> points;
    std::vector<NonrationalReport> nonrational;
};

/// Pencil member(kappa) = A - kappa B carried across an atlas of charts,
/// with the strict transforms of the tracked curves.
struct Pencil {
    Ambient ambient;
    std::vector<Chart> charts;
    std::vector<PencilCurve> registry;
    std::set<std::string> blown_up;  // canonical keys of consumed centers
    // per-chart common-zero scans; a chart's pencil never changes once built
    mutable std::map<int, ChartScanResult> scan_cache;

    const Chart& chart(int id) const { return charts.at(id); }
};

/// Canonical representative of a surface point: deepest chart in which it
/// lies on the exceptional line (branch-0 preferred), else the first root
/// chart where it is visible.
PointRef canonical_point(const Pencil& p, const PointRef& q);

struct BasePoint {
    PointRef at;              // canonical
    int multiplicity;         // min of the two pencil multiplicities
    CurveId parent_line;      // exceptional line through it, or -1
};

struct BasePointScan {
    std::vector<BasePoint> points;
    std::vector<NonrationalReport> nonrational;
};

/// All unresolved common zeros of (A, B) across the atlas, deduplicated via
/// canonical representatives; rational points only, with a certified report
/// of nonrational residual factors.
BasePointScan base_points(const Pencil& p);

struct BlowupEntry {
    int index;  // 1-based
    std::string center_address;
    CurveId exceptional;
    std::vector<CurveId> through;  // curves passing through the center
    std::array<int, 2> charts_created;
};

struct CurveState {
    CurveId id;
    std::string label;
    bool exceptional;
    std::string address;  // birth center address for exceptional curves, else label
    int self_int;
};

struct ResolutionRecord {
    std::vector<CurveState> curves;
    std::map<std::pair<CurveId, CurveId>, int> pair_int;
    std::vector<BlowupEntry> blowups;
    bool resolved = false;
    std::string flag;  // "", "budget-exhausted", "unsupported-nonrational"
    std::vector<NonrationalReport> nonrational;

    int pair(CurveId a, CurveId b) const;
    const CurveState& curve(CurveId id) const;
    /// Curve ids in canonical (address) order: initial curves first.
    std::vector<CurveId> canonical_order() const;
    /// Symmetric matrix over canonical_order(), self-intersections on the
    /// diagonal.
    std::vector<std::vector<int>> intersection_matrix() const;
};

Pencil make_p1xp1_pencil(const BivarPoly& A, const BivarPoly& B);

/// Trivariate homogeneous polynomial, exponents (du, dv, dw).
using TrivarPoly = std::map<std::array<int, 3>, Rational>;

Pencil make_p2_pencil(const TrivarPoly& A, const TrivarPoly& B);

/// wv^2 - 4u^3 - g2 u w^2 (A) against w^3 (B); the Weierstrass cubic pencil
/// with g3 as the pencil parameter.
Pencil weierstrass_pencil(const Rational& g2);
/// x^2 y^2 + x + y (A) against xy (B); the biquadratic invariant pencil.
Pencil biquadratic_pencil();

/// Blows up the (rational, unresolved) target: two new charts, pencil pulled
/// back with the common exceptional power divided out exactly, record updated
/// (birth at -1, decrements, intersection rows).
void blow_up(Pencil& p, ResolutionRecord& rec, const BasePoint& target);

enum class SiblingOrder { Canonical, Reversed, Rotated };

/// Repeated base_points + blow_up, infinitely-near chains depth-first, until
/// no base points remain or the budget is exhausted. `order` permutes the
/// processing order among same-depth siblings (the final record must not
/// depend on it).
ResolutionRecord resolve(Pencil& p, int max_blowups, SiblingOrder order = SiblingOrder::Canonical);

ResolutionRecord initial_record(const Pencil& p);

struct DynkinGraph {
    std::vector<std::string> nodes;               // curve labels (-2 curves)
    std::vector<std::pair<int, int>> edges;       // indices into nodes
    std::string classification;                   // "E8(1)", "A2(1)", ..., "empty", "unclassified"
};

DynkinGraph dynkin(const ResolutionRecord& rec);
DynkinGraph classify_graph(std::vector<std::string> nodes, std::vector<std::pair<int, int>> edges);
std::string to_dot(const DynkinGraph& g);

/// Blow-up chart data at the qP1 base point b0 = (1/z, 0): coordinates
/// (u, Y) with x = 1/z + u Y, y = Y; on the exceptional line Y = 0 the
/// lifted forward map is (u, 0) -> (z^2 u, 1/z).
struct Qp1BasePointChart {
    Scalar z;
    Scalar center_x;  // 1/z

    std::pair<Scalar, Scalar> embed(const Scalar& u, const Scalar& Y) const;
    std::pair<Scalar, Scalar> lift_forward(const Scalar& u) const;
};

Qp1BasePointChart qp1_basepoint_chart(const Scalar& z);

}  // namespace painleve
