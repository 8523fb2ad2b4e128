#include "painleve/ivs.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "painleve/errors.hpp"

namespace painleve {

std::string PointRef::key() const {
    return std::to_string(chart) + "|" + x.str() + "|" + y.str();
}

namespace {

std::string coord_str(const Rational& x, const Rational& y) {
    return "(" + x.str() + "," + y.str() + ")";
}

// Absolute position on P1 x P1: each factor is a finite rational or infinity.
struct ExtQ {
    bool inf = false;
    Rational v;
};

PointRef root_canonical_p1xp1(const Pencil& p, int root_index, const Rational& x, const Rational& y) {
    ExtQ ax, ay;
    switch (root_index) {
        case 0: ax = {false, x}; ay = {false, y}; break;
        case 1: ax = x.is_zero() ? ExtQ{true, {}} : ExtQ{false, x.inverse()}; ay = {false, y}; break;
        case 2: ax = {false, x}; ay = y.is_zero() ? ExtQ{true, {}} : ExtQ{false, y.inverse()}; break;
        default:
            ax = x.is_zero() ? ExtQ{true, {}} : ExtQ{false, x.inverse()};
            ay = y.is_zero() ? ExtQ{true, {}} : ExtQ{false, y.inverse()};
            break;
    }
    if (!ax.inf && !ay.inf) return {p.charts[0].id, ax.v, ay.v};
    if (ax.inf && !ay.inf) return {p.charts[1].id, Rational(0), ay.v};
    if (!ax.inf && ay.inf) return {p.charts[2].id, ax.v, Rational(0)};
    return {p.charts[3].id, Rational(0), Rational(0)};
}

PointRef root_canonical_p2(const Pencil& p, int root_index, const Rational& x, const Rational& y) {
    Rational u, v, w;
    switch (root_index) {
        case 0: u = x; v = y; w = Rational(1); break;
        case 1: u = x; v = Rational(1); w = y; break;
        default: u = Rational(1); v = x; w = y; break;
    }
    if (!w.is_zero()) return {p.charts[0].id, u / w, v / w};
    if (!v.is_zero()) return {p.charts[1].id, u / v, w / v};
    return {p.charts[2].id, v / u, w / u};
}

}  // namespace

PointRef canonical_point(const Pencil& p, const PointRef& q) {
    int chart = q.chart;
    Rational x = q.x, y = q.y;
    while (true) {
        const Chart& c = p.chart(chart);
        if (c.parent < 0) {
            return p.ambient == Ambient::P1xP1 ? root_canonical_p1xp1(p, c.root_index, x, y)
                                               : root_canonical_p2(p, c.root_index, x, y);
        }
        if (c.branch == 0) {
            if (y.is_zero()) return {chart, x, Rational(0)};  // on the exceptional line
            Rational nx = c.cx + x * y, ny = c.cy + y;
            chart = c.parent;
            x = nx;
            y = ny;
        } else {
            if (x.is_zero()) {
                if (!y.is_zero()) return {c.sibling, y.inverse(), Rational(0)};
                return {chart, Rational(0), Rational(0)};  // corner seen only here
            }
            Rational nx = c.cx + x, ny = c.cy + x * y;
            chart = c.parent;
            x = nx;
            y = ny;
        }
    }
}

namespace {

void remove_pair_content(BivarPoly& A, BivarPoly& B) {
    int mx = std::min(A.min_exp_x(), B.min_exp_x());
    int my = std::min(A.min_exp_y(), B.min_exp_y());
    if (mx > 0 || my > 0) {
        A = A.exact_divide_monomial(mx, my);
        B = B.exact_divide_monomial(mx, my);
    }
}

CurveId add_curve(Pencil& p, const std::string& label, bool exceptional) {
    CurveId id = static_cast<CurveId>(p.registry.size());
    p.registry.push_back({id, label, exceptional});
    return id;
}

}  // namespace

Pencil make_p1xp1_pencil(const BivarPoly& A, const BivarPoly& B) {
    if (A.is_zero() || B.is_zero()) throw DomainError("pencil members must be nonzero");
    Pencil p;
    p.ambient = Ambient::P1xP1;
    int dX = std::max(A.degree_x(), B.degree_x());
    int dY = std::max(A.degree_y(), B.degree_y());
    const char* names[4] = {"xy", "Xy", "xY", "XY"};
    for (int i = 0; i < 4; ++i) {
        Chart c;
        c.id = i;
        c.root_index = i;
        c.name = names[i];
        c.address = std::string("P1xP1:") + names[i];
        c.A = A;
        c.B = B;
        if (i == 1 || i == 3) {
            c.A = c.A.reciprocal_x(dX);
            c.B = c.B.reciprocal_x(dX);
        }
        if (i == 2 || i == 3) {
            c.A = c.A.reciprocal_y(dY);
            c.B = c.B.reciprocal_y(dY);
        }
        remove_pair_content(c.A, c.B);
        p.charts.push_back(std::move(c));
    }
    CurveId lx = add_curve(p, "Lx", false);
    CurveId ly = add_curve(p, "Ly", false);
    CurveId lX = add_curve(p, "LX", false);
    CurveId lY = add_curve(p, "LY", false);
    p.charts[0].curves[lx] = BivarPoly::var_x();
    p.charts[2].curves[lx] = BivarPoly::var_x();
    p.charts[1].curves[lX] = BivarPoly::var_x();
    p.charts[3].curves[lX] = BivarPoly::var_x();
    p.charts[0].curves[ly] = BivarPoly::var_y();
    p.charts[1].curves[ly] = BivarPoly::var_y();
    p.charts[2].curves[lY] = BivarPoly::var_y();
    p.charts[3].curves[lY] = BivarPoly::var_y();
    return p;
}

namespace {

BivarPoly dehomogenize(const TrivarPoly& F, int chart) {
    // chart 0: (x,y) = (u,v), w = 1; chart 1: (x,y) = (u,w), v = 1;
    // chart 2: (x,y) = (v,w), u = 1
    BivarPoly out;
    for (const auto& [e, c] : F) {
        int dx = 0, dy = 0;
        switch (chart) {
            case 0: dx = e[0]; dy = e[1]; break;
            case 1: dx = e[0]; dy = e[2]; break;
            default: dx = e[1]; dy = e[2]; break;
        }
        out.set_coeff(dx, dy, out.coeff(dx, dy) + c);
    }
    return out;
}

int trivar_degree(const TrivarPoly& F) {
    int d = -1;
    for (const auto& [e, c] : F)
        if (!c.is_zero()) {
            int t = e[0] + e[1] + e[2];
            if (d >= 0 && t != d) throw DomainError("pencil member is not homogeneous");
            d = t;
        }
    return d;
}

}  // namespace

Pencil make_p2_pencil(const TrivarPoly& A, const TrivarPoly& B) {
    int da = trivar_degree(A), db = trivar_degree(B);
    if (da < 0 || db < 0) throw DomainError("pencil members must be nonzero");
    if (da != db) throw DomainError("pencil members must have equal homogeneous degree");
    Pencil p;
    p.ambient = Ambient::P2;
    const char* names[3] = {"w1", "v1", "u1"};
    for (int i = 0; i < 3; ++i) {
        Chart c;
        c.id = i;
        c.root_index = i;
        c.name = names[i];
        c.address = std::string("P2:") + names[i];
        c.A = dehomogenize(A, i);
        c.B = dehomogenize(B, i);
        remove_pair_content(c.A, c.B);
        p.charts.push_back(std::move(c));
    }
    CurveId hu = add_curve(p, "Hu", false);
    CurveId hv = add_curve(p, "Hv", false);
    CurveId hw = add_curve(p, "Hw", false);
    p.charts[0].curves[hu] = BivarPoly::var_x();
    p.charts[1].curves[hu] = BivarPoly::var_x();
    p.charts[0].curves[hv] = BivarPoly::var_y();
    p.charts[2].curves[hv] = BivarPoly::var_x();
    p.charts[1].curves[hw] = BivarPoly::var_y();
    p.charts[2].curves[hw] = BivarPoly::var_y();
    return p;
}

Pencil weierstrass_pencil(const Rational& g2) {
    TrivarPoly A, B;
    A[{0, 2, 1}] = Rational(1);    // w v^2
    A[{3, 0, 0}] = Rational(-4);   // -4 u^3
    A[{1, 0, 2}] = -g2;            // -g2 u w^2
    B[{0, 0, 3}] = Rational(1);    // w^3
    return make_p2_pencil(A, B);
}

Pencil biquadratic_pencil() {
    BivarPoly A = parse_bivar("x^2*y^2 + x + y");
    BivarPoly B = parse_bivar("x*y");
    return make_p1xp1_pencil(A, B);
}

ResolutionRecord initial_record(const Pencil& p) {
    ResolutionRecord rec;
    for (const auto& c : p.registry) {
        int self = 0;
        if (p.ambient == Ambient::P2) self = 1;
        rec.curves.push_back({c.id, c.label, c.exceptional, c.label, self});
    }
    if (p.ambient == Ambient::P1xP1) {
        // fibres of opposite rulings meet once: Lx,LX vs Ly,LY
        rec.pair_int[{0, 1}] = 1;  // Lx.Ly
        rec.pair_int[{0, 3}] = 1;  // Lx.LY
        rec.pair_int[{1, 2}] = 1;  // Ly.LX
        rec.pair_int[{2, 3}] = 1;  // LX.LY
    } else {
        rec.pair_int[{0, 1}] = 1;
        rec.pair_int[{0, 2}] = 1;
        rec.pair_int[{1, 2}] = 1;
    }
    return rec;
}

int ResolutionRecord::pair(CurveId a, CurveId b) const {
    if (a == b) return curve(a).self_int;
    auto it = pair_int.find({std::min(a, b), std::max(a, b)});
    return it == pair_int.end() ? 0 : it->second;
}

const CurveState& ResolutionRecord::curve(CurveId id) const {
    for (const auto& c : curves)
        if (c.id == id) return c;
    throw DomainError("unknown curve id");
}

std::vector<CurveId> ResolutionRecord::canonical_order() const {
    std::vector<const CurveState*> init, exc;
    for (const auto& c : curves) (c.exceptional ? exc : init).push_back(&c);
    std::sort(exc.begin(), exc.end(),
              [](const CurveState* a, const CurveState* b) { return a->address < b->address; });
    std::vector<CurveId> out;
    for (const auto* c : init) out.push_back(c->id);
    for (const auto* c : exc) out.push_back(c->id);
    return out;
}

std::vector<std::vector<int>> ResolutionRecord::intersection_matrix() const {
    std::vector<CurveId> order = canonical_order();
    std::vector<std::vector<int>> m(order.size(), std::vector<int>(order.size(), 0));
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = 0; j < order.size(); ++j) m[i][j] = pair(order[i], order[j]);
    return m;
}

namespace {

using ChartScan = ChartScanResult;

// Common rational zeros of (A, B) within one chart, with certified reports
// of nonrational residuals.
ChartScan scan_chart(const Chart& c) {
    ChartScan out;
    const BivarPoly &A = c.A, &B = c.B;
    if (A.is_zero() || B.is_zero()) throw InternalError("pencil chart with zero member");
    bool a_const = A.total_degree() == 0, b_const = B.total_degree() == 0;
    if (a_const || b_const) return out;  // nonzero constant never vanishes

    int dyA = A.degree_y(), dyB = B.degree_y();
    int dxA = A.degree_x(), dxB = B.degree_x();

    auto scan_y_line = [&](const Rational& x0) {
        UnivarPoly ay = A.at_x(x0), by = B.at_x(x0);
        if (ay.is_zero() && by.is_zero())
            throw InternalError("pencil members share the line x = " + x0.str());
        UnivarPoly g;
        if (ay.is_zero())
            g = by;
        else if (by.is_zero())
            g = ay;
        else
            g = UnivarPoly::gcd(ay, by);
        if (g.degree() <= 0) return;  // no common y-root at this x
        RationalRoots roots = rational_roots(g);
        for (const auto& y0 : roots.roots) out.points.emplace_back(x0, y0);
        if (roots.residual_degree > 0)
            out.nonrational.push_back({c.id, roots.residual_degree, true,
                                       "nonrational common zeros on x = " + x0.str() +
                                           " (factor degree " + std::to_string(roots.residual_degree) + ")"});
    };

    if (dyA == 0 && dyB == 0) {
        // both depend on x only; a shared root would be a shared line
        UnivarPoly g = UnivarPoly::gcd(A.at_y(Rational(0)), B.at_y(Rational(0)));
        if (g.degree() > 0) throw InternalError("pencil members share a vertical-line factor");
        return out;
    }
    if (dxA == 0 && dxB == 0) {
        UnivarPoly g = UnivarPoly::gcd(A.at_x(Rational(0)), B.at_x(Rational(0)));
        if (g.degree() > 0) throw InternalError("pencil members share a horizontal-line factor");
        return out;
    }

    if (dyA == 0 || dyB == 0) {
        // one member depends on x only: its roots give candidate lines
        const BivarPoly& lines = dyA == 0 ? A : B;
        RationalRoots xr = rational_roots(lines.at_y(Rational(0)));
        for (const auto& x0 : xr.roots) scan_y_line(x0);
        if (xr.residual_degree > 0)
            out.nonrational.push_back({c.id, xr.residual_degree, false,
                                       "unverified nonrational candidates (x-factor degree " +
                                           std::to_string(xr.residual_degree) + ")"});
        return out;
    }

    UnivarPoly R = resultant_y(A, B);
    if (R.is_zero()) throw InternalError("vanishing resultant: pencil members share a factor");
    if (R.degree() == 0) return out;
    RationalRoots xr = rational_roots(R);
    std::vector<Rational> xs = xr.roots;
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const auto& x0 : xs) scan_y_line(x0);
    if (xr.residual_degree > 0)
        out.nonrational.push_back({c.id, xr.residual_degree, false,
                                   "unverified nonrational candidates (resultant factor degree " +
                                       std::to_string(xr.residual_degree) + ")"});
    return out;
}

int pencil_multiplicity(const Chart& c, const Rational& x, const Rational& y) {
    int ma = c.A.translate(x, y).origin_multiplicity();
    int mb = c.B.translate(x, y).origin_multiplicity();
    return std::min(ma, mb);
}

CurveId exceptional_line_through(const Pencil& p, const PointRef& canon) {
    const Chart& c = p.chart(canon.chart);
    if (c.parent < 0) return -1;
    // canonical on-e points: branch 0 with y = 0, or the branch-1 corner
    bool on_e = (c.branch == 0 && canon.y.is_zero()) || (c.branch == 1 && canon.x.is_zero());
    if (!on_e) return -1;
    for (const auto& [cid, F] : c.curves) {
        if (!p.registry[cid].exceptional) continue;
        bool is_coord = (c.branch == 0 && F == BivarPoly::var_y()) ||
                        (c.branch == 1 && F == BivarPoly::var_x());
        if (is_coord) return cid;
    }
    return -1;
}

}  // namespace

BasePointScan base_points(const Pencil& p) {
    BasePointScan scan;
    std::set<std::string> seen;
    for (const Chart& c : p.charts) {
        auto cached = p.scan_cache.find(c.id);
        if (cached == p.scan_cache.end())
            cached = p.scan_cache.emplace(c.id, scan_chart(c)).first;
        const ChartScan& cs = cached->second;
        for (const auto& nr : cs.nonrational) scan.nonrational.push_back(nr);
        for (const auto& [x, y] : cs.points) {
            PointRef canon = canonical_point(p, {c.id, x, y});
            std::string key = canon.key();
            if (p.blown_up.count(key) || seen.count(key)) continue;
            seen.insert(key);
            const Chart& host = p.chart(canon.chart);
            BasePoint bp;
            bp.at = canon;
            bp.multiplicity = pencil_multiplicity(host, canon.x, canon.y);
            bp.parent_line = exceptional_line_through(p, canon);
            scan.points.push_back(std::move(bp));
        }
    }
    std::sort(scan.points.begin(), scan.points.end(), [&](const BasePoint& a, const BasePoint& b) {
        return a.at.key() < b.at.key();
    });
    return scan;
}

void blow_up(Pencil& p, ResolutionRecord& rec, const BasePoint& target) {
    PointRef canon = canonical_point(p, target.at);
    std::string center_key = canon.key();
    if (p.blown_up.count(center_key)) throw DomainError("center already blown up");
    const Chart host = p.chart(canon.chart);  // by value: charts reallocates below
    if (!host.A.eval(canon.x, canon.y).is_zero() || !host.B.eval(canon.x, canon.y).is_zero())
        throw DomainError("blow-up target is not a base point");

    std::string center_address = host.address + "@" + coord_str(canon.x, canon.y);

    // curves through the center, with multiplicities
    std::vector<std::pair<CurveId, int>> through;
    for (const auto& [cid, F] : host.curves) {
        if (!F.eval(canon.x, canon.y).is_zero()) continue;
        int m = F.translate(canon.x, canon.y).origin_multiplicity();
        through.emplace_back(cid, m);
    }

    // record: new exceptional curve at -1, decrements, intersection rows
    CurveId eid = add_curve(p, "E" + std::to_string(rec.blowups.size() + 1), true);
    rec.curves.push_back({eid, p.registry[eid].label, true, center_address, -1});
    for (const auto& [cid, m] : through) {
        for (auto& cs : rec.curves)
            if (cs.id == cid) cs.self_int -= m * m;
        rec.pair_int[{std::min(eid, cid), std::max(eid, cid)}] = m;
    }
    for (size_t i = 0; i < through.size(); ++i)
        for (size_t j = i + 1; j < through.size(); ++j) {
            auto key = std::make_pair(std::min(through[i].first, through[j].first),
                                      std::max(through[i].first, through[j].first));
            rec.pair_int[key] = rec.pair(key.first, key.second) - through[i].second * through[j].second;
        }

    // two new charts
    BivarPoly At = host.A.translate(canon.x, canon.y);
    BivarPoly Bt = host.B.translate(canon.x, canon.y);
    std::array<int, 2> created{-1, -1};
    for (int branch = 0; branch < 2; ++branch) {
        Chart nc;
        nc.id = static_cast<int>(p.charts.size());
        nc.parent = host.id;
        nc.branch = branch;
        nc.cx = canon.x;
        nc.cy = canon.y;
        nc.depth = host.depth + 1;
        nc.name = host.name + (branch == 0 ? ".a" : ".b");
        nc.address = center_address + (branch == 0 ? "a" : "b");
        auto pull = [&](const BivarPoly& f) {
            return branch == 0 ? f.subs_x_times_y() : f.subs_y_times_x();
        };
        auto valuation = [&](const BivarPoly& f) {
            return branch == 0 ? f.min_exp_y() : f.min_exp_x();
        };
        auto strip = [&](const BivarPoly& f, int k) {
            return branch == 0 ? f.exact_divide_monomial(0, k) : f.exact_divide_monomial(k, 0);
        };
        BivarPoly Ab = pull(At), Bb = pull(Bt);
        int k = std::min(valuation(Ab), valuation(Bb));
        nc.A = strip(Ab, k);
        nc.B = strip(Bb, k);
        for (const auto& [cid, F] : host.curves) {
            BivarPoly Fb = pull(F.translate(canon.x, canon.y));
            Fb = strip(Fb, valuation(Fb));
            if (Fb.total_degree() >= 1) nc.curves[cid] = std::move(Fb);
        }
        nc.curves[eid] = branch == 0 ? BivarPoly::var_y() : BivarPoly::var_x();
        created[branch] = nc.id;
        p.charts.push_back(std::move(nc));
    }
    p.charts[created[0]].sibling = created[1];
    p.charts[created[1]].sibling = created[0];
    p.blown_up.insert(center_key);

    BlowupEntry entry;
    entry.index = static_cast<int>(rec.blowups.size()) + 1;
    entry.center_address = center_address;
    entry.exceptional = eid;
    for (const auto& [cid, m] : through) entry.through.push_back(cid);
    entry.charts_created = created;
    rec.blowups.push_back(std::move(entry));
}

ResolutionRecord resolve(Pencil& p, int max_blowups, SiblingOrder order) {
    if (max_blowups < 1) throw DomainError("resolve requires max_blowups >= 1");
    ResolutionRecord rec = initial_record(p);
    while (true) {
        BasePointScan scan = base_points(p);
        if (!scan.nonrational.empty()) {
            rec.nonrational = scan.nonrational;
            rec.flag = "unsupported-nonrational";
            rec.resolved = false;
            return rec;
        }
        if (scan.points.empty()) {
            rec.resolved = true;
            return rec;
        }
        if (static_cast<int>(rec.blowups.size()) >= max_blowups) {
            rec.flag = "budget-exhausted";
            rec.resolved = false;
            return rec;
        }
        // infinitely-near chains first: deepest chart wins; the sibling
        // permutation only reorders same-depth candidates
        std::sort(scan.points.begin(), scan.points.end(), [&](const BasePoint& a, const BasePoint& b) {
            int da = p.chart(a.at.chart).depth, db = p.chart(b.at.chart).depth;
            if (da != db) return da > db;
            return a.at.key() < b.at.key();
        });
        int top_depth = p.chart(scan.points.front().at.chart).depth;
        size_t group = 0;
        while (group < scan.points.size() && p.chart(scan.points[group].at.chart).depth == top_depth)
            ++group;
        size_t pick = 0;
        if (order == SiblingOrder::Reversed)
            pick = group - 1;
        else if (order == SiblingOrder::Rotated)
            pick = group > 1 ? 1 : 0;
        blow_up(p, rec, scan.points[pick]);
    }
}

namespace {

bool graphs_isomorphic(int n, const std::vector<std::pair<int, int>>& e1,
                       const std::vector<std::pair<int, int>>& e2) {
    if (e1.size() != e2.size()) return false;
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false)), b = std::vector<std::vector<bool>>(n, std::vector<bool>(n, false));
    auto fill = [n](std::vector<std::vector<bool>>& m, const std::vector<std::pair<int, int>>& es) {
        for (auto [u, v] : es) {
            m[u][v] = true;
            m[v][u] = true;
        }
    };
    fill(a, e1);
    fill(b, e2);
    std::vector<int> da(n, 0), db(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            da[i] += a[i][j];
            db[i] += b[i][j];
        }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1), used(n, 0);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j] || da[i] != db[j]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k)
                if (a[i][k] != b[j][map[k]]) ok = false;
            if (!ok) continue;
            map[i] = j;
            used[j] = 1;
            if (place(i + 1)) return true;
            used[j] = 0;
            map[i] = -1;
        }
        return false;
    };
    return place(0);
}

// Stored affine templates, as edge lists on 0..n-1.
std::vector<std::pair<int, int>> template_cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return e;
}

std::vector<std::pair<int, int>> template_star_arms(const std::vector<int>& arms) {
    // node 0 is the branch point; each arm is a path hanging off it
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int len : arms) {
        int prev = 0;
        for (int k = 0; k < len; ++k) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return e;
}

}  // namespace

DynkinGraph classify_graph(std::vector<std::string> nodes, std::vector<std::pair<int, int>> edges) {
    DynkinGraph g{std::move(nodes), std::move(edges), "unclassified"};
    int n = static_cast<int>(g.nodes.size());
    if (n == 0) {
        g.classification = "empty";
        return g;
    }
    struct Template {
        std::string name;
        int n;
        std::vector<std::pair<int, int>> edges;
    };
    std::vector<Template> templates;
    templates.push_back({"E8(1)", 9, template_star_arms({1, 2, 5})});
    templates.push_back({"E7(1)", 8, template_star_arms({1, 3, 3})});
    templates.push_back({"E6(1)", 7, template_star_arms({2, 2, 2})});
    templates.push_back({"D4(1)", 5, template_star_arms({1, 1, 1, 1})});
    if (n >= 2) templates.push_back({"A" + std::to_string(n - 1) + "(1)", n, template_cycle(n)});
    for (const auto& t : templates) {
        if (t.n != n) continue;
        if (graphs_isomorphic(n, g.edges, t.edges)) {
            g.classification = t.name;
            return g;
        }
    }
    return g;
}

DynkinGraph dynkin(const ResolutionRecord& rec) {
    std::vector<CurveId> order = rec.canonical_order();
    std::vector<CurveId> minus2;
    for (CurveId id : order)
        if (rec.curve(id).self_int == -2) minus2.push_back(id);
    std::vector<std::string> labels;
    for (CurveId id : minus2) labels.push_back(rec.curve(id).label);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < minus2.size(); ++i)
        for (size_t j = i + 1; j < minus2.size(); ++j)
            if (rec.pair(minus2[i], minus2[j]) > 0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return classify_graph(std::move(labels), std::move(edges));
}

std::string to_dot(const DynkinGraph& g) {
    std::ostringstream os;
    os << "graph dynkin {\n";
    os << "  label=\"" << g.classification << "\";\n";
    for (const auto& n : g.nodes) os << "  \"" << n << "\";\n";
    for (const auto& [i, j] : g.edges) os << "  \"" << g.nodes[i] << "\" -- \"" << g.nodes[j] << "\";\n";
    os << "}\n";
    return os.str();
}

std::pair<Scalar, Scalar> Qp1BasePointChart::embed(const Scalar& u, const Scalar& Y) const {
    return {center_x + u * Y, Y};
}

std::pair<Scalar, Scalar> Qp1BasePointChart::lift_forward(const Scalar& u) const {
    return {z * z * u, center_x};
}

Qp1BasePointChart qp1_basepoint_chart(const Scalar& z) {
    if (z.is_zero()) throw DomainError("qp1 base point chart requires z != 0");
    return {z, z.inverse()};
}

}  // namespace painleve
