#include "painleve/serialize.hpp"

#include <sstream>

namespace painleve {

Json scalar_to_json(const Scalar& s) {
    Json j;
    switch (s.kind()) {
        case ScalarKind::ExactRational:
            j["kind"] = "rational";
            j["num"] = s.rational().num().get_str();
            j["den"] = s.rational().den().get_str();
            break;
        case ScalarKind::InexactReal:
            j["kind"] = "real";
            j["re"] = s.real().str();
            j["bits"] = s.precision();
            break;
        case ScalarKind::InexactComplex:
            j["kind"] = "complex";
            j["re"] = s.complex().re.str();
            j["im"] = s.complex().im.str();
            j["bits"] = s.precision();
            break;
    }
    return j;
}

std::string scalar_to_text(const Scalar& s) {
    if (s.is_exact()) return s.rational().str();
    return s.str();
}

namespace {

std::string traj_cell(const TrajValue& v, bool reciprocal) {
    if (v.infinite) return reciprocal ? "0" : "inf";
    if (reciprocal) return scalar_to_text(v.v.inverse());
    return scalar_to_text(v.v);
}

bool k_column(MapId m) { return m == MapId::Qp1 || m == MapId::Qp1Auto; }

}  // namespace

std::string trajectory_to_csv(const Trajectory& t) {
    std::ostringstream os;
    os << "n,chart,coord1,coord2";
    if (k_column(t.map)) os << ",K";
    os << "\n";
    for (size_t i = 0; i < t.points.size(); ++i) {
        const auto& pt = t.points[i];
        ChartKind chart = ChartKind::Affine;
        std::string c1, c2;
        if (i == 0) {
            chart = pt.w.infinite ? ChartKind::RecipX : ChartKind::Affine;
            c1 = traj_cell(pt.w, pt.w.infinite);
            c2 = "";
        } else {
            const auto& prev = t.points[i - 1].w;
            if (!pt.w.infinite && !prev.infinite)
                chart = ChartKind::Affine;
            else if (pt.w.infinite && !prev.infinite)
                chart = ChartKind::RecipX;
            else if (!pt.w.infinite && prev.infinite)
                chart = ChartKind::RecipY;
            else
                chart = ChartKind::RecipXY;
            c1 = traj_cell(pt.w, pt.w.infinite);
            c2 = traj_cell(prev, prev.infinite);
        }
        os << pt.n << "," << chart_name(chart) << "," << c1 << "," << c2;
        if (k_column(t.map)) {
            std::string kcell;
            if (i > 0) {
                const auto& prev = t.points[i - 1].w;
                if (!pt.w.infinite && !prev.infinite && !pt.w.v.is_zero() && !prev.v.is_zero())
                    kcell = scalar_to_text(K_invariant(pt.w.v, prev.v));
            }
            os << "," << kcell;
        }
        os << "\n";
    }
    return os.str();
}

Json trajectory_to_json(const Trajectory& t) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["map"] = map_name(t.map);
    Json params = Json::object();
    for (const auto& [k, v] : t.params_snapshot) params[k] = v;
    j["params"] = params;
    Json pts = Json::array();
    for (size_t i = 0; i < t.points.size(); ++i) {
        const auto& pt = t.points[i];
        Json e;
        e["n"] = pt.n;
        if (pt.w.infinite)
            e["w"] = "inf";
        else
            e["w"] = scalar_to_json(pt.w.v);
        if (i > 0 && k_column(t.map)) {
            const auto& prev = t.points[i - 1].w;
            if (!pt.w.infinite && !prev.infinite && !pt.w.v.is_zero() && !prev.v.is_zero())
                e["K"] = scalar_to_text(K_invariant(pt.w.v, prev.v));
        }
        pts.push_back(std::move(e));
    }
    j["points"] = pts;
    Json switches = Json::array();
    for (const auto& s : t.chart_switches)
        switches.push_back({{"n", s.n}, {"from", s.from}, {"to", s.to}});
    j["chart_switches"] = switches;
    if (t.diagnostic) j["diagnostic"] = {{"n", t.diagnostic->n}, {"reason", t.diagnostic->reason}};
    return j;
}

std::string grid_to_csv(const ContourGrid& g) {
    std::ostringstream os;
    os << "x,y,K\n";
    for (size_t i = 0; i < g.xs.size(); ++i)
        for (size_t j = 0; j < g.ys.size(); ++j)
            os << scalar_to_text(g.xs[i]) << "," << scalar_to_text(g.ys[j]) << ","
               << scalar_to_text(g.K[i][j]) << "\n";
    return os.str();
}

Json grid_to_json(const ContourGrid& g) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    Json xs = Json::array(), ys = Json::array(), rows = Json::array();
    for (const auto& x : g.xs) xs.push_back(scalar_to_text(x));
    for (const auto& y : g.ys) ys.push_back(scalar_to_text(y));
    for (const auto& row : g.K) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(scalar_to_text(v));
        rows.push_back(std::move(r));
    }
    j["x"] = xs;
    j["y"] = ys;
    j["K"] = rows;
    return j;
}

std::string ode_trajectory_to_csv(const ODETrajectory& t) {
    std::ostringstream os;
    os << "t";
    size_t dim = t.samples.empty() ? 0 : t.samples.front().y.size();
    for (size_t i = 0; i < dim; ++i) os << ",y" << i;
    os << ",err,event\n";
    for (const auto& s : t.samples) {
        os << s.t.str();
        for (const auto& yi : s.y) os << "," << yi.str();
        os << "," << s.err.str(6) << "," << (s.pole_event ? "pole" : "") << "\n";
    }
    return os.str();
}

Json ode_trajectory_to_json(const ODETrajectory& t) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["pole_flagged"] = t.pole_flagged;
    j["accepted"] = t.accepted;
    j["rejected"] = t.rejected;
    Json samples = Json::array();
    for (const auto& s : t.samples) {
        Json e;
        e["t"] = s.t.str();
        Json y = Json::array();
        for (const auto& yi : s.y) y.push_back(yi.str());
        e["y"] = y;
        e["err"] = s.err.str(6);
        if (s.pole_event) e["event"] = "pole";
        samples.push_back(std::move(e));
    }
    j["samples"] = samples;
    return j;
}

Json resolution_to_json(const ResolutionRecord& rec) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["resolved"] = rec.resolved;
    if (!rec.flag.empty()) j["flag"] = rec.flag;
    j["blowup_count"] = rec.blowups.size();
    Json blowups = Json::array();
    for (const auto& b : rec.blowups) {
        Json e;
        e["index"] = b.index;
        e["center"] = b.center_address;
        e["exceptional"] = rec.curve(b.exceptional).label;
        Json through = Json::array();
        for (CurveId c : b.through) through.push_back(rec.curve(c).label);
        e["through"] = through;
        blowups.push_back(std::move(e));
    }
    j["blowups"] = blowups;
    Json curves = Json::array();
    for (CurveId id : rec.canonical_order()) {
        const CurveState& c = rec.curve(id);
        curves.push_back({{"label", c.label},
                          {"self_intersection", c.self_int},
                          {"exceptional", c.exceptional},
                          {"address", c.address}});
    }
    j["curves"] = curves;
    j["intersection_matrix"] = rec.intersection_matrix();
    if (!rec.nonrational.empty()) {
        Json nr = Json::array();
        for (const auto& r : rec.nonrational)
            nr.push_back({{"chart", r.chart},
                          {"degree", r.degree},
                          {"certified", r.certified},
                          {"detail", r.detail}});
        j["nonrational"] = nr;
    }
    return j;
}

}  // namespace painleve
