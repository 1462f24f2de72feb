#include "qd/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace qd {

namespace {

std::string elem_name(const GroupPtr& g, int e) {
    if (!g->element_names().empty()) return g->element_names()[e];
    return std::to_string(e);
}

std::vector<int> one_line_from_cycles(int degree, const Json& cycles) {
    std::vector<int> perm(degree);
    for (int i = 0; i < degree; ++i) perm[i] = i + 1;
    if (!cycles.is_array()) throw std::invalid_argument("generator must be a cycle list");
    for (const auto& cyc : cycles) {
        if (!cyc.is_array() || cyc.empty())
            throw std::invalid_argument("cycle must be a nonempty list of points");
        std::vector<int> pts = cyc.get<std::vector<int>>();
        for (int p : pts)
            if (p < 1 || p > degree)
                throw std::invalid_argument("cycle point out of range");
        for (size_t i = 0; i < pts.size(); ++i)
            perm[pts[i] - 1] = pts[(i + 1) % pts.size()];
    }
    return perm;
}

Json label_json(const IrrepCatalog& cat, const SimpleLabel& l) {
    return Json{{"g", l.g},
                {"g_name", elem_name(cat.phi.target, l.g)},
                {"M", l.m},
                {"degree", l.degree}};
}

} // namespace

GroupPtr group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("group spec: missing \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "named") {
        return make_named(j.at("name").get<std::string>(),
                          j.value("param", 0));
    }
    if (kind == "permutation") {
        int degree = j.at("degree").get<int>();
        std::vector<std::vector<int>> gens;
        for (const auto& g : j.at("generators"))
            gens.push_back(one_line_from_cycles(degree, g));
        return from_permutation_generators(degree, gens);
    }
    if (kind == "table") {
        return std::make_shared<FiniteGroup>(
            j.at("mul").get<std::vector<std::vector<int>>>());
    }
    throw std::invalid_argument("group spec: unknown kind \"" + kind + "\"");
}

GroupHom pair_from_json(const Json& j) {
    if (!j.is_object())
        throw std::invalid_argument("pair spec: expected a JSON object");
    auto g = group_from_json(j.at("G"));
    auto f = group_from_json(j.at("F"));
    auto images = j.at("phi").at("images").get<std::vector<int>>();
    return GroupHom(std::move(f), std::move(g), std::move(images));
}

Json context_json(const GroupHom& phi) {
    return Json{{"G", {{"name", phi.target->name()}, {"order", phi.target->order()}}},
                {"F", {{"name", phi.source->name()}, {"order", phi.source->order()}}},
                {"phi_images", phi.image}};
}

Json cyclotomic_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& q : c.coefficients()) coeffs.push_back(rational_to_string(q));
    return Json{{"conductor", c.conductor()}, {"coefficients", coeffs}, {"str", c.str()}};
}

Json chartable_json(const GroupPtr& g) {
    const auto& classes = g->conjugacy_classes();
    Json reps = Json::array(), sizes = Json::array();
    for (const auto& cls : classes) {
        reps.push_back(elem_name(g, cls[0]));
        sizes.push_back(cls.size());
    }
    Json rows = Json::array();
    for (const auto& chi : character_table(g)) {
        Json row = Json::array();
        for (const auto& v : chi.values()) row.push_back(cyclotomic_json(v));
        rows.push_back(std::move(row));
    }
    return Json{{"group", g->name()},
                {"order", g->order()},
                {"class_representatives", reps},
                {"class_sizes", sizes},
                {"characters", rows}};
}

std::string chartable_csv(const GroupPtr& g) {
    std::ostringstream out;
    out << "character";
    for (const auto& cls : g->conjugacy_classes()) {
        std::string name = elem_name(g, cls[0]);
        out << ",\"" << name << "\"";
    }
    out << "\n";
    int i = 0;
    for (const auto& chi : character_table(g)) {
        out << "chi" << i++;
        for (const auto& v : chi.values()) out << ",\"" << v.str() << "\"";
        out << "\n";
    }
    return out.str();
}

Json catalog_json(const IrrepCatalog& cat, bool with_tables) {
    Json labels = Json::array();
    for (size_t i = 0; i < cat.labels.size(); ++i) {
        const auto& l = cat.labels[i];
        int oi = cat.label_orbit[i];
        const auto& fg = cat.stabilizers[oi];
        Json orbit = Json::array();
        for (int a : orbit_and_stabilizer(cat.phi, l.g).orbit) orbit.push_back(a);
        labels.push_back(Json{{"g", l.g},
                              {"g_name", elem_name(cat.phi.target, l.g)},
                              {"orbit", orbit},
                              {"M_index", l.m},
                              {"M_degree", character_table(fg.local())[l.m].degree_int()},
                              {"degree", l.degree}});
    }
    Json out{{"context", context_json(cat.phi)},
             {"num_simples", cat.labels.size()},
             {"labels", labels}};
    if (with_tables) {
        Json tables = Json::object();
        for (size_t oi = 0; oi < cat.gamma.size(); ++oi)
            tables[std::to_string(cat.gamma[oi])] =
                chartable_json(cat.stabilizers[oi].local());
        out["stabilizer_tables"] = tables;
    }
    return out;
}

std::string label_string(const IrrepCatalog& cat, const SimpleLabel& l) {
    return elem_name(cat.phi.target, l.g) + ":" + std::to_string(l.m);
}

Json fusion_json(const IrrepCatalog& cat, const FusionOutcome& out) {
    Json terms = Json::array();
    for (const auto& [l, m] : out.terms)
        terms.push_back(Json{{"g", l.g},
                             {"g_name", elem_name(cat.phi.target, l.g)},
                             {"M", l.m},
                             {"mult", m}});
    return Json{{"left", label_json(cat, out.left)},
                {"right", label_json(cat, out.right)},
                {"terms", terms}};
}

std::string fusion_csv(const FusionRing& ring) {
    std::ostringstream out;
    int n = ring.size();
    for (int i = 0; i < n; ++i) {
        out << "left=\"" << label_string(ring.cat, ring.cat.labels[i]) << "\"\n";
        out << "right";
        for (int k = 0; k < n; ++k)
            out << ",\"" << label_string(ring.cat, ring.cat.labels[k]) << "\"";
        out << "\n";
        for (int j = 0; j < n; ++j) {
            out << "\"" << label_string(ring.cat, ring.cat.labels[j]) << "\"";
            for (int k = 0; k < n; ++k) out << "," << ring.n[i][j][k];
            out << "\n";
        }
        if (i + 1 < n) out << "\n";
    }
    return out.str();
}

Json ring_json(const FusionRing& ring) {
    const auto& cat = ring.cat;
    Json labels = Json::array();
    for (const auto& l : cat.labels) labels.push_back(label_json(cat, l));
    Json images = Json::array();
    for (size_t i = 0; i < cat.labels.size(); ++i) {
        const auto& l = cat.labels[i];
        long dm = character_table(cat.stabilizers[cat.label_orbit[i]].local())[l.m]
                      .degree_int();
        auto s = orbit_sum(cat.phi, l.g).scaled(dm);
        Json coeffs = Json::object();
        for (int e = 0; e < cat.num_g(); ++e)
            if (s.coeffs[e] != 0)
                coeffs[elem_name(cat.phi.target, e)] = s.coeffs[e];
        images.push_back(Json{{"label", label_json(cat, l)}, {"coeffs", coeffs}});
    }
    return Json{{"context", context_json(cat.phi)},
                {"labels", labels},
                {"structure_constants", ring.n},
                {"phi_images", images}};
}

Json report_json(const Report& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json e{{"check", c.name}, {"pass", c.pass}};
        if (!c.pass) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    return Json{{"checks", checks}, {"ok", rep.ok()}};
}

Json hopf_json(const HopfData& a) {
    Json mult = Json::array();
    for (const auto& [ij, v] : a.mult)
        for (const auto& [k, c] : v)
            mult.push_back(Json::array({ij.first, ij.second, k, rational_to_string(c)}));
    Json comult = Json::array();
    for (int i = 0; i < a.dim; ++i)
        for (const auto& [jk, c] : a.comult[i])
            comult.push_back(Json::array({i, jk.first, jk.second, rational_to_string(c)}));
    Json counit = Json::array(), antipode = Json::array();
    for (int i = 0; i < a.dim; ++i) {
        counit.push_back(rational_to_string(a.counit[i]));
        Json s = Json::array();
        for (const auto& [k, c] : a.antipode[i])
            s.push_back(Json::array({k, rational_to_string(c)}));
        antipode.push_back(std::move(s));
    }
    Json unit = Json::array();
    for (const auto& [k, c] : a.unit)
        unit.push_back(Json::array({k, rational_to_string(c)}));
    return Json{{"dim", a.dim},      {"basis", a.basis},   {"mult", mult},
                {"unit", unit},      {"comult", comult},   {"counit", counit},
                {"antipode", antipode}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace qd
