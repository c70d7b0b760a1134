#include "commands.hpp"

#include <algorithm>
#include <set>

#include "cones.hpp"
#include "errors.hpp"
#include "hecke.hpp"
#include "kleinian.hpp"
#include "namikawa.hpp"
#include "selftest.hpp"

namespace weylfold {

using nlohmann::json;

std::string fnv1a64_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw invalid_input(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string need_string(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string()) throw invalid_input(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::uint64_t opt_u64(const json& j, const char* key, std::uint64_t def) {
    if (!j.is_object() || !j.contains(key)) return def;
    const json& v = j.at(key);
    if (!v.is_number_unsigned() && !v.is_number_integer())
        throw invalid_input(std::string("field '") + key + "' must be an integer");
    if (v.is_number_integer() && v.get<std::int64_t>() < 0)
        throw invalid_input(std::string("field '") + key + "' must be non-negative");
    return v.get<std::uint64_t>();
}

std::vector<std::vector<int>> parse_perm_list(const json& v) {
    if (!v.is_array()) throw invalid_input("generators must be an array of image lists");
    std::vector<std::vector<int>> out;
    for (const json& p : v) {
        if (!p.is_array()) throw invalid_input("a generator must be an image list");
        std::vector<int> perm;
        for (const json& x : p) {
            if (!x.is_number_integer()) throw invalid_input("image lists contain integers");
            perm.push_back(x.get<int>());
        }
        out.push_back(std::move(perm));
    }
    return out;
}

json rat_vec_json(const QVec& v) {
    json a = json::array();
    for (const Rat& q : v) a.push_back(rat_str(q));
    return a;
}

QVec rat_vec_parse(const json& v) {
    if (!v.is_array()) throw invalid_input("expected an array of rationals");
    QVec out;
    for (const json& x : v) {
        if (x.is_string())
            out.push_back(rat_parse(x.get<std::string>()));
        else if (x.is_number_integer())
            out.push_back(Rat(x.get<long>()));
        else
            throw invalid_input("rationals are strings like \"3/2\" or integers");
    }
    return out;
}

json imat_json(const IMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json word_json(const std::vector<int>& word) {
    json a = json::array();
    for (int g : word) a.push_back(g + 1);
    return a;
}

json types_json(const std::vector<DynkinType>& ts) {
    json a = json::array();
    for (const auto& t : ts) a.push_back(t.str());
    return a;
}

json cmd_fold(const json& req, unsigned long long budget) {
    (void)budget;
    const DynkinType t = parse_type(need_string(req, "type"));
    if (!t.simply_laced()) throw invalid_input("folding requires a simply-laced type");
    std::vector<std::vector<int>> gens;
    if (req.contains("generators")) gens = parse_perm_list(req.at("generators"));
    const FoldingAction action = make_action(t, gens);
    const FoldedDatum folded = fold(action);

    json result;
    result["type"] = t.str();
    result["action_order"] = action.elements.size();
    json orbs = json::array();
    for (const Orbit& o : folded.orbit_list) {
        json jo;
        jo["nodes"] = o.nodes;
        jo["components"] = o.components;
        orbs.push_back(std::move(jo));
    }
    result["orbits"] = std::move(orbs);
    json betas = json::array();
    for (const QVec& b : folded.betas) betas.push_back(rat_vec_json(b));
    result["betas"] = std::move(betas);
    const QMat gram = gram_matrix(cartan_of_diagram(action.diagram));
    json pair = json::array();
    for (const QVec& b1 : folded.betas) {
        json row = json::array();
        for (const QVec& b2 : folded.betas) row.push_back(rat_str(bilinear(b1, b2, gram)));
        pair.push_back(std::move(row));
    }
    result["beta_pairings"] = std::move(pair);
    result["folded_cartan"] = imat_json(folded.folded_cartan);
    result["folded_type"] = types_json(folded.folded_type);
    return result;
}

SingularityData parse_singularity(const json& j) {
    SingularityData data;
    const json& leaves = need(j, "leaves");
    if (!leaves.is_array()) throw invalid_input("'leaves' must be an array");
    for (const json& leaf : leaves) {
        LeafDatum d;
        d.id = need_string(leaf, "id");
        d.slice = parse_type(need_string(leaf, "slice"));
        if (leaf.contains("monodromy_generators"))
            d.monodromy_generators = parse_perm_list(leaf.at("monodromy_generators"));
        data.leaves.push_back(std::move(d));
    }
    return data;
}

json wx_summary(const NamikawaWeylGroup& wx) {
    json j;
    j["order"] = wx.group.order();
    j["generators"] = wx.generator_tags;
    json factors = json::array();
    for (const auto& f : wx.factors) {
        json jf;
        jf["leaf"] = f.leaf_id;
        jf["slice"] = f.slice.str();
        jf["folded_type"] = types_json(f.folded_type);
        jf["rank"] = f.rank;
        jf["order"] = weyl_order(f.folded_cartan);
        factors.push_back(std::move(jf));
    }
    j["factors"] = std::move(factors);
    return j;
}

json cmd_namikawa(const json& req, unsigned long long budget) {
    if (req.contains("nilpotent")) {
        const DynkinType t = parse_type(need_string(req, "nilpotent"));
        json result;
        result["nilpotent"] = t.str();
        json specs = json::array();
        const NamikawaWeylGroup wx = namikawa_weyl_abstract(t, budget);
        for (const PsiEntry& e : psi_image(wx)) {
            json je;
            json tags = json::array();
            for (int k : e.spec.contracted) tags.push_back(wx.generator_tags[k]);
            je["contracted"] = std::move(tags);
            je["order"] = e.order;
            specs.push_back(std::move(je));
        }
        result["specs"] = std::move(specs);
        result["wx"] = wx_summary(wx);
        return result;
    }

    const SingularityData data = parse_singularity(need(req, "singularity"));
    const NamikawaWeylGroup wx = namikawa_weyl(data, budget);
    json result = wx_summary(wx);
    if (req.contains("contracted")) {
        const json& c = req.at("contracted");
        if (!c.is_array()) throw invalid_input("'contracted' must be an array of generator tags");
        std::vector<std::string> tags;
        for (const json& x : c) {
            if (!x.is_string()) throw invalid_input("'contracted' entries are generator tags");
            tags.push_back(x.get<std::string>());
        }
        const PartialResolutionSpec spec = spec_from_tags(wx, tags);
        const ParabolicSubgroup sub = partial_weyl(wx, spec);
        json partial;
        json jt = json::array();
        for (int k : spec.contracted) jt.push_back(wx.generator_tags[k]);
        partial["contracted"] = std::move(jt);
        partial["order"] = sub.elements.size();
        if (sub.elements.size() <= 128) {
            json words = json::array();
            for (int id : sub.elements) words.push_back(word_json(wx.group.elements[id].word));
            partial["element_words"] = std::move(words);
        }
        result["partial"] = std::move(partial);
    }
    return result;
}

MoriFanData parse_fan(const json& j) {
    MoriFanData fan;
    const json& dim = need(j, "dim");
    if (!dim.is_number_integer()) throw invalid_input("'dim' must be an integer");
    fan.dim = dim.get<int>();
    if (j.contains("hyperplanes")) {
        for (const json& h : j.at("hyperplanes")) {
            HyperplaneSpec spec;
            spec.normal = rat_vec_parse(need(h, "normal"));
            if (h.contains("generator")) spec.tag = need_string(h, "generator");
            fan.hyperplanes.push_back(std::move(spec));
        }
    }
    for (const json& c : need(j, "chambers")) {
        Chamber ch;
        for (const json& r : need(c, "rays")) ch.rays.push_back(rat_vec_parse(r));
        fan.chambers.push_back(std::move(ch));
    }
    if (j.contains("weyl_action")) {
        for (const json& m : j.at("weyl_action")) {
            if (!m.is_array()) throw invalid_input("weyl_action entries are matrices");
            QMat q(fan.dim, fan.dim);
            int r = 0;
            for (const json& row : m) {
                const QVec v = rat_vec_parse(row);
                if (static_cast<int>(v.size()) != fan.dim || r >= fan.dim)
                    throw invalid_input("weyl_action matrix has wrong dimension");
                for (int cidx = 0; cidx < fan.dim; ++cidx) q.at(r, cidx) = v[cidx];
                ++r;
            }
            if (r != fan.dim) throw invalid_input("weyl_action matrix has wrong dimension");
            fan.weyl_action.push_back(std::move(q));
        }
    }
    return fan;
}

// When the fan file carries no singularity block, each distinct generator
// tag contributes an A1 factor. The subset lattice of parabolics is the
// same either way; factor structure beyond that needs real leaf data.
NamikawaWeylGroup wx_from_tags(const MoriFanData& fan, unsigned long long budget) {
    std::set<std::string> tags;
    for (const auto& h : fan.hyperplanes)
        if (!h.tag.empty()) tags.insert(h.tag);
    NamikawaWeylGroup wx;
    const int g = static_cast<int>(tags.size());
    IMat c(g);
    for (int i = 0; i < g; ++i) c.at(i, i) = 2;
    wx.cartan = c;
    wx.group = generate(c, budget);
    int offset = 0;
    for (const std::string& tag : tags) {
        NamikawaFactor f;
        f.leaf_id = tag;
        f.slice = {Family::A, 1};
        f.folded_cartan = cartan_matrix(f.slice);
        f.folded_type = {f.slice};
        f.offset = offset++;
        f.rank = 1;
        wx.factors.push_back(std::move(f));
        wx.generator_tags.push_back(tag);
    }
    return wx;
}

json cmd_fan(const json& req, unsigned long long budget) {
    const MoriFanData fan = parse_fan(need(req, "fan"));
    const std::uint64_t seed = opt_u64(req, "seed", 0);
    const int samples = static_cast<int>(opt_u64(req, "samples", 100));

    NamikawaWeylGroup wx;
    std::string wx_source;
    if (req.at("fan").contains("singularity")) {
        wx = namikawa_weyl(parse_singularity(req.at("fan").at("singularity")), budget);
        wx_source = "singularity";
    } else {
        wx = wx_from_tags(fan, budget);
        wx_source = "tags";
    }

    const std::vector<Face> faces = face_lattice(fan);
    const PsiFaceReport psi = psi_face_map(faces, fan, wx);

    json result;
    result["dim"] = fan.dim;
    result["face_count"] = faces.size();
    json jfaces = json::array();
    for (size_t i = 0; i < faces.size(); ++i) {
        const Face& f = faces[i];
        json jf;
        jf["dim"] = f.dim;
        json rays = json::array();
        for (const QVec& r : f.rays) rays.push_back(rat_vec_json(r));
        jf["rays"] = std::move(rays);
        jf["active_hyperplanes"] = f.active;
        jf["chambers"] = f.chambers;
        jf["sample"] = rat_vec_json(f.sample);
        json tags = json::array();
        for (int k : psi.face_generators[i]) tags.push_back(wx.generator_tags[k]);
        jf["generators"] = std::move(tags);
        jf["weyl_order"] = parabolic(wx.group, psi.face_generators[i]).elements.size();
        jfaces.push_back(std::move(jf));
    }
    result["faces"] = std::move(jfaces);
    json jpsi;
    jpsi["surjective"] = psi.surjective;
    jpsi["injective"] = psi.injective;
    jpsi["bijective"] = psi.bijective;
    jpsi["chambers"] = psi.chamber_count;
    result["psi"] = std::move(jpsi);
    json jwx = wx_summary(wx);
    jwx["source"] = wx_source;
    result["wx"] = std::move(jwx);

    // The movable cone is the union of the chambers; its dual is the
    // essential-curve cone.
    std::vector<QVec> all_rays;
    for (const auto& ch : fan.chambers) all_rays.insert(all_rays.end(), ch.rays.begin(), ch.rays.end());
    const std::vector<QVec> mov_dual = dual_rays(fan.dim, all_rays);
    json jdual = json::array();
    for (const QVec& r : mov_dual) jdual.push_back(rat_vec_json(r));
    result["mov_dual_rays"] = std::move(jdual);
    if (req.at("fan").contains("essential_rays")) {
        std::set<QVec> expect;
        for (const json& r : req.at("fan").at("essential_rays"))
            expect.insert(canonical_ray(rat_vec_parse(r)));
        const std::set<QVec> got(mov_dual.begin(), mov_dual.end());
        result["essential_match"] = (expect == got);
    }
    if (!fan.weyl_action.empty())
        result["fundamental_domain"] = fundamental_domain_check(fan, samples, seed);
    return result;
}

json cmd_kleinian(const json& req, unsigned long long budget) {
    const DynkinType t = parse_type(need_string(req, "type"));
    std::vector<int> contracted;
    if (req.contains("contracted")) {
        for (const json& x : need(req, "contracted")) {
            if (!x.is_number_integer()) throw invalid_input("'contracted' entries are node numbers");
            contracted.push_back(x.get<int>());
        }
    }
    const KleinianPartial kp = make_kleinian(t, contracted);
    const std::uint64_t seed = opt_u64(req, "seed", 0);
    const int samples = static_cast<int>(opt_u64(req, "samples", 20));

    json result;
    result["type"] = t.str();
    result["contracted"] = kp.contracted;
    json pts = json::array();
    for (const auto& p : singular_points(kp)) {
        json jp;
        jp["nodes"] = p.nodes;
        jp["type"] = p.type.str();
        jp["rank"] = p.rank;
        pts.push_back(std::move(jp));
    }
    result["singular_points"] = std::move(pts);
    const FiberCohomology full = fiber_cohomology(kp, FiberLevel::full);
    const FiberCohomology part = fiber_cohomology(kp, FiberLevel::partial);
    result["fiber_full"] = {{"b0", full.b0}, {"b2", full.b2}};
    result["fiber_partial"] = {{"b0", part.b0}, {"b2", part.b2}};
    result["invariant_check"] = invariant_fiber_check(kp);
    const DeformationDims dims = deformation_dims(kp);
    result["deformation"] = {{"total", dims.total},
                             {"locally_trivial", dims.locally_trivial},
                             {"local", dims.local}};
    const auto kernel = pushforward_kernel(kp);
    result["kernel_dim"] = kernel.size();
    json kb = json::array();
    for (const QVec& v : kernel) kb.push_back(rat_vec_json(v));
    result["kernel_basis"] = std::move(kb);
    const TowerReport tower = quotient_tower(kp, samples, seed, budget);
    result["tower"] = {{"degrees", {tower.subgroup_degree, tower.group_degree}},
                       {"samples", tower.samples},
                       {"consistent", tower.consistent}};
    result["end_spr_dim"] = end_spr_dim(kp);
    return result;
}

json cmd_hecke(const json& req, unsigned long long budget) {
    const DynkinType t = parse_type(need_string(req, "type"));
    std::vector<int> J;
    if (req.contains("parabolic")) {
        for (const json& x : need(req, "parabolic")) {
            if (!x.is_number_integer()) throw invalid_input("'parabolic' entries are generator numbers");
            const int k = x.get<int>();
            if (k < 1 || k > t.rank) throw invalid_input("unknown generator index " + std::to_string(k));
            J.push_back(k - 1);
        }
    }
    const WeylGroup w = generate(cartan_matrix(t), budget);
    const ParabolicSubgroup sub = parabolic(w, J);
    const HeckeAlgebra h = build(w, sub, std::min<unsigned long long>(budget, 1152));
    const InvariantModuleDims dims = invariant_module_dim(w, sub);

    json result;
    result["type"] = t.str();
    result["group_order"] = h.group_order;
    json jpar = json::array();
    for (int k : sub.gens) jpar.push_back(k + 1);
    result["parabolic"] = std::move(jpar);
    result["subgroup_order"] = h.subgroup_order;
    result["left_cosets"] = dims.left_cosets;
    result["double_cosets"] = dims.double_cosets;
    result["dim"] = h.reps.size();
    result["unit_ok"] = h.unit_ok;
    result["associative"] = associativity_check(h);
    json reps = json::array();
    for (int id : h.reps) reps.push_back(word_json(w.elements[id].word));
    result["representatives"] = std::move(reps);
    const size_t dim = h.reps.size();
    if (dim <= 16) {
        json tensor = json::array();
        for (size_t a = 0; a < dim; ++a) {
            json ja = json::array();
            for (size_t b = 0; b < dim; ++b) {
                json jb = json::array();
                for (size_t k = 0; k < dim; ++k) jb.push_back(rat_str(h.c[a][b][k]));
                ja.push_back(std::move(jb));
            }
            tensor.push_back(std::move(ja));
        }
        result["structure_constants"] = std::move(tensor);
    } else {
        result["structure_constants_omitted"] = true;
    }
    return result;
}

}  // namespace

json run_command(const std::string& command, const std::string& request_text,
                 unsigned long long budget) {
    json req;
    try {
        req = json::parse(request_text);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("request is not valid JSON: ") + e.what());
    }
    if (!req.is_object()) throw invalid_input("request must be a JSON object");

    json result;
    if (command == "fold")
        result = cmd_fold(req, budget);
    else if (command == "namikawa")
        result = cmd_namikawa(req, budget);
    else if (command == "fan")
        result = cmd_fan(req, budget);
    else if (command == "kleinian")
        result = cmd_kleinian(req, budget);
    else if (command == "hecke")
        result = cmd_hecke(req, budget);
    else if (command == "selftest")
        result = selftest_report(opt_u64(req, "seed", 0), budget);
    else
        throw invalid_input("unknown command '" + command + "'");

    json report;
    report["command"] = command;
    report["input_digest"] = fnv1a64_hex(request_text);
    report["version"] = kVersion;
    report["request"] = req;
    report["result"] = std::move(result);
    return report;
}

}  // namespace weylfold
