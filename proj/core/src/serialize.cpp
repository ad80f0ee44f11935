#include "skewcode/serialize.hpp"

#include <json.hpp>

namespace skewcode {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json elt_json(const FiniteField& F, Elt a) { return json(F.coeffs(a)); }

json poly_json(const FiniteField& F, const poly::Poly& f) {
    json arr = json::array();
    for (Elt c : f) arr.push_back(elt_json(F, c));
    return arr;
}

json skew_json(const FiniteField& L, const SkewPoly& f) {
    json arr = json::array();
    for (Elt c : f.c) arr.push_back(elt_json(L, c));
    return arr;
}

json field_spec_json(const FieldSpec& spec) {
    return json{{"p", spec.p}, {"e", spec.e}, {"n", spec.n}, {"s", spec.s}};
}

const char* family_name(Family f) {
    switch (f) {
        case Family::S: return "S";
        case Family::D: return "D";
        case Family::MDS_S: return "MDS_S";
        case Family::MDS_D: return "MDS_D";
    }
    return "?";
}

json params_json(const CodeParams& p) {
    const TowerContext& tw =
        (p.family == Family::S || p.family == Family::D) ? p.ctx->tower()
                                                         : *p.tower;
    json j{{"family", family_name(p.family)},
           {"field", field_spec_json(tw.spec())},
           {"k", p.k}};
    switch (p.family) {
        case Family::S:
        case Family::D: {
            const QuotCtx& ctx = *p.ctx;
            json polys = json::array();
            for (const auto& F : ctx.tuple().polys)
                polys.push_back(poly_json(tw.K(), F));
            j["tuple"] = {{"s", ctx.s()}, {"t", ctx.t()}, {"polys", polys}};
            if (ctx.tuple().base) {
                j["tuple"]["base"] = poly_json(tw.K(), *ctx.tuple().base);
                json ls = json::array();
                for (Elt l : *ctx.tuple().lambdas)
                    ls.push_back(elt_json(tw.K(), l));
                j["tuple"]["lambdas"] = ls;
            }
            if (p.family == Family::S) {
                j["eta"] = elt_json(tw.L(), p.eta);
                j["rho_h"] = p.rho.h;
            } else {
                j["gamma"] = elt_json(tw.L(), p.gamma);
            }
            break;
        }
        case Family::MDS_S:
            j["s"] = p.s;
            j["eta"] = elt_json(tw.K(), p.eta);
            j["rho_h"] = p.rho.h;
            j["subgroup"] = {{"q0", p.subgroup.q0}, {"order", p.subgroup.order}};
            break;
        case Family::MDS_D:
            j["s"] = p.s;
            j["gamma"] = elt_json(tw.K(), p.gamma);
            break;
    }
    return j;
}

json twist_json(const TwistVerdict& v) {
    return json{{"ok", v.ok},
                {"violating_composition", v.violating_composition},
                {"detail", v.detail}};
}

std::string dump(json j) {
    j["schema_version"] = kSchemaVersion;
    return j.dump(2) + "\n";
}

}  // namespace

std::string count_document(const TowerContext& tw, int s, const SubgroupSpec& T) {
    std::vector<poly::Poly> listed = enumerate_XTs(tw, s, T);
    json polys = json::array();
    for (const auto& F : listed) polys.push_back(poly_json(tw.K(), F));
    json j{{"kind", "count"},
           {"q", tw.q()},
           {"s", s},
           {"subgroup", {{"q0", T.q0}, {"order", T.order}}},
           {"count_Xs", count_Xs(tw.q(), s)},
           {"count_XTs", count_XTs(tw.q(), s, T)},
           {"enumerated", static_cast<std::int64_t>(listed.size())},
           {"cross_check",
            static_cast<std::int64_t>(listed.size()) == count_XTs(tw.q(), s, T)},
           {"polys", polys}};
    return dump(std::move(j));
}

std::string code_document(const CodeHandle& code, const DistanceResult* dist,
                          const OptimalityVerdict* verdict) {
    json j{{"kind", "code"},
           {"params", params_json(code.params)},
           {"log_p_cardinality", code.log_p_cardinality},
           {"kprime_degree", code.kprime_degree},
           {"length", code.length},
           {"max_weight", code.max_weight},
           {"twist_condition", twist_json(code.condition)}};
    if (code.params.family == Family::MDS_S ||
        code.params.family == Family::MDS_D) {
        const TowerContext& tw = *code.params.tower;
        const FiniteField& E = tw.field_of_degree(tw.e() * code.params.s);
        json pts = json::array();
        for (Elt pt : code.eval_points) pts.push_back(elt_json(E, pt));
        j["eval_points"] = pts;
    }
    if (dist) {
        j["distance"] = {{"d", dist->d},
                         {"exact", dist->exact},
                         {"argmin_index", dist->argmin_index},
                         {"examined", dist->examined},
                         {"seed", dist->seed}};
        // Certificate: the minimizing codeword itself.
        if (dist->exact) {
            if (code.params.family == Family::S ||
                code.params.family == Family::D) {
                j["distance"]["argmin_codeword"] =
                    skew_json(code.params.ctx->tower().L(),
                              codeword_sumrank(code, dist->argmin_index).rep);
            } else {
                const TowerContext& tw = *code.params.tower;
                const FiniteField& E =
                    tw.field_of_degree(tw.e() * code.params.s);
                json w = json::array();
                for (Elt x : codeword_mds(code, dist->argmin_index))
                    w.push_back(elt_json(E, x));
                j["distance"]["argmin_codeword"] = w;
            }
        }
    }
    if (verdict) {
        j["optimality"] = {{"optimal", verdict->optimal},
                           {"kind", verdict->kind},
                           {"lhs_log_p", verdict->lhs_log_p},
                           {"rhs_log_p", verdict->rhs_log_p}};
    }
    return dump(std::move(j));
}

std::string profile_document(const CodeHandle& code, const NuclearProfile& prof) {
    const FiniteField& L = code.params.ctx->tower().L();
    auto basis_json = [&](const std::vector<QuotElem>& basis) {
        json arr = json::array();
        for (const QuotElem& g : basis) arr.push_back(skew_json(L, g.rep));
        return arr;
    };
    json j{{"kind", "nuclear_profile"},
           {"params", params_json(code.params)},
           {"sizes_log_p", prof.sizes_log_p},
           {"hypotheses_met", prof.hypotheses_met},
           {"closed_form_match", prof.closed_form_match},
           {"witnesses",
            {{"Il", basis_json(prof.il_basis)},
             {"Ir", basis_json(prof.ir_basis)},
             {"Cen", basis_json(prof.cen_basis)},
             {"Z", basis_json(prof.z_basis)}}}};
    return dump(std::move(j));
}

std::string generators_document(const CodeHandle& code, RealizeMode mode,
                                std::uint64_t seed) {
    json gens = json::array();
    if (code.params.family == Family::S || code.params.family == Family::D) {
        const TowerContext& tw = code.params.ctx->tower();
        const FiniteField& E = tw.field_of_degree(tw.e() * code.params.ctx->s());
        for (const QuotElem& a : code.fp_basis) {
            BlockMatrixTuple m = realize_matrices(a, mode, seed);
            json blocks = json::array();
            for (const auto& blk : m.blocks) {
                json bj = json::array();
                for (Elt x : blk) bj.push_back(elt_json(E, x));
                blocks.push_back(bj);
            }
            gens.push_back({{"rep", skew_json(tw.L(), a.rep)},
                            {"blocks", blocks}});
        }
    } else {
        const TowerContext& tw = *code.params.tower;
        const FiniteField& E = tw.field_of_degree(tw.e() * code.params.s);
        for (const auto& row : code.fp_basis_eval) {
            json rj = json::array();
            for (Elt x : row) rj.push_back(elt_json(E, x));
            gens.push_back({{"eval", rj}});
        }
    }
    json j{{"kind", "generators"},
           {"params", params_json(code.params)},
           {"mode", mode == RealizeMode::explicit3x3 ? "explicit3x3" : "generic"},
           {"seed", seed},
           {"generators", gens}};
    return dump(std::move(j));
}

std::string selftest_document(const std::vector<CriterionResult>& report) {
    json items = json::array();
    bool all = true;
    for (const auto& r : report) {
        all = all && r.pass;
        items.push_back({{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"note", r.note},
                         {"seconds", r.seconds}});
    }
    json j{{"kind", "selftest"}, {"pass", all}, {"criteria", items}};
    return dump(std::move(j));
}

}  // namespace skewcode
