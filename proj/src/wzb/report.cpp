#include "wzb/report.hpp"

#include <json.hpp>

#include <sstream>

namespace wzb {

using ordered_json = nlohmann::ordered_json;

std::set<Section> all_sections() {
    return {Section::Decomposition, Section::Weights, Section::Twist, Section::KMatrix,
            Section::Basis, Section::Bochner, Section::Curvature, Section::Casimirs};
}

std::optional<Section> section_by_name(const std::string& name) {
    if (name == "decomposition") return Section::Decomposition;
    if (name == "weights") return Section::Weights;
    if (name == "twist") return Section::Twist;
    if (name == "kmatrix") return Section::KMatrix;
    if (name == "basis") return Section::Basis;
    if (name == "bochner") return Section::Bochner;
    if (name == "curvature") return Section::Curvature;
    if (name == "casimirs") return Section::Casimirs;
    return std::nullopt;
}

namespace {

bool wants(const Report& r, Section s) { return r.sections.count(s) > 0; }

} // namespace

Report build_report(const Query& q) {
    Report r;
    r.sections = q.sections;

    Family fam = q.family;
    int param = q.param;
    if (fam == Family::SOodd || fam == Family::SOeven) {
        if (param < 3) throw Error("UnsupportedFamily", "so(n) needs n >= 3");
        fam = param % 2 == 1 ? Family::SOodd : Family::SOeven;
        r.so4_warning = param == 4; // so(4) is not simple; formulas applied verbatim
        param /= 2;
    }
    r.alg = std::make_unique<Algebra>(build_algebra(fam, param));
    HighestWeight hw = highest_weight(*r.alg, q.weight);
    r.ctx = std::make_unique<RelevantSet>(decompose(*r.alg, hw));

    bool need_tau = wants(r, Section::Twist) || wants(r, Section::KMatrix) ||
                    wants(r, Section::Basis);
    if (need_tau) r.tau = twist_matrix(*r.ctx);
    if (wants(r, Section::KMatrix) || wants(r, Section::Basis)) {
        r.kmat = k_matrix(*r.ctx, *r.tau);
        for (const KEigenspace& es : k_eigenspaces(*r.ctx, *r.kmat))
            if (!es.basis.empty())
                r.k_spectrum.emplace_back(es.eigenvalue, static_cast<int>(es.basis.size()));
    }
    if (wants(r, Section::Basis)) r.basis = recursion_basis(*r.ctx);
    if (wants(r, Section::Bochner) &&
        (r.alg->family == Family::G2 || r.alg->family == Family::Spin7)) {
        WFormula beta = r.alg->family == Family::G2 ? bochner_g2(*r.ctx) : bochner_spin7(*r.ctx);
        if (!vec_is_zero(beta.coeffs)) r.bochner = std::move(beta);
    }
    if (wants(r, Section::Curvature)) r.curvature = curvature_report(*r.ctx);
    if (wants(r, Section::Casimirs)) {
        r.cas_l2 = casimir_l2(*r.alg, Ideal::Full, hw.vec);
        if (r.alg->family == Family::U) {
            r.cas_l2_center = casimir_l2(*r.alg, Ideal::Center, hw.vec);
            r.cas_l2_su = casimir_l2(*r.alg, Ideal::SU, hw.vec);
        }
        for (unsigned k = 1; k <= 6; ++k)
            r.higher_casimirs.emplace_back(k, higher_casimir(*r.alg, hw, k));
    }
    return r;
}

namespace {

std::string family_tag(const Algebra& alg) {
    switch (alg.family) {
        case Family::SOodd:
        case Family::SOeven: return "so";
        case Family::U: return "u";
        case Family::G2: return "g2";
        default: return "spin7";
    }
}

ordered_json json_big(const BigInt& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

ordered_json json_mat(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json json_coeffs(const RatVec& v) {
    ordered_json a = ordered_json::array();
    for (const Rat& x : v) a.push_back(x.str());
    return a;
}

std::string term_row(const RelevantSet& ctx, const RatVec& coeffs) {
    std::string out;
    for (int i = 0; i < ctx.size(); ++i) {
        const Rat& c = coeffs[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        if (out.empty()) {
            out += c.sign() < 0 ? "- " : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        out += c.abs().str() + " T*T[" + ctx.entries[static_cast<size_t>(i)].label.str() + "]";
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string render_json(const Report& r, bool pretty) {
    const RelevantSet& ctx = *r.ctx;
    ordered_json j;

    ordered_json alg;
    alg["family"] = family_tag(*r.alg);
    if (r.alg->is_so()) alg["parameter"] = r.alg->n_of_so();
    if (r.alg->family == Family::U) alg["parameter"] = r.alg->param;
    alg["dimT"] = r.alg->dim_t;
    alg["dimG"] = r.alg->dim_g;
    j["algebra"] = std::move(alg);

    ordered_json lam;
    lam["fundamental"] = ctx.lambda.fund;
    lam["dim"] = json_big(ctx.dim_v);
    j["lambda"] = std::move(lam);

    if (wants(r, Section::Decomposition) || wants(r, Section::Weights)) {
        ordered_json arr = ordered_json::array();
        for (const auto& e : ctx.entries) {
            ordered_json item;
            item["label"] = e.label.str();
            item["mu_fundamental"] = e.mu_fund;
            item["dim"] = json_big(e.dim);
            item["dratio_num"] = json_big(e.dratio.num());
            item["dratio_den"] = json_big(e.dratio.den());
            if (wants(r, Section::Weights)) {
                item["b"] = e.b.str();
                if (e.b_center) item["b_center"] = e.b_center->str();
            }
            arr.push_back(std::move(item));
        }
        j["decomposition"] = std::move(arr);
    }
    if (r.tau && wants(r, Section::Twist)) j["tau"] = json_mat(r.tau->m);
    if (r.kmat && wants(r, Section::KMatrix)) {
        j["k_matrix"] = json_mat(r.kmat->m);
        ordered_json spec = ordered_json::array();
        for (const auto& [ev, mult] : r.k_spectrum) {
            ordered_json item;
            item["eigenvalue"] = ev.str();
            item["multiplicity"] = mult;
            spec.push_back(std::move(item));
        }
        j["k_spectrum"] = std::move(spec);
    }
    if (r.basis) {
        ordered_json arr = ordered_json::array();
        for (const BasisVector& bv : r.basis->polys) {
            ordered_json item;
            if (bv.degree_in_b) item["degree"] = *bv.degree_in_b;
            item["tau_eig"] = bv.tau_eig;
            if (bv.k_eig) item["k_eig"] = bv.k_eig->str();
            item["coeffs"] = json_coeffs(bv.f.coeffs);
            arr.push_back(std::move(item));
        }
        j["basis"] = std::move(arr);
    }
    if (r.bochner) {
        ordered_json b;
        b["coeffs"] = json_coeffs(r.bochner->coeffs);
        j["bochner"] = std::move(b);
    }
    if (r.curvature) {
        j["qR"] = json_coeffs(r.curvature->qr);
        j["laplacian"] = json_coeffs(r.curvature->laplacian);
    }
    if (r.cas_l2) {
        ordered_json cas;
        cas["cas_l2"] = r.cas_l2->str();
        if (r.cas_l2_center) cas["cas_l2_center"] = r.cas_l2_center->str();
        if (r.cas_l2_su) cas["cas_l2_su"] = r.cas_l2_su->str();
        ordered_json higher;
        for (const auto& [k, v] : r.higher_casimirs) higher[std::to_string(k)] = v.str();
        cas["higher"] = std::move(higher);
        j["casimirs"] = std::move(cas);
    }

    bool spin_gap =
        r.basis ? r.basis->spin_gap : (ctx.degenerate && r.alg->family == Family::SOeven);
    ordered_json flags;
    flags["degenerate"] = ctx.degenerate;
    flags["spin_gap"] = spin_gap;
    flags["so4_warning"] = r.so4_warning;
    j["flags"] = std::move(flags);

    return pretty ? j.dump(2) + "\n" : j.dump();
}

std::string render_text(const Report& r) {
    const RelevantSet& ctx = *r.ctx;
    std::ostringstream os;
    os << "algebra " << r.alg->name() << "  dimT " << r.alg->dim_t << "  dimG " << r.alg->dim_g
       << "\n";
    os << "lambda [";
    for (size_t i = 0; i < ctx.lambda.fund.size(); ++i)
        os << (i ? "," : "") << ctx.lambda.fund[i];
    os << "]  dim " << ctx.dim_v.get_str() << "\n";

    std::string flags;
    if (ctx.degenerate) flags += " degenerate";
    if (r.basis && r.basis->spin_gap) flags += " spin_gap";
    if (r.so4_warning) flags += " so4_warning";
    os << "flags:" << (flags.empty() ? " none" : flags) << "\n";

    if (wants(r, Section::Decomposition) || wants(r, Section::Weights)) {
        auto pad = [](const std::string& s, size_t width) {
            return s + std::string(s.size() < width ? width - s.size() : 1, ' ');
        };
        os << "\ndecomposition of T (x) V:\n";
        os << "  " << pad("eps", 7) << pad("mu", 18) << pad("dim", 12) << pad("d_eps", 10);
        if (wants(r, Section::Weights)) {
            if (r.alg->family == Family::U)
                os << pad("b", 10) << "b_center";
            else
                os << "b";
        }
        os << "\n";
        for (const auto& e : ctx.entries) {
            std::string mu = "[";
            for (size_t i = 0; i < e.mu_fund.size(); ++i)
                mu += (i ? "," : "") + std::to_string(e.mu_fund[i]);
            mu += "]";
            os << "  " << pad(e.label.str(), 7) << pad(mu, 18) << pad(e.dim.get_str(), 12)
               << pad(e.dratio.str(), 10);
            if (wants(r, Section::Weights)) {
                if (e.b_center)
                    os << pad(e.b.str(), 10) << e.b_center->str();
                else
                    os << e.b.str();
            }
            os << "\n";
        }
    }
    if (r.tau && wants(r, Section::Twist)) {
        os << "\ntwist matrix (row eps: expansion of tau pr_eps):\n";
        for (int i = 0; i < r.tau->m.rows(); ++i) {
            os << "  [";
            for (int j = 0; j < r.tau->m.cols(); ++j)
                os << (j ? "  " : " ") << r.tau->m.at(i, j).str();
            os << " ]\n";
        }
    }
    if (r.kmat && wants(r, Section::KMatrix)) {
        os << "\nclassifying endomorphism K:\n";
        for (int i = 0; i < r.kmat->m.rows(); ++i) {
            os << "  [";
            for (int j = 0; j < r.kmat->m.cols(); ++j)
                os << (j ? "  " : " ") << r.kmat->m.at(i, j).str();
            os << " ]\n";
        }
        os << "K spectrum:";
        for (const auto& [ev, mult] : r.k_spectrum)
            os << "  " << ev.str() << " (x" << mult << ")";
        os << "\n";
    }
    if (r.basis) {
        os << "\nbasis of W(V):\n";
        for (const BasisVector& bv : r.basis->polys) {
            os << "  ";
            if (bv.degree_in_b)
                os << "deg " << *bv.degree_in_b;
            else
                os << "deg -";
            os << "  tau " << (bv.tau_eig > 0 ? "+1" : "-1");
            if (bv.k_eig)
                os << "  K " << bv.k_eig->str();
            else
                os << "  K -";
            os << "  coeffs [";
            for (size_t i = 0; i < bv.f.coeffs.size(); ++i)
                os << (i ? ", " : "") << bv.f.coeffs[i].str();
            os << "]\n";
        }
        os << "complete: " << (r.basis->complete ? "yes" : "no") << "\n";
    }
    if (wants(r, Section::Bochner)) {
        if (r.bochner) {
            os << "\nbochner identity: 0 = " << term_row(ctx, r.bochner->coeffs) << "\n";
        } else {
            os << "\nbochner identity: none\n";
        }
    }
    if (r.curvature) {
        os << "\nq(R):  " << term_row(ctx, r.curvature->qr) << "\n";
        os << "Delta: " << term_row(ctx, r.curvature->laplacian) << "\n";
    }
    if (r.cas_l2) {
        os << "\ncasimirs: Cas_L2 " << r.cas_l2->str();
        if (r.cas_l2_center) os << "  center " << r.cas_l2_center->str();
        if (r.cas_l2_su) os << "  su " << r.cas_l2_su->str();
        os << "\n";
        os << "higher:";
        for (const auto& [k, v] : r.higher_casimirs) os << "  Cas[" << k << "] " << v.str();
        os << "\n";
    }
    return os.str();
}

} // namespace wzb
