#pragma once

#include <memory>
#include <set>
#include <string>

#include "wzb/machine.hpp"

namespace wzb {

enum class Section { Decomposition, Weights, Twist, KMatrix, Basis, Bochner, Curvature, Casimirs };

std::set<Section> all_sections();
std::optional<Section> section_by_name(const std::string& name);

struct Query {
    Family family = Family::G2;
    int param = 0; // n for so/u
    std::vector<long> weight;
    std::set<Section> sections = all_sections();
    bool json = false;
};

// Everything a renderer needs for one (algebra, lambda) query. Owns the
// algebra and relevant set so the internal pointers stay valid.
struct Report {
    std::unique_ptr<Algebra> alg;
    std::unique_ptr<RelevantSet> ctx;
    std::set<Section> sections;
    bool so4_warning = false;
    std::optional<OpMatrix> tau;
    std::optional<OpMatrix> kmat;
    std::vector<std::pair<Rat, int>> k_spectrum;
    std::optional<BasisReport> basis;
    std::optional<WFormula> bochner; // absent when no Bochner identity exists
    std::optional<CurvatureReport> curvature;
    std::optional<Rat> cas_l2, cas_l2_center, cas_l2_su;
    std::vector<std::pair<unsigned, Rat>> higher_casimirs;
};

Report build_report(const Query& q);

std::string render_text(const Report& r);
std::string render_json(const Report& r, bool pretty);

} // namespace wzb
