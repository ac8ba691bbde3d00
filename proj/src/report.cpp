#include "fermat/report.hpp"

namespace fermat {

using nlohmann::json;

json to_json(const SplittingType& t) { return json(t.entries); }

json to_json(const ClassificationReport& r) {
    return json{{"degree", r.degree},
                {"field", "2^" + std::to_string(r.ext)},
                {"omega", to_json(r.omega)},
                {"extended", to_json(r.extended)},
                {"tangent", to_json(r.tangent)},
                {"omega_kernel_dims", r.omega_dims},
                {"free", r.free_curve},
                {"very_free", r.very_free},
                {"case_4b", r.case_4b}};
}

json to_json(const DegreeVerdict& v) {
    return json{{"degree", v.degree},
                {"free_e_types", v.free_e_types},
                {"very_free_e_types", v.very_free_e_types},
                {"free_possible", v.free_possible()},
                {"very_free_possible", v.very_free_possible()}};
}

namespace {
const char* path_name(RefutationTrace::Path p) {
    switch (p) {
        case RefutationTrace::Path::rank_deficient: return "rank_deficient";
        case RefutationTrace::Path::frobenius_kernel: return "frobenius_kernel";
        case RefutationTrace::Path::frobenius_invertible: return "frobenius_invertible";
    }
    return "?";
}
} // namespace

json to_json(const RefutationTrace& t) {
    json j{{"degree", t.degree},
           {"path", path_name(t.path)},
           {"rank", t.rank},
           {"max_rank", t.max_rank},
           {"required_rank_if_free", t.required_rank_if_free},
           {"forced_free_e_type", t.forced_free_type},
           {"concludes_not_free", t.concludes_not_free}};
    if (t.path != RefutationTrace::Path::rank_deficient) {
        j["frobenius_rank"] = t.frobenius_rank;
        j["products_vanish"] = t.products_vanish;
        j["witnesses_independent"] = t.witnesses_independent;
    }
    return j;
}

json to_json(const SearchSummary& s) {
    json j{{"degree", s.degree},
           {"total", s.total},
           {"valid", s.valid},
           {"free", s.free_count},
           {"very_free", s.very_free_count},
           {"case_4b", s.case_4b_count}};
    if (s.degree == 4 || s.degree == 5) {
        j["refuted"] = s.refuted;
        j["identities_checked"] = s.identities_checked;
    }
    return j;
}

std::string to_text(const ClassificationReport& r) {
    std::string s;
    s += "degree:   " + std::to_string(r.degree) + "  (field 2^" + std::to_string(r.ext) + ")\n";
    s += "omega:    " + to_string(r.omega) + "\n";
    s += "extended: " + to_string(r.extended) + "\n";
    s += "tangent:  " + to_string(r.tangent) + "\n";
    s += "kernel dims (plain degree 0,1,2): ";
    for (size_t i = 0; i < r.omega_dims.size(); ++i)
        s += (i ? "," : "") + std::to_string(r.omega_dims[i]);
    s += "\n";
    s += std::string("free:      ") + (r.free_curve ? "yes" : "no") + "\n";
    s += std::string("very free: ") + (r.very_free ? "yes" : "no");
    if (r.case_4b) s += "   [extended type has exactly one zero entry]";
    s += "\n";
    return s;
}

namespace {
std::string tuple_list(const std::vector<std::vector<int>>& ts) {
    if (ts.empty()) return "none";
    std::string s;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i) s += " ";
        s += "(";
        for (size_t k = 0; k < ts[i].size(); ++k) s += (k ? "," : "") + std::to_string(ts[i][k]);
        s += ")";
    }
    return s;
}
} // namespace

std::string to_text(const DegreeVerdict& v) {
    return "degree " + std::to_string(v.degree) + ": free e-types " + tuple_list(v.free_e_types) +
           "; very free e-types " + tuple_list(v.very_free_e_types) + "\n";
}

std::string to_text(const RefutationTrace& t) {
    std::string s = "degree " + std::to_string(t.degree) + " curve is not free (" +
                    path_name(t.path) + ")\n";
    s += "  coefficient matrix rank " + std::to_string(t.rank) + " of " +
         std::to_string(t.max_rank) + "; a free curve would force rank " +
         std::to_string(t.required_rank_if_free) + "\n";
    if (t.path != RefutationTrace::Path::rank_deficient) {
        s += "  fourth-power matrix rank " + std::to_string(t.frobenius_rank) +
             "; column products vanish: " + (t.products_vanish ? "yes" : "no") +
             "; witnesses independent: " + (t.witnesses_independent ? "yes" : "no") + "\n";
    }
    return s;
}

std::string to_text(const SearchSummary& s) {
    std::string out = "degree " + std::to_string(s.degree) + ": enumerated " +
                      std::to_string(s.total) + ", valid " + std::to_string(s.valid) + ", free " +
                      std::to_string(s.free_count) + ", very free " +
                      std::to_string(s.very_free_count) + ", case-4b " +
                      std::to_string(s.case_4b_count);
    if (s.degree == 4 || s.degree == 5)
        out += ", refuted " + std::to_string(s.refuted) + ", identities checked " +
               std::to_string(s.identities_checked);
    return out + "\n";
}

} // namespace fermat
