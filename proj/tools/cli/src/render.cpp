#include "fracineq/cli/render.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace fracineq::cli {
namespace {

nlohmann::json real_json(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

nlohmann::json opt_json(const std::optional<double>& v) {
    if (!v) return nullptr;
    return real_json(*v);
}

std::string opt_csv(const std::optional<double>& v) { return v ? csv_real(*v) : std::string(); }

std::string joined_notes(const CheckReport& r) {
    std::string s;
    for (std::size_t i = 0; i < r.notes.size(); ++i) {
        if (i) s += " | ";
        s += r.notes[i];
    }
    return s;
}

std::string certificate_text(const Certificate& c) {
    std::string s = c.holds ? "holds" : "fails";
    s += " (grid " + std::to_string(c.grid_size) + ", max defect " + format_real(c.max_violation) + ")";
    if (c.witness)
        s += " witness x = " + format_real(c.witness->x) + ", y = " + format_real(c.witness->y) +
             ", t = " + format_real(c.witness->t) + ", defect = " + format_real(c.witness->defect);
    return s;
}

} // namespace

std::string csv_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_header() { return "theorem,f,a,b,m,alpha,alpha1,q,lhs,rhs,margin,status,notes"; }

std::string csv_row(const CheckReport& r) {
    const CheckInputs& in = r.inputs;
    std::string row = to_string(r.theorem_id);
    row += ',' + csv_field(in.function_text);
    row += ',' + csv_real(in.a);
    row += ',' + csv_real(in.b);
    row += ',' + opt_csv(in.m);
    row += ',' + opt_csv(in.alpha);
    row += ',' + opt_csv(in.alpha1);
    row += ',' + opt_csv(in.q);
    row += ',' + csv_real(r.lhs);
    row += ',' + csv_real(r.rhs);
    row += ',' + csv_real(r.margin);
    row += ',' + to_string(r.status);
    row += ',' + csv_field(joined_notes(r));
    return row;
}

nlohmann::json report_json(const CheckReport& r) {
    nlohmann::json j;
    j["theorem_id"] = to_string(r.theorem_id);
    j["inputs"] = {{"f", r.inputs.function_text}, {"a", real_json(r.inputs.a)},   {"b", real_json(r.inputs.b)},
                   {"m", opt_json(r.inputs.m)},        {"alpha", opt_json(r.inputs.alpha)},
                   {"alpha1", opt_json(r.inputs.alpha1)}, {"q", opt_json(r.inputs.q)}};
    j["lhs"] = real_json(r.lhs);
    j["rhs"] = real_json(r.rhs);
    j["margin"] = real_json(r.margin);
    j["status"] = to_string(r.status);
    j["identity"] = r.identity;
    j["informational"] = r.informational;
    nlohmann::json hyps = nlohmann::json::array();
    for (const Hypothesis& h : r.hypotheses) {
        nlohmann::json w = nullptr;
        if (h.certificate.witness) {
            const Witness& x = *h.certificate.witness;
            w = {{"x", real_json(x.x)}, {"y", real_json(x.y)}, {"t", real_json(x.t)}, {"defect", real_json(x.defect)}};
        }
        hyps.push_back({{"name", h.name},
                        {"certificate",
                         {{"holds", h.certificate.holds},
                          {"witness", w},
                          {"max_violation", real_json(h.certificate.max_violation)},
                          {"grid_size", h.certificate.grid_size}}}});
    }
    j["hypotheses"] = std::move(hyps);
    nlohmann::json parts = nlohmann::json::array();
    for (const ReportPart& p : r.parts)
        parts.push_back({{"label", p.label}, {"lhs", real_json(p.lhs)}, {"rhs", real_json(p.rhs)}});
    j["parts"] = std::move(parts);
    j["notes"] = r.notes;
    return j;
}

void render_text(std::ostream& out, const CheckReport& r) {
    out << to_string(r.theorem_id) << ": " << to_string(r.status) << '\n';
    out << "  f      = " << r.inputs.function_text << " on " << "[" << format_real(r.inputs.a) << ", "
        << format_real(r.inputs.b) << "]\n";
    const auto param = [&out](const char* name, const std::optional<double>& v) {
        if (v) out << "  " << name << std::string(7 - std::string(name).size(), ' ') << "= " << format_real(*v) << '\n';
    };
    param("m", r.inputs.m);
    param("alpha", r.inputs.alpha);
    param("alpha1", r.inputs.alpha1);
    param("q", r.inputs.q);
    out << "  lhs    = " << format_real(r.lhs) << '\n';
    out << "  rhs    = " << format_real(r.rhs) << '\n';
    out << "  " << (r.identity ? "resid " : "margin") << " = " << format_real(r.margin) << '\n';
    for (const Hypothesis& h : r.hypotheses) out << "  hypothesis: " << h.name << ": " << certificate_text(h.certificate) << '\n';
    for (const ReportPart& p : r.parts)
        out << "  part: " << p.label << ": lhs = " << format_real(p.lhs) << ", rhs = " << format_real(p.rhs) << '\n';
    for (const std::string& n : r.notes) out << "  note: " << n << '\n';
}

std::string text_row(const CheckReport& r) {
    std::string s = to_string(r.theorem_id) + " a=" + format_real(r.inputs.a) + " b=" + format_real(r.inputs.b);
    if (r.inputs.m) s += " m=" + format_real(*r.inputs.m);
    if (r.inputs.alpha) s += " alpha=" + format_real(*r.inputs.alpha);
    if (r.inputs.alpha1) s += " alpha1=" + format_real(*r.inputs.alpha1);
    if (r.inputs.q) s += " q=" + format_real(*r.inputs.q);
    s += " lhs=" + format_real(r.lhs) + " rhs=" + format_real(r.rhs) + " margin=" + format_real(r.margin) + " " +
         to_string(r.status);
    return s;
}

} // namespace fracineq::cli
