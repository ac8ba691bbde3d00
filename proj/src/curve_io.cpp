#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "fermat/curve.hpp"

namespace fermat {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// One monomial: [coeff *] [S[^a]] [* T[^b]] — or a bare coefficient.
struct Monomial {
    uint64_t coeff = 1;
    int s_exp = 0, t_exp = 0;
    bool has_var = false;
};

Monomial parse_monomial(const std::string& term, int line) {
    Monomial m;
    size_t i = 0;
    auto skip_ws = [&] { while (i < term.size() && std::isspace(static_cast<unsigned char>(term[i]))) ++i; };
    auto read_int = [&]() -> uint64_t {
        size_t start = i;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
        if (start == i) fail(line, "expected an integer in '" + term + "'");
        return std::stoull(term.substr(start, i - start));
    };
    skip_ws();
    if (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
        m.coeff = read_int();
        skip_ws();
        if (i < term.size() && term[i] == '*') {
            ++i;
            skip_ws();
        }
    }
    bool seen_s = false, seen_t = false;
    while (i < term.size()) {
        char v = term[i];
        if (v != 'S' && v != 'T') fail(line, "unexpected '" + std::string(1, v) + "' in '" + term + "'");
        if ((v == 'S' && seen_s) || (v == 'T' && seen_t)) fail(line, "repeated variable in '" + term + "'");
        if (v == 'S' && seen_t) fail(line, "write S before T in '" + term + "'");
        ++i;
        int exp = 1;
        if (i < term.size() && term[i] == '^') {
            ++i;
            exp = static_cast<int>(read_int());
        }
        (v == 'S' ? m.s_exp : m.t_exp) = exp;
        (v == 'S' ? seen_s : seen_t) = true;
        m.has_var = true;
        skip_ws();
        if (i < term.size() && term[i] == '*') {
            ++i;
            skip_ws();
        }
    }
    return m;
}

BinaryForm parse_form_line(const std::string& text, int degree, int ext, int line) {
    std::string body = strip(text);
    if (body.empty()) fail(line, "empty form");

    if (body.rfind("coeffs:", 0) == 0) {
        std::string rest = strip(body.substr(7));
        if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
            fail(line, "coeffs list must look like coeffs:[c0,...,cd]");
        std::vector<FieldElement> cs;
        std::stringstream ss(rest.substr(1, rest.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = strip(item);
            if (item.empty()) fail(line, "empty coefficient entry");
            try {
                cs.push_back(gf_make(ext, static_cast<uint32_t>(std::stoul(item))));
            } catch (const Error& e) {
                fail(line, e.what());
            } catch (const std::exception&) {
                fail(line, "bad coefficient '" + item + "'");
            }
        }
        if (static_cast<int>(cs.size()) != degree + 1)
            fail(line, "expected " + std::to_string(degree + 1) + " coefficients, got " +
                           std::to_string(cs.size()));
        return BinaryForm(std::move(cs));
    }

    BinaryForm f(degree, ext);
    std::stringstream ss(body);
    std::string term;
    while (std::getline(ss, term, '+')) {
        term = strip(term);
        if (term.empty()) fail(line, "empty term");
        Monomial m = parse_monomial(term, line);
        if (!m.has_var) {
            if (m.coeff == 0) continue; // explicit zero form / zero term
            if (degree != 0) fail(line, "constant term in a form of degree " + std::to_string(degree));
        }
        if (m.s_exp + m.t_exp != degree && m.has_var)
            fail(line, "monomial S^" + std::to_string(m.s_exp) + "*T^" + std::to_string(m.t_exp) +
                           " has degree " + std::to_string(m.s_exp + m.t_exp) + ", expected " +
                           std::to_string(degree));
        if (m.coeff >> ext) fail(line, "coefficient " + std::to_string(m.coeff) + " out of range");
        FieldElement c = gf_make(ext, static_cast<uint32_t>(m.coeff));
        f.set_coeff(m.t_exp, add(f.coeff(m.t_exp), c));
    }
    return f;
}

} // namespace

BinaryForm parse_form(const std::string& text, int degree, int ext) {
    return parse_form_line(text, degree, ext, 0);
}

CurveMap parse_curve(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::optional<int> ext, degree;
    std::array<std::optional<std::string>, 6> form_src;
    std::array<int, 6> form_line{};

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (auto hash = line.find('#'); hash != std::string::npos) line = strip(line.substr(0, hash));
        if (line.empty()) continue;

        if (line.rfind("field:", 0) == 0) {
            std::string v = strip(line.substr(6));
            if (v.rfind("2^", 0) != 0) fail(line_no, "field must be written as 2^e");
            try {
                ext = std::stoi(v.substr(2));
            } catch (const std::exception&) {
                fail(line_no, "bad field '" + v + "'");
            }
            if (*ext < 1 || *ext > kMaxExt) fail(line_no, "extension degree out of range");
        } else if (line.rfind("degree:", 0) == 0) {
            try {
                degree = std::stoi(strip(line.substr(7)));
            } catch (const std::exception&) {
                fail(line_no, "bad degree");
            }
        } else if (line.size() >= 2 && line[0] == 'G' && std::isdigit(static_cast<unsigned char>(line[1]))) {
            int idx = line[1] - '0';
            if (idx > 5) fail(line_no, "form index out of range in '" + line + "'");
            size_t eq = line.find('=');
            if (eq == std::string::npos) fail(line_no, "expected 'G" + std::to_string(idx) + " = ...'");
            if (form_src[static_cast<size_t>(idx)]) fail(line_no, "duplicate G" + std::to_string(idx));
            form_src[static_cast<size_t>(idx)] = line.substr(eq + 1);
            form_line[static_cast<size_t>(idx)] = line_no;
        } else {
            fail(line_no, "unrecognized line '" + line + "'");
        }
    }
    if (!ext) throw Error(Errc::parse_error, "missing 'field: 2^e' line");
    if (!degree) throw Error(Errc::parse_error, "missing 'degree: d' line");
    std::vector<BinaryForm> forms;
    for (int i = 0; i < 6; ++i) {
        if (!form_src[static_cast<size_t>(i)])
            throw Error(Errc::parse_error, "missing form G" + std::to_string(i));
        forms.push_back(parse_form_line(*form_src[static_cast<size_t>(i)], *degree, *ext,
                                        form_line[static_cast<size_t>(i)]));
    }
    return CurveMap::validate(std::move(forms));
}

CurveMap load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_curve(ss.str());
}

std::string curve_to_text(const CurveMap& c) {
    std::string out = "field: 2^" + std::to_string(c.ext()) + "\n";
    out += "degree: " + std::to_string(c.degree()) + "\n";
    for (int i = 0; i < 6; ++i) out += "G" + std::to_string(i) + " = " + to_string(c.form(i)) + "\n";
    return out;
}

} // namespace fermat
