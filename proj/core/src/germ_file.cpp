#include "indexform/germ_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace indexform {

namespace {

std::string trimmed(const std::string &s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string &s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(trimmed(s.substr(start)));
            break;
        }
        out.push_back(trimmed(s.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

bool valid_var_name(const std::string &name) {
    if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::islower(static_cast<unsigned char>(c)) &&
            !std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

GermFile read_germ_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open germ file '" + path + "'", 0, 0);
    GermFile file;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'key: value'", lineno, 1);
        std::string key = trimmed(t.substr(0, colon));
        std::string value = trimmed(t.substr(colon + 1));
        if (value.empty()) throw ParseError("empty value for '" + key + "'", lineno, 1);
        if (key == "vars") {
            for (const auto &v : split_commas(value)) {
                if (!valid_var_name(v))
                    throw ParseError("invalid variable name '" + v + "'", lineno, 1);
                file.vars.push_back(v);
            }
        } else if (key == "f") {
            for (auto &p : split_commas(value)) file.f_text.push_back(std::move(p));
        } else if (key == "omega") {
            for (auto &p : split_commas(value)) file.omega_text.push_back(std::move(p));
        } else {
            throw ParseError("unknown key '" + key + "'", lineno, 1);
        }
    }
    if (file.vars.empty()) throw ParseError("missing 'vars:' line", lineno, 1);
    if (file.omega_text.empty()) throw ParseError("missing 'omega:' line", lineno, 1);
    return file;
}

GermProblem germ_from_strings(const std::vector<std::string> &vars,
                              const std::vector<std::string> &f_text,
                              const std::vector<std::string> &omega_text) {
    for (const auto &v : vars)
        if (!valid_var_name(v)) throw ParseError("invalid variable name '" + v + "'", 0, 0);
    GermProblem g;
    g.ring = make_ring(vars);
    for (const auto &s : f_text) g.f.push_back(parse_poly(s, g.ring));
    for (const auto &s : omega_text) g.A.push_back(parse_poly(s, g.ring));
    g.validate();
    return g;
}

GermProblem parse_germ_file(const std::string &path) {
    GermFile file = read_germ_file(path);
    return germ_from_strings(file.vars, file.f_text, file.omega_text);
}

}  // namespace indexform
