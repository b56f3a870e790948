#include "spectherm/scenario.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "spectherm/csv.hpp"

namespace spectherm {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& v, int line_no) {
    const std::string t = trim(v);
    const char* begin = t.c_str();
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw SchemaError("line " + std::to_string(line_no) + ": not a number: '" + t + "'");
    return x;
}

struct IniData {
    // (section, key) -> (value, line number)
    std::map<std::pair<std::string, std::string>, std::pair<std::string, int>> kv;
};

IniData parse_ini(const std::string& text) {
    IniData ini;
    std::istringstream in(text);
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw SchemaError("line " + std::to_string(line_no) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw SchemaError("line " + std::to_string(line_no) + ": expected key = value");
        if (section.empty())
            throw SchemaError("line " + std::to_string(line_no) + ": key outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!ini.kv.emplace(std::make_pair(section, key),
                            std::make_pair(value, line_no)).second)
            throw SchemaError("line " + std::to_string(line_no) + ": duplicate key '" +
                              key + "' in [" + section + "]");
    }
    return ini;
}

class IniReader {
public:
    explicit IniReader(IniData data) : data_(std::move(data)) {}

    double number(const std::string& section, const std::string& key) {
        const auto& [value, line_no] = fetch(section, key);
        return parse_number(value, line_no);
    }

    double number_or(const std::string& section, const std::string& key, double fallback) {
        if (!data_.kv.count({section, key})) return fallback;
        return number(section, key);
    }

    std::string text_or(const std::string& section, const std::string& key,
                        const std::string& fallback) {
        const auto it = data_.kv.find({section, key});
        if (it == data_.kv.end()) return fallback;
        used_.insert({section, key});
        return it->second.first;
    }

    void check_consumed() const {
        for (const auto& [sk, vl] : data_.kv)
            if (!used_.count(sk))
                throw SchemaError("line " + std::to_string(vl.second) + ": unknown key '" +
                                  sk.second + "' in [" + sk.first + "]");
    }

private:
    const std::pair<std::string, int>& fetch(const std::string& section, const std::string& key) {
        const auto it = data_.kv.find({section, key});
        if (it == data_.kv.end())
            throw SchemaError("missing key '" + key + "' in section [" + section + "]");
        used_.insert({section, key});
        return it->second;
    }

    IniData data_;
    std::set<std::pair<std::string, std::string>> used_;
};

FaceCondition read_face(IniReader& r, const std::string& section) {
    FaceCondition f;
    f.h = r.number(section, "h_W_m2K");
    f.T_inf = r.number(section, "T_inf_degC");
    return f;
}

int read_count(IniReader& r, const std::string& key) {
    const double v = r.number("solver", key);
    const int n = static_cast<int>(v);
    if (v != n || n < 1) throw SchemaError("solver: " + key + " must be a positive integer");
    return n;
}

} // namespace

Scenario parse_scenario_text(const std::string& text) {
    IniReader r(parse_ini(text));
    Scenario s;
    s.geometry.r_in = r.number("geometry", "r_in_m");
    s.geometry.r_out = r.number("geometry", "r_out_m");
    s.geometry.height = r.number("geometry", "height_m");
    s.props.rho = r.number("props", "rho_kg_m3");
    s.props.cp = r.number("props", "cp_J_kgK");
    s.props.k_r = r.number("props", "k_r_W_mK");
    s.props.k_z = r.number("props", "k_z_W_mK");
    s.faces.radial_inner = read_face(r, "face.radial_inner");
    s.faces.radial_outer = read_face(r, "face.radial_outer");
    s.faces.axial_low = read_face(r, "face.axial_low");
    s.faces.axial_high = read_face(r, "face.axial_high");
    s.n_r = read_count(r, "n_r");
    s.n_z = read_count(r, "n_z");
    s.dt = r.number_or("solver", "dt_s", 1.0);
    s.T_init = r.number_or("solver", "T_init_degC", 18.0);
    s.profile = r.text_or("solver", "profile", "");
    r.check_consumed();

    s.geometry.validate();
    s.props.validate();
    s.faces.validate();
    if (!(s.dt > 0.0)) throw SchemaError("solver: dt_s must be > 0");
    if (!std::isfinite(s.T_init)) throw SchemaError("solver: T_init_degC must be finite");
    return s;
}

Scenario parse_scenario_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_scenario_text(text);
    } catch (const SchemaError& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream out;
    const auto face = [&](const char* name, const FaceCondition& f) {
        out << "[face." << name << "]\n"
            << "h_W_m2K = " << exact_number(f.h) << "\n"
            << "T_inf_degC = " << exact_number(f.T_inf) << "\n\n";
    };
    out << "[geometry]\n"
        << "r_in_m = " << exact_number(s.geometry.r_in) << "\n"
        << "r_out_m = " << exact_number(s.geometry.r_out) << "\n"
        << "height_m = " << exact_number(s.geometry.height) << "\n\n"
        << "[props]\n"
        << "rho_kg_m3 = " << exact_number(s.props.rho) << "\n"
        << "cp_J_kgK = " << exact_number(s.props.cp) << "\n"
        << "k_r_W_mK = " << exact_number(s.props.k_r) << "\n"
        << "k_z_W_mK = " << exact_number(s.props.k_z) << "\n\n";
    face("radial_inner", s.faces.radial_inner);
    face("radial_outer", s.faces.radial_outer);
    face("axial_low", s.faces.axial_low);
    face("axial_high", s.faces.axial_high);
    out << "[solver]\n"
        << "n_r = " << s.n_r << "\n"
        << "n_z = " << s.n_z << "\n"
        << "dt_s = " << exact_number(s.dt) << "\n"
        << "T_init_degC = " << exact_number(s.T_init) << "\n";
    if (!s.profile.empty()) out << "profile = " << s.profile << "\n";
    return out.str();
}

LoadProfile parse_profile_text(const std::string& text, const CellGeometry& geometry) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool power_form = false;
    bool header_seen = false;
    LoadProfile p;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line == "t_s,q_W_per_m3") power_form = false;
            else if (line == "t_s,P_W") power_form = true;
            else throw SchemaError("profile line " + std::to_string(line_no) +
                                   ": header must be t_s,q_W_per_m3 or t_s,P_W");
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw SchemaError("profile line " + std::to_string(line_no) + ": expected two fields");
        p.times.push_back(parse_number(line.substr(0, comma), line_no));
        double v = parse_number(line.substr(comma + 1), line_no);
        if (power_form) v = power_to_volumetric(v, geometry);
        p.q.push_back(v);
    }
    if (!header_seen) throw SchemaError("profile: empty file");
    p.validate();
    return p;
}

LoadProfile parse_profile_file(const std::string& path, const CellGeometry& geometry) {
    const std::string text = read_text_file(path);
    try {
        return parse_profile_text(text, geometry);
    } catch (const SchemaError& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

std::string resolve_relative(const std::string& base_file, const std::string& ref) {
    namespace fs = std::filesystem;
    fs::path p(ref);
    if (p.is_absolute()) return ref;
    return (fs::path(base_file).parent_path() / p).string();
}

} // namespace spectherm
