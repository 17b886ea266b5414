#include "sl3web/knotinfo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sl3web {

HomflyConvention HomflyConvention::from_json(const nlohmann::json& j) {
    HomflyConvention c;
    c.a_name = j.value("a_variable", c.a_name);
    c.z_name = j.value("z_variable", c.z_name);
    const std::string m = j.value("mirror", "auto");
    if (m == "auto")
        c.mirror = Mirror::Auto;
    else if (m == "never")
        c.mirror = Mirror::Never;
    else if (m == "always")
        c.mirror = Mirror::Always;
    else
        throw std::invalid_argument("convention: mirror must be auto, never or always");
    return c;
}

nlohmann::json HomflyConvention::to_json() const {
    const char* m = mirror == Mirror::Auto ? "auto" : mirror == Mirror::Never ? "never" : "always";
    return {{"a_variable", a_name}, {"z_variable", z_name}, {"mirror", m}};
}

std::string HomflyConvention::fingerprint() const {
    // FNV-1a over the canonical json dump
    const std::string s = to_json().dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << (h & 0xffffffffffffull);
    return out.str();
}

std::string normalize_knot_name(const std::string& name) {
    std::string flat;
    for (char ch : name) {
        if (std::isalnum(static_cast<unsigned char>(ch)))
            flat.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    // strip leading zeros of the trailing index: 12n0888 -> 12n888
    std::size_t i = flat.find_last_not_of("0123456789");
    if (i != std::string::npos && i + 1 < flat.size()) {
        std::size_t j = i + 1;
        while (j + 1 < flat.size() && flat[j] == '0') flat.erase(j, 1);
    }
    return flat;
}

namespace {

std::vector<std::string> split_line(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
        } else if (ch == sep && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    for (auto& s : out) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    }
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

std::vector<KnotInfoRow> parse_knotinfo_csv(std::istream& in, const HomflyConvention& conv) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("knot csv: empty input");
    const char sep = header.find(';') != std::string::npos ? ';' : ',';
    const auto cols = split_line(header, sep);
    int name_col = -1, poly_col = -1;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        const std::string c = lower(cols[i]);
        if (c == "name" || c == "knot") name_col = static_cast<int>(i);
        if (c == "homfly_polynomial" || c == "homfly" || c == "homflypt") poly_col = static_cast<int>(i);
    }
    if (name_col < 0 || poly_col < 0)
        throw std::invalid_argument("knot csv: need 'name' and 'homfly_polynomial' columns");

    std::vector<KnotInfoRow> rows;
    std::string line;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto f = split_line(line, sep);
        if (static_cast<int>(f.size()) <= std::max(name_col, poly_col))
            throw std::invalid_argument("knot csv: short row at line " + std::to_string(lineno));
        KnotInfoRow r;
        r.name = f[name_col];
        try {
            r.homfly = parse_homfly_expression(f[poly_col], conv.a_name, conv.z_name);
        } catch (const std::exception& ex) {
            throw std::invalid_argument("knot csv: row '" + r.name + "': " + ex.what());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

LaurentPoly specialized_positive_side(const HomflyPoly& p, const HomflyConvention& conv) {
    LaurentPoly s = specialize_sl3(p);
    switch (conv.mirror) {
        case HomflyConvention::Mirror::Never:
            return s;
        case HomflyConvention::Mirror::Always:
            return s.substitute_q_inverse();
        case HomflyConvention::Mirror::Auto: {
            if (s.is_zero()) return s;
            const LaurentPoly t = s.substitute_q_inverse();
            return t.degree() < s.degree() ? t : s;
        }
    }
    return s;
}

std::vector<TableRow> parse_expected_table(std::istream& in) {
    std::vector<TableRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_line(line, ',');
        if (first && lower(f[0]) == "name") {
            first = false;
            continue;
        }
        first = false;
        if (f.size() < 3) throw std::invalid_argument("expected table: need name,positive_braid,gamma3");
        TableRow r;
        r.name = f[0];
        const std::string pb = lower(f[1]);
        r.positive_braid = pb == "y" || pb == "yes" || pb == "1" || pb == "true";
        r.gamma3 = std::stoi(f[2]);
        rows.push_back(std::move(r));
    }
    return rows;
}

TableCheck check_table(const std::vector<KnotInfoRow>& data, const std::vector<TableRow>& expected,
                       const HomflyConvention& conv) {
    TableCheck out;
    out.rows_expected = static_cast<int>(expected.size());

    std::map<std::string, const KnotInfoRow*> by_name;
    for (const auto& r : data) by_name[normalize_knot_name(r.name)] = &r;

    // calibration: the trefoil must specialize to leading data (1, 1, 2) at
    // degree -2 before any other row is trusted
    auto it31 = by_name.find("31");
    if (it31 == by_name.end()) {
        out.mismatches.push_back("calibration: no 3_1 row in the data");
        return out;
    }
    {
        const LaurentPoly p = specialized_positive_side(it31->second->homfly, conv);
        const Gammas g = gammas(p);
        if (g.n == -2 && g.gamma1 == 1 && g.gamma2 == 1 && g.gamma3 == 2) {
            out.calibrated = true;
        } else {
            out.mismatches.push_back("calibration: 3_1 specialization has (n, g1, g2, g3) = (" +
                                     std::to_string(g.n) + ", " + std::to_string(g.gamma1) + ", " +
                                     std::to_string(g.gamma2) + ", " + std::to_string(g.gamma3) +
                                     "), expected (-2, 1, 1, 2)");
            return out;
        }
    }

    for (const auto& row : expected) {
        auto it = by_name.find(normalize_knot_name(row.name));
        if (it == by_name.end()) {
            out.missing.push_back(row.name);
            continue;
        }
        ++out.rows_present;
        const LaurentPoly p = specialized_positive_side(it->second->homfly, conv);
        const Gammas g = gammas(p);
        bool ok = true;
        std::string why;
        if (g.gamma3 != row.gamma3) {
            ok = false;
            why = "gamma3 = " + std::to_string(g.gamma3) + ", expected " + std::to_string(row.gamma3);
        }
        // every tabulated knot is fibered, so gamma2 = 1
        if (g.gamma2 != 1) {
            ok = false;
            if (!why.empty()) why += "; ";
            why += "gamma2 = " + std::to_string(g.gamma2) + ", expected 1";
        }
        if (ok)
            ++out.rows_matched;
        else
            out.mismatches.push_back(row.name + ": " + why);
    }
    return out;
}

}  // namespace sl3web
