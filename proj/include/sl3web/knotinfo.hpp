#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl3web/analysis.hpp"
#include "sl3web/homfly.hpp"

namespace sl3web {

/// Variable names and mirroring policy for ingested HOMFLY polynomials.
/// Knot tables fix one chirality per knot, which need not be the positive
/// one; Auto picks, per knot, the q <-> q^-1 side whose leading degree is the
/// positive-diagram side (the smaller of the two).
struct HomflyConvention {
    std::string a_name = "v";
    std::string z_name = "z";
    enum class Mirror { Auto, Never, Always } mirror = Mirror::Auto;

    static HomflyConvention from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    /// Short fingerprint embedded in reports so table runs are auditable.
    std::string fingerprint() const;
};

struct KnotInfoRow {
    std::string name;
    HomflyPoly homfly;
};

/// CSV with a header naming at least `name` and `homfly_polynomial` columns
/// (separator `,` or `;`, detected from the header).
std::vector<KnotInfoRow> parse_knotinfo_csv(std::istream& in, const HomflyConvention& conv);

/// Specialization with the convention's mirror policy applied.
LaurentPoly specialized_positive_side(const HomflyPoly& p, const HomflyConvention& conv);

struct TableRow {
    std::string name;
    bool positive_braid = false;
    int gamma3 = 0;
};

/// Expected-values CSV: name,positive_braid(Y/N),gamma3.
std::vector<TableRow> parse_expected_table(std::istream& in);

struct TableCheck {
    bool calibrated = false;
    int rows_expected = 0;
    int rows_present = 0;
    int rows_matched = 0;
    std::vector<std::string> missing;
    std::vector<std::string> mismatches;
    bool all_present_match() const { return rows_matched == rows_present && calibrated; }
    bool complete() const { return rows_present == rows_expected && all_present_match(); }
};

/// Verifies gamma3 (and gamma2 = 1) of every expected row present in the
/// ingested data. Calibration on 3_1 must pass before anything is trusted.
TableCheck check_table(const std::vector<KnotInfoRow>& data, const std::vector<TableRow>& expected,
                       const HomflyConvention& conv);

/// Loose knot-name normalization: "12_{n888}", "12n_0888" and "12n888" agree.
std::string normalize_knot_name(const std::string& name);

}  // namespace sl3web
