#pragma once

#include <string>
#include <vector>

#include "cycstat/hist.hpp"
#include "cycstat/rational.hpp"

namespace cycstat {

inline constexpr const char* kArtifactVersion = "cycstat 0.1.0";

// One exact or approximate comparison: an asserted equality is exact and
// pass means bit-equal; otherwise ratio carries lhs/rhs for trend reading.
struct CheckRow {
    std::string statement;
    std::string lhs_num, lhs_den;
    std::string rhs_num, rhs_den;
    std::string ratio;  // decimal string, human-readable only
    bool exact = false;
    bool pass = false;

    friend bool operator==(const CheckRow&, const CheckRow&) = default;
};

// A monotone-trend assertion over a parameter ladder.
struct TrendRow {
    std::string statement;
    std::vector<std::string> labels;
    std::vector<std::string> values;  // decimal strings of |ratio - 1| or distances
    bool strictly_decreasing = false;

    friend bool operator==(const TrendRow&, const TrendRow&) = default;
};

struct MomentRow {
    int j = 0;
    int k = 0;
    std::string empirical_num, empirical_den;
    std::string predicted_num, predicted_den;
    std::string gaussian_ref;

    friend bool operator==(const MomentRow&, const MomentRow&) = default;
};

struct HistogramBlock {
    std::string name;
    int p = 2;
    // rows of (c0, ..., c_{p-2}, mass_num, mass_den), all decimal strings
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const HistogramBlock&, const HistogramBlock&) = default;
};

struct Report {
    std::string version = kArtifactVersion;
    std::string mode;
    std::vector<std::pair<std::string, std::string>> config;  // echoed key/value pairs
    std::vector<CheckRow> checks;
    std::vector<TrendRow> trends;
    std::vector<MomentRow> moments;
    std::vector<HistogramBlock> histograms;
    bool incomplete = false;

    bool all_pass() const;

    friend bool operator==(const Report&, const Report&) = default;
};

HistogramBlock histogram_block(const std::string& name, const Histogram& h, int p);

CheckRow exact_check(const std::string& statement, const Rat& lhs, const Rat& rhs);
CheckRow ratio_check(const std::string& statement, const Rat& lhs, const Real& rhs,
                     double rel_tolerance);

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);

// Histogram CSV: header c0,...,c_{p-2},mass_numerator,mass_denominator.
std::string histogram_csv(const HistogramBlock& h);
// Moments CSV: j,k,empirical_num,empirical_den,predicted_num,predicted_den,gaussian_ref.
std::string moments_csv(const std::vector<MomentRow>& rows);

// Writes <out>.json always, histogram/moment CSVs when --format csv is on.
void emit_report(const Report& r, const std::string& out_base, const std::string& format);

std::string rat_decimal(const Rat& x, int digits = 17);

}  // namespace cycstat
