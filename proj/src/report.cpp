#include "cycstat/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cycstat {

using ordered_json = nlohmann::ordered_json;

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    for (const auto& t : trends)
        if (!t.strictly_decreasing) return false;
    return !incomplete;
}

std::string rat_decimal(const Rat& x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x.get_d();
    return os.str();
}

HistogramBlock histogram_block(const std::string& name, const Histogram& h, int p) {
    HistogramBlock b;
    b.name = name;
    b.p = p;
    for (const auto& [s, m] : h.bins) {
        std::vector<std::string> row;
        for (int i = 0; i < p - 1; ++i)
            row.push_back(std::to_string(s[static_cast<size_t>(i)]));
        if (p == 2) row.push_back("0");  // keep the c0,c1 shape for integer supports
        row.push_back(m.get_num().get_str());
        row.push_back(m.get_den().get_str());
        b.rows.push_back(std::move(row));
    }
    return b;
}

CheckRow exact_check(const std::string& statement, const Rat& lhs, const Rat& rhs) {
    CheckRow c;
    c.statement = statement;
    c.lhs_num = lhs.get_num().get_str();
    c.lhs_den = lhs.get_den().get_str();
    c.rhs_num = rhs.get_num().get_str();
    c.rhs_den = rhs.get_den().get_str();
    c.exact = true;
    c.pass = lhs == rhs;
    c.ratio = rhs == 0 ? (lhs == 0 ? "1" : "inf") : rat_decimal(lhs / rhs);
    return c;
}

CheckRow ratio_check(const std::string& statement, const Rat& lhs, const Real& rhs,
                     double rel_tolerance) {
    CheckRow c;
    c.statement = statement;
    c.lhs_num = lhs.get_num().get_str();
    c.lhs_den = lhs.get_den().get_str();
    Real ratio = to_real(lhs) / rhs;
    double r = ratio.get_d();
    c.rhs_num = real_str(rhs);
    c.rhs_den = "1";
    std::ostringstream os;
    os.precision(17);
    os << r;
    c.ratio = os.str();
    c.exact = false;
    c.pass = std::abs(r - 1.0) <= rel_tolerance;
    return c;
}

namespace {

ordered_json to_json(const CheckRow& c) {
    return ordered_json{{"statement", c.statement}, {"lhs_num", c.lhs_num},
                        {"lhs_den", c.lhs_den},     {"rhs_num", c.rhs_num},
                        {"rhs_den", c.rhs_den},     {"ratio", c.ratio},
                        {"exact", c.exact},         {"pass", c.pass}};
}

CheckRow check_from_json(const ordered_json& j) {
    CheckRow c;
    c.statement = j.at("statement").get<std::string>();
    c.lhs_num = j.at("lhs_num").get<std::string>();
    c.lhs_den = j.at("lhs_den").get<std::string>();
    c.rhs_num = j.at("rhs_num").get<std::string>();
    c.rhs_den = j.at("rhs_den").get<std::string>();
    c.ratio = j.at("ratio").get<std::string>();
    c.exact = j.at("exact").get<bool>();
    c.pass = j.at("pass").get<bool>();
    return c;
}

ordered_json to_json(const TrendRow& t) {
    return ordered_json{{"statement", t.statement},
                        {"labels", t.labels},
                        {"values", t.values},
                        {"strictly_decreasing", t.strictly_decreasing}};
}

TrendRow trend_from_json(const ordered_json& j) {
    TrendRow t;
    t.statement = j.at("statement").get<std::string>();
    t.labels = j.at("labels").get<std::vector<std::string>>();
    t.values = j.at("values").get<std::vector<std::string>>();
    t.strictly_decreasing = j.at("strictly_decreasing").get<bool>();
    return t;
}

ordered_json to_json(const MomentRow& m) {
    return ordered_json{{"j", m.j},
                        {"k", m.k},
                        {"empirical_num", m.empirical_num},
                        {"empirical_den", m.empirical_den},
                        {"predicted_num", m.predicted_num},
                        {"predicted_den", m.predicted_den},
                        {"gaussian_ref", m.gaussian_ref}};
}

MomentRow moment_from_json(const ordered_json& j) {
    MomentRow m;
    m.j = j.at("j").get<int>();
    m.k = j.at("k").get<int>();
    m.empirical_num = j.at("empirical_num").get<std::string>();
    m.empirical_den = j.at("empirical_den").get<std::string>();
    m.predicted_num = j.at("predicted_num").get<std::string>();
    m.predicted_den = j.at("predicted_den").get<std::string>();
    m.gaussian_ref = j.at("gaussian_ref").get<std::string>();
    return m;
}

ordered_json to_json(const HistogramBlock& h) {
    return ordered_json{{"name", h.name}, {"p", h.p}, {"rows", h.rows}};
}

HistogramBlock hist_from_json(const ordered_json& j) {
    HistogramBlock h;
    h.name = j.at("name").get<std::string>();
    h.p = j.at("p").get<int>();
    h.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    return h;
}

}  // namespace

std::string report_to_json(const Report& r) {
    ordered_json j;
    j["version"] = r.version;
    j["mode"] = r.mode;
    ordered_json cfg = ordered_json::object();
    for (const auto& [k, v] : r.config) cfg[k] = v;
    j["config"] = cfg;
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
    j["trends"] = ordered_json::array();
    for (const auto& t : r.trends) j["trends"].push_back(to_json(t));
    j["moments"] = ordered_json::array();
    for (const auto& m : r.moments) j["moments"].push_back(to_json(m));
    j["histograms"] = ordered_json::array();
    for (const auto& h : r.histograms) j["histograms"].push_back(to_json(h));
    j["incomplete"] = r.incomplete;
    j["all_pass"] = r.all_pass();
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    Report r;
    r.version = j.at("version").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    for (auto it = j.at("config").begin(); it != j.at("config").end(); ++it)
        r.config.emplace_back(it.key(), it.value().get<std::string>());
    for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
    for (const auto& t : j.at("trends")) r.trends.push_back(trend_from_json(t));
    for (const auto& m : j.at("moments")) r.moments.push_back(moment_from_json(m));
    for (const auto& h : j.at("histograms")) r.histograms.push_back(hist_from_json(h));
    r.incomplete = j.at("incomplete").get<bool>();
    return r;
}

std::string histogram_csv(const HistogramBlock& h) {
    std::ostringstream os;
    int ncoord = std::max(2, h.p - 1);
    for (int i = 0; i < ncoord; ++i) os << "c" << i << ",";
    os << "mass_numerator,mass_denominator\n";
    for (const auto& row : h.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << row[i];
        }
        os << "\n";
    }
    return os.str();
}

std::string moments_csv(const std::vector<MomentRow>& rows) {
    std::ostringstream os;
    os << "j,k,empirical_num,empirical_den,predicted_num,predicted_den,gaussian_ref\n";
    for (const auto& m : rows) {
        os << m.j << "," << m.k << "," << m.empirical_num << "," << m.empirical_den << ","
           << m.predicted_num << "," << m.predicted_den << "," << m.gaussian_ref << "\n";
    }
    return os.str();
}

void emit_report(const Report& r, const std::string& out_base, const std::string& format) {
    {
        std::ofstream f(out_base + ".json");
        if (!f) throw std::runtime_error("cannot open " + out_base + ".json for writing");
        f << report_to_json(r);
    }
    if (format == "csv") {
        for (const auto& h : r.histograms) {
            std::string path = out_base + "_" + h.name + ".csv";
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot open " + path + " for writing");
            f << histogram_csv(h);
        }
        if (!r.moments.empty()) {
            std::string path = out_base + "_moments.csv";
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot open " + path + " for writing");
            f << moments_csv(r.moments);
        }
    }
}

}  // namespace cycstat
