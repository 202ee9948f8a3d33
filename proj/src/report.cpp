#include "textcat/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace textcat {

namespace {

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

std::string precision_table_text(std::span<const ArmResult> arms) {
    std::ostringstream os;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-8s", "Recall");
    os << buf;
    for (const ArmResult& arm : arms) {
        std::snprintf(buf, sizeof(buf), " %15s", arm.name.c_str());
        os << buf;
    }
    os << '\n';
    for (std::size_t level = 0; level < kRecallLevels; ++level) {
        std::snprintf(buf, sizeof(buf), "%-8.1f", static_cast<double>(level) / 10.0);
        os << buf;
        for (const ArmResult& arm : arms) {
            std::snprintf(buf, sizeof(buf), " %15s", fixed3(arm.overall.precision[level]).c_str());
            os << buf;
        }
        os << '\n';
    }
    std::snprintf(buf, sizeof(buf), "%-8s", "Avg.");
    os << buf;
    for (const ArmResult& arm : arms) {
        std::snprintf(buf, sizeof(buf), " %15s", fixed3(arm.overall.average).c_str());
        os << buf;
    }
    os << '\n';
    return os.str();
}

std::string breakdown_table_text(std::span<const ArmResult> arms, std::uint32_t threshold) {
    std::ostringstream os;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-18s %12s %12s %12s\n", "",
                  ("<" + std::to_string(threshold)).c_str(),
                  (">=" + std::to_string(threshold)).c_str(), "Total");
    os << buf;
    for (const ArmResult& arm : arms) {
        std::string low = arm.breakdown.low ? fixed3(arm.breakdown.low->average) : "-";
        std::string high = arm.breakdown.high ? fixed3(arm.breakdown.high->average) : "-";
        std::snprintf(buf, sizeof(buf), "%-18s %12s %12s %12s\n", arm.name.c_str(), low.c_str(),
                      high.c_str(), fixed3(arm.breakdown.total.average).c_str());
        os << buf;
    }
    return os.str();
}

namespace {

nlohmann::ordered_json curve_json(const PrecisionCurve& curve) {
    nlohmann::ordered_json j;
    j["precision"] = curve.precision;
    j["average"] = curve.average;
    return j;
}

}  // namespace

std::string results_json(std::span<const ArmResult> arms, std::uint32_t threshold) {
    nlohmann::ordered_json root;
    root["recall_levels"] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    root["threshold"] = threshold;
    root["arms"] = nlohmann::ordered_json::array();
    for (const ArmResult& arm : arms) {
        nlohmann::ordered_json a;
        a["name"] = arm.name;
        a["overall"] = curve_json(arm.overall);
        nlohmann::ordered_json breakdown;
        breakdown["low_count"] = arm.breakdown.low_count;
        breakdown["high_count"] = arm.breakdown.high_count;
        breakdown["low"] = arm.breakdown.low ? curve_json(*arm.breakdown.low)
                                             : nlohmann::ordered_json(nullptr);
        breakdown["high"] = arm.breakdown.high ? curve_json(*arm.breakdown.high)
                                               : nlohmann::ordered_json(nullptr);
        breakdown["total"] = curve_json(arm.breakdown.total);
        a["breakdown"] = breakdown;
        a["categories"] = nlohmann::ordered_json::array();
        for (const CategoryResult& r : arm.results) {
            nlohmann::ordered_json c;
            c["category"] = r.category;
            c["training_docs"] = r.training_count;
            c["test_docs"] = r.test_count;
            c["curve"] = curve_json(r.curve);
            a["categories"].push_back(std::move(c));
        }
        root["arms"].push_back(std::move(a));
    }
    return root.dump(2) + "\n";
}

std::string results_csv(std::span<const ArmResult> arms) {
    std::ostringstream os;
    os << "arm,category,training_docs,test_docs";
    for (std::size_t level = 0; level < kRecallLevels; ++level)
        os << ",p" << fixed3(static_cast<double>(level) / 10.0).substr(0, 3);
    os << ",average\n";
    char buf[32];
    auto row = [&os, &buf](const std::string& arm, const std::string& category,
                           std::uint32_t n_train, std::uint32_t n_test,
                           const PrecisionCurve& curve) {
        os << arm << ',' << category << ',' << n_train << ',' << n_test;
        for (double p : curve.precision) {
            std::snprintf(buf, sizeof(buf), "%.6f", p);
            os << ',' << buf;
        }
        std::snprintf(buf, sizeof(buf), "%.6f", curve.average);
        os << ',' << buf << '\n';
    };
    for (const ArmResult& arm : arms) {
        for (const CategoryResult& r : arm.results)
            row(arm.name, r.category, r.training_count, r.test_count, r.curve);
        row(arm.name, "(all)", 0, 0, arm.overall);
    }
    return os.str();
}

}  // namespace textcat
