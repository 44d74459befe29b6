#include "ratapprox/report_doc.hpp"

#include <cstdio>

namespace ratapprox {

void ReportDoc::add(const std::string& key, const std::string& value) {
    lines_.emplace_back(key, value);
}

void ReportDoc::add(const std::string& key, double value) {
    lines_.emplace_back(key, format_double(value));
}

void ReportDoc::add(const std::string& key, int value) {
    lines_.emplace_back(key, std::to_string(value));
}

void ReportDoc::add_comment(const std::string& text) {
    lines_.emplace_back("#", text);
}

std::string ReportDoc::str() const {
    std::string out;
    for (const auto& [key, value] : lines_) {
        if (key == "#") {
            out += "# " + value + "\n";
        } else {
            out += key + " = " + value + "\n";
        }
    }
    return out;
}

std::string ReportDoc::format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace ratapprox
