#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace ratapprox {

// Order-preserving key-value document: the machine-readable report format.
// Values print with 17 significant digits so identical runs produce
// byte-identical files.
class ReportDoc {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, double value);
    void add(const std::string& key, int value);
    void add_comment(const std::string& text);

    std::string str() const;

    static std::string format_double(double v);

private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace ratapprox
