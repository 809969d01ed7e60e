#include "eisres/report.hpp"

#include "json.hpp"

#include <cstdio>
#include <sstream>

namespace eisres {

std::string format_real(const Real& x) {
    const int digits = std::max(17, static_cast<int>(static_cast<double>(x.precision()) * 0.30102999566398) - 1);
    return x.to_string(digits) + "@p" + std::to_string(x.precision());
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf) + "@p53";
}

void Report::add(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }
void Report::add(const std::string& key, long value) { add(key, std::to_string(value)); }
void Report::add(const std::string& key, unsigned long value) { add(key, std::to_string(value)); }
void Report::add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
void Report::add(const std::string& key, const Rational& value) { add(key, value.get_str()); }
void Report::add(const std::string& key, const Integer& value) { add(key, value.get_str()); }
void Report::add(const std::string& key, const Real& value) { add(key, format_real(value)); }

void Report::add(const std::string& key, const Complex& value) {
    add(key + ".re", value.re);
    add(key + ".im", value.im);
}

void Report::add_double(const std::string& key, double value) { add(key, format_double(value)); }

std::string Report::get(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return v;
    return "";
}

std::string Report::text() const {
    std::ostringstream os;
    os << "eisres-report v" << kReportVersion << '\n';
    for (const auto& [k, v] : entries_) os << k << '=' << v << '\n';
    return os.str();
}

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["format"] = "eisres-report";
    j["version"] = kReportVersion;
    nlohmann::ordered_json body = nlohmann::ordered_json::object();
    for (const auto& [k, v] : entries_) body[k] = v;
    j["entries"] = body;
    return j.dump(2) + "\n";
}

}  // namespace eisres
