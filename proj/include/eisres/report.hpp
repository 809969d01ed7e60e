#ifndef EISRES_REPORT_HPP
#define EISRES_REPORT_HPP

// Line-oriented report:
//
//   eisres-report v1
//   key=value
//   ...
//
// Rationals are written "p/q", multiprecision reals as a decimal followed by
// "@p<bits>", doubles as %.17g followed by "@p53". The JSON form carries the
// same entries, in order, as strings.

#include "eisres/real.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eisres {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportVersion = 1;

class Report {
  public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, long value);
    void add(const std::string& key, int value) { add(key, static_cast<long>(value)); }
    void add(const std::string& key, unsigned long value);
    void add(const std::string& key, unsigned value) { add(key, static_cast<unsigned long>(value)); }
    void add(const std::string& key, bool value);
    void add(const std::string& key, const Rational& value);
    void add(const std::string& key, const Integer& value);
    void add(const std::string& key, const Real& value);
    void add(const std::string& key, const Complex& value);
    void add_double(const std::string& key, double value);

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
    /// Value of `key`, or "" if absent.
    std::string get(const std::string& key) const;

    std::string text() const;
    std::string json() const;

  private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

std::string format_real(const Real& x);
std::string format_double(double x);

}  // namespace eisres

#endif
