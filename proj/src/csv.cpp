#include "owsn/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace owsn::csv {

long long round_half_away(double value) { return std::llround(value); }

std::string fixed(double value, int decimals) {
    if (decimals < 0 || decimals > 12) throw std::invalid_argument("csv::fixed: bad decimals");
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) scale *= 10.0;

    long long scaled = std::llround(value * scale);
    const bool negative = scaled < 0;
    unsigned long long mag = negative ? -static_cast<unsigned long long>(scaled) : scaled;

    std::string digits = std::to_string(mag);
    std::string out;
    if (decimals == 0) {
        out = digits;
    } else {
        if (digits.size() <= static_cast<std::size_t>(decimals))
            digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - decimals) + "." +
              digits.substr(digits.size() - decimals);
    }
    if (negative && mag != 0) out.insert(out.begin(), '-');
    return out;
}

std::string compact(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc{}) throw std::runtime_error("csv::compact: to_chars failed");
    return std::string(buf, res.ptr);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

}  // namespace owsn::csv
