#include "zetakit/zero_cache.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "zetakit/errors.hpp"
#include "zetakit/format.hpp"

namespace zetakit::zeta {

namespace {

constexpr const char* kHeader = "index,t,residual";

}  // namespace

std::string format_zero_csv(const std::vector<ZeroRecord>& records) {
    std::string out = kHeader;
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.index);
        out += ',';
        out += decimal_min_digits(r.t, 12);
        out += ',';
        out += shortest_decimal(r.residual);
        out += '\n';
    }
    return out;
}

std::vector<ZeroRecord> parse_zero_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<ZeroRecord> records;
    if (!std::getline(in, line)) return records;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader) throw IoError("zero cache: unexpected header '" + line + "'");
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ZeroRecord r;
        std::istringstream fields(line);
        std::string index, t, residual;
        if (!std::getline(fields, index, ',') || !std::getline(fields, t, ',') ||
            !std::getline(fields, residual)) {
            throw IoError("zero cache: malformed row " + std::to_string(row));
        }
        try {
            r.index = std::stoull(index);
            r.t = std::stod(t);
            r.residual = std::stod(residual);
        } catch (const std::exception&) {
            throw IoError("zero cache: malformed row " + std::to_string(row));
        }
        if (!records.empty() && !(r.t > records.back().t)) {
            throw IoError("zero cache: rows not sorted by t at row " + std::to_string(row));
        }
        records.push_back(r);
    }
    return records;
}

std::vector<ZeroRecord> read_zero_cache(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return {};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("zero cache: cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_zero_csv(buf.str());
}

void write_zero_cache(const std::filesystem::path& path, const std::vector<ZeroRecord>& records) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("zero cache: cannot write " + path.string());
    out << format_zero_csv(records);
    out.flush();
    if (!out) throw IoError("zero cache: write failed for " + path.string());
}

std::vector<ZeroRecord> merge_zero_records(const std::vector<ZeroRecord>& existing,
                                           const std::vector<ZeroRecord>& found) {
    std::vector<ZeroRecord> merged = existing;
    for (const auto& candidate : found) {
        const bool known = std::any_of(merged.begin(), merged.end(), [&](const ZeroRecord& r) {
            return std::abs(r.t - candidate.t) < kZeroMergeTolerance;
        });
        if (!known) merged.push_back(candidate);
    }
    std::sort(merged.begin(), merged.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return a.t < b.t; });
    for (std::size_t i = 0; i < merged.size(); ++i) merged[i].index = i + 1;
    return merged;
}

}  // namespace zetakit::zeta
