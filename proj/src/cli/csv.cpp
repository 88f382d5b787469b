// csv.cpp — Sweep-row serialization

#include "csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qhe::cli {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (const char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return h;
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

static const char* kSweepHeader =
    "tau,eta_carnot,eta_star,eta_star_normalized,p_max,c_star,"
    "bound_lower,bound_cnca,bound_upper,flags";

void write_sweep_csv(const std::string& path, const std::vector<std::string>& echo_lines,
                     const std::vector<opt::SweepRow>& rows) {
    std::ostringstream os;
    std::string echo_all;
    for (const auto& l : echo_lines) {
        os << "# " << l << "\n";
        echo_all += l;
        echo_all += '\n';
    }
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(echo_all)));
    os << "# config_hash = " << hash << "\n";
    os << kSweepHeader << "\n";
    for (const auto& r : rows) {
        os << g17(r.tau) << ',' << g17(r.eta_carnot) << ',' << g17(r.eta_star) << ','
           << g17(r.eta_star_normalized) << ',' << g17(r.p_max) << ',' << g17(r.c_star)
           << ',' << g17(r.bound_lower) << ',' << g17(r.bound_cnca) << ','
           << g17(r.bound_upper) << ',' << r.flags << "\n";
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << os.str();
}

std::vector<opt::SweepRow> read_sweep_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<opt::SweepRow> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kSweepHeader)
                throw std::runtime_error(path + ": unexpected header: " + line);
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (fields.size() != 10)
            throw std::runtime_error(path + ": bad row (expected 10 fields): " + line);
        opt::SweepRow r;
        const auto num = [&](int i) { return std::strtod(fields[i].c_str(), nullptr); };
        r.tau = num(0);
        r.eta_carnot = num(1);
        r.eta_star = num(2);
        r.eta_star_normalized = num(3);
        r.p_max = num(4);
        r.c_star = num(5);
        r.bound_lower = num(6);
        r.bound_cnca = num(7);
        r.bound_upper = num(8);
        r.flags = fields[9];
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_table_csv(const std::string& path, const std::vector<std::string>& echo_lines,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows) {
    std::ostringstream os;
    std::string echo_all;
    for (const auto& l : echo_lines) {
        os << "# " << l << "\n";
        echo_all += l;
        echo_all += '\n';
    }
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(echo_all)));
    os << "# config_hash = " << hash << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows) {
        if (row.size() != columns.size())
            throw std::runtime_error(path + ": row width mismatch");
        for (std::size_t i = 0; i < row.size(); ++i)
            os << g17(row[i]) << (i + 1 < row.size() ? "," : "\n");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << os.str();
}

} // namespace qhe::cli
