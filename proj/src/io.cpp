#include "cabletract/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cabletract {

std::string data_dir() {
    if (const char* env = std::getenv("CABLETRACT_DATA"); env && *env) return env;
    return CABLETRACT_DATA_DIR;
}

std::string data_path(const std::string& name) { return data_dir() + "/" + name; }

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

int CsvTable::col(const std::string& name) const {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

const std::string& CsvTable::at(std::size_t row, const std::string& name) const {
    int c = col(name);
    if (c < 0) throw DomainError("csv: missing column '" + name + "'");
    if (row >= rows.size() || static_cast<std::size_t>(c) >= rows[row].size())
        throw DomainError("csv: short row " + std::to_string(row));
    return rows[row][c];
}

double CsvTable::num(std::size_t row, const std::string& name) const {
    const std::string& s = at(row, name);
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw DomainError("csv: non-numeric '" + s + "' in column " + name);
    return v;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    CsvTable t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (t.header.empty())
            t.header = split_line(line);
        else
            t.rows.push_back(split_line(line));
    }
    return t;
}

std::string fmt(double v, int prec) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    std::string s(buf);
    if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) {
        // normalise negative zero
        if (s[0] == '-') s.erase(0, 1);
    }
    return s;
}

CsvWriter::CsvWriter(std::string path, const std::string& comment,
                     const std::vector<std::string>& header)
    : path_(std::move(path)) {
    buf_ = "# " + comment + "\n";
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) buf_ += ',';
        const std::string& c = cells[i];
        if (c.find_first_of(",\"\n") != std::string::npos) {
            buf_ += '"';
            for (char ch : c) {
                if (ch == '"') buf_ += '"';
                buf_ += ch;
            }
            buf_ += '"';
        } else {
            buf_ += c;
        }
    }
    buf_ += "\r\n";
}

void CsvWriter::close() {
    if (closed_) return;
    closed_ = true;
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path_);
    out << buf_;
    if (!out) throw DomainError("write failed " + path_);
}

CsvWriter::~CsvWriter() {
    // Nothing is written unless close() was called; an exception mid-table leaves no file.
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double percentile(std::vector<double> v, double q) {
    if (v.empty()) throw DomainError("percentile of empty sample");
    std::sort(v.begin(), v.end());
    double h = (static_cast<double>(v.size()) - 1.0) * q;
    auto lo = static_cast<std::size_t>(std::floor(h));
    std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

double median(std::vector<double> v) { return percentile(std::move(v), 0.5); }

}  // namespace cabletract
