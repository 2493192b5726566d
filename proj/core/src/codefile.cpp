#include "grasscode/codefile.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace grasscode {

void write_code_file(std::ostream& out, const SubspaceCode& code) {
    uint32_t q = code.field.q();
    out << "SUBSPACE-CODE v1\n";
    out << "q=" << q << " n=" << code.n << " k=" << code.k << " d=" << code.d
        << " M=" << code.size() << "\n";
    out << "provenance=" << code.provenance << "\n";
    bool first = true;
    for (size_t si = 0; si < code.strata.size(); ++si) {
        uint64_t count = code.strata[si].count(q);
        for (uint64_t u = 0; u < count; ++u) {
            if (!first) out << "\n";
            first = false;
            Subspace w = code.word(si, u);
            const Matrix& b = w.basis();
            for (size_t i = 0; i < b.rows(); ++i) {
                for (size_t c = 0; c < b.cols(); ++c) {
                    if (q <= 10) {
                        out << static_cast<char>('0' + b.at(i, c));
                    } else {
                        if (c > 0) out << ",";
                        out << b.at(i, c);
                    }
                }
                out << "\n";
            }
        }
    }
}

namespace {

uint64_t parse_field(const std::string& tok, const char* key) {
    std::string prefix = std::string(key) + "=";
    require(tok.rfind(prefix, 0) == 0, "malformed header line");
    std::string num = tok.substr(prefix.size());
    require(!num.empty() && num.find_first_not_of("0123456789") == std::string::npos,
            "malformed header line");
    return std::stoull(num);
}

std::vector<uint32_t> parse_row(const std::string& line, size_t n, uint32_t q) {
    std::vector<uint32_t> row;
    row.reserve(n);
    if (q <= 10) {
        require(line.size() == n, "basis row has wrong length");
        for (char c : line) {
            require(c >= '0' && c <= '9', "basis row symbol out of range");
            row.push_back(static_cast<uint32_t>(c - '0'));
        }
    } else {
        size_t pos = 0;
        while (pos <= line.size()) {
            size_t comma = line.find(',', pos);
            std::string item = line.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            require(!item.empty() &&
                        item.find_first_not_of("0123456789") == std::string::npos,
                    "basis row symbol out of range");
            row.push_back(static_cast<uint32_t>(std::stoul(item)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        require(row.size() == n, "basis row has wrong length");
    }
    for (uint32_t v : row) require(v < q, "basis row symbol out of range");
    return row;
}

// Pivot columns of a canonical reduced row echelon basis; throws when the
// matrix is not in that form.
std::vector<size_t> canonical_pivots(const Matrix& b) {
    std::vector<size_t> pivots;
    for (size_t i = 0; i < b.rows(); ++i) {
        size_t p = b.cols();
        for (size_t c = 0; c < b.cols(); ++c)
            if (b.at(i, c) != 0) {
                p = c;
                break;
            }
        require(p < b.cols(), "basis contains a zero row");
        require(b.at(i, p) == 1, "basis is not in reduced row echelon form");
        require(pivots.empty() || p > pivots.back(),
                "basis is not in reduced row echelon form");
        for (size_t r = 0; r < b.rows(); ++r)
            require(r == i || b.at(r, p) == 0,
                    "basis is not in reduced row echelon form");
        pivots.push_back(p);
    }
    return pivots;
}

} // namespace

SubspaceCode read_code_file(std::istream& in, std::ostream* warnings) {
    std::ostream& warn = warnings ? *warnings : std::cerr;
    std::string line;

    require(static_cast<bool>(std::getline(in, line)), "empty code file");
    require(line == "SUBSPACE-CODE v1", "unrecognized code file signature");

    require(static_cast<bool>(std::getline(in, line)), "missing header line");
    std::istringstream hs(line);
    std::string tq, tn, tk, td, tm, extra;
    require(static_cast<bool>(hs >> tq >> tn >> tk >> td >> tm) && !(hs >> extra),
            "malformed header line");
    uint32_t q = static_cast<uint32_t>(parse_field(tq, "q"));
    size_t n = parse_field(tn, "n");
    size_t k = parse_field(tk, "k");
    size_t d = parse_field(td, "d");
    uint64_t m_declared = parse_field(tm, "M");
    require(q >= 2, "q >= 2 violated");
    require(k >= 1 && k <= n, "1 <= k <= n violated");

    require(static_cast<bool>(std::getline(in, line)), "missing provenance line");
    require(line.rfind("provenance=", 0) == 0, "missing provenance line");
    std::string provenance = line.substr(std::string("provenance=").size());

    Field f(q);
    SubspaceCode code{f, n, k, d, {}, provenance};

    std::vector<std::string> block;
    auto flush_block = [&]() {
        if (block.empty()) return;
        require(block.size() == k, "block has wrong number of rows");
        Matrix b(f, k, n);
        for (size_t i = 0; i < k; ++i) {
            std::vector<uint32_t> row = parse_row(block[i], n, q);
            for (size_t c = 0; c < n; ++c) b.set(i, c, row[c]);
        }
        Subspace w(b, canonical_pivots(b));
        code.strata.push_back(Stratum{w.id_vector(), filling_of(w), {}, {0, 0},
                                      "word " + std::to_string(code.strata.size())});
        block.clear();
    };

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush_block();
            continue;
        }
        block.push_back(line);
        require(block.size() <= k, "block has wrong number of rows");
    }
    flush_block();

    if (code.size() != m_declared)
        warn << "warning: header M=" << m_declared << " but file contains "
             << code.size() << " blocks\n";
    return code;
}

} // namespace grasscode
