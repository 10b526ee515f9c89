#include "gallai/colouring_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace gallai {

FormatError::FormatError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

// Splits on blanks and parses every token as a non-negative integer.
bool parse_ints(const std::string& line, std::vector<long long>& out) {
    out.clear();
    const char* p = line.data();
    const char* end = p + line.size();
    while (true) {
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
        if (p == end) return true;
        long long v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r'))
            return false;
        out.push_back(v);
        p = next;
    }
}

// Parses "a=<int> b=<int> c=<int>" with the given keys in order.
std::vector<long long> parse_header(const std::string& line, std::size_t lineno,
                                    const std::vector<std::string>& keys) {
    std::istringstream is(line);
    std::vector<long long> values;
    std::string token;
    for (const auto& key : keys) {
        if (!(is >> token) || token.rfind(key + "=", 0) != 0)
            throw FormatError(lineno, "header mismatch: expected '" + key + "=<int>'");
        const auto digits = token.substr(key.size() + 1);
        long long v = 0;
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc() || p != digits.data() + digits.size() || digits.empty())
            throw FormatError(lineno, "header mismatch: bad value for '" + key + "'");
        values.push_back(v);
    }
    if (is >> token) throw FormatError(lineno, "header mismatch: unexpected '" + token + "'");
    return values;
}

bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

}  // namespace

void encode(const EdgeColouring& c, std::ostream& out) {
    out << kColouringMagic << '\n';
    out << "n=" << c.n() << " r=" << c.r() << " k=" << c.k() << '\n';
    std::string buf;
    char num[16];
    std::uint64_t rank = 0;
    const auto colours = c.colours();
    for_each_subset(c.n(), c.r(), [&](std::span<const Vertex> s) {
        buf.clear();
        for (auto v : s) {
            auto [p, ec] = std::to_chars(num, num + sizeof num, v);
            buf.append(num, p);
            buf.push_back(' ');
        }
        auto [p, ec] = std::to_chars(num, num + sizeof num, static_cast<int>(colours[rank++]));
        buf.append(num, p);
        buf.push_back('\n');
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    });
}

std::string encode(const EdgeColouring& c) {
    std::ostringstream os;
    encode(c, os);
    return os.str();
}

EdgeColouring decode(std::istream& in) {
    std::string line;
    std::size_t lineno = 1;
    if (!read_line(in, line) || line != kColouringMagic)
        throw FormatError(1, "header mismatch: expected '" + std::string(kColouringMagic) + "'");
    ++lineno;
    if (!read_line(in, line)) throw FormatError(2, "header mismatch: missing 'n= r= k=' line");
    const auto hdr = parse_header(line, lineno, {"n", "r", "k"});
    const long long n = hdr[0], r = hdr[1], k = hdr[2];
    if (r < 2 || r > kMaxUniformity || n < r || n > kMaxRankedVertices || k < 1 || k > kMaxColours)
        throw FormatError(2, "header mismatch: unsupported n/r/k combination");
    const auto total = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
    if (total > kMaxEdges) throw FormatError(2, "colouring too large to materialise");

    std::vector<std::uint8_t> colours(total, 0);
    std::vector<long long> fields;
    std::vector<Vertex> edge(static_cast<std::size_t>(r));
    std::uint64_t seen = 0;
    while (read_line(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!parse_ints(line, fields))
            throw FormatError(lineno, "malformed data line");
        if (fields.size() != static_cast<std::size_t>(r) + 1)
            throw FormatError(lineno, "expected " + std::to_string(r) + " vertices and a colour");
        for (long long i = 0; i < r; ++i) {
            const auto v = fields[static_cast<std::size_t>(i)];
            if (v < 0 || v >= n) throw FormatError(lineno, "vertex " + std::to_string(v) + " out of range");
            if (i > 0 && v <= fields[static_cast<std::size_t>(i - 1)])
                throw FormatError(lineno, "vertices must be strictly increasing");
            edge[static_cast<std::size_t>(i)] = static_cast<Vertex>(v);
        }
        const auto colour = fields.back();
        if (colour < 1 || colour > k)
            throw FormatError(lineno, "colour " + std::to_string(colour) + " outside 1.." + std::to_string(k));
        auto& slot = colours[colex_rank(edge)];
        if (slot != 0) throw FormatError(lineno, "duplicate edge " + format_set(edge));
        slot = static_cast<std::uint8_t>(colour);
        ++seen;
    }
    if (seen != total) {
        for (std::uint64_t i = 0; i < total; ++i)
            if (colours[i] == 0)
                throw FormatError(0, "incomplete colouring: missing edge " +
                                         format_set(unrank_subset(i, static_cast<int>(n), static_cast<int>(r))));
    }
    try {
        return EdgeColouring(static_cast<int>(n), static_cast<int>(r), static_cast<int>(k), std::move(colours));
    } catch (const std::invalid_argument& e) {
        throw FormatError(0, e.what());
    }
}

EdgeColouring decode(const std::string& text) {
    std::istringstream is(text);
    return decode(is);
}

void write_colouring_file(const EdgeColouring& c, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    encode(c, out);
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

EdgeColouring read_colouring_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return decode(in);
}

void encode_hypergraph(const Hypergraph& h, std::ostream& out) {
    out << kHypergraphMagic << '\n';
    out << "n=" << h.n() << " r=" << h.r() << " m=" << h.size() << '\n';
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto e = h.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
        out << '\n';
    }
}

Hypergraph decode_hypergraph(std::istream& in) {
    std::string line;
    if (!read_line(in, line) || line != kHypergraphMagic)
        throw FormatError(1, "header mismatch: expected '" + std::string(kHypergraphMagic) + "'");
    if (!read_line(in, line)) throw FormatError(2, "header mismatch: missing 'n= r= m=' line");
    const auto hdr = parse_header(line, 2, {"n", "r", "m"});
    const long long n = hdr[0], r = hdr[1], m = hdr[2];
    if (r < 1 || r > kMaxUniformity || n < 0 || n > kMaxRankedVertices)
        throw FormatError(2, "header mismatch: unsupported n/r");
    std::vector<std::vector<Vertex>> edges;
    std::vector<long long> fields;
    std::size_t lineno = 2;
    while (read_line(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!parse_ints(line, fields) || fields.size() != static_cast<std::size_t>(r))
            throw FormatError(lineno, "expected " + std::to_string(r) + " vertices");
        std::vector<Vertex> e;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (fields[i] < 0 || fields[i] >= n) throw FormatError(lineno, "vertex out of range");
            if (i > 0 && fields[i] <= fields[i - 1])
                throw FormatError(lineno, "vertices must be strictly increasing");
            e.push_back(static_cast<Vertex>(fields[i]));
        }
        edges.push_back(std::move(e));
    }
    if (static_cast<long long>(edges.size()) != m)
        throw FormatError(0, "header announces " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
    try {
        return Hypergraph::from_edges(static_cast<int>(n), static_cast<int>(r), edges);
    } catch (const std::invalid_argument& e) {
        throw FormatError(0, e.what());
    }
}

}  // namespace gallai
