#include "core/graph_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "core/errors.hpp"

namespace cubewalk {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Splits "token token" and rejects trailing junk.
std::pair<std::string_view, std::string_view> split_two(std::string_view line, int lineno) {
    const auto first_end = line.find_first_of(" \t");
    if (first_end == std::string_view::npos)
        throw ParseError(lineno, "expected two whitespace-separated fields");
    std::string_view first = line.substr(0, first_end);
    std::string_view rest = trim(line.substr(first_end));
    if (rest.empty() || rest.find_first_of(" \t") != std::string_view::npos)
        throw ParseError(lineno, "expected two whitespace-separated fields");
    return {first, rest};
}

std::int64_t parse_int(std::string_view s, int lineno, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(lineno, std::string("malformed ") + what + " '" + std::string(s) + "'");
    return value;
}

}  // namespace

WeightFunction parse_graph_text(std::string_view text) {
    std::optional<WeightFunction> f;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = trim(text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (line.empty() || line.front() == '#') continue;

        const auto [first, second] = split_two(line, lineno);
        if (!f) {
            if (first != "n") throw ParseError(lineno, "expected header 'n <dimension>'");
            const std::int64_t n = parse_int(second, lineno, "dimension");
            if (n < 1 || n > GroupElement::kMaxDimension)
                throw ParseError(lineno, "dimension must be in [1, " +
                                             std::to_string(GroupElement::kMaxDimension) + "]");
            f.emplace(static_cast<int>(n));
            continue;
        }

        if (first.size() != static_cast<std::size_t>(f->dimension()) ||
            first.find_first_not_of("01") != std::string_view::npos)
            throw ParseError(lineno, "expected a " + std::to_string(f->dimension()) +
                                         "-character bitstring, got '" + std::string(first) + "'");
        const GroupElement x = GroupElement::parse(first);
        if (x.is_zero()) throw ParseError(lineno, "loop weight not allowed");
        if (f->at(x) != 0) throw ParseError(lineno, "duplicate bitstring '" + std::string(first) + "'");
        const std::int64_t w = parse_int(second, lineno, "weight");
        if (w == 0) throw ParseError(lineno, "weight must be a non-zero integer");
        f->set(x, w);
    }
    if (!f) throw ParseError(lineno, "missing header 'n <dimension>'");
    return *f;
}

WeightFunction parse_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str());
}

std::string graph_to_text(const WeightFunction& f) {
    std::ostringstream out;
    out << "n " << f.dimension() << "\n";
    for (const auto& x : f.support()) out << x.str() << " " << f.at(x) << "\n";
    return out.str();
}

}  // namespace cubewalk
