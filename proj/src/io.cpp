#include "simplicia/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "simplicia/error.hpp"

namespace simplicia {

namespace {

bool is_number(const std::string& s) {
    return !s.empty() && s.size() < 19 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

bool token_less(const std::string& a, const std::string& b) {
    const bool na = is_number(a), nb = is_number(b);
    if (na && nb) {
        const auto x = std::stoll(a), y = std::stoll(b);
        if (x != y) return x < y;
        return a < b;
    }
    if (na != nb) return na;
    return a < b;
}

Complex parse_cplx(std::string_view text, std::string fallback_name) {
    std::string name = std::move(fallback_name);
    std::vector<std::vector<std::string>> facets;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            const std::string body = trim(std::string_view(t).substr(1));
            if (body.rfind("name:", 0) == 0) name = trim(std::string_view(body).substr(5));
            continue;
        }
        std::istringstream ls(t);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        std::vector<std::string> sorted(toks);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError("line " + std::to_string(lineno) + ": degenerate facet");
        facets.push_back(std::move(toks));
    }
    if (facets.empty()) throw ParseError("empty complex");
    return from_tokens(facets, std::move(name));
}

Complex read_cplx(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_cplx(buf.str(), path.stem().string());
}

std::string to_cplx(const Complex& K) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : K.facets()) {
        auto toks = K.tokens(f);
        std::sort(toks.begin(), toks.end(), token_less);
        rows.push_back(std::move(toks));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), token_less);
    });
    std::ostringstream os;
    if (!K.name().empty()) os << "# name: " << K.name() << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
        os << '\n';
    }
    return os.str();
}

void write_cplx(const std::filesystem::path& path, const Complex& K) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << to_cplx(K);
}

}  // namespace simplicia
