#include "nilbohr/setio.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "nilbohr/errors.hpp"

namespace nilbohr {

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, int line) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(line, "expected integer, got '" + std::string(s) + "'");
    return v;
}

// A token is "n" or "a-b"; the range dash is the first '-' that is not a
// leading sign and not immediately after the other number's sign position.
std::pair<std::int64_t, std::int64_t> parse_token(std::string_view tok, int line) {
    std::size_t dash = std::string_view::npos;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == '-' && tok[i - 1] != '-') {
            dash = i;
            break;
        }
    }
    if (dash == std::string_view::npos) {
        std::int64_t v = parse_int(tok, line);
        return {v, v};
    }
    std::int64_t a = parse_int(tok.substr(0, dash), line);
    std::int64_t b = parse_int(tok.substr(dash + 1), line);
    if (b < a) throw ParseError(line, "descending range '" + std::string(tok) + "'");
    return {a, b};
}

}  // namespace

WindowedSet parse_set_text(std::istream& in) {
    std::string raw;
    int line = 0;
    std::optional<WindowedSet> set;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = trimmed(raw);
        if (text.empty()) continue;
        if (!set) {
            if (!text.starts_with("#window"))
                throw ParseError(line, "missing '#window lo hi' header");
            std::istringstream hs{std::string(text.substr(7))};
            std::int64_t lo, hi;
            if (!(hs >> lo >> hi))
                throw ParseError(line, "malformed '#window lo hi' header");
            std::string rest;
            if (hs >> rest) throw ParseError(line, "trailing content after window header");
            if (hi < lo) throw ParseError(line, "window with hi < lo");
            set.emplace(lo, hi);
            continue;
        }
        if (text.front() == '#') continue;
        auto [a, b] = parse_token(text, line);
        if (a < set->lo() || b >= set->hi())
            throw ParseError(line, "members outside the declared window");
        for (std::int64_t v = a; v <= b; ++v) set->insert(v);
    }
    if (!set) throw ParseError(line == 0 ? 1 : line, "missing '#window lo hi' header");
    return *set;
}

void serialize_set_text(const WindowedSet& s, std::ostream& out) {
    out << "#window " << s.lo() << " " << s.hi() << "\n";
    auto m = s.first();
    while (m) {
        std::int64_t start = *m;
        std::int64_t end = start;
        while (true) {
            auto nxt = s.next_member(end + 1);
            if (nxt && *nxt == end + 1) {
                end = *nxt;
            } else {
                m = nxt;
                break;
            }
        }
        if (start == end)
            out << start << "\n";
        else
            out << start << "-" << end << "\n";
    }
}

WindowedSet load_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open set file '" + path + "'");
    return parse_set_text(in);
}

void save_set_file(const WindowedSet& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write set file '" + path + "'");
    serialize_set_text(s, out);
}

std::string set_to_text(const WindowedSet& s) {
    std::ostringstream out;
    serialize_set_text(s, out);
    return out.str();
}

WindowedSet set_from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_set_text(in);
}

}  // namespace nilbohr
