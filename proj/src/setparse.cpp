#include "circstab/setparse.hpp"

#include <algorithm>
#include <sstream>

namespace circstab {

namespace {

int parse_int(const std::string& tok) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(tok, &pos);
    } catch (...) {
        throw InputError("cannot parse integer from '" + tok + "'");
    }
    if (pos != tok.size()) throw InputError("trailing characters in integer '" + tok + "'");
    return v;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

AbelianGroup parse_group(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw InputError("empty group descriptor");
    if (t.find('x') == std::string::npos) return AbelianGroup::cyclic(parse_int(t));
    std::vector<int> factors;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, 'x')) factors.push_back(parse_int(strip(part)));
    return AbelianGroup::product(factors);
}

std::vector<int> parse_set(const AbelianGroup& g, const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw InputError("empty connection set");
    std::vector<int> out;
    if (t.front() == '(') {
        // tuples: (a,b),(c,d),...
        size_t i = 0;
        while (i < t.size()) {
            if (t[i] == ',' || t[i] == ' ') {
                ++i;
                continue;
            }
            if (t[i] != '(') throw InputError("expected '(' in tuple set at '" + t.substr(i) + "'");
            size_t close = t.find(')', i);
            if (close == std::string::npos) throw InputError("unbalanced '(' in tuple set");
            std::string inner = t.substr(i + 1, close - i - 1);
            std::vector<int> coords;
            std::stringstream ss(inner);
            std::string tok;
            while (std::getline(ss, tok, ',')) coords.push_back(parse_int(strip(tok)));
            out.push_back(g.element(coords));
            i = close + 1;
        }
    } else {
        if (!g.is_cyclic())
            throw InputError("product-group sets need tuple syntax, e.g. (1,3),(3,1)");
        const int n = g.order();
        std::stringstream ss(t);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int v = parse_int(strip(tok)) % n;
            if (v < 0) v += n;
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string format_set(const AbelianGroup& g, const std::vector<int>& set) {
    std::string s;
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) s += ",";
        s += g.name(set[i]);
    }
    return s;
}

}  // namespace circstab
