#include "planar/graph6.hpp"

#include <cstdint>
#include <functional>

namespace planar {

namespace {

void append_n(std::string& out, long n) {
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw Graph6Error("graph6_encode: n too large");
    }
}

std::string encode_impl(long n, const std::function<bool(int, int)>& has_edge) {
    std::string out;
    append_n(out, n);
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    return encode_impl(g.n(), [&](int i, int j) { return g.has_edge(i, j); });
}

std::string graph6_encode(const WideGraph& g) {
    return encode_impl(g.n(), [&](int i, int j) { return g.has_edge(i, j); });
}

DecodedGraph graph6_decode(const std::string& line) {
    std::string_view s(line);
    if (s.substr(0, 10) == ">>graph6<<") s.remove_prefix(10);
    if (s.empty()) throw Graph6Error("graph6_decode: empty input");
    for (char c : s)
        if (c < 63 || c > 126) throw Graph6Error("graph6_decode: byte out of printable range");

    std::size_t pos = 0;
    long n;
    if (s[0] != 126) {
        n = s[0] - 63;
        pos = 1;
    } else if (s.size() >= 4 && s[1] != 126) {
        n = ((long(s[1]) - 63) << 12) | ((long(s[2]) - 63) << 6) | (long(s[3]) - 63);
        pos = 4;
    } else {
        throw Graph6Error("graph6_decode: malformed or unsupported size header");
    }

    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (long(s.size()) - long(pos) != nbytes)
        throw Graph6Error("graph6_decode: length mismatch (expected " + std::to_string(nbytes) +
                          " data bytes, got " + std::to_string(s.size() - pos) + ")");

    DecodedGraph out;
    out.n = int(n);
    long bit = 0;
    int i = 0, j = 1;
    for (std::size_t p = pos; p < s.size(); ++p) {
        int chunk = s[p] - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int val = (chunk >> b) & 1;
            if (bit >= nbits) {
                if (val) throw Graph6Error("graph6_decode: nonzero trailing padding bits");
                continue;
            }
            if (val) out.edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return out;
}

}  // namespace planar
