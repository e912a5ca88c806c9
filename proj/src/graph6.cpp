#include "fullhom/graph6.hpp"

namespace fullhom {

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bits = 0, value = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + value));
                bits = 0;
                value = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (value << (6 - bits))));
    return out;
}

Graph graph6_decode(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty graph6 input", 0);
    if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);

    const unsigned char head = static_cast<unsigned char>(text[0]);
    if (head < 63 || head > 126)
        throw parse_error("invalid graph6 order byte", 0);
    if (head == 126)
        throw capacity_error("graph6 order exceeds capacity of 32");
    const int n = head - 63;
    if (n == 0) throw parse_error("graph6 order 0 is not supported", 0);
    if (n > kMaxOrder)
        throw capacity_error("graph6 order exceeds capacity of 32");

    const int nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() < 1 + nbytes)
        throw parse_error("graph6 input truncated", text.size());
    if (text.size() > 1 + nbytes)
        throw parse_error("trailing bytes after graph6 data", 1 + nbytes);

    Graph g(n);
    int i = 0, j = 1;
    for (std::size_t k = 0; k < nbytes; ++k) {
        const unsigned char c = static_cast<unsigned char>(text[1 + k]);
        if (c < 63 || c > 126)
            throw parse_error("invalid graph6 data byte", 1 + k);
        const int v = c - 63;
        for (int b = 5; b >= 0; --b) {
            const int bit = (v >> b) & 1;
            if (j >= n) {
                if (bit) throw parse_error("nonzero graph6 padding bits", 1 + k);
                continue;
            }
            if (bit) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

}  // namespace fullhom
