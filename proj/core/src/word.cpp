#include "gw/word.hpp"

#include <stdexcept>

namespace gw {

Word Word::from_bytes(std::string_view text) {
    std::vector<Symbol> sym;
    sym.reserve(text.size());
    for (unsigned char c : text) sym.push_back(static_cast<Symbol>(c));
    return Word(std::move(sym));
}

std::vector<Symbol> factor(const Word& w, Segment s) {
    if (s.beg < 1 || s.beg > s.end || s.end > w.length())
        throw std::out_of_range("segment out of bounds");
    auto sp = w.symbols();
    return std::vector<Symbol>(sp.begin() + (s.beg - 1), sp.begin() + s.end);
}

Pos smallest_period(std::span<const Symbol> f) {
    if (f.empty()) throw std::invalid_argument("smallest_period of empty sequence");
    const Pos n = static_cast<Pos>(f.size());
    auto z = z_function(f);
    for (Pos p = 1; p < n; ++p)
        if (z[static_cast<size_t>(p)] == n - p) return p;
    return n;
}

bool is_periodic(std::span<const Symbol> f) {
    return smallest_period(f) <= static_cast<Pos>(f.size()) / 2;
}

} // namespace gw
