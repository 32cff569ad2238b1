// Minimum K4-saturating count just above the triangle-free threshold, n = 5..8.
#include "satedge/satedge.hpp"

#include <iostream>

int main() {
    using namespace satedge;
    for (int n = 5; n <= 8; ++n) {
        SearchResult r = min_saturating_at_jump(n, 3);
        std::cout << "n=" << n << " e=" << r.e << " min=" << *r.minimum << " witnesses:";
        for (const auto& w : r.witnesses) std::cout << ' ' << w;
        std::cout << "\n";
    }
}
