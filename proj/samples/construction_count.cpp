// Builds h1(3,1,0), counts its K4-saturating pairs and compares with the closed form.
#include "satedge/satedge.hpp"

#include <iostream>

int main() {
    using namespace satedge;
    Construction c = h1(3, 1, 0);
    const Graph& g = c.graph();
    auto report = count_saturating(g, 4);
    std::cout << "n = " << g.order() << ", e = " << g.size() << " (ex = " << turan_number(g.order(), 3) << ")\n";
    std::cout << "saturating pairs: " << report.total << "\n";
    std::cout << "closed form:      " << to_string(formulas::f_h1_closed(3, 1, 0)) << "\n";
    for (const auto& part : c.parts()) std::cout << "  " << part.name << " [" << part.begin << ", " << part.end << ")\n";
}
