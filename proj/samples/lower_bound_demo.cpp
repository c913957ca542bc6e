// Builds the lower-bound witness for a few (n, m) pairs and checks it.
#include <iostream>

#include "swr/swr.hpp"

int main() {
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{4, 6}, {6, 8}, {7, 10}}) {
        const swr::Graph g = swr::lower_bound_witness(n, m);
        const swr::Bound b = swr::formula(n, m);
        const bool good = swr::is_good_coloring(g, n, m).good;
        std::cout << "n=" << n << " m=" << m << " witness order " << g.order()
                  << (good ? " good" : " BAD") << ", so R >= " << g.order() + 1 << " (formula "
                  << b.value << ' ' << swr::to_string(b.status) << ")\n"
                  << "  " << swr::to_graph6(g) << '\n';
    }
}
