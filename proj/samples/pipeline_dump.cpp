// Walks the 6-colored 16-cycle through the colored-cycle bijection and prints
// every intermediate structure as JSON, then checks that the inverse recovers it.

#include <cycprod/cycprod.hpp>

#include <iostream>
#include <vector>

int main() {
    using namespace cycprod;

    const std::vector<int> cycle{1, 14, 12, 13, 6, 7, 10, 11, 15, 9, 8, 16, 4, 5, 2, 3};
    // color of the element at each position of the cycle above
    const std::vector<int> color_along{2, 3, 5, 4, 3, 1, 1, 6, 5, 1, 1, 1, 2, 6, 3, 3};

    ColoredCycle c{Permutation::from_cycle(16, cycle), std::vector<int>(16)};
    for (std::size_t i = 0; i < cycle.size(); ++i) c.colors[cycle[i] - 1] = color_along[i];

    std::cout << pipeline_dump(c).dump(2) << "\n";

    const bool ok = full_inverse(full_bijection(c)) == c;
    std::cout << (ok ? "inverse recovers the colored cycle" : "inverse FAILED") << "\n";
    return ok ? 0 : 1;
}
