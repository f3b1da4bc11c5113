// Minimal library tour: build family members, verify them, and run a
// small box search.

#include "taxicab5/identities.hpp"
#include "taxicab5/pell.hpp"
#include "taxicab5/search.hpp"

#include <iostream>

using namespace taxicab5;

int main() {
    // Pell-driven family: integers on the left, conjugates on the right.
    for (std::size_t k = 1; k <= 3; ++k) {
        Quadruple q = pell_family(k);
        std::cout << q.w << "^5 + " << q.x << "^5 = (" << q.y << ")^5 + (" << q.z << ")^5"
                  << (verify_solution(q) ? "  ok" : "  BROKEN") << "\n";
    }

    // Every Pythagorean triple gives an all-Gaussian solution.
    for (const PythTriple &t : enumerate_primitive_triples(17)) {
        Quadruple q = triple_solution(t);
        std::cout << "(" << t.a << "," << t.b << "," << t.c << ") -> (" << q.w << ")^5 + ("
                  << q.x << ")^5 = (" << q.y << ")^5 + (" << q.z << ")^5"
                  << (verify_solution(q) ? "  ok" : "  BROKEN") << "\n";
    }

    // Everything in the box |re|,|im| <= 3, deduplicated by symmetry.
    SearchConfig cfg;
    cfg.bound = 3;
    std::vector<SolutionClass> classes = run_search(cfg);
    std::cout << classes.size() << " solution classes in the bound-3 box\n";
    for (const SolutionClass &cls : classes)
        if (norm(cls.sum) > 0)
            std::cout << "  " << to_json_line(cls) << "\n";
    return 0;
}
