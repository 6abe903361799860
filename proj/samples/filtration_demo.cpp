// Scores every simplex of a clique complex with each centrality and prints
// the Betti numbers along the resulting filtration.
//
//   filtration_demo [EDGE_LIST]

#include <cstdio>
#include <exception>

#include "cliquetop/cliquetop.hpp"

using namespace cliquetop;

int main(int argc, char** argv) {
    try {
        const Graph g = argc > 1 ? read_edge_list(argv[1]) : parse_edge_list("1 2\n2 3\n1 3\n3 4\n4 5\n5 6\n4 6\n");
        const auto c = clique_complex(g);

        std::printf("f-vector:");
        for (auto f : c.f_vector()) std::printf(" %zu", f);
        std::printf("\nfacets:");
        for (const auto& s : c.facets()) std::printf(" %s", simplex_label(c, s).c_str());
        std::printf("\n");

        for (Measure m : {Measure::degree, Measure::gcc_normalized, Measure::betweenness_normalized}) {
            const auto report = run_filtration(c, m, std::nullopt);
            std::printf("\n%s\n", std::string(to_string(m)).c_str());
            for (const auto& step : report.steps) {
                std::printf("  delta=%-10.4g betti=", step.threshold);
                for (auto b : step.betti) std::printf("%zu ", b);
                std::printf(" (+%zu simplices)\n", step.added.size());
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
