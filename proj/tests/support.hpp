#pragma once

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "indpoly/graph.hpp"
#include "indpoly/graph_io.hpp"

namespace indpoly::testing {

inline std::string data_path(const std::string& name) { return std::string(INDPOLY_DATA_DIR) + "/" + name; }

inline std::vector<Graph> load_corpus(const std::string& name) {
    std::ifstream in(data_path(name));
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(parse_graph6(line));
    return out;
}

/// G(n, p) with a caller-owned generator.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline Graph random_graph(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> density(0.1, 0.9);
    return random_graph(n, density(rng), rng);
}

}  // namespace indpoly::testing
