#include <sgc/solver.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace sgc {

namespace {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

    auto matching_size(int order, const std::vector<std::pair<int, int>> & edges) -> int
    {
        BoostGraph bg(order);
        for (auto & [u, v] : edges)
            boost::add_edge(u, v, bg);
        std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(order);
        boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
        return static_cast<int>(boost::matching_size(bg, &mate[0]));
    }
}

auto maximum_matching_size(const UnsignedGraph & g) -> int
{
    return matching_size(g.order(), g.edges());
}

auto maximum_matching_size(const SignedGraph & g) -> int
{
    return maximum_matching_size(underlying(g));
}

}
