#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tricut/bench.hpp"
#include "tricut/dynamics.hpp"
#include "tricut/graph.hpp"
#include "tricut/kernel.hpp"
#include "tricut/local_search.hpp"
#include "tricut/oracle.hpp"
#include "tricut/rng.hpp"
#include "tricut/rounding.hpp"
#include "tricut/solver.hpp"

namespace py = pybind11;
using namespace tricut;

namespace {

Graph graph_from_edges(int n, const std::vector<std::tuple<int, int, std::int64_t>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v, w] : edges) es.push_back({u, v, w});
    return Graph::from_edges(n, std::move(es));
}

std::vector<std::tuple<int, int, std::int64_t>> graph_edges(const Graph& g) {
    std::vector<std::tuple<int, int, std::int64_t>> out;
    out.reserve(static_cast<std::size_t>(g.num_edges()));
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.w);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Max-cut solver based on a piecewise-linear gradient-flow spin machine";

    py::enum_<KernelKind>(m, "KernelKind")
        .value("TRIANGULAR", KernelKind::Triangular)
        .value("XY", KernelKind::Xy);

    py::enum_<SearchMode>(m, "SearchMode")
        .value("NONE", SearchMode::None)
        .value("NMR", SearchMode::Nmr)
        .value("NMR_EMR", SearchMode::NmrEmr);

    py::enum_<RoundingMode>(m, "RoundingMode")
        .value("RANDOM", RoundingMode::Random)
        .value("OPTIMAL", RoundingMode::Optimal);

    py::enum_<RestartMode>(m, "RestartMode")
        .value("FRESH_RANDOM", RestartMode::FreshRandom)
        .value("PERTURB_BEST", RestartMode::PerturbBest);

    py::class_<Kernel>(m, "Kernel")
        .def_static("triangular", &Kernel::triangular)
        .def_static("xy", &Kernel::xy)
        .def_property_readonly("kind", &Kernel::kind)
        .def_property_readonly("period", &Kernel::period)
        .def("energy", &Kernel::energy, py::arg("v"))
        .def("coupling", &Kernel::coupling, py::arg("v"))
        .def("performance_ratio", &Kernel::performance_ratio)
        .def("__repr__", [](const Kernel& k) { return "Kernel(" + k.name() + ")"; });

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges", &graph_from_edges, py::arg("n"), py::arg("edges"))
        .def_static("parse_gset", py::overload_cast<const std::string&>(&Graph::parse_gset),
                    py::arg("text"))
        .def_static("load_gset", &Graph::load_gset, py::arg("path"))
        .def_static(
            "erdos_renyi",
            [](int n, double p, std::uint64_t seed) { return Graph::erdos_renyi({n, p, seed}); },
            py::arg("n"), py::arg("p"), py::arg("seed") = 0)
        .def_property_readonly("n", &Graph::num_nodes)
        .def_property_readonly("m", &Graph::num_edges)
        .def_property_readonly("total_weight", &Graph::total_weight)
        .def("edges", &graph_edges)
        .def("degree", &Graph::degree, py::arg("node"))
        .def("neighbors",
             [](const Graph& g, int node) {
                 std::vector<std::pair<int, std::int64_t>> out;
                 for (const Neighbor& nb : g.neighbors(node)) out.emplace_back(nb.node, nb.w);
                 return out;
             },
             py::arg("node"))
        .def("write_gset", py::overload_cast<>(&Graph::write_gset, py::const_))
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.num_nodes() << ", m=" << g.num_edges() << ")";
            return os.str();
        });

    py::class_<ContinuousState>(m, "ContinuousState")
        .def(py::init<std::vector<double>>(), py::arg("values"))
        .def_static(
            "uniform_random",
            [](int n, std::uint64_t seed) {
                auto rng = make_rng(seed);
                return ContinuousState::uniform_random(n, rng);
            },
            py::arg("n"), py::arg("seed") = 0)
        .def_property_readonly("values", &ContinuousState::values)
        .def("__len__", &ContinuousState::size)
        .def("__getitem__", [](const ContinuousState& s, int i) {
            if (i < 0 || i >= s.size()) throw py::index_error();
            return s[i];
        });

    py::class_<BinaryConfig>(m, "BinaryConfig")
        .def(py::init<std::vector<std::int8_t>>(), py::arg("spins"))
        .def_static("all_up", &BinaryConfig::all_up, py::arg("n"))
        .def_property_readonly("spins", &BinaryConfig::spins)
        .def("__len__", &BinaryConfig::size)
        .def("__getitem__", [](const BinaryConfig& c, int i) {
            if (i < 0 || i >= c.size()) throw py::index_error();
            return c[i];
        })
        .def("__eq__", [](const BinaryConfig& a, const BinaryConfig& b) { return a == b; });

    py::class_<DynParams>(m, "DynParams")
        .def(py::init<>())
        .def_readwrite("anisotropy", &DynParams::anisotropy)
        .def_readwrite("dt", &DynParams::dt)
        .def_readwrite("steps", &DynParams::steps)
        .def_readwrite("kernel", &DynParams::kernel);

    m.def("wrap_period", &wrap_period, py::arg("v"));
    m.def("step_euler", &step_euler, py::arg("state"), py::arg("graph"), py::arg("params"));
    m.def(
        "evolve",
        [](const ContinuousState& s, const Graph& g, const DynParams& p, bool trace) {
            if (!trace) return py::cast(evolve(s, g, p));
            std::vector<TracePoint> points;
            ContinuousState out = evolve(s, g, p, &points);
            std::vector<std::tuple<int, double, double>> rows;
            rows.reserve(points.size());
            for (const TracePoint& tp : points) rows.emplace_back(tp.step, tp.energy, tp.relaxed_cut);
            return py::cast(std::make_pair(out, rows));
        },
        py::arg("state"), py::arg("graph"), py::arg("params"), py::arg("trace") = false);
    m.def("lyapunov_energy", &lyapunov_energy, py::arg("state"), py::arg("graph"),
          py::arg("anisotropy"), py::arg("kernel"));
    m.def("relaxed_cut", &relaxed_cut, py::arg("state"), py::arg("graph"), py::arg("kernel"));

    py::class_<RoundingOutcome>(m, "RoundingOutcome")
        .def_readonly("config", &RoundingOutcome::config)
        .def_readonly("cut", &RoundingOutcome::cut)
        .def_readonly("center", &RoundingOutcome::center);

    m.def("circular_distance", &circular_distance, py::arg("a"), py::arg("b"));
    m.def("round_at", &round_at, py::arg("state"), py::arg("center"));
    m.def(
        "random_rounding",
        [](const ContinuousState& s, const Graph& g, int num_centers, std::uint64_t seed) {
            auto rng = make_rng(seed);
            return random_rounding(s, g, num_centers, rng);
        },
        py::arg("state"), py::arg("graph"), py::arg("num_centers"), py::arg("seed") = 0);
    m.def(
        "optimal_rounding",
        [](const ContinuousState& s, const Graph& g) { return optimal_rounding(s, g); },
        py::arg("state"), py::arg("graph"));
    m.def("expected_cut", &expected_cut, py::arg("state"), py::arg("graph"));

    m.def("cut_value", &cut_value, py::arg("graph"), py::arg("config"));
    m.def("imbalance", &imbalance, py::arg("graph"), py::arg("config"), py::arg("node"));
    m.def(
        "apply_nmr",
        [](const Graph& g, const BinaryConfig& c) {
            SearchResult r = apply_nmr(g, c);
            return std::make_pair(r.config, r.gain);
        },
        py::arg("graph"), py::arg("config"));
    m.def(
        "apply_emr",
        [](const Graph& g, const BinaryConfig& c) {
            SearchResult r = apply_emr(g, c);
            return std::make_pair(r.config, r.gain);
        },
        py::arg("graph"), py::arg("config"));
    m.def(
        "post_process",
        [](const Graph& g, const BinaryConfig& c, SearchMode mode) {
            PostProcessResult r = post_process(g, c, mode);
            return std::make_pair(r.config, r.cut);
        },
        py::arg("graph"), py::arg("config"), py::arg("mode"));

    m.def(
        "brute_force_maxcut",
        [](const Graph& g) {
            MaxCutResult r = brute_force_maxcut(g);
            return std::make_pair(r.cut, r.config);
        },
        py::arg("graph"));
    m.def("exhaustive_rounding", &exhaustive_rounding, py::arg("state"), py::arg("graph"));

    py::class_<Schedule>(m, "Schedule")
        .def(py::init<>())
        .def_static("quality", &Schedule::quality)
        .def_static("scaling", &Schedule::scaling)
        .def_readwrite("steps", &Schedule::steps)
        .def_readwrite("dt_coef", &Schedule::dt_coef)
        .def_readwrite("anisotropy", &Schedule::anisotropy)
        .def_readwrite("repetitions", &Schedule::repetitions)
        .def_readwrite("rounding", &Schedule::rounding)
        .def_readwrite("num_random_centers", &Schedule::num_random_centers)
        .def_readwrite("post", &Schedule::post)
        .def_readwrite("restart", &Schedule::restart)
        .def_readwrite("noise_amp", &Schedule::noise_amp)
        .def_readwrite("seed", &Schedule::seed)
        .def_readwrite("kernel", &Schedule::kernel)
        .def_readwrite("workers", &Schedule::workers);

    py::class_<RunRecord>(m, "RunRecord")
        .def_readonly("run_index", &RunRecord::run_index)
        .def_readonly("pre_cut", &RunRecord::pre_cut)
        .def_readonly("final_cut", &RunRecord::final_cut)
        .def_readonly("center", &RunRecord::center)
        .def_readonly("t_dynamics_s", &RunRecord::t_dynamics_s)
        .def_readonly("t_rounding_s", &RunRecord::t_rounding_s)
        .def_readonly("t_post_s", &RunRecord::t_post_s)
        .def_readonly("energy", &RunRecord::energy)
        .def_readonly("relaxed_cut", &RunRecord::relaxed_cut);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("best_config", &SolveResult::best_config)
        .def_readonly("best_cut", &SolveResult::best_cut)
        .def_readonly("records", &SolveResult::records);

    m.def(
        "embed_binary",
        [](const BinaryConfig& c, double noise_amp, std::uint64_t seed) {
            auto rng = make_rng(seed);
            return embed_binary(c, noise_amp, rng);
        },
        py::arg("config"), py::arg("noise_amp") = 0.0, py::arg("seed") = 0);
    m.def("solve", &solve, py::arg("graph"), py::arg("schedule"),
          py::call_guard<py::gil_scoped_release>());
}
