#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "baire/back_and_forth.hpp"
#include "baire/counterexamples.hpp"
#include "baire/forcing.hpp"
#include "baire/generate.hpp"
#include "baire/json_io.hpp"
#include "baire/selftest.hpp"

namespace py = pybind11;
using namespace baire;

namespace {

std::string word_repr(const Word& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

}  // namespace

PYBIND11_MODULE(_baire, m) {
    m.doc() = "exact combinatorics of Lipschitz maps and isometries on "
              "Baire and Cantor space";

    py::register_exception<AlphabetMismatchError>(m, "AlphabetMismatchError");
    py::register_exception<NotLipschitzError>(m, "NotLipschitzError");
    py::register_exception<OutOfTableError>(m, "OutOfTableError");
    py::register_exception<NotInClosureError>(m, "NotInClosureError");
    py::register_exception<OracleExhaustedError>(m, "OracleExhaustedError");
    py::register_exception<NoFreshLetterError>(m, "NoFreshLetterError");
    py::register_exception<NotConditionError>(m, "NotConditionError");
    py::register_exception<JsonFormatError>(m, "JsonFormatError");

    py::class_<Alphabet>(m, "Alphabet")
        .def_static("finite", &Alphabet::finite, py::arg("size"))
        .def_static("countable", &Alphabet::countable)
        .def_property_readonly("is_finite", &Alphabet::is_finite)
        .def("contains", py::overload_cast<Letter>(&Alphabet::contains, py::const_))
        .def("__eq__", [](const Alphabet& a, const Alphabet& b) { return a == b; })
        .def("__repr__", [](const Alphabet& a) {
            return a.is_finite() ? "Alphabet.finite(" + std::to_string(a.size()) + ")"
                                 : std::string("Alphabet.countable()");
        });

    py::class_<Point>(m, "Point")
        .def(py::init<Word, Letter>(), py::arg("stem"), py::arg("tail"))
        .def_property_readonly("stem", &Point::stem)
        .def_property_readonly("tail", &Point::tail)
        .def("at", &Point::at, py::arg("i"))
        .def("prefix", &Point::prefix, py::arg("n"))
        .def("extends", &Point::extends, py::arg("word"))
        .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
        .def("__hash__",
             [](const Point& p) {
                 std::size_t h = p.tail();
                 for (Letter l : p.stem()) h = h * 1000003 + l;
                 return h;
             })
        .def("__repr__", [](const Point& p) {
            return "Point(" + word_repr(p.stem()) + ", " + std::to_string(p.tail()) +
                   ")";
        });

    py::class_<LogDistance>(m, "LogDistance")
        .def_property_readonly("is_infinite", &LogDistance::is_infinite)
        .def_property_readonly("exponent", &LogDistance::finite_value)
        .def("__eq__",
             [](const LogDistance& a, const LogDistance& b) { return a == b; })
        .def("__repr__", [](const LogDistance& d) {
            return d.is_infinite() ? std::string("LogDistance.infinite")
                                   : "LogDistance(2^-" + std::to_string(d.value()) +
                                         ")";
        });

    m.def("word_meet", &word_meet, py::arg("u"), py::arg("v"));
    m.def("is_prefix", &is_prefix, py::arg("u"), py::arg("v"));
    m.def("distance", &distance, py::arg("x"), py::arg("y"));
    m.def("in_basic_open", &in_basic_open, py::arg("s"), py::arg("x"));

    py::class_<WordTree>(m, "WordTree")
        .def(py::init<>())
        .def_property_readonly("height", &WordTree::height)
        .def("contains", &WordTree::contains)
        .def("level", &WordTree::level, py::arg("n"))
        .def("level_counts", &WordTree::level_counts)
        .def("words",
             [](const WordTree& t) {
                 return std::vector<Word>(t.nodes().begin(), t.nodes().end());
             })
        .def("__len__", &WordTree::size)
        .def("__eq__", [](const WordTree& a, const WordTree& b) { return a == b; });

    m.def("tree_from_words", &tree_from_words, py::arg("words"));
    m.def("branches_to_depth", &branches_to_depth, py::arg("tree"), py::arg("n"));

    py::class_<TreeHom>(m, "TreeHom")
        .def_static("identity", &TreeHom::identity, py::arg("alphabet"))
        .def_static("parity", &TreeHom::parity, py::arg("alphabet_in"))
        .def_static("prepend", &TreeHom::prepend, py::arg("alphabet"), py::arg("prefix"))
        .def_static("relabel", &TreeHom::relabel, py::arg("alphabet_in"),
                    py::arg("alphabet_out"), py::arg("maps"))
        .def_static("table", &TreeHom::table, py::arg("alphabet_in"),
                    py::arg("alphabet_out"), py::arg("depth"), py::arg("entries"))
        .def_static("compose", &TreeHom::compose, py::arg("outer"), py::arg("inner"))
        .def_property_readonly("alphabet_in", &TreeHom::alphabet_in)
        .def_property_readonly("alphabet_out", &TreeHom::alphabet_out)
        .def_property_readonly("level_shift", &TreeHom::level_shift)
        .def("apply", &TreeHom::apply, py::arg("word"))
        .def("apply_point", &TreeHom::apply_point, py::arg("point"));

    m.def("apply_hom", &apply_hom, py::arg("hom"), py::arg("word"));
    m.def("compose_homs", &compose_homs, py::arg("outer"), py::arg("inner"));

    py::class_<LevelInfo>(m, "LevelInfo")
        .def_readonly("level", &LevelInfo::level)
        .def_readonly("injective", &LevelInfo::injective)
        .def_readonly("surjective", &LevelInfo::surjective);
    py::class_<LevelReport>(m, "LevelReport")
        .def_readonly("levels", &LevelReport::levels)
        .def_readonly("all_injective", &LevelReport::all_injective)
        .def_readonly("all_surjective", &LevelReport::all_surjective);
    m.def("level_analysis", &level_analysis, py::arg("hom"), py::arg("depth"));

    py::class_<PartialMap>(m, "PartialMap")
        .def(py::init<>())
        .def(py::init<std::vector<std::pair<Point, Point>>>(), py::arg("pairs"))
        .def_property_readonly("pairs", &PartialMap::pairs)
        .def("image_of", &PartialMap::image_of, py::arg("point"))
        .def("contains_domain", &PartialMap::contains_domain)
        .def("contains_range", &PartialMap::contains_range)
        .def("extended", &PartialMap::extended, py::arg("a"), py::arg("b"))
        .def("merged_with", &PartialMap::merged_with, py::arg("other"))
        .def("submap_of", &PartialMap::submap_of, py::arg("other"))
        .def("__len__", &PartialMap::size)
        .def("__eq__",
             [](const PartialMap& a, const PartialMap& b) { return a == b; });

    py::class_<LipschitzWitness>(m, "LipschitzWitness")
        .def_readonly("a", &LipschitzWitness::a)
        .def_readonly("a2", &LipschitzWitness::a2)
        .def_readonly("k", &LipschitzWitness::k);
    py::class_<LipschitzVerdict>(m, "LipschitzVerdict")
        .def_readonly("ok", &LipschitzVerdict::ok)
        .def_readonly("witness", &LipschitzVerdict::witness)
        .def("__bool__", [](const LipschitzVerdict& v) { return v.ok; });
    py::class_<IsometryWitness>(m, "IsometryWitness")
        .def_readonly("a", &IsometryWitness::a)
        .def_readonly("a2", &IsometryWitness::a2)
        .def_readonly("domain_distance", &IsometryWitness::domain_distance)
        .def_readonly("range_distance", &IsometryWitness::range_distance);
    py::class_<IsometryVerdict>(m, "IsometryVerdict")
        .def_readonly("ok", &IsometryVerdict::ok)
        .def_readonly("witness", &IsometryVerdict::witness)
        .def("__bool__", [](const IsometryVerdict& v) { return v.ok; });

    m.def("check_lipschitz", &check_lipschitz, py::arg("map"));
    m.def("check_isometry", &check_isometry, py::arg("map"));
    m.def("induced_hom", &induced_hom, py::arg("map"), py::arg("depth"),
          py::arg("alphabet_in") = Alphabet::countable(),
          py::arg("alphabet_out") = Alphabet::countable());
    m.def("lift_to_closure", &lift_to_closure, py::arg("map"), py::arg("targets"));
    m.def("inverse_map", &inverse_map, py::arg("map"));

    py::class_<DenseOracle>(m, "DenseOracle")
        .def("enumerate", &DenseOracle::enumerate, py::arg("i"))
        .def("refine", &DenseOracle::refine, py::arg("word"), py::arg("exclude"))
        .def_property_readonly("alphabet", &DenseOracle::alphabet);
    py::class_<EventuallyConstantDense, DenseOracle>(m, "EventuallyConstantDense")
        .def(py::init<Alphabet, Letter, std::uint64_t>(), py::arg("alphabet"),
             py::arg("tail"), py::arg("seed") = 0);
    py::class_<FiniteSampleOracle, DenseOracle>(m, "FiniteSampleOracle")
        .def(py::init<Alphabet, std::vector<Point>>(), py::arg("alphabet"),
             py::arg("points"));

    py::enum_<BnfStep::Direction>(m, "Direction")
        .value("Forth", BnfStep::Direction::Forth)
        .value("Back", BnfStep::Direction::Back);
    py::class_<BnfStep>(m, "BnfStep")
        .def_readonly("direction", &BnfStep::direction)
        .def_readonly("scheduled", &BnfStep::scheduled)
        .def_readonly("partner", &BnfStep::partner)
        .def_readonly("agreement", &BnfStep::agreement);
    py::class_<BackAndForth>(m, "BackAndForth")
        .def(py::init<const DenseOracle&, const DenseOracle&>(), py::arg("A"),
             py::arg("B"), py::keep_alive<1, 2>(), py::keep_alive<1, 3>())
        .def_property_readonly("current", &BackAndForth::current)
        .def_property_readonly("step", &BackAndForth::step)
        .def_property_readonly("transcript", &BackAndForth::transcript)
        .def("forth", &BackAndForth::forth, py::arg("a"))
        .def("back", &BackAndForth::back, py::arg("b"))
        .def("run_to", &BackAndForth::run_to, py::arg("n"));
    m.def(
        "bnf_run",
        [](const DenseOracle& A, const DenseOracle& B, std::size_t n) {
            std::vector<BnfStep> transcript;
            PartialMap result = bnf_run(A, B, n, &transcript);
            return py::make_tuple(result, transcript);
        },
        py::arg("A"), py::arg("B"), py::arg("n"));

    py::enum_<ParityKind>(m, "ParityKind")
        .value("Odd", ParityKind::Odd)
        .value("Even", ParityKind::Even);
    py::class_<ParityCell>(m, "ParityCell")
        .def_readonly("base", &ParityCell::base)
        .def_readonly("points", &ParityCell::points);
    py::class_<ParityFamily>(m, "ParityFamily")
        .def_readonly("kind", &ParityFamily::kind)
        .def_readonly("cells", &ParityFamily::cells);
    m.def("gen_family", &gen_family, py::arg("kind"), py::arg("cell_words"),
          py::arg("per_cell"), py::arg("alphabet"), py::arg("seed"),
          py::arg("depth_budget") = 20);
    m.def("cell_capacity", &cell_capacity, py::arg("kind"), py::arg("base"),
          py::arg("alphabet"), py::arg("depth_budget"));
    m.def("first_diff_parity", &first_diff_parity, py::arg("x"), py::arg("y"));
    m.def("family_violation", &family_violation, py::arg("family"));

    py::class_<NoIsometryWitness>(m, "NoIsometryWitness")
        .def_readonly("src_cell", &NoIsometryWitness::src_cell)
        .def_readonly("dst_cell", &NoIsometryWitness::dst_cell)
        .def_readonly("x", &NoIsometryWitness::x)
        .def_readonly("y", &NoIsometryWitness::y)
        .def_readonly("u", &NoIsometryWitness::u)
        .def_readonly("v", &NoIsometryWitness::v);
    py::class_<NoIsometryCertificate>(m, "NoIsometryCertificate")
        .def_readonly("pairs_checked", &NoIsometryCertificate::pairs_checked)
        .def_readonly("isometric_pairs", &NoIsometryCertificate::isometric_pairs)
        .def_readonly("witness", &NoIsometryCertificate::witness);
    m.def("certify_no_isometry", &certify_no_isometry, py::arg("src"), py::arg("dst"));

    py::class_<Slalom>(m, "Slalom")
        .def(py::init<std::vector<std::set<Letter>>>(), py::arg("levels"))
        .def_property_readonly("depth", &Slalom::depth)
        .def("at", &Slalom::at, py::arg("n"))
        .def_property_readonly("levels", &Slalom::levels)
        .def("__eq__", [](const Slalom& a, const Slalom& b) { return a == b; });
    py::enum_<WidthProfile::Kind>(m, "WidthKind")
        .value("PowTwoPlusOne", WidthProfile::Kind::PowTwoPlusOne)
        .value("NTimesPowTwo", WidthProfile::Kind::NTimesPowTwo)
        .value("Table", WidthProfile::Kind::Table);
    py::class_<WidthProfile>(m, "WidthProfile")
        .def_static("pow_two_plus_one", &WidthProfile::pow_two_plus_one)
        .def_static("n_times_pow_two", &WidthProfile::n_times_pow_two)
        .def_static("table", &WidthProfile::table, py::arg("values"))
        .def_property_readonly("kind", &WidthProfile::kind)
        .def("at", &WidthProfile::at, py::arg("n"))
        .def("is_corset", &WidthProfile::is_corset, py::arg("upto"));
    py::enum_<CaptureMode>(m, "CaptureMode")
        .value("Total", CaptureMode::Total)
        .value("Eventual", CaptureMode::Eventual);
    py::class_<BoundedSample>(m, "BoundedSample")
        .def(py::init<Word, std::vector<Point>, Letter>(), py::arg("base"),
             py::arg("points"), py::arg("bound") = 2)
        .def_readonly("base", &BoundedSample::base)
        .def_readonly("points", &BoundedSample::points)
        .def_readonly("bound", &BoundedSample::bound);
    m.def("slalom_width_ok", &slalom_width_ok, py::arg("slalom"), py::arg("profile"));
    m.def("captures", &captures, py::arg("slalom"), py::arg("point"), py::arg("mode"));
    m.def("slalom_from_hom", &slalom_from_hom, py::arg("hom"), py::arg("sample"),
          py::arg("depth"));
    m.def("merge_slaloms", &merge_slaloms, py::arg("slaloms"));
    py::class_<TreeWidthReport>(m, "TreeWidthReport")
        .def_readonly("counts", &TreeWidthReport::counts)
        .def_readonly("within_bound", &TreeWidthReport::within_bound)
        .def_readonly("all_within", &TreeWidthReport::all_within);
    m.def(
        "tree_width",
        [](const WordTree& t, const std::optional<WidthProfile>& p) {
            return tree_width(t, p ? &*p : nullptr);
        },
        py::arg("tree"), py::arg("profile") = std::nullopt);
    m.def("hom_image_tree", &hom_image_tree, py::arg("hom"), py::arg("tree"));
    m.def("covered_by", &covered_by, py::arg("point"), py::arg("trees"),
          py::arg("depth"));

    py::class_<ConditionVerdict>(m, "ConditionVerdict")
        .def_readonly("ok", &ConditionVerdict::ok)
        .def_readonly("lipschitz_witness", &ConditionVerdict::lipschitz_witness)
        .def_readonly("injectivity_witness", &ConditionVerdict::injectivity_witness)
        .def("__bool__", [](const ConditionVerdict& v) { return v.ok; });
    py::class_<Condition>(m, "Condition")
        .def(py::init<PartialMap>(), py::arg("map"))
        .def_property_readonly("map", &Condition::map)
        .def("__len__", &Condition::size)
        .def("__eq__", [](const Condition& a, const Condition& b) { return a == b; });
    py::class_<SeparatingSet>(m, "SeparatingSet")
        .def(py::init([](std::vector<std::pair<Word, Word>> pairs) {
                 SeparatingSet x;
                 x.pairs = std::move(pairs);
                 return x;
             }),
             py::arg("pairs"))
        .def_readonly("pairs", &SeparatingSet::pairs);
    py::class_<SeparatingVerdict>(m, "SeparatingVerdict")
        .def_readonly("ok", &SeparatingVerdict::ok)
        .def_readonly("reason", &SeparatingVerdict::reason)
        .def("__bool__", [](const SeparatingVerdict& v) { return v.ok; });
    py::class_<AntichainResult>(m, "AntichainResult")
        .def_readonly("indices", &AntichainResult::indices)
        .def_readonly("exact", &AntichainResult::exact)
        .def_readonly("meets_min_size", &AntichainResult::meets_min_size);

    m.def("is_condition", &is_condition, py::arg("map"));
    m.def("compatible", &compatible, py::arg("p"), py::arg("q"));
    m.def("is_separating", &is_separating, py::arg("x"));
    m.def("in_px", &in_px, py::arg("p"), py::arg("x"));
    m.def("closure_member", &closure_member, py::arg("p"), py::arg("d"),
          py::arg("depth_bound"));
    m.def("extend_condition", &extend_condition, py::arg("p"), py::arg("a"),
          py::arg("b"), py::arg("A"), py::arg("B"));
    m.def("find_antichain", &find_antichain, py::arg("conditions"),
          py::arg("min_size") = 1);

    m.def(
        "selftest",
        [](std::uint64_t seed, std::size_t trials, std::size_t depth) {
            SelftestConfig cfg;
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.depth = depth;
            return run_selftest(cfg).dump(2);
        },
        py::arg("seed") = 1, py::arg("trials") = 200, py::arg("depth") = 8,
        "JSON report of every module's invariant suite");
}
