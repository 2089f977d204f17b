#include "baire/json_io.hpp"

#include <sstream>

namespace baire {

namespace {

// programmatically built values carry signed types, parsed ones unsigned
bool nonneg_int(const Json& j) {
    return j.is_number_unsigned() ||
           (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

Word word_from_json(const Json& j) {
    if (!j.is_array()) throw JsonFormatError("word must be an array of letters");
    Word w;
    w.reserve(j.size());
    for (const auto& v : j) {
        if (!nonneg_int(v))
            throw JsonFormatError("letters must be nonnegative integers");
        w.push_back(v.get<Letter>());
    }
    return w;
}

std::string word_key(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

Word word_from_key(const std::string& key) {
    Word w;
    if (key.empty()) return w;
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            w.push_back(static_cast<Letter>(std::stoul(part)));
        } catch (const std::exception&) {
            throw JsonFormatError("bad table key '" + key + "'");
        }
    }
    return w;
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw JsonFormatError(std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

Json alphabet_to_json(const Alphabet& a) {
    if (a.is_finite()) return Json{{"finite", a.size()}};
    return Json{{"countable", true}};
}

Alphabet alphabet_from_json(const Json& j) {
    if (!j.is_object()) throw JsonFormatError("alphabet must be an object");
    if (j.contains("finite")) {
        const auto& v = j["finite"];
        if (!nonneg_int(v) || v.get<std::uint64_t>() == 0)
            throw JsonFormatError("finite alphabet size must be a positive integer");
        return Alphabet::finite(v.get<std::uint32_t>());
    }
    if (j.contains("countable")) return Alphabet::countable();
    throw JsonFormatError("alphabet needs 'finite' or 'countable'");
}

Json point_to_json(const Point& x) {
    return Json{{"stem", x.stem()}, {"tail", x.tail()}};
}

Point point_from_json(const Json& j) {
    if (!j.is_object()) throw JsonFormatError("point must be an object");
    const Json& tail = field(j, "tail");
    if (!nonneg_int(tail))
        throw JsonFormatError("point tail must be a nonnegative integer");
    return Point(word_from_json(field(j, "stem")), tail.get<Letter>());
}

Json tree_to_json(const WordTree& t) {
    Json arr = Json::array();
    for (const Word& w : t.nodes()) arr.push_back(w);
    return arr;
}

WordTree tree_from_json(const Json& j) {
    if (!j.is_array()) throw JsonFormatError("tree must be an array of words");
    std::vector<Word> ws;
    ws.reserve(j.size());
    for (const auto& v : j) ws.push_back(word_from_json(v));
    return tree_from_words(ws);
}

Json hom_to_json(const TreeHom& h) {
    Json j;
    j["alphabet_in"] = alphabet_to_json(h.alphabet_in());
    j["alphabet_out"] = alphabet_to_json(h.alphabet_out());
    switch (h.kind()) {
        case TreeHom::Kind::Identity:
            j["kind"] = "identity";
            break;
        case TreeHom::Kind::Parity:
            j["kind"] = "parity";
            break;
        case TreeHom::Kind::Prepend:
            j["kind"] = "prepend";
            j["prefix"] = h.prepend_prefix();
            break;
        case TreeHom::Kind::Relabel: {
            j["kind"] = "relabel";
            Json maps = Json::array();
            for (const auto& m : h.relabel_maps()) {
                Json entry = Json::object();
                for (const auto& [from, to] : m) entry[std::to_string(from)] = to;
                maps.push_back(std::move(entry));
            }
            j["maps"] = std::move(maps);
            break;
        }
        case TreeHom::Kind::Table: {
            j["kind"] = "table";
            j["depth"] = h.table_depth();
            Json entries = Json::object();
            for (const auto& [key, image] : h.table_entries())
                entries[word_key(key)] = image;
            j["entries"] = std::move(entries);
            break;
        }
        case TreeHom::Kind::Compose:
            j["kind"] = "compose";
            j["outer"] = hom_to_json(h.outer());
            j["inner"] = hom_to_json(h.inner());
            break;
    }
    return j;
}

TreeHom hom_from_json(const Json& j) {
    if (!j.is_object()) throw JsonFormatError("hom must be an object");
    const std::string kind = field(j, "kind").get<std::string>();
    const Alphabet in = j.contains("alphabet_in")
                            ? alphabet_from_json(j["alphabet_in"])
                            : Alphabet::countable();
    const Alphabet out = j.contains("alphabet_out")
                             ? alphabet_from_json(j["alphabet_out"])
                             : Alphabet::countable();
    if (kind == "identity") return TreeHom::identity(in);
    if (kind == "parity") return TreeHom::parity(in);
    if (kind == "prepend")
        return TreeHom::prepend(in, word_from_json(field(j, "prefix")));
    if (kind == "relabel") {
        const Json& maps_json = field(j, "maps");
        if (!maps_json.is_array()) throw JsonFormatError("relabel maps must be an array");
        std::vector<std::map<Letter, Letter>> maps;
        for (const auto& m : maps_json) {
            if (!m.is_object()) throw JsonFormatError("each relabel map must be an object");
            std::map<Letter, Letter> entry;
            for (auto it = m.begin(); it != m.end(); ++it) {
                Letter from;
                try {
                    from = static_cast<Letter>(std::stoul(it.key()));
                } catch (const std::exception&) {
                    throw JsonFormatError("relabel keys must be letters");
                }
                if (!nonneg_int(it.value()))
                    throw JsonFormatError("relabel values must be letters");
                entry[from] = it.value().get<Letter>();
            }
            maps.push_back(std::move(entry));
        }
        return TreeHom::relabel(in, out, std::move(maps));
    }
    if (kind == "table") {
        const Json& depth = field(j, "depth");
        if (!nonneg_int(depth))
            throw JsonFormatError("table depth must be a nonnegative integer");
        const Json& entries_json = field(j, "entries");
        if (!entries_json.is_object())
            throw JsonFormatError("table entries must map word keys to words");
        std::map<Word, Word> entries;
        for (auto it = entries_json.begin(); it != entries_json.end(); ++it)
            entries[word_from_key(it.key())] = word_from_json(it.value());
        try {
            return TreeHom::table(in, out, depth.get<std::size_t>(), std::move(entries));
        } catch (const std::invalid_argument& e) {
            throw JsonFormatError(std::string("bad table: ") + e.what());
        }
    }
    if (kind == "compose")
        return TreeHom::compose(hom_from_json(field(j, "outer")),
                                hom_from_json(field(j, "inner")));
    throw JsonFormatError("unknown hom kind '" + kind + "'");
}

Json partial_map_to_json(const PartialMap& m) {
    Json arr = Json::array();
    for (const auto& [a, b] : m.pairs())
        arr.push_back(Json::array({point_to_json(a), point_to_json(b)}));
    return arr;
}

PartialMap partial_map_from_json(const Json& j) {
    if (!j.is_array()) throw JsonFormatError("partial map must be an array of pairs");
    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_array() || v.size() != 2)
            throw JsonFormatError("each map entry must be a [point, point] pair");
        pairs.emplace_back(point_from_json(v[0]), point_from_json(v[1]));
    }
    return PartialMap(std::move(pairs));
}

Json log_distance_to_json(const LogDistance& d) {
    if (d.is_infinite()) return Json{{"infinite", true}};
    return Json{{"exponent", d.value()}};
}

Json lipschitz_verdict_to_json(const LipschitzVerdict& v) {
    Json j{{"ok", v.ok}};
    if (v.witness)
        j["witness"] = Json{{"a", point_to_json(v.witness->a)},
                            {"a2", point_to_json(v.witness->a2)},
                            {"k", v.witness->k}};
    return j;
}

Json isometry_verdict_to_json(const IsometryVerdict& v) {
    Json j{{"ok", v.ok}};
    if (v.witness)
        j["witness"] = Json{{"a", point_to_json(v.witness->a)},
                            {"a2", point_to_json(v.witness->a2)},
                            {"domain_distance", log_distance_to_json(v.witness->domain_distance)},
                            {"range_distance", log_distance_to_json(v.witness->range_distance)}};
    return j;
}

Json condition_verdict_to_json(const ConditionVerdict& v) {
    Json j{{"ok", v.ok}};
    if (v.lipschitz_witness) {
        j["reason"] = "not_lipschitz";
        j["witness"] = Json{{"a", point_to_json(v.lipschitz_witness->a)},
                            {"a2", point_to_json(v.lipschitz_witness->a2)},
                            {"k", v.lipschitz_witness->k}};
    } else if (v.injectivity_witness) {
        j["reason"] = "not_injective";
        j["witness"] = Json{{"a", point_to_json(v.injectivity_witness->first)},
                            {"a2", point_to_json(v.injectivity_witness->second)}};
    }
    return j;
}

Json level_report_to_json(const LevelReport& r) {
    Json levels = Json::array();
    for (const LevelInfo& info : r.levels)
        levels.push_back(Json{{"level", info.level},
                              {"injective", info.injective},
                              {"surjective", info.surjective}});
    return Json{{"levels", std::move(levels)},
                {"all_injective", r.all_injective},
                {"all_surjective", r.all_surjective}};
}

Json family_to_json(const ParityFamily& f) {
    Json cells = Json::array();
    for (const ParityCell& cell : f.cells) {
        Json points = Json::array();
        for (const Point& x : cell.points) points.push_back(point_to_json(x));
        cells.push_back(Json{{"s", cell.base}, {"points", std::move(points)}});
    }
    return Json{{"kind", f.kind == ParityKind::Odd ? "odd" : "even"},
                {"cells", std::move(cells)}};
}

ParityFamily family_from_json(const Json& j) {
    if (!j.is_object()) throw JsonFormatError("family must be an object");
    const std::string kind = field(j, "kind").get<std::string>();
    ParityFamily f;
    if (kind == "odd")
        f.kind = ParityKind::Odd;
    else if (kind == "even")
        f.kind = ParityKind::Even;
    else
        throw JsonFormatError("family kind must be 'odd' or 'even'");
    const Json& cells = field(j, "cells");
    if (!cells.is_array()) throw JsonFormatError("family cells must be an array");
    for (const auto& c : cells) {
        ParityCell cell;
        cell.base = word_from_json(field(c, "s"));
        const Json& points = field(c, "points");
        if (!points.is_array()) throw JsonFormatError("cell points must be an array");
        for (const auto& p : points) cell.points.push_back(point_from_json(p));
        f.cells.push_back(std::move(cell));
    }
    return f;
}

Json certificate_to_json(const NoIsometryCertificate& c) {
    Json j{{"pairs_checked", c.pairs_checked},
           {"isometric_pairs", c.isometric_pairs},
           {"witness", nullptr}};
    if (c.witness)
        j["witness"] = Json{{"src_cell", c.witness->src_cell},
                            {"dst_cell", c.witness->dst_cell},
                            {"x", point_to_json(c.witness->x)},
                            {"y", point_to_json(c.witness->y)},
                            {"u", point_to_json(c.witness->u)},
                            {"v", point_to_json(c.witness->v)}};
    return j;
}

Json slalom_to_json(const Slalom& s) {
    Json arr = Json::array();
    for (const auto& level : s.levels()) {
        Json letters = Json::array();
        for (Letter l : level) letters.push_back(l);
        arr.push_back(std::move(letters));
    }
    return arr;
}

Slalom slalom_from_json(const Json& j) {
    if (!j.is_array()) throw JsonFormatError("slalom must be an array of letter arrays");
    std::vector<std::set<Letter>> levels;
    levels.reserve(j.size());
    for (const auto& level : j) {
        if (!level.is_array())
            throw JsonFormatError("each slalom level must be an array of letters");
        std::set<Letter> s;
        for (const auto& l : level) {
            if (!nonneg_int(l))
                throw JsonFormatError("letters must be nonnegative integers");
            s.insert(l.get<Letter>());
        }
        levels.push_back(std::move(s));
    }
    return Slalom(std::move(levels));
}

Json width_profile_to_json(const WidthProfile& p) {
    switch (p.kind()) {
        case WidthProfile::Kind::PowTwoPlusOne:
            return Json{{"kind", "pow2plus1"}};
        case WidthProfile::Kind::NTimesPowTwo:
            return Json{{"kind", "npow2"}};
        case WidthProfile::Kind::Table:
            return Json{{"kind", "table"}, {"values", p.values()}};
    }
    throw std::logic_error("unreachable profile kind");
}

WidthProfile width_profile_from_json(const Json& j) {
    if (!j.is_object()) throw JsonFormatError("width profile must be an object");
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "pow2plus1") return WidthProfile::pow_two_plus_one();
    if (kind == "npow2") return WidthProfile::n_times_pow_two();
    if (kind == "table") {
        const Json& values = field(j, "values");
        if (!values.is_array())
            throw JsonFormatError("width table values must be an array");
        std::vector<std::uint64_t> vs;
        for (const auto& v : values) {
            if (!nonneg_int(v))
                throw JsonFormatError("width values must be nonnegative integers");
            vs.push_back(v.get<std::uint64_t>());
        }
        return WidthProfile::table(std::move(vs));
    }
    throw JsonFormatError("unknown width profile kind '" + kind + "'");
}

Json bounded_sample_to_json(const BoundedSample& s) {
    Json points = Json::array();
    for (const Point& x : s.points) points.push_back(point_to_json(x));
    return Json{{"s", s.base}, {"points", std::move(points)}, {"bound", s.bound}};
}

BoundedSample bounded_sample_from_json(const Json& j) {
    if (!j.is_object()) throw JsonFormatError("sample must be an object");
    const Json& points_json = field(j, "points");
    if (!points_json.is_array()) throw JsonFormatError("sample points must be an array");
    std::vector<Point> points;
    for (const auto& p : points_json) points.push_back(point_from_json(p));
    Letter bound = 2;
    if (j.contains("bound")) {
        if (!nonneg_int(j["bound"]))
            throw JsonFormatError("sample bound must be a positive integer");
        bound = j["bound"].get<Letter>();
    }
    try {
        return BoundedSample(word_from_json(field(j, "s")), std::move(points), bound);
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(std::string("bad sample: ") + e.what());
    }
}

Json tree_width_report_to_json(const TreeWidthReport& r) {
    Json j{{"counts", r.counts}};
    if (!r.within_bound.empty()) {
        j["within_bound"] = r.within_bound;
        j["all_within"] = r.all_within;
    }
    return j;
}

Json separating_set_to_json(const SeparatingSet& x) {
    Json arr = Json::array();
    for (const auto& [s, t] : x.pairs) arr.push_back(Json{{"s", s}, {"t", t}});
    return arr;
}

SeparatingSet separating_set_from_json(const Json& j) {
    if (!j.is_array())
        throw JsonFormatError("separating set must be an array of {s, t} pairs");
    SeparatingSet x;
    for (const auto& v : j)
        x.pairs.emplace_back(word_from_json(field(v, "s")), word_from_json(field(v, "t")));
    return x;
}

Json antichain_result_to_json(const AntichainResult& r,
                              const std::vector<Condition>& conds) {
    Json witnesses = Json::array();
    for (std::size_t i = 0; i < r.indices.size(); ++i)
        for (std::size_t j = i + 1; j < r.indices.size(); ++j) {
            const auto w =
                incompatibility_witness(conds[r.indices[i]], conds[r.indices[j]]);
            Json entry{{"i", r.indices[i]},
                       {"j", r.indices[j]},
                       {"reason", w.kind == IncompatibilityWitness::Kind::NotLipschitz
                                      ? "not_lipschitz"
                                      : "not_injective"},
                       {"a", point_to_json(w.a)},
                       {"a2", point_to_json(w.a2)}};
            if (w.k) entry["k"] = *w.k;
            witnesses.push_back(std::move(entry));
        }
    return Json{{"indices", r.indices},
                {"size", r.indices.size()},
                {"exact", r.exact},
                {"meets_min_size", r.meets_min_size},
                {"witnesses", std::move(witnesses)}};
}

Json transcript_to_json(const std::vector<BnfStep>& steps) {
    Json arr = Json::array();
    for (const BnfStep& s : steps)
        arr.push_back(
            Json{{"direction", s.direction == BnfStep::Direction::Forth ? "forth" : "back"},
                 {"scheduled", point_to_json(s.scheduled)},
                 {"chosen", point_to_json(s.partner)},
                 {"k", s.agreement}});
    return arr;
}

std::unique_ptr<DenseOracle> oracle_from_json(const Json& j) {
    if (!j.is_object()) throw JsonFormatError("oracle must be an object");
    const std::string kind = field(j, "kind").get<std::string>();
    const Alphabet alphabet = alphabet_from_json(field(j, "alphabet"));
    if (kind == "eventually_constant") {
        const Json& tail = field(j, "tail");
        if (!nonneg_int(tail))
            throw JsonFormatError("oracle tail must be a letter");
        std::uint64_t seed = 0;
        if (j.contains("seed")) seed = j["seed"].get<std::uint64_t>();
        try {
            return std::make_unique<EventuallyConstantDense>(alphabet,
                                                             tail.get<Letter>(), seed);
        } catch (const std::invalid_argument& e) {
            throw JsonFormatError(std::string("bad oracle: ") + e.what());
        }
    }
    if (kind == "finite") {
        const Json& points_json = field(j, "points");
        if (!points_json.is_array())
            throw JsonFormatError("oracle points must be an array");
        std::vector<Point> points;
        for (const auto& p : points_json) points.push_back(point_from_json(p));
        try {
            return std::make_unique<FiniteSampleOracle>(alphabet, std::move(points));
        } catch (const std::invalid_argument& e) {
            throw JsonFormatError(std::string("bad oracle: ") + e.what());
        }
    }
    throw JsonFormatError("unknown oracle kind '" + kind + "'");
}

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw JsonFormatError("input is not valid JSON");
    return j;
}

}  // namespace baire
