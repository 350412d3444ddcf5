#include <equivar/error.hpp>
#include <equivar/model_io.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace equivar {

using ojson = nlohmann::ordered_json;

namespace {

class Reader {
public:
    explicit Reader(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void error(const std::string &path, const std::string &what) const
    {
        fail(Errc::parse_error, origin_ + ": at " + (path.empty() ? "/" : path) + ": " + what);
    }

    const ojson &field(const ojson &j, const std::string &path, const char *key) const
    {
        if (!j.is_object() || !j.contains(key)) {
            error(path, std::string("missing field '") + key + "'");
        }
        return j.at(key);
    }

    std::string str(const ojson &j, const std::string &path) const
    {
        if (!j.is_string()) {
            error(path, "expected a string");
        }
        return j.get<std::string>();
    }

    int integer(const ojson &j, const std::string &path) const
    {
        if (!j.is_number_integer()) {
            error(path, "expected an integer");
        }
        return j.get<int>();
    }

    Rational rational(const ojson &j, const std::string &path) const
    {
        if (j.is_number_integer()) {
            return Rational(j.get<long>());
        }
        if (j.is_string()) {
            try {
                return parse_rational(j.get<std::string>());
            } catch (const EngineError &e) {
                error(path, e.what());
            }
        }
        error(path, "expected an integer or a rational string");
    }

    const ojson &array(const ojson &j, const std::string &path) const
    {
        if (!j.is_array()) {
            error(path, "expected an array");
        }
        return j;
    }

    Weight weight(const ojson &j, const std::string &path) const
    {
        Weight w;
        for (std::size_t i = 0; i < array(j, path).size(); ++i) {
            w.push_back(integer(j[i], path + "/" + std::to_string(i)));
        }
        return w;
    }

    RationalMatrix matrix(const ojson &j, const std::string &path) const
    {
        const auto &rows = array(j, path);
        const int nr = static_cast<int>(rows.size());
        int nc = -1;
        std::vector<Rational> data;
        for (int i = 0; i < nr; ++i) {
            const std::string rp = path + "/" + std::to_string(i);
            const auto &row = array(rows[static_cast<std::size_t>(i)], rp);
            if (nc < 0) {
                nc = static_cast<int>(row.size());
            } else if (nc != static_cast<int>(row.size())) {
                error(rp, "ragged matrix");
            }
            for (std::size_t c = 0; c < row.size(); ++c) {
                data.push_back(rational(row[c], rp + "/" + std::to_string(c)));
            }
        }
        return RationalMatrix(nr, std::max(nc, 0), std::move(data));
    }

private:
    std::string origin_;
};

std::string location(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace

ModelFile parse_model_file(std::string_view text, std::string_view origin)
{
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        fail(Errc::parse_error, std::string(origin) + ": " + location(text, e.byte) + ": malformed JSON");
    }
    const Reader rd{std::string(origin)};
    if (!j.is_object()) {
        rd.error("", "model file must be a JSON object");
    }

    ModelFile file;
    ModelSpec &s = file.spec;
    s.name = rd.str(rd.field(j, "", "name"), "/name");
    s.manifold_dim = rd.integer(rd.field(j, "", "manifoldDim"), "/manifoldDim");
    if (j.contains("baseDim")) {
        s.base_dim = rd.integer(j.at("baseDim"), "/baseDim");
    }
    const auto &params = rd.array(rd.field(j, "", "parameters"), "/parameters");
    for (std::size_t i = 0; i < params.size(); ++i) {
        s.parameters.push_back(rd.str(params[i], "/parameters/" + std::to_string(i)));
    }

    const auto &gens = rd.array(rd.field(j, "", "generators"), "/generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string p = "/generators/" + std::to_string(i);
        const auto &g = gens[i];
        GeneratorSpec gs;
        gs.name = rd.str(rd.field(g, p, "name"), p + "/name");
        const std::string parity = rd.str(rd.field(g, p, "parity"), p + "/parity");
        if (parity != "odd" && parity != "even") {
            rd.error(p + "/parity", "parity must be odd or even");
        }
        gs.parity = parity == "odd" ? Parity::odd : Parity::even;
        gs.form_degree = rd.integer(rd.field(g, p, "formDegree"), p + "/formDegree");
        const std::string kind = rd.str(rd.field(g, p, "kind"), p + "/kind");
        auto k = parse_kind(kind);
        if (!k) {
            rd.error(p + "/kind", "unknown generator kind '" + kind + "'");
        }
        gs.kind = *k;
        if (g.contains("frame")) {
            gs.frame = rd.str(g.at("frame"), p + "/frame");
        }
        if (g.contains("slot")) {
            gs.slot = rd.integer(g.at("slot"), p + "/slot");
        }
        if (g.contains("basic")) {
            if (!g.at("basic").is_boolean()) {
                rd.error(p + "/basic", "expected a boolean");
            }
            gs.basic = g.at("basic").get<bool>();
        }
        s.generators.push_back(std::move(gs));
    }

    if (j.contains("dTable")) {
        const auto &d = j.at("dTable");
        if (!d.is_object()) {
            rd.error("/dTable", "expected an object");
        }
        for (const auto &[k, v] : d.items()) {
            s.d_table[k] = rd.str(v, "/dTable/" + k);
        }
    }
    if (j.contains("iotaTable")) {
        const auto &t = j.at("iotaTable");
        if (!t.is_object()) {
            rd.error("/iotaTable", "expected an object");
        }
        for (const auto &[k, v] : t.items()) {
            std::vector<std::string> vals;
            for (std::size_t a = 0; a < rd.array(v, "/iotaTable/" + k).size(); ++a) {
                vals.push_back(rd.str(v[a], "/iotaTable/" + k + "/" + std::to_string(a)));
            }
            s.iota_table[k] = std::move(vals);
        }
    }

    const auto &frames = rd.array(rd.field(j, "", "frames"), "/frames");
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const std::string p = "/frames/" + std::to_string(i);
        const auto &f = frames[i];
        FrameSpec fs;
        fs.id = rd.str(rd.field(f, p, "frameId"), p + "/frameId");
        fs.rank = rd.integer(rd.field(f, p, "rank"), p + "/rank");
        const auto &slots = rd.array(rd.field(f, p, "slots"), p + "/slots");
        for (std::size_t q = 0; q < slots.size(); ++q) {
            fs.slots.push_back(rd.str(slots[q], p + "/slots/" + std::to_string(q)));
        }
        if (f.contains("momentSamples")) {
            const auto &ms = rd.array(f.at("momentSamples"), p + "/momentSamples");
            for (std::size_t q = 0; q < ms.size(); ++q) {
                fs.moment_samples.push_back(rd.matrix(ms[q], p + "/momentSamples/" + std::to_string(q)));
            }
        }
        if (f.contains("curvature")) {
            const auto &cv = rd.array(f.at("curvature"), p + "/curvature");
            for (std::size_t q = 0; q < cv.size(); ++q) {
                fs.curvature.push_back(rd.str(cv[q], p + "/curvature/" + std::to_string(q)));
            }
        }
        s.frames.push_back(std::move(fs));
    }

    if (j.contains("fixedLoci")) {
        const auto &loci = rd.array(j.at("fixedLoci"), "/fixedLoci");
        for (std::size_t i = 0; i < loci.size(); ++i) {
            const std::string p = "/fixedLoci/" + std::to_string(i);
            const auto &l = loci[i];
            FixedLocusDatum d;
            d.id = rd.str(rd.field(l, p, "locusId"), p + "/locusId");
            const std::string type = rd.str(rd.field(l, p, "locusType"), p + "/locusType");
            auto lt = parse_locus_type(type);
            if (!lt) {
                rd.error(p + "/locusType", "unknown locus type '" + type + "'");
            }
            d.type = *lt;
            if (l.contains("tangentWeights")) {
                const auto &tw = rd.array(l.at("tangentWeights"), p + "/tangentWeights");
                for (std::size_t q = 0; q < tw.size(); ++q) {
                    d.tangent_weights.push_back(rd.weight(tw[q], p + "/tangentWeights/" + std::to_string(q)));
                }
            }
            if (l.contains("normalWeights")) {
                const auto &nw = rd.array(l.at("normalWeights"), p + "/normalWeights");
                for (std::size_t q = 0; q < nw.size(); ++q) {
                    const std::string np = p + "/normalWeights/" + std::to_string(q);
                    NormalWeight n;
                    n.w = rd.weight(rd.field(nw[q], np, "weight"), np + "/weight");
                    if (nw[q].contains("type")) {
                        const std::string t = rd.str(nw[q].at("type"), np + "/type");
                        if (t != "complex" && t != "real") {
                            rd.error(np + "/type", "normal weight type must be complex or real");
                        }
                        n.complex = t == "complex";
                    }
                    d.normal_weights.push_back(std::move(n));
                }
            }
            d.twist = rd.weight(rd.field(l, p, "twistWeight"), p + "/twistWeight");
            if (l.contains("expansionDirection")) {
                const auto &ed = l.at("expansionDirection");
                auto one = [&](const ojson &v, const std::string &vp) {
                    auto dir = parse_direction(rd.str(v, vp));
                    if (!dir) {
                        rd.error(vp, "direction must be positive, negative or unset");
                    }
                    d.directions.push_back(*dir);
                };
                if (ed.is_array()) {
                    for (std::size_t q = 0; q < ed.size(); ++q) {
                        one(ed[q], p + "/expansionDirection/" + std::to_string(q));
                    }
                } else {
                    one(ed, p + "/expansionDirection");
                }
            }
            if (l.contains("orientationSign")) {
                d.orientation_sign = rd.integer(l.at("orientationSign"), p + "/orientationSign");
            }
            if (l.contains("circleWeight")) {
                d.circle_weight = rd.weight(l.at("circleWeight"), p + "/circleWeight");
            }
            file.fixed_loci.push_back(std::move(d));
        }
    }
    if (j.contains("pipelineCase")) {
        const std::string pc = rd.str(j.at("pipelineCase"), "/pipelineCase");
        file.pipeline_case = parse_pipeline_case(pc);
        if (!file.pipeline_case) {
            rd.error("/pipelineCase", "unknown pipeline case '" + pc + "'");
        }
    }
    if (j.contains("base")) {
        const auto &b = j.at("base");
        BaseData bd;
        bd.todd = rd.str(rd.field(b, "/base", "todd"), "/base/todd");
        const auto &ints = rd.field(b, "/base", "integrals");
        if (!ints.is_object()) {
            rd.error("/base/integrals", "expected an object");
        }
        for (const auto &[k, v] : ints.items()) {
            bd.integrals[k] = rd.str(v, "/base/integrals/" + k);
        }
        file.base = std::move(bd);
    }
    return file;
}

ModelFile read_model_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(Errc::parse_error, "cannot open model file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_file(buf.str(), path.string());
}

std::string model_file_to_json(const ModelFile &file)
{
    const ModelSpec &s = file.spec;
    ojson j;
    j["name"] = s.name;
    j["manifoldDim"] = s.manifold_dim;
    if (s.base_dim) {
        j["baseDim"] = *s.base_dim;
    }
    j["parameters"] = s.parameters;
    ojson gens = ojson::array();
    for (const auto &g : s.generators) {
        ojson e{{"name", g.name}, {"parity", g.parity == Parity::odd ? "odd" : "even"}, {"formDegree", g.form_degree},
                {"kind", std::string(kind_name(g.kind))}};
        if (!g.frame.empty()) {
            e["frame"] = g.frame;
            e["slot"] = g.slot;
        }
        if (g.basic) {
            e["basic"] = true;
        }
        gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
    j["dTable"] = ojson::object();
    for (const auto &[k, v] : s.d_table) {
        j["dTable"][k] = v;
    }
    j["iotaTable"] = ojson::object();
    for (const auto &[k, v] : s.iota_table) {
        j["iotaTable"][k] = v;
    }
    ojson frames = ojson::array();
    for (const auto &f : s.frames) {
        ojson e{{"frameId", f.id}, {"rank", f.rank}, {"slots", f.slots}};
        if (!f.moment_samples.empty()) {
            ojson ms = ojson::array();
            for (const auto &m : f.moment_samples) {
                ojson rows = ojson::array();
                for (int r = 0; r < m.rows(); ++r) {
                    ojson row = ojson::array();
                    for (int c = 0; c < m.cols(); ++c) {
                        const Rational &q = m(r, c);
                        row.push_back(is_integer(q) ? ojson(q.get_num().get_si()) : ojson(q.get_str()));
                    }
                    rows.push_back(std::move(row));
                }
                ms.push_back(std::move(rows));
            }
            e["momentSamples"] = std::move(ms);
        }
        if (!f.curvature.empty()) {
            e["curvature"] = f.curvature;
        }
        frames.push_back(std::move(e));
    }
    j["frames"] = std::move(frames);
    if (!file.fixed_loci.empty()) {
        ojson loci = ojson::array();
        for (const auto &d : file.fixed_loci) {
            ojson e{{"locusId", d.id}, {"locusType", std::string(locus_type_name(d.type))}, {"tangentWeights", d.tangent_weights}};
            ojson nw = ojson::array();
            for (const auto &n : d.normal_weights) {
                nw.push_back(ojson{{"weight", n.w}, {"type", n.complex ? "complex" : "real"}});
            }
            e["normalWeights"] = std::move(nw);
            e["twistWeight"] = d.twist;
            ojson dirs = ojson::array();
            for (auto dir : d.directions) {
                dirs.push_back(std::string(direction_name(dir)));
            }
            e["expansionDirection"] = std::move(dirs);
            e["orientationSign"] = d.orientation_sign;
            if (d.circle_weight) {
                e["circleWeight"] = *d.circle_weight;
            }
            loci.push_back(std::move(e));
        }
        j["fixedLoci"] = std::move(loci);
    }
    if (file.pipeline_case) {
        j["pipelineCase"] = std::string(pipeline_case_name(*file.pipeline_case));
    }
    if (file.base) {
        ojson ints = ojson::object();
        for (const auto &[k, v] : file.base->integrals) {
            ints[k] = v;
        }
        j["base"] = ojson{{"todd", file.base->todd}, {"integrals", std::move(ints)}};
    }
    return j.dump(2) + "\n";
}

ModelFile load_model(std::string_view path_or_name)
{
    const std::filesystem::path p{std::string(path_or_name)};
    std::error_code ec;
    if (std::filesystem::is_regular_file(p, ec)) {
        return read_model_file(p);
    }
    if (auto b = find_builtin_model(path_or_name)) {
        return *b;
    }
    fail(Errc::parse_error, "no model file or built-in model named '" + std::string(path_or_name) + "'");
}

ModelSpec torus_model_spec(int rank)
{
    if (rank < 1) {
        fail(Errc::out_of_range, "torus rank must be at least 1");
    }
    ModelSpec s;
    s.name = rank == 1 ? "s1-on-s1" : "t" + std::to_string(rank) + "-on-t" + std::to_string(rank);
    s.manifold_dim = rank;
    FrameSpec f;
    f.id = "E0";
    f.rank = rank;
    for (int j = 1; j <= rank; ++j) {
        const std::string sfx = rank == 1 ? "" : std::to_string(j);
        s.parameters.push_back("X" + sfx);
        const std::string eta = "deta" + sfx;
        const std::string u = "u" + sfx;
        s.generators.push_back({eta, Parity::odd, 1, GeneratorKind::frame_form, "E0", j, false});
        s.generators.push_back({u, Parity::even, 2, GeneratorKind::closed_argument, "E0", j, false});
        s.d_table[eta] = "0";
        f.slots.push_back(eta);
    }
    for (int j = 1; j <= rank; ++j) {
        std::vector<std::string> iota;
        for (int a = 1; a <= rank; ++a) {
            iota.push_back(a == j ? "1" : "0");
        }
        s.iota_table[f.slots[static_cast<std::size_t>(j - 1)]] = std::move(iota);
    }
    s.frames.push_back(std::move(f));
    return s;
}

} // namespace equivar
