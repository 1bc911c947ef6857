#ifndef RDLP_JSON_IO_HPP
#define RDLP_JSON_IO_HPP

// Instance files and machine-readable result records. One JSON schema for
// the four instance kinds; records serialize deterministically with rational
// values carried as numerator/denominator strings.

#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"
#include "rdlp/achievable.hpp"
#include "rdlp/converse.hpp"
#include "rdlp/instances.hpp"

namespace rdlp::io {

using nlohmann::json;
using nlohmann::ordered_json;

enum class InstanceKind { Discrete, Gaussian, IndexCoding, OddCycle };

struct ParsedInstance {
    InstanceKind kind = InstanceKind::Discrete;
    std::optional<achievable::ProblemInstance> problem;
    std::optional<achievable::MessageSchedule> schedule;
    std::optional<converse::IndexCodingInstance> index;
    std::optional<instances::OddCycleSpec> odd_cycle;
    std::optional<converse::MinimaxAux> aux;
};

namespace detail {

inline const json& need(const json& j, const char* key, const char* where)
{
    auto it = j.find(key);
    if (it == j.end())
        throw Error(std::string("instance file: missing '") + key + "' in " + where);
    return *it;
}

inline std::vector<std::vector<double>> matrix_of(const json& j, const char* where)
{
    if (!j.is_array() || j.empty())
        throw Error(std::string("instance file: ") + where + " must be a nonempty array");
    std::vector<std::vector<double>> out;
    for (const auto& row : j) {
        if (!row.is_array())
            throw Error(std::string("instance file: ") + where + " rows must be arrays");
        out.push_back(row.get<std::vector<double>>());
    }
    return out;
}

inline achievable::DiscreteChannel channel_of(const json& j, const char* where)
{
    achievable::DiscreteChannel ch;
    ch.var.name = need(j, "name", where).get<std::string>();
    ch.var.alphabet_size = need(j, "alphabet", where).get<int>();
    ch.given = need(j, "given", where).get<std::vector<std::string>>();
    ch.kernel = matrix_of(need(j, "kernel", where), where);
    return ch;
}

inline gauss::Matrix dense_matrix(const std::vector<std::vector<double>>& rows,
                                  const char* where)
{
    gauss::Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw Error(std::string("instance file: ragged matrix in ") + where);
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    }
    return m;
}

inline gauss::GaussianMessage gaussian_message_of(const json& j, const char* where)
{
    gauss::GaussianMessage msg;
    msg.name = need(j, "name", where).get<std::string>();
    msg.source_blocks = need(j, "blocks", where).get<std::vector<std::string>>();
    msg.observation = dense_matrix(matrix_of(need(j, "observation", where), where), where);
    msg.noise_cov = dense_matrix(matrix_of(need(j, "noise", where), where), where);
    return msg;
}

inline achievable::DecoderSet subset_of(const json& j, int m, const char* where)
{
    if (!j.is_array() || j.empty())
        throw Error(std::string("instance file: ") + where +
                    " subset must be a nonempty array of decoder indices");
    achievable::DecoderSet s = 0;
    for (const auto& e : j) {
        int l = e.get<int>();
        if (l < 1 || l > m)
            throw Error(std::string("instance file: decoder index out of range in ") + where);
        s |= 1u << (l - 1);
    }
    return s;
}

inline achievable::Message message_of(const json& j, int m, bool discrete, const char* where)
{
    achievable::Message msg;
    msg.subset = subset_of(need(j, "subset", where), m, where);
    if (j.contains("channel")) {
        if (!discrete) throw Error("instance file: discrete channel on a gaussian instance");
        msg.discrete = channel_of(j.at("channel"), where);
    } else if (j.contains("message")) {
        if (discrete) throw Error("instance file: gaussian message on a discrete instance");
        msg.gaussian = gaussian_message_of(j.at("message"), where);
    }
    return msg;
}

inline std::size_t packed_alphabet(const achievable::ProblemInstance& inst)
{
    std::size_t cells = 1;
    for (const auto& name : inst.source)
        cells *= static_cast<std::size_t>(inst.joint->alphabet_of(inst.joint->index_of(name)));
    return cells;
}

}  // namespace detail

inline ParsedInstance parse_instance(const json& j)
{
    ParsedInstance out;
    std::string kind = detail::need(j, "kind", "top level").get<std::string>();
    if (kind == "odd-cycle") {
        out.kind = InstanceKind::OddCycle;
        instances::OddCycleSpec spec;
        spec.m = detail::need(j, "m", "odd-cycle").get<int>();
        std::string flavor = detail::need(j, "flavor", "odd-cycle").get<std::string>();
        if (flavor == "binary")
            spec.flavor = instances::OddCycleSpec::Flavor::BinaryIndex;
        else if (flavor == "gaussian")
            spec.flavor = instances::OddCycleSpec::Flavor::Gaussian;
        else
            throw Error("instance file: flavor must be 'binary' or 'gaussian'");
        if (spec.flavor == instances::OddCycleSpec::Flavor::Gaussian)
            spec.d = detail::need(j, "D", "odd-cycle").get<double>();
        spec.validate();
        out.odd_cycle = spec;
        return out;
    }
    if (kind == "index-coding") {
        out.kind = InstanceKind::IndexCoding;
        converse::IndexCodingInstance inst;
        inst.bits = detail::need(j, "bits", "index-coding").get<int>();
        for (const auto& d : detail::need(j, "decoders", "index-coding")) {
            converse::IndexCodingDecoder dec;
            for (int b : detail::need(d, "side", "decoder").get<std::vector<int>>()) {
                if (b < 1 || b > inst.bits)
                    throw Error("instance file: side bit out of range");
                dec.side |= 1u << (b - 1);
            }
            for (int b : detail::need(d, "demand", "decoder").get<std::vector<int>>()) {
                if (b < 1 || b > inst.bits)
                    throw Error("instance file: demand bit out of range");
                dec.demand |= 1u << (b - 1);
            }
            inst.decoders.push_back(dec);
        }
        inst.validate();
        out.index = inst;
        return out;
    }
    if (kind != "discrete" && kind != "gaussian")
        throw Error("instance file: unknown kind '" + kind + "'");

    achievable::ProblemInstance inst;
    bool discrete = kind == "discrete";
    out.kind = discrete ? InstanceKind::Discrete : InstanceKind::Gaussian;
    if (discrete) {
        std::vector<pmf::VariableId> vars;
        for (const auto& v : detail::need(j, "variables", "discrete"))
            vars.push_back({detail::need(v, "name", "variable").get<std::string>(),
                            detail::need(v, "alphabet", "variable").get<int>()});
        std::vector<double> mass = detail::need(j, "pmf", "discrete").get<std::vector<double>>();
        inst.joint = pmf::JointPmf(std::move(vars), std::move(mass));
    } else {
        std::vector<std::pair<std::string, int>> blocks;
        for (const auto& b : detail::need(j, "blocks", "gaussian"))
            blocks.push_back({detail::need(b, "name", "block").get<std::string>(),
                              detail::need(b, "dim", "block").get<int>()});
        gauss::Matrix sigma = detail::dense_matrix(
            detail::matrix_of(detail::need(j, "covariance", "gaussian"), "covariance"),
            "covariance");
        inst.system = gauss::GaussianSystem(std::move(blocks), std::move(sigma));
    }
    inst.source = detail::need(j, "source", kind.c_str()).get<std::vector<std::string>>();

    const json& decoders = detail::need(j, "decoders", kind.c_str());
    for (const auto& d : decoders) {
        achievable::DecoderSpec dec;
        dec.side_info = detail::need(d, "side_info", "decoder").get<std::vector<std::string>>();
        if (discrete) {
            const json& dist = detail::need(d, "distortion", "decoder");
            std::string type = detail::need(dist, "type", "distortion").get<std::string>();
            if (type == "hamming") {
                // Hamming over the packed source alphabet.
                dec.distortion = achievable::Distortion::from_table({});
            } else if (type == "table") {
                dec.distortion = achievable::Distortion::from_table(
                    detail::matrix_of(detail::need(dist, "values", "distortion"), "distortion"));
            } else {
                throw Error("instance file: distortion type must be 'hamming' or 'table'");
            }
            dec.target = {detail::need(d, "target", "decoder").get<double>()};
        } else {
            dec.distortion = achievable::Distortion::mse();
            for (const auto& t : detail::need(d, "target", "decoder"))
                dec.target.push_back(t.is_null() ? std::numeric_limits<double>::infinity()
                                                 : t.get<double>());
        }
        inst.decoders.push_back(std::move(dec));
    }
    // Resolve deferred Hamming tables now that the source alphabet is known.
    if (discrete) {
        std::size_t cells = detail::packed_alphabet(inst);
        for (auto& dec : inst.decoders)
            if (dec.distortion.kind == achievable::Distortion::Kind::Table &&
                dec.distortion.table.empty())
                dec.distortion =
                    achievable::Distortion::from_table(instances::hamming_table(int(cells)));
    }
    inst.validate();
    out.problem = std::move(inst);

    if (j.contains("schedule")) {
        achievable::MessageSchedule sched;
        for (const auto& mj : j.at("schedule"))
            sched.order.push_back(
                detail::message_of(mj, out.problem->m(), discrete, "schedule"));
        out.schedule = std::move(sched);
    }
    if (j.contains("auxiliaries")) {
        const json& aj = j.at("auxiliaries");
        converse::MinimaxAux aux;
        aux.common.subset = out.problem->m() >= 1 ? (1u << out.problem->m()) - 1 : 1u;
        if (aj.contains("common") && !aj.at("common").is_null()) {
            if (discrete)
                aux.common.discrete = detail::channel_of(aj.at("common"), "auxiliaries");
            else
                aux.common.gaussian =
                    detail::gaussian_message_of(aj.at("common"), "auxiliaries");
        }
        const json& per = detail::need(aj, "per_decoder", "auxiliaries");
        if (static_cast<int>(per.size()) != out.problem->m())
            throw Error("instance file: auxiliaries need one entry per decoder");
        int idx = 0;
        for (const auto& uj : per) {
            achievable::Message u;
            u.subset = 1u << idx;
            if (!uj.is_null()) {
                if (discrete)
                    u.discrete = detail::channel_of(uj, "auxiliaries");
                else
                    u.gaussian = detail::gaussian_message_of(uj, "auxiliaries");
            }
            aux.per_decoder.push_back(std::move(u));
            ++idx;
        }
        out.aux = std::move(aux);
    }
    return out;
}

inline ParsedInstance load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("instance file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_instance(j);
}

// ---------------------------------------------------------------------------
// Result records
// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a(const std::string& text)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fingerprint_of(const std::string& text)
{
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
    return buf;
}

struct ResultRecord {
    std::string bound;
    double value = 0;
    bool exact = false;
    Rational exact_value;
    std::string mode;  // "rational" or "float"
    double eps = 0;
    std::string fingerprint;
    lp::SolveStats stats;
};

inline ordered_json to_json(const ResultRecord& r)
{
    ordered_json j;
    j["bound"] = r.bound;
    j["value"] = r.value;
    if (r.exact) {
        j["rational"] = {{"num", r.exact_value.num_string()},
                         {"den", r.exact_value.den_string()}};
    } else {
        j["rational"] = nullptr;
    }
    j["mode"] = r.mode;
    j["eps"] = r.eps;
    j["fingerprint"] = r.fingerprint;
    j["stats"] = {{"rows", r.stats.rows},
                  {"cols", r.stats.cols},
                  {"pivots", r.stats.pivots},
                  {"via_dual", r.stats.via_dual}};
    return j;
}

inline ResultRecord record_from_json(const json& j)
{
    ResultRecord r;
    r.bound = j.at("bound").get<std::string>();
    r.value = j.at("value").get<double>();
    if (!j.at("rational").is_null()) {
        r.exact = true;
        std::string num = j.at("rational").at("num").get<std::string>();
        std::string den = j.at("rational").at("den").get<std::string>();
        // Round-trips for values that fit 64 bits; larger ones keep strings.
        r.exact_value = Rational(std::stoll(num), std::stoll(den));
    }
    r.mode = j.at("mode").get<std::string>();
    r.eps = j.at("eps").get<double>();
    r.fingerprint = j.at("fingerprint").get<std::string>();
    r.stats.rows = j.at("stats").at("rows").get<int>();
    r.stats.cols = j.at("stats").at("cols").get<int>();
    r.stats.pivots = j.at("stats").at("pivots").get<long>();
    r.stats.via_dual = j.at("stats").at("via_dual").get<bool>();
    return r;
}

}  // namespace rdlp::io

#endif
