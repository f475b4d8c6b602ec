#include "ergolab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ergolab/errors.hpp"

namespace ergolab {

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw Error("unknown format '" + s + "' (expected json or csv)");
}

std::string fmt_float(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("atomic_write: cannot open '" + tmp + "' for writing");
        os.write(content.data(), static_cast<std::streamsize>(content.size()));
        os.flush();
        if (!os) {
            os.close();
            std::remove(tmp.c_str());
            throw Error("atomic_write: write to '" + tmp + "' failed");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("atomic_write: cannot rename onto '" + path + "'");
    }
}

namespace {

void append_complex_pair(std::string& out, const Complex& z) {
    out += '[';
    out += fmt_float(z.real());
    out += ',';
    out += fmt_float(z.imag());
    out += ']';
}

} // namespace

std::string observable_to_json(const FourierObservable& f) {
    std::string out = "{\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) out += ',';
        first = false;
        out += "{\"a\":" + std::to_string(e.a) + ",\"b\":" + std::to_string(e.b) +
               ",\"re\":" + fmt_float(c.real()) + ",\"im\":" + fmt_float(c.imag()) + "}";
    }
    out += "]}";
    return out;
}

FourierObservable observable_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw Error("observable_from_json: missing 'terms' array");
    FourierObservable f;
    for (const auto& t : j["terms"]) {
        std::int64_t a = t.at("a").get<std::int64_t>();
        std::int64_t b = t.at("b").get<std::int64_t>();
        if (f.coefficient(a, b) != Complex{})
            throw Error("observable_from_json: duplicate exponent pair");
        f.add_term(a, b, {t.at("re").get<double>(), t.at("im").get<double>()});
    }
    return f;
}

std::string state_to_json(const State& s) {
    std::string out = "{\"family_id\":\"" + s.family->id() + "\",\"values\":[";
    for (int i = 0; i < s.values.size(); ++i) {
        if (i) out += ',';
        append_complex_pair(out, s.values(i));
    }
    out += "]}";
    return out;
}

std::string cloud_to_json(const WeightedCloud& c) {
    std::string out = "{\"points\":[";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        if (i) out += ',';
        out += "{\"state\":" + state_to_json(c.points[i]) +
               ",\"alpha\":" + fmt_float(c.alphas[i]) + "}";
    }
    out += "]}";
    return out;
}

std::string operator_to_json(const QuantumOperator& op) {
    const auto& m = op.matrix;
    std::string re = "[", im = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) re += ',', im += ',';
        re += '[';
        im += '[';
        for (int j = 0; j < m.cols(); ++j) {
            if (j) re += ',', im += ',';
            re += fmt_float(m(i, j).real());
            im += fmt_float(m(i, j).imag());
        }
        re += ']';
        im += ']';
    }
    re += ']';
    im += ']';
    return "{\"n\":" + std::to_string(op.ctx.n) + ",\"re\":" + re + ",\"im\":" + im + "}";
}

std::string ergodicity_records_to_jsonl(const std::vector<ErgodicityRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += "{\"n\":" + std::to_string(r.n) + ",\"eps\":" + fmt_float(r.eps) +
               ",\"weighted_fraction\":" + fmt_float(r.weighted_fraction_within_eps) +
               ",\"barycenter_distance\":" + fmt_float(r.barycenter_distance) +
               ",\"family_tail_weight\":" + fmt_float(r.family_tail_weight) +
               ",\"n_blocks\":" + std::to_string(r.blocks.size()) + ",\"outliers\":[";
        bool first = true;
        for (const auto& b : r.outliers()) {
            if (!first) out += ',';
            first = false;
            out += "{\"block\":" + std::to_string(b.block_index) +
                   ",\"eigenvalue\":";
            append_complex_pair(out, b.eigenvalue);
            out += ",\"dimension\":" + std::to_string(b.dimension) +
                   ",\"distance\":" + fmt_float(b.distance) + "}";
        }
        out += "]}\n";
    }
    return out;
}

std::string ergodicity_records_to_csv(const std::vector<ErgodicityRecord>& records) {
    std::string out = "N,fraction,barycenter_distance,n_outliers\n";
    for (const auto& r : records) {
        out += std::to_string(r.n) + ',' + fmt_float(r.weighted_fraction_within_eps) + ',' +
               fmt_float(r.barycenter_distance) + ',' + std::to_string(r.outliers().size()) +
               '\n';
    }
    return out;
}

std::string scars_to_json(const std::vector<ScarEntry>& scars) {
    std::string out = "{\"scars\":[";
    for (std::size_t i = 0; i < scars.size(); ++i) {
        const auto& s = scars[i];
        if (i) out += ',';
        out += "{\"n\":" + std::to_string(s.n) + ",\"block\":" + std::to_string(s.block_index) +
               ",\"eigenvalue\":";
        append_complex_pair(out, s.eigenvalue);
        out += ",\"dimension\":" + std::to_string(s.dimension) +
               ",\"distance\":" + fmt_float(s.distance) + ",\"state_values\":[";
        for (int k = 0; k < s.state_values.size(); ++k) {
            if (k) out += ',';
            append_complex_pair(out, s.state_values(k));
        }
        out += "]}";
    }
    out += "]}";
    return out;
}

std::string spin_table_to_json(const SpinDimensionTable& t) {
    std::string out = "{\"genus\":" + std::to_string(t.genus) + ",\"r\":" + std::to_string(t.r) +
                      ",\"n\":" + std::to_string(t.level) + ",\"total\":" +
                      std::to_string(t.total) + ",\"partition_ok\":" +
                      (t.partition_ok() ? "true" : "false") + ",\"entries\":[";
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        const auto& e = t.entries[i];
        if (i) out += ',';
        out += "{\"character_class\":\"" + e.char_class + "\",\"arf\":" + std::to_string(e.arf) +
               ",\"includes_zero\":" + (e.includes_zero ? "true" : "false") +
               ",\"multiplicity\":" + std::to_string(e.multiplicity) +
               ",\"dimension\":" + std::to_string(e.dimension) + "}";
    }
    out += "]}";
    return out;
}

std::string spin_table_to_csv(const SpinDimensionTable& t) {
    std::string out = "genus,r,N,character_class,multiplicity,dimension\n";
    for (const auto& e : t.entries) {
        out += std::to_string(t.genus) + ',' + std::to_string(t.r) + ',' +
               std::to_string(t.level) + ',' + e.char_class + ',' +
               std::to_string(e.multiplicity) + ',' + std::to_string(e.dimension) + '\n';
    }
    return out;
}

std::string asymptotics_to_json(int genus, const AsymptoticsResult& r) {
    std::string out = "{\"genus\":" + std::to_string(genus) + ",\"r_values\":[";
    for (std::size_t i = 0; i < r.r_values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(r.r_values[i]);
    }
    out += "],\"estimates\":[";
    for (std::size_t i = 0; i < r.estimates.size(); ++i) {
        if (i) out += ',';
        out += fmt_float(r.estimates[i]);
    }
    out += "],\"ratios\":[";
    for (std::size_t i = 0; i < r.ratios.size(); ++i) {
        if (i) out += ',';
        out += fmt_float(r.ratios[i]);
    }
    out += "]}";
    return out;
}

std::string asymptotics_to_csv(int genus, const AsymptoticsResult& r) {
    std::string out = "genus,r,estimate,ratio\n";
    for (std::size_t i = 0; i < r.r_values.size(); ++i) {
        out += std::to_string(genus) + ',' + std::to_string(r.r_values[i]) + ',' +
               fmt_float(r.estimates[i]) + ',' + fmt_float(r.ratios[i]) + '\n';
    }
    return out;
}

void emit_report(const std::string& content, const std::string& path) {
    if (content.empty()) throw Error("emit_report: refusing to write an empty report");
    atomic_write(path, content);
}

} // namespace ergolab
