#include "pdcbound/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace pdcbound::io {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

double parse_double(std::string_view text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
    }
    return v;
}

template <std::size_t N>
json matrix_to_json(const Matrix<N>& m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t i = 0; i < N; ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (std::size_t j = 0; j < N; ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"dim", N}, {"re", std::move(re)}, {"im", std::move(im)}};
}

template <std::size_t N>
Matrix<N> matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im")) {
        throw Error(ErrorCode::ParseError, "matrix JSON needs \"dim\", \"re\" and \"im\"");
    }
    if (!j.at("dim").is_number_integer()) {
        throw Error(ErrorCode::ParseError, "matrix \"dim\" must be an integer");
    }
    const auto dim = j.at("dim").get<std::int64_t>();
    if (dim != static_cast<std::int64_t>(N)) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected a " + std::to_string(N) + "x" + std::to_string(N) + " matrix, got dim " +
                        std::to_string(dim));
    }
    const auto read_part = [&](const char* key, std::size_t i, std::size_t k) -> double {
        const json& rows = j.at(key);
        if (!rows.is_array() || rows.size() != N || !rows[i].is_array() || rows[i].size() != N) {
            throw Error(ErrorCode::DimensionMismatch, std::string("\"") + key + "\" must be " + std::to_string(N) +
                                                          "x" + std::to_string(N));
        }
        if (!rows[i][k].is_number()) {
            throw Error(ErrorCode::ParseError, std::string("non-numeric entry in \"") + key + "\"");
        }
        return rows[i][k].get<double>();
    };
    Matrix<N> m;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) {
            m(i, k) = Complex(read_part("re", i, k), read_part("im", i, k));
        }
    }
    return m;
}

json channel_to_json(const KrausChannel& ch) {
    json ops = json::array();
    for (const auto& m : ch.operators()) {
        ops.push_back(matrix_to_json(m));
    }
    json out{{"operators", std::move(ops)}};
    if (!ch.labels().empty()) {
        out["labels"] = ch.labels();
    }
    return out;
}

KrausChannel channel_from_json(const json& j) {
    if (!j.is_object() || !j.contains("operators") || !j.at("operators").is_array()) {
        throw Error(ErrorCode::ParseError, "channel JSON needs an \"operators\" array");
    }
    std::vector<Mat4> ops;
    for (const auto& op : j.at("operators")) {
        ops.push_back(matrix_from_json<4>(op));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j.at("labels").is_array()) {
            throw Error(ErrorCode::ParseError, "\"labels\" must be an array of strings");
        }
        for (const auto& l : j.at("labels")) {
            if (!l.is_string()) {
                throw Error(ErrorCode::ParseError, "\"labels\" must be an array of strings");
            }
            labels.push_back(l.get<std::string>());
        }
    }
    return KrausChannel(std::move(ops), std::move(labels));
}

namespace {

constexpr std::array<const char*, 8> kParamFields{"t",      "theta1", "theta2", "alpha1",
                                                  "alpha2", "mu",     "gamma0", "pump_p"};

} // namespace

json params_to_json(const SchemeParams& p) {
    return json{{"t", p.t},           {"theta1", p.theta1}, {"theta2", p.theta2}, {"alpha1", p.alpha1},
                {"alpha2", p.alpha2}, {"mu", p.mu},         {"gamma0", p.gamma0}, {"pump_p", p.pump_p}};
}

SchemeParams params_from_json(const json& j) {
    if (!j.is_object()) {
        throw Error(ErrorCode::ParseError, "params JSON must be an object");
    }
    for (const auto& [key, value] : j.items()) {
        if (std::find_if(kParamFields.begin(), kParamFields.end(), [&](const char* f) { return key == f; }) ==
            kParamFields.end()) {
            throw Error(ErrorCode::ParseError, "unknown params field \"" + key + "\"");
        }
    }
    const auto field = [&](const char* name) {
        if (!j.contains(name) || !j.at(name).is_number()) {
            throw Error(ErrorCode::ParseError, std::string("params field \"") + name + "\" missing or not a number");
        }
        return j.at(name).get<double>();
    };
    SchemeParams p;
    p.t = field("t");
    p.theta1 = field("theta1");
    p.theta2 = field("theta2");
    p.alpha1 = field("alpha1");
    p.alpha2 = field("alpha2");
    p.mu = field("mu");
    p.gamma0 = field("gamma0");
    p.pump_p = field("pump_p");
    p.validate();
    return p;
}

std::string dump_json(const json& j) {
    return j.dump(2);
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::ParseError, "cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw Error(ErrorCode::ParseError, "write failed for " + path.string());
    }
}

std::string csv_row(const SweepRecord& r) {
    std::string line = std::to_string(r.sample_id);
    const auto add = [&line](double v) {
        line += ',';
        line += format_double(v);
    };
    const auto& p = r.params;
    for (double v : {p.pump_p, p.t, p.theta1, p.theta2, p.alpha1, p.alpha2, p.mu, p.gamma0, r.concurrence,
                     r.bound_general, r.bound_2d}) {
        add(v);
    }
    for (double v : r.spectrum) {
        add(v);
    }
    return line;
}

SweepRecord parse_csv_row(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (cells.size() != 16) {
        throw Error(ErrorCode::ParseError, "sweep row needs 16 fields, got " + std::to_string(cells.size()));
    }
    SweepRecord r;
    {
        const auto [ptr, ec] = std::from_chars(cells[0].data(), cells[0].data() + cells[0].size(), r.sample_id);
        if (ec != std::errc{} || ptr != cells[0].data() + cells[0].size()) {
            throw Error(ErrorCode::ParseError, "bad sample_id '" + std::string(cells[0]) + "'");
        }
    }
    auto& p = r.params;
    double* targets[] = {&p.pump_p,       &p.t,         &p.theta1,        &p.theta2,        &p.alpha1,
                         &p.alpha2,       &p.mu,        &p.gamma0,        &r.concurrence,   &r.bound_general,
                         &r.bound_2d,     &r.spectrum[0], &r.spectrum[1], &r.spectrum[2], &r.spectrum[3]};
    for (std::size_t k = 0; k < 15; ++k) {
        *targets[k] = parse_double(cells[k + 1]);
    }
    return r;
}

void read_sweep_csv(std::istream& in, const std::function<void(const SweepRecord&)>& sink) {
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorCode::ParseError, "empty sweep CSV");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kSweepCsvHeader) {
        throw Error(ErrorCode::ParseError, "unexpected sweep CSV header");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        try {
            sink(parse_csv_row(line));
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

template json matrix_to_json<2>(const Matrix<2>&);
template json matrix_to_json<4>(const Matrix<4>&);
template Matrix<2> matrix_from_json<2>(const json&);
template Matrix<4> matrix_from_json<4>(const json&);

} // namespace pdcbound::io
