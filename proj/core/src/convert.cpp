#include "orthopoly/convert.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <random>

#include <json.hpp>

#include "orthopoly/decomp.hpp"
#include "orthopoly/expand.hpp"
#include "orthopoly/poly.hpp"
#include "orthopoly/recurrence.hpp"

namespace orthopoly {

namespace {

using nlohmann::json;

// Largest request size accepted before even trying to allocate.
constexpr u64 kMaxRequestSize = u64{1} << 26;

u64 parse_u64(const std::string& s, const std::string& field) {
    if (s.empty()) throw ConvertError(field, field + ": empty decimal string");
    u64 value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConvertError(field, field + ": '" + s + "' is not an unsigned decimal integer");
    }
    return value;
}

std::vector<Fp> parse_elements(const Field& F, const std::vector<std::string>& strings,
                               const std::string& field) {
    std::vector<Fp> out;
    out.reserve(strings.size());
    for (const std::string& s : strings) out.push_back(F.from_uint(parse_u64(s, field)));
    return out;
}

std::vector<std::string> format_elements(const std::vector<Fp>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (Fp v : values) out.push_back(std::to_string(v.v));
    return out;
}

Field make_field(const std::optional<std::string>& modulus) {
    if (!modulus) return Field{};
    u64 p = parse_u64(*modulus, "modulus");
    try {
        return Field(p);
    } catch (const std::invalid_argument& e) {
        throw ConvertError("modulus", e.what());
    }
}

RecurrenceFamily make_family(const Field& F, const ConversionRequest& request) {
    if (request.custom_family) {
        const FamilyTriples& t = *request.custom_family;
        if (t.a.size() != t.b.size() || t.a.size() != t.c.size()) {
            throw ConvertError("family", "family: arrays a, b, c must have equal length");
        }
        return RecurrenceFamily::custom(F, parse_elements(F, t.a, "family"),
                                        parse_elements(F, t.b, "family"),
                                        parse_elements(F, t.c, "family"));
    }
    try {
        return RecurrenceFamily::preset(F, request.family);
    } catch (const std::invalid_argument& e) {
        throw ConvertError("family", e.what());
    }
}

std::vector<std::string> json_string_array(const json& doc, const std::string& key,
                                           const std::string& field) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw ConvertError(field, field + ": missing array '" + key + "'");
    }
    std::vector<std::string> out;
    for (const json& item : doc[key]) {
        if (item.is_string()) {
            out.push_back(item.get<std::string>());
        } else if (item.is_number_unsigned()) {
            out.push_back(std::to_string(item.get<u64>()));
        } else {
            throw ConvertError(field, field + ": '" + key + "' entries must be decimal strings");
        }
    }
    return out;
}

json parse_json(const std::string& text, const std::string& field) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw ConvertError(field, field + ": not a JSON object");
    }
    return doc;
}

} // namespace

Direction parse_direction(const std::string& name) {
    if (name == "expand") return Direction::expand;
    if (name == "decomp") return Direction::decomp;
    if (name == "texpand") return Direction::texpand;
    if (name == "moments") return Direction::moments;
    throw ConvertError("direction", "direction: expected expand, decomp, texpand or moments, got '" +
                                        name + "'");
}

std::string direction_name(Direction d) {
    switch (d) {
    case Direction::expand: return "expand";
    case Direction::decomp: return "decomp";
    case Direction::texpand: return "texpand";
    case Direction::moments: return "moments";
    }
    return "?";
}

ConversionResult run_convert(const ConversionRequest& request) {
    Field F = make_field(request.modulus);
    RecurrenceFamily family = make_family(F, request);

    u64 n = request.n.value_or(request.coeffs.size());
    if (n == 0) throw ConvertError("n", "n: must be positive (give --n or a nonempty coeffs array)");
    if (n > kMaxRequestSize) {
        throw ConvertError("n", "n: " + std::to_string(n) + " exceeds the supported maximum " +
                                    std::to_string(kMaxRequestSize));
    }
    if (request.coeffs.size() > n) {
        throw ConvertError("coeffs", "coeffs: got " + std::to_string(request.coeffs.size()) +
                                         " values but n = " + std::to_string(n));
    }

    std::vector<Fp> coeffs = parse_elements(F, request.coeffs, "coeffs");
    coeffs.resize(n, Fp{0});

    std::vector<Fp> out;
    try {
        switch (request.direction) {
        case Direction::expand:
            out = expand(family, coeffs);
            break;
        case Direction::decomp:
            out = decomp(family, coeffs);
            break;
        case Direction::texpand:
            out = expand_transposed(family, coeffs);
            break;
        case Direction::moments:
            out = moment_series(family, n).moments;
            break;
        }
    } catch (const FamilyError& e) {
        throw ConvertError("family", e.what());
    } catch (const NttCapacityError& e) {
        throw ConvertError("n", e.what());
    }

    ConversionResult result;
    result.direction = direction_name(request.direction);
    result.family = request.custom_family ? "custom" : family.kind();
    result.modulus = std::to_string(F.modulus());
    result.n = n;
    result.coeffs = format_elements(out);
    return result;
}

std::vector<std::string> parse_coeffs_document(const std::string& text) {
    json doc = parse_json(text, "input");
    return json_string_array(doc, "coeffs", "coeffs");
}

FamilyTriples parse_family_document(const std::string& text) {
    json doc = parse_json(text, "family-file");
    FamilyTriples t;
    t.a = json_string_array(doc, "a", "family-file");
    t.b = json_string_array(doc, "b", "family-file");
    t.c = json_string_array(doc, "c", "family-file");
    return t;
}

std::string result_to_json(const ConversionResult& result) {
    json doc;
    doc["direction"] = result.direction;
    doc["family"] = result.family;
    doc["modulus"] = result.modulus;
    doc["n"] = result.n;
    doc["coeffs"] = result.coeffs;
    return doc.dump(2) + "\n";
}

std::string error_to_json(const ConvertError& err) {
    json doc;
    doc["error"]["field"] = err.field;
    doc["error"]["message"] = err.what();
    return doc.dump(2) + "\n";
}

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
    if (options.reps < 3) throw ConvertError("reps", "reps: at least 3 repetitions required");
    if (options.min_log_n > options.max_log_n) {
        throw ConvertError("min-log-n", "min-log-n: must not exceed max-log-n");
    }
    if (options.max_log_n >= 26) {
        throw ConvertError("max-log-n", "max-log-n: must be below 26");
    }
    if (options.op != "expand" && options.op != "decomp" && options.op != "texpand") {
        throw ConvertError("op", "op: expected expand, decomp or texpand, got '" + options.op + "'");
    }

    Field F = make_field(options.modulus);
    RecurrenceFamily family = [&] {
        try {
            return RecurrenceFamily::preset(F, options.family);
        } catch (const std::invalid_argument& e) {
            throw ConvertError("family", e.what());
        }
    }();

    std::mt19937_64 rng(options.seed);
    std::vector<BenchRecord> records;
    for (u32 log_n = options.min_log_n; log_n <= options.max_log_n; ++log_n) {
        const u64 n = u64{1} << log_n;
        std::vector<Fp> input(n);
        for (Fp& x : input) x = F.from_uint(rng());

        std::vector<u64> times;
        times.reserve(options.reps);
        for (u32 r = 0; r < options.reps; ++r) {
            const auto start = std::chrono::steady_clock::now();
            std::vector<Fp> out;
            try {
                if (options.op == "expand") out = expand(family, input);
                else if (options.op == "decomp") out = decomp(family, input);
                else out = expand_transposed(family, input);
            } catch (const NttCapacityError& e) {
                throw ConvertError("max-log-n", e.what());
            }
            const auto stop = std::chrono::steady_clock::now();
            times.push_back(static_cast<u64>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
        }
        std::sort(times.begin(), times.end());
        const u64 median = options.reps % 2 == 1
                               ? times[options.reps / 2]
                               : (times[options.reps / 2 - 1] + times[options.reps / 2]) / 2;
        records.push_back(BenchRecord{options.op, n, options.reps, median, F.modulus()});
    }
    return records;
}

std::string bench_csv(const BenchOptions& options, const std::vector<BenchRecord>& records) {
    std::string out = "# seed=" + std::to_string(options.seed) + "\n";
    out += "op,n,reps,median_ns,modulus\n";
    for (const BenchRecord& r : records) {
        out += r.op + "," + std::to_string(r.n) + "," + std::to_string(r.reps) + "," +
               std::to_string(r.median_ns) + "," + std::to_string(r.modulus) + "\n";
    }
    return out;
}

} // namespace orthopoly
