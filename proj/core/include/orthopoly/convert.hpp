#ifndef ORTHOPOLY_CONVERT_HPP
#define ORTHOPOLY_CONVERT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthopoly/field.hpp"

namespace orthopoly {

// Request validation or execution failure; `field` names the offending
// request field (modulus, family, coeffs, n, ...).
struct ConvertError : std::runtime_error {
    ConvertError(std::string f, const std::string& what)
        : std::runtime_error(what), field(std::move(f)) {}
    std::string field;
};

enum class Direction { expand, decomp, texpand, moments };

Direction parse_direction(const std::string& name); // throws ConvertError{"direction"}
std::string direction_name(Direction d);

// Custom family coefficient arrays as decimal strings, 1-indexed
// semantics: element k holds the triple of recurrence index k+1.
struct FamilyTriples {
    std::vector<std::string> a, b, c;
};

struct ConversionRequest {
    Direction direction = Direction::expand;
    std::string family;                        // preset name (ignored when custom_family set)
    std::optional<FamilyTriples> custom_family;
    std::optional<std::string> modulus;        // decimal; default prime when absent
    std::vector<std::string> coeffs;           // decimal strings, at most n of them
    std::optional<u64> n;                      // defaults to len(coeffs)
};

struct ConversionResult {
    std::string direction;
    std::string family;
    std::string modulus;
    u64 n = 0;
    std::vector<std::string> coeffs; // length n, or 2n-1 for moments
};

// Runs one conversion. Throws ConvertError on invalid requests and on
// execution failures (invalid family data, transform capacity, ...).
ConversionResult run_convert(const ConversionRequest& request);

// Document formats (JSON):
//   coefficient document   {"coeffs": ["0", "1", ...]}   (extra keys ignored,
//                          so a result document feeds back into --input)
//   family document        {"a": [...], "b": [...], "c": [...]}
//   result document        direction/family/modulus/n echo plus "coeffs"
std::vector<std::string> parse_coeffs_document(const std::string& text);
FamilyTriples parse_family_document(const std::string& text);
std::string result_to_json(const ConversionResult& result);
std::string error_to_json(const ConvertError& err);

struct BenchOptions {
    std::string op = "expand"; // expand | decomp | texpand
    u32 min_log_n = 10;
    u32 max_log_n = 12;
    u32 reps = 5;              // >= 3
    std::optional<std::string> modulus;
    std::string family = "chebyshev-t";
    u64 seed = 1;
};

struct BenchRecord {
    std::string op;
    u64 n = 0;
    u32 reps = 0;
    u64 median_ns = 0;
    u64 modulus = 0;
};

// One record per size n = 2^j, j in [min_log_n, max_log_n], each the
// median of `reps` timed runs on seeded random inputs.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

// "# seed=..." comment line, the exact header
// op,n,reps,median_ns,modulus and one data row per record.
std::string bench_csv(const BenchOptions& options, const std::vector<BenchRecord>& records);

} // namespace orthopoly

#endif // ORTHOPOLY_CONVERT_HPP
