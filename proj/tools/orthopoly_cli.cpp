#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orthopoly/convert.hpp"

namespace {

using orthopoly::ConvertError;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConvertError("input", "input: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Output is buffered by the callers and written in one piece, so a
// failed run never leaves partial output on the result stream.
void write_all(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConvertError("output", "output: cannot open '" + path + "'");
    out << data;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conversions between an orthogonal polynomial basis given by a "
                 "three-term recurrence and the monomial basis, over a prime field"};
    app.require_subcommand(1);

    // convert
    std::string direction;
    std::string family;
    std::string family_file;
    std::string modulus;
    std::uint64_t n = 0;
    std::string input_path;
    std::string output_path = "-";

    CLI::App* convert = app.add_subcommand("convert", "Run one conversion");
    convert->add_option("--direction", direction, "expand | decomp | texpand | moments")->required();
    convert->add_option("--family", family, "Preset family name (chebyshev-t, chebyshev-u, legendre, hermite, laguerre)");
    convert->add_option("--family-file", family_file, "JSON file with arrays a, b, c of decimal strings");
    convert->add_option("--modulus", modulus, "Prime modulus as a decimal string (default 998244353)");
    convert->add_option("--n", n, "Conversion size (defaults to the number of input coefficients)");
    convert->add_option("--input", input_path, "Coefficient document path, '-' for stdin");
    convert->add_option("--output", output_path, "Result document path, '-' for stdout (default)");

    // bench
    orthopoly::BenchOptions bench_options;
    std::string bench_modulus;
    std::string bench_output = "-";

    CLI::App* bench = app.add_subcommand("bench", "Measure conversion scaling, emit CSV");
    bench->add_option("--op", bench_options.op, "expand | decomp | texpand")->required();
    bench->add_option("--min-log-n", bench_options.min_log_n, "Smallest size as log2(n)")->required();
    bench->add_option("--max-log-n", bench_options.max_log_n, "Largest size as log2(n)")->required();
    bench->add_option("--reps", bench_options.reps, "Repetitions per size, >= 3 (default 5)");
    bench->add_option("--family", bench_options.family, "Preset family (default chebyshev-t)");
    bench->add_option("--modulus", bench_modulus, "Prime modulus as a decimal string");
    bench->add_option("--seed", bench_options.seed, "Random input seed (default 1)");
    bench->add_option("--output", bench_output, "CSV path, '-' for stdout (default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (convert->parsed()) {
            orthopoly::ConversionRequest request;
            request.direction = orthopoly::parse_direction(direction);
            if (!family.empty() && !family_file.empty()) {
                throw ConvertError("family", "family: give either --family or --family-file, not both");
            }
            if (family.empty() && family_file.empty()) {
                throw ConvertError("family", "family: one of --family or --family-file is required");
            }
            if (!family_file.empty()) {
                request.custom_family = orthopoly::parse_family_document(read_all(family_file));
            } else {
                request.family = family;
            }
            if (!modulus.empty()) request.modulus = modulus;
            if (convert->count("--n") > 0) request.n = n;
            if (!input_path.empty()) request.coeffs = orthopoly::parse_coeffs_document(read_all(input_path));

            orthopoly::ConversionResult result = orthopoly::run_convert(request);
            write_all(output_path, orthopoly::result_to_json(result));
        } else {
            if (!bench_modulus.empty()) bench_options.modulus = bench_modulus;
            std::vector<orthopoly::BenchRecord> records = orthopoly::run_bench(bench_options);
            write_all(bench_output, orthopoly::bench_csv(bench_options, records));
        }
    } catch (const ConvertError& e) {
        std::cerr << orthopoly::error_to_json(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << orthopoly::error_to_json(ConvertError("internal", e.what()));
        return 1;
    }
    return 0;
}
