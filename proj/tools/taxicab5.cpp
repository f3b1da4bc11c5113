// taxicab5: construct, verify and search for Gaussian-integer
// solutions of w^5 + x^5 = y^5 + z^5.
//
// Exit codes: 0 verified/success, 1 verification failed (or I/O error),
// 2 usage or parse error.

#include "taxicab5/gaussint.hpp"
#include "taxicab5/identities.hpp"
#include "taxicab5/pell.hpp"
#include "taxicab5/search.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace taxicab5;

enum class Format { pretty, json, csv };

Format parse_format(const std::string &name) {
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    return Format::pretty;
}

// Operands in rendered equations get parentheses unless they are plain
// non-negative integers: 3^5 + 1^5 = (2+3i)^5 + (2-3i)^5
std::string render_operand(const GaussInt &z) {
    if (z.im == 0 && z.re >= 0)
        return to_string(z);
    return "(" + to_string(z) + ")";
}

std::string render_equation(const Quadruple &q) {
    const std::string e = std::to_string(q.exponent);
    return render_operand(q.w) + "^" + e + " + " + render_operand(q.x) + "^" + e +
           " = " + render_operand(q.y) + "^" + e + " + " + render_operand(q.z) + "^" + e;
}

const char *csv_quadruple_header =
    "w_re,w_im,x_re,x_im,y_re,y_im,z_re,z_im,sum_re,sum_im,verified";

std::string csv_quadruple_row(const Quadruple &q, const GaussInt &sum, bool verified) {
    std::string row;
    for (const GaussInt *g : {&q.w, &q.x, &q.y, &q.z, &sum}) {
        row += g->re.str();
        row += ',';
        row += g->im.str();
        row += ',';
    }
    row += verified ? "true" : "false";
    return row;
}

std::string json_quadruple_fields(const Quadruple &q, const GaussInt &sum, bool verified) {
    return "\"w\":" + to_json(q.w) + ",\"x\":" + to_json(q.x) + ",\"y\":" + to_json(q.y) +
           ",\"z\":" + to_json(q.z) + ",\"sum\":" + to_json(sum) +
           ",\"verified\":" + (verified ? "true" : "false");
}

int cmd_pell_family(std::size_t count, Format format) {
    bool all_ok = true;
    if (format == Format::csv)
        std::cout << csv_quadruple_header << "\n";
    for (std::size_t k = 1; k <= count; ++k) {
        Quadruple q = pell_family(k);
        bool ok = verify_solution(q);
        all_ok = all_ok && ok;
        GaussInt sum = pow(q.w, q.exponent) + pow(q.x, q.exponent);
        switch (format) {
        case Format::pretty:
            std::cout << render_equation(q) << "  " << (ok ? "OK" : "FAIL") << "\n";
            break;
        case Format::json:
            std::cout << "{\"k\":" << k << "," << json_quadruple_fields(q, sum, ok) << "}\n";
            break;
        case Format::csv:
            std::cout << csv_quadruple_row(q, sum, ok) << "\n";
            break;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_triple_family(long long max_c, Format format) {
    bool all_ok = true;
    if (format == Format::csv)
        std::cout << csv_quadruple_header << "\n";
    for (const PythTriple &t : enumerate_primitive_triples(max_c)) {
        Quadruple q = triple_solution(t);
        bool ok = verify_solution(q);
        all_ok = all_ok && ok;
        GaussInt sum = pow(q.w, q.exponent) + pow(q.x, q.exponent);
        switch (format) {
        case Format::pretty:
            std::cout << "(" << t.a << "," << t.b << "," << t.c << ")  "
                      << render_equation(q) << "  " << (ok ? "OK" : "FAIL") << "\n";
            break;
        case Format::json:
            std::cout << "{\"triple\":{\"a\":" << t.a << ",\"b\":" << t.b << ",\"c\":" << t.c
                      << "}," << json_quadruple_fields(q, sum, ok) << "}\n";
            break;
        case Format::csv:
            std::cout << csv_quadruple_row(q, sum, ok) << "\n";
            break;
        }
    }
    return all_ok ? 0 : 1;
}

std::optional<GaussInt> parse_or_report(const std::string &token) {
    std::optional<GaussInt> v = parse_gaussint(token);
    if (!v)
        std::cerr << "error: invalid Gaussian integer '" << token << "'\n";
    return v;
}

int cmd_verify(const std::string &w, const std::string &x, const std::string &y,
               const std::string &z, unsigned exponent, Format format) {
    std::optional<GaussInt> gw = parse_or_report(w);
    std::optional<GaussInt> gx = parse_or_report(x);
    std::optional<GaussInt> gy = parse_or_report(y);
    std::optional<GaussInt> gz = parse_or_report(z);
    if (!gw || !gx || !gy || !gz)
        return 2;
    GaussInt lhs = pow(*gw, exponent) + pow(*gx, exponent);
    GaussInt rhs = pow(*gy, exponent) + pow(*gz, exponent);
    bool equal = lhs == rhs;
    switch (format) {
    case Format::pretty:
        std::cout << "lhs = " << lhs << "\n"
                  << "rhs = " << rhs << "\n"
                  << (equal ? "equal" : "not equal") << "\n";
        break;
    case Format::json:
        std::cout << "{\"lhs\":" << to_json(lhs) << ",\"rhs\":" << to_json(rhs)
                  << ",\"equal\":" << (equal ? "true" : "false") << "}\n";
        break;
    case Format::csv:
        std::cout << "lhs_re,lhs_im,rhs_re,rhs_im,equal\n"
                  << lhs.re << "," << lhs.im << "," << rhs.re << "," << rhs.im << ","
                  << (equal ? "true" : "false") << "\n";
        break;
    }
    return equal ? 0 : 1;
}

int cmd_lemma(const std::string &a_str, const std::string &b_str, const std::string &c_str,
              Format format) {
    std::optional<bigint> a = parse_integer(a_str);
    std::optional<bigint> b = parse_integer(b_str);
    std::optional<bigint> c = parse_integer(c_str);
    if (!a || !b || !c) {
        std::cerr << "error: lemma arguments must be integers\n";
        return 2;
    }
    GaussInt lhs = lemma_lhs(*a, *b, *c);
    GaussInt rhs = lemma_rhs(*a, *b, *c);
    bool match = lhs == rhs;
    switch (format) {
    case Format::pretty:
        std::cout << "lhs = " << lhs << "\n"
                  << "rhs = " << rhs << "\n"
                  << (match ? "match" : "MISMATCH") << "\n";
        break;
    case Format::json:
        std::cout << "{\"a\":\"" << *a << "\",\"b\":\"" << *b << "\",\"c\":\"" << *c
                  << "\",\"lhs\":" << to_json(lhs) << ",\"rhs\":" << to_json(rhs)
                  << ",\"match\":" << (match ? "true" : "false") << "}\n";
        break;
    case Format::csv:
        std::cout << "a,b,c,lhs_re,lhs_im,rhs_re,rhs_im,match\n"
                  << *a << "," << *b << "," << *c << "," << lhs.re << "," << lhs.im << ","
                  << rhs.re << "," << rhs.im << "," << (match ? "true" : "false") << "\n";
        break;
    }
    return match ? 0 : 1;
}

int cmd_search(const SearchConfig &cfg, const std::string &out_path, Format format) {
    std::ofstream file;
    std::ostream *out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return 1;
        }
        out = &file;
    }

    auto start = std::chrono::steady_clock::now();
    SearchStats stats;
    std::vector<SolutionClass> classes = run_search(cfg, &stats);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    if (format == Format::csv)
        *out << csv_quadruple_header << "\n";
    for (const SolutionClass &cls : classes) {
        switch (format) {
        case Format::pretty:
            *out << render_equation(cls.representative) << "  sum=" << cls.sum
                 << " orbit=" << cls.orbit_size << "\n";
            break;
        case Format::json:
            *out << to_json_line(cls) << "\n";
            break;
        case Format::csv:
            *out << csv_quadruple_row(cls.representative, cls.sum, true) << "\n";
            break;
        }
    }
    out->flush();
    if (!*out) {
        std::cerr << "error: writing results failed\n";
        return 1;
    }
    std::cerr << "search: bound=" << cfg.bound << " exponent=" << cfg.exponent
              << " shards=" << cfg.shards << " points=" << stats.points
              << " pairs=" << stats.pairs << " classes=" << classes.size()
              << " time_ms=" << elapsed << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact Gaussian-integer solutions of w^5 + x^5 = y^5 + z^5"};
    app.require_subcommand(1);

    std::string format_name;
    CLI::Option *format_opt =
        app.add_option("--format", format_name, "Output format (pretty, json, csv)")
            ->check(CLI::IsMember({"pretty", "json", "csv"}));

    CLI::App *pell_cmd =
        app.add_subcommand("pell-family", "Print the Pell-driven solution family");
    pell_cmd->fallthrough();
    std::size_t count = 1;
    pell_cmd->add_option("--count", count, "Number of family members")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App *triple_cmd = app.add_subcommand(
        "triple-family", "Print the solution for every primitive Pythagorean triple");
    triple_cmd->fallthrough();
    long long max_c = 5;
    triple_cmd->add_option("--max-c", max_c, "Largest hypotenuse to include")->required();

    CLI::App *verify_cmd =
        app.add_subcommand("verify", "Check w^e + x^e = y^e + z^e exactly");
    verify_cmd->fallthrough();
    std::string w, x, y, z;
    unsigned exponent = 5;
    verify_cmd->add_option("--w", w, "First left operand")->required();
    verify_cmd->add_option("--x", x, "Second left operand")->required();
    verify_cmd->add_option("--y", y, "First right operand")->required();
    verify_cmd->add_option("--z", z, "Second right operand")->required();
    verify_cmd->add_option("--exponent", exponent, "Exponent (default 5)")
        ->check(CLI::PositiveNumber);

    CLI::App *lemma_cmd = app.add_subcommand(
        "lemma", "Evaluate the quintic identity and its closed form at (a, b, c)");
    lemma_cmd->fallthrough();
    std::string a_str, b_str, c_str;
    lemma_cmd->add_option("--a", a_str, "Integer a")->required();
    lemma_cmd->add_option("--b", b_str, "Integer b")->required();
    lemma_cmd->add_option("--c", c_str, "Integer c")->required();

    CLI::App *search_cmd = app.add_subcommand(
        "search", "Exhaustive collision search over a bounded box of Gaussian integers");
    search_cmd->fallthrough();
    SearchConfig cfg;
    std::string out_path;
    search_cmd->add_option("--bound", cfg.bound, "Box bound B: |re|, |im| <= B")
        ->required()
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--exponent", cfg.exponent, "Exponent (default 5)")
        ->check(CLI::PositiveNumber);
    search_cmd->add_option("--shards", cfg.shards, "Parallel shards (default 1)")
        ->check(CLI::PositiveNumber);
    search_cmd->add_flag("--include-zero", cfg.include_zero, "Allow 0 as a term");
    search_cmd->add_option("--out", out_path, "Write results to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    // Result records default to JSON-lines for search, pretty elsewhere.
    Format format;
    if (format_opt->count() > 0)
        format = parse_format(format_name);
    else
        format = search_cmd->parsed() ? Format::json : Format::pretty;

    if (pell_cmd->parsed())
        return cmd_pell_family(count, format);
    if (triple_cmd->parsed())
        return cmd_triple_family(max_c, format);
    if (verify_cmd->parsed())
        return cmd_verify(w, x, y, z, exponent, format);
    if (lemma_cmd->parsed())
        return cmd_lemma(a_str, b_str, c_str, format);
    if (search_cmd->parsed())
        return cmd_search(cfg, out_path, format);
    return 2;
}
