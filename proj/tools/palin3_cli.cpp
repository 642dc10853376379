// palin3 command-line tool: decompose integers into three palindromes,
// verify candidate decompositions, run exhaustive range checks, and explore
// sums of two palindromes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "palin3/palin3.hpp"

namespace {

using nlohmann::json;
using namespace palin3;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

// digit row padded to `width` cells, most significant first, right-aligned
std::string digit_row(const DigitString& ds, size_t width, int cell) {
    std::ostringstream os;
    for (size_t i = width; i-- > 0;) {
        if (i >= ds.length())
            os << std::string(static_cast<size_t>(cell), ' ');
        else {
            std::string v = std::to_string(ds.digits[i]);
            os << std::string(static_cast<size_t>(cell) - v.size(), ' ') << v;
        }
        if (i) os << ' ';
    }
    return os.str();
}

// g^m + g^{m-1}, the amount a special run subtracts once or twice
DigitString step_value(const Decomposition& d) {
    const auto& st = d.provenance.state;
    std::vector<uint32_t> step(st.m + 1, 0);
    step[st.m] = 1;
    step[st.m - 1] = 1;
    return DigitString(std::move(step), d.n.base);
}

// for special runs the sweep worked on n - k*(g^m + g^{m-1})
DigitString traced_target(const Decomposition& d) {
    if (!d.provenance.special_k) return d.n;
    DigitString s = step_value(d);
    DigitString np = subtract(d.n, s);
    if (d.provenance.special_k == 2) np = subtract(np, s);
    return np;
}

json trace_json(const Decomposition& d) {
    const auto& st = d.provenance.state;
    json tr;
    if (st.algorithm == 'S' || st.algorithm == '?') {
        tr["case"] = d.provenance.adjustment;
        return tr;
    }
    auto row = [](const std::vector<uint32_t>& v) {
        return std::vector<uint32_t>(v.begin() + 1, v.end());
    };
    tr["x"] = row(st.x);
    tr["y"] = row(st.y);
    tr["z"] = row(st.z);
    tr["carries"] = row(st.c);
    auto rows = temporary_config(st);
    tr["temporary"] = {render(rows[0], 10), render(rows[1], 10), render(rows[2], 10)};
    tr["case"] = d.provenance.adjustment;
    if (d.provenance.special_k) {
        tr["k"] = d.provenance.special_k;
        tr["s"] = render(step_value(d), 10);
        tr["reduced"] = render(traced_target(d), 10);
        tr["inner_type"] = d.provenance.inner_type;
        tr["inner_algorithm"] = d.provenance.inner_algorithm;
    }
    return tr;
}

void print_trace_text(const Decomposition& d) {
    const auto& st = d.provenance.state;
    if (st.algorithm == 'S' || st.algorithm == '?') {
        std::cout << "trace: table branch " << d.provenance.adjustment << "\n";
        return;
    }
    const int cell = static_cast<int>(std::to_string(st.g - 1).size());
    const size_t width = d.n.length();
    DigitString target = traced_target(d);
    std::cout << "temporary configuration (before adjustment "
              << d.provenance.adjustment << "):\n";
    auto rows = temporary_config(st);
    if (d.provenance.special_k)
        std::cout << "  n' " << digit_row(target, width, cell) << "   (n - "
                  << d.provenance.special_k << "*" << render(step_value(d), 10) << ")\n";
    else
        std::cout << "  n  " << digit_row(target, width, cell) << "\n";
    for (int i = 0; i < 3; ++i)
        std::cout << "  p" << i + 1 << " " << digit_row(rows[i], width, cell) << "\n";
    std::cout << "  carries (c_1..):";
    for (size_t i = 1; i < st.c.size(); ++i) std::cout << ' ' << st.c[i];
    std::cout << "\nfinal configuration:\n";
    for (int i = 0; i < 3; ++i)
        std::cout << "  p" << i + 1 << " " << digit_row(d.parts[i], width, cell) << "\n";
}

int cmd_decompose(const std::string& n_text, uint32_t g, uint32_t radix,
                  const std::string& format, bool trace) {
    Base base(g);
    DigitString n = parse(n_text, base, radix);
    Decomposition d = decompose(n);
    if (!verify(d)) {
        std::cerr << "internal error: produced decomposition failed verification\n";
        return 1;
    }
    if (format == "json") {
        json out;
        out["n"] = render(n, radix);
        out["base"] = g;
        out["parts"] = {render(d.parts[0], radix), render(d.parts[1], radix),
                        render(d.parts[2], radix)};
        out["type"] = d.provenance.type;
        out["algorithm"] = d.provenance.algorithm;
        out["adjustment"] = d.provenance.adjustment;
        if (trace) out["trace"] = trace_json(d);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n          = " << render(n, radix) << "  (base " << g << ", "
                  << n.length() << " digits)\n";
        std::cout << "type       = " << d.provenance.type << "\n";
        std::cout << "algorithm  = " << d.provenance.algorithm;
        if (d.provenance.special_k)
            std::cout << "  (k=" << d.provenance.special_k << ", reduced type "
                      << d.provenance.inner_type << " via " << d.provenance.inner_algorithm
                      << ")";
        std::cout << "\n";
        std::cout << "adjustment = " << d.provenance.adjustment << "\n";
        for (int i = 0; i < 3; ++i)
            std::cout << "p" << i + 1 << "         = " << render(d.parts[i], radix) << "\n";
        if (trace) print_trace_text(d);
    }
    return 0;
}

int cmd_verify(const std::string& n_text, uint32_t g, uint32_t radix,
               const std::string& parts_text) {
    Base base(g);
    DigitString n = parse(n_text, base, radix);
    auto parts = split_csv(parts_text);
    if (parts.size() != 3) {
        std::cerr << "expected exactly three comma-separated parts\n";
        return 2;
    }
    Decomposition d{n,
                    {parse(parts[0], base, radix), parse(parts[1], base, radix),
                     parse(parts[2], base, radix)},
                    {}};
    if (verify(d)) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid\n";
    return 1;
}

int cmd_check(const std::string& from_text, const std::string& to_text, uint32_t g,
              uint32_t radix, unsigned workers) {
    Base base(g);
    DigitString from = parse(from_text, base, radix);
    DigitString to = parse(to_text, base, radix);
    CheckReport rep = check_interval(from, to, workers);
    for (const auto& [label, count] : rep.histogram)
        std::cout << label << " " << count << "\n";
    std::cout << "checked: " << rep.checked << "\n";
    std::cout << "failures: " << rep.failures << "\n";
    if (rep.failures) {
        std::cerr << "first failure at " << rep.first_failure << "\n";
        return 1;
    }
    return 0;
}

int cmd_twopal(uint64_t limit, uint32_t g, bool no_zero, const std::string& csv_path) {
    Base base(g);
    uint64_t count = count_two_sums(limit, base, !no_zero);
    std::cout << "count: " << count << "\n";
    std::cout << "density: " << static_cast<double>(count) / static_cast<double>(limit) << "\n";
    if (!csv_path.empty()) {
        bool fresh = false;
        {
            std::ifstream in(csv_path);
            fresh = !in.good() || in.peek() == std::ifstream::traits_type::eof();
        }
        std::ofstream out(csv_path, std::ios::app);
        if (!out) {
            std::cerr << "cannot open " << csv_path << "\n";
            return 2;
        }
        if (fresh) out << "n_limit,base,count\n";
        out << limit << "," << g << "," << count << "\n";
    }
    return 0;
}

int cmd_family(uint32_t len, uint32_t g, bool verify_two) {
    Base base(g);
    uint64_t bad = 0;
    family_members(len, base, [&](const DigitString& m) {
        std::cout << render(m, 10) << "\n";
        if (verify_two) {
            if (brute_two(m, true) || brute_two(m, false)) {
                std::cerr << render(m, 10) << " unexpectedly is a sum of two palindromes\n";
                ++bad;
            }
        }
    });
    return bad ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-of-three-palindromes toolkit"};
    app.require_subcommand(1);

    std::string n_text, parts_text, from_text, to_text, format = "text", csv_path;
    uint32_t g = 10, radix = 0, famlen = 4;
    uint64_t limit = 0;
    unsigned workers = 1;
    bool trace = false, no_zero = false, verify_two = false;

    auto* dec = app.add_subcommand("decompose", "write n as a sum of three palindromes");
    dec->add_option("--base", g, "base g >= 5")->required();
    dec->add_option("--n", n_text, "the integer, written in --radix")->required();
    dec->add_option("--radix", radix, "input/output radix: 10 or the base itself");
    dec->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    dec->add_flag("--trace", trace, "show the sweep trace and temporary configuration");

    auto* ver = app.add_subcommand("verify", "check a candidate decomposition");
    ver->add_option("--base", g, "base g >= 2")->required();
    ver->add_option("--n", n_text, "the integer")->required();
    ver->add_option("--parts", parts_text, "comma-separated P1,P2,P3")->required();
    ver->add_option("--radix", radix, "radix of all numbers: 10 or the base");

    auto* chk = app.add_subcommand("check", "exhaustively decompose and verify a range");
    chk->add_option("--base", g, "base g >= 5")->required();
    chk->add_option("--from", from_text, "first n (inclusive)")->required();
    chk->add_option("--to", to_text, "last n (inclusive)")->required();
    chk->add_option("--radix", radix, "radix of the bounds");
    chk->add_option("--workers", workers, "worker threads");

    auto* two = app.add_subcommand("twopal", "count sums of two palindromes up to a limit");
    two->add_option("--base", g, "base g >= 2")->required();
    two->add_option("--limit", limit, "count n in [1, limit]")->required();
    two->add_flag("--no-zero", no_zero, "require both palindromes positive");
    two->add_option("--csv", csv_path, "append (n_limit, base, count) to this CSV file");

    auto* fam = app.add_subcommand("family", "list the non-two-palindromic digit family");
    fam->add_option("--base", g, "base g >= 3")->required();
    fam->add_option("--len", famlen, "digit length >= 4")->required();
    fam->add_flag("--verify-two", verify_two, "confirm no member is a sum of two palindromes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (radix == 0) radix = 10;
        if (dec->parsed()) return cmd_decompose(n_text, g, radix, format, trace);
        if (ver->parsed()) return cmd_verify(n_text, g, radix, parts_text);
        if (chk->parsed()) return cmd_check(from_text, to_text, g, radix, workers);
        if (two->parsed()) return cmd_twopal(limit, g, no_zero, csv_path);
        if (fam->parsed()) return cmd_family(famlen, g, verify_two);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
