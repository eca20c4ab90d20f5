// Command-line front end: counting, enumeration, mapping words <-> tilings,
// grid verification, and SVG rendering.
//
// Exit codes: 0 success, 1 data or verification failure, 2 usage error or
// size guard. Enumerating commands refuse m+n beyond the guard (default 24,
// override with MN_SIZE_GUARD or bypass per call with --force).

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "twotone/twotone.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultGuard = 24;

using nlohmann::ordered_json;

bool guard_allows(int total, int guard, bool force) {
    if (force || total <= guard) return true;
    std::cerr << "error: m+n = " << total << " exceeds the enumeration size guard (" << guard
              << "); raise MN_SIZE_GUARD or pass --force\n";
    return false;
}

twotone::BigCount count_by_enumeration(int m, int n) {
    twotone::BigCount count = 0;
    twotone::WordStream words(m, n);
    while (words.next()) ++count;
    return count;
}

int run_count(int m, int n, const std::string& method, bool force, int guard) {
    const bool want_enum = method == "enum" || method == "all";
    if (want_enum && !guard_allows(m + n, guard, force)) return kExitUsage;
    if (method == "enum") {
        std::cout << count_by_enumeration(m, n) << "\n";
        return kExitOk;
    }
    if (method == "formula") {
        std::cout << twotone::closed_form_count(m, n) << "\n";
        return kExitOk;
    }
    if (method == "gf") {
        std::cout << twotone::gf_coefficient(m, n) << "\n";
        return kExitOk;
    }
    const twotone::BigCount by_enum = count_by_enumeration(m, n);
    const twotone::BigCount by_formula = twotone::closed_form_count(m, n);
    const twotone::BigCount by_gf = twotone::gf_coefficient(m, n);
    std::cout << "enumeration: " << by_enum << "\n"
              << "closed-form: " << by_formula << "\n"
              << "gf-coefficient: " << by_gf << "\n";
    if (by_enum != by_formula || by_enum != by_gf) {
        std::cerr << "error: counting methods disagree for m=" << m << ", n=" << n << "\n";
        return kExitData;
    }
    return kExitOk;
}

ordered_json word_record(const twotone::Word& w) {
    ordered_json j;
    j["m"] = w.m();
    j["letters"] = w.letters();
    return j;
}

ordered_json tiling_record(const twotone::Tiling& t) {
    ordered_json j;
    j["m"] = t.m();
    auto& tiles = j["tiles"] = ordered_json::array();
    for (const twotone::Tile& tile : t.tiles()) {
        tiles.push_back(ordered_json::array(
            {tile.color == twotone::TileColor::Red ? "R" : "B", tile.length}));
    }
    return j;
}

int run_enumerate(int m, int n, const std::string& kind, const std::string& format, bool force,
                  int guard) {
    if (!guard_allows(m + n, guard, force)) return kExitUsage;
    const bool jsonl = format == "jsonl";
    if (kind == "words") {
        twotone::WordStream words(m, n);
        while (auto w = words.next()) {
            if (jsonl) {
                std::cout << word_record(*w).dump() << "\n";
            } else {
                std::cout << twotone::format_word(*w) << "\n";
            }
        }
    } else {
        twotone::TilingStream tilings(m, n);
        while (auto t = tilings.next()) {
            if (jsonl) {
                std::cout << tiling_record(*t).dump() << "\n";
            } else {
                std::cout << twotone::format_tiling(*t) << "\n";
            }
        }
    }
    return kExitOk;
}

int run_map(const std::string& direction, const std::string& in_path, std::optional<int> m) {
    std::ifstream file;
    if (!in_path.empty()) {
        file.open(in_path);
        if (!file) {
            std::cerr << "error: cannot open input file '" << in_path << "'\n";
            return kExitData;
        }
    }
    std::istream& in = in_path.empty() ? std::cin : file;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            if (direction == "word2tiling") {
                const twotone::Word w = twotone::parse_word(line, m);
                std::cout << twotone::format_tiling(twotone::word_to_tiling(w)) << "\n";
            } else {
                const twotone::Tiling t = twotone::parse_tiling(line, m);
                std::cout << twotone::format_word(twotone::tiling_to_word(t)) << "\n";
            }
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            return kExitData;
        }
    }
    return kExitOk;
}

int run_verify(int max_m, int max_n, bool force, int guard) {
    if (!guard_allows(max_m + max_n, guard, force)) return kExitUsage;
    const twotone::VerificationReport report = twotone::verify_grid(max_m, max_n);

    std::vector<std::array<std::string, 7>> cells;
    cells.push_back({"m", "n", "words", "tilings", "closed-form", "gf", "roundtrip"});
    for (const auto& row : report.rows) {
        cells.push_back({std::to_string(row.m), std::to_string(row.n), row.word_count.get_str(),
                         row.tiling_count.get_str(), row.closed_form.get_str(), row.gf.get_str(),
                         row.ok() ? "ok" : "FAIL"});
    }
    std::array<std::size_t, 7> width{};
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::cout << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
        }
        std::cout << "\n";
    }
    std::cout << "overall: " << (report.overall ? "PASS" : "FAIL") << "\n";
    if (!report.overall) {
        if (report.first_counterexample) {
            std::cerr << "counterexample: " << *report.first_counterexample << "\n";
        }
        return kExitData;
    }
    return kExitOk;
}

int run_render(const std::string& in_path, const std::string& out_path, int unit,
               std::optional<int> m) {
    std::ifstream in(in_path);
    if (!in) {
        std::cerr << "error: cannot open input file '" << in_path << "'\n";
        return kExitData;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!text.empty() && is_space(text.back())) text.pop_back();
    std::size_t start = 0;
    while (start < text.size() && is_space(text[start])) ++start;
    text.erase(0, start);
    std::replace(text.begin(), text.end(), '\t', ' ');
    std::replace(text.begin(), text.end(), '\n', ' ');

    std::string svg;
    try {
        svg = twotone::render_svg(twotone::parse_tiling(text, m), unit);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kExitData;
    }
    out << svg;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    int guard = kDefaultGuard;
    if (const char* env = std::getenv("MN_SIZE_GUARD")) {
        try {
            guard = std::stoi(env);
            if (guard < 0) throw std::invalid_argument("negative");
        } catch (const std::exception&) {
            std::cerr << "error: MN_SIZE_GUARD must be a nonnegative integer\n";
            return kExitUsage;
        }
    }

    CLI::App app{"(m,n)-words, two-toned tilings of a strip of length m+n, and the explicit "
                 "bijection between them"};
    app.require_subcommand(1);

    int m = 0;
    int n = 0;
    bool force = false;
    std::string method = "all";
    std::string kind = "words";
    std::string format = "text";
    std::string direction;
    std::string in_path;
    std::string out_path;
    int max_m = 5;
    int max_n = 7;
    int unit = 20;
    std::optional<int> m_flag;

    auto* count = app.add_subcommand("count", "Count (m,n)-words / two-toned tilings");
    count->add_option("m", m, "red squares / alphabet parameter")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("n", n, "word length / total blue length")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--method", method, "counting method")
        ->check(CLI::IsMember({"enum", "formula", "gf", "all"}));
    count->add_flag("--force", force, "bypass the enumeration size guard");

    auto* enumerate = app.add_subcommand("enumerate", "Stream W(m,n) or T(m,n), one per line");
    enumerate->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--kind", kind)->check(CLI::IsMember({"words", "tilings"}));
    enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));
    enumerate->add_flag("--force", force, "bypass the enumeration size guard");

    auto* map = app.add_subcommand("map", "Map words to tilings or back, line by line");
    map->add_option("--direction", direction, "mapping direction")
        ->required()
        ->check(CLI::IsMember({"word2tiling", "tiling2word"}));
    map->add_option("--in", in_path, "input file (default: stdin)");
    map->add_option("--m", m_flag, "parameter m for compact word inputs")
        ->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify",
                                      "Cross-check all counting methods and the bijection "
                                      "roundtrip over a grid");
    verify->add_option("--max-m", max_m)->check(CLI::NonNegativeNumber);
    verify->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
    verify->add_flag("--force", force, "bypass the enumeration size guard");

    auto* render = app.add_subcommand("render", "Render a tiling to SVG");
    render->add_option("--in", in_path, "file holding one tiling in text form")->required();
    render->add_option("--out", out_path, "output SVG file")->required();
    render->add_option("--unit", unit, "cell size in pixels")->check(CLI::PositiveNumber);
    render->add_option("--m", m_flag, "expected number of red squares")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*count) return run_count(m, n, method, force, guard);
        if (*enumerate) return run_enumerate(m, n, kind, format, force, guard);
        if (*map) return run_map(direction, in_path, m_flag);
        if (*verify) return run_verify(max_m, max_n, force, guard);
        if (*render) return run_render(in_path, out_path, unit, m_flag);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
