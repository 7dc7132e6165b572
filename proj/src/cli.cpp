#include "sturmkit/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturmkit/central.hpp"
#include "sturmkit/christoffel.hpp"
#include "sturmkit/enumeration.hpp"
#include "sturmkit/forbidden.hpp"
#include "sturmkit/oracle.hpp"
#include "sturmkit/render.hpp"
#include "sturmkit/sturmian.hpp"
#include "sturmkit/word.hpp"

namespace sturmkit::cli {

namespace {

using json = nlohmann::ordered_json;

// Memory guards for the generators; domain errors, exit code 2.
constexpr std::int64_t max_generated_length = 1'000'000;
constexpr std::int64_t max_matrix_order = 4'096;
constexpr std::int64_t max_bispecial_length = 10'000;
constexpr std::int64_t max_forbidden_length = 10'000;

std::string display(const word& w) { return w.empty() ? "(empty)" : w.str(); }

void check_generated_length(std::int64_t p, std::int64_t q, std::int64_t limit) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("both step counts must be positive");
    if (p > limit || q > limit || p + q > limit)
        throw std::invalid_argument("p+q exceeds limit " + std::to_string(limit));
}

struct classify_witness {
    word cw;
    christoffel::recognition rec;
    christoffel::factorization fact;
};

std::vector<classify_witness> find_witnesses(const word& w) {
    std::vector<classify_witness> out;
    for (auto [x, y] : {std::pair{letter::a, letter::b}, std::pair{letter::b, letter::a}}) {
        word cw = x + w + y;
        if (auto rec = christoffel::recognize(cw))
            out.push_back({cw, *rec, christoffel::factorize(cw)});
    }
    return out;
}

std::string table_csv(const enumeration::count_table& t) {
    std::string s = "n,st,ls,rs,sbs,nbs,bs,mf\n";
    for (const auto& r : t.rows) {
        s += std::to_string(r.n) + ',' + std::to_string(r.st) + ',' + std::to_string(r.ls) +
             ',' + std::to_string(r.rs) + ',' + std::to_string(r.sbs) + ',' +
             std::to_string(r.nbs) + ',' + std::to_string(r.bs) + ',' + std::to_string(r.mf) +
             '\n';
    }
    return s;
}

json table_json(const enumeration::count_table& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row;
        row["n"] = r.n;
        row["st"] = r.st;
        row["ls"] = r.ls;
        row["rs"] = r.rs;
        row["sbs"] = r.sbs;
        row["nbs"] = r.nbs;
        row["bs"] = r.bs;
        row["mf"] = r.mf;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toolkit for balanced binary words and Christoffel words"};
    app.name("sturmkit");
    app.require_subcommand(1);

    std::size_t cap = forbidden::default_bruteforce_cap;
    app.add_option("--cap", cap, "Cap for exhaustive 2^n scans (env STURMKIT_CAP)")
        ->envname("STURMKIT_CAP");

    int code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "Print a Christoffel word");
    std::int64_t gen_p = 0, gen_q = 0;
    bool gen_upper = false;
    gen->add_option("--p", gen_p, "Number of 'a' steps")->required();
    gen->add_option("--q", gen_q, "Number of 'b' steps")->required();
    gen->add_flag("--upper", gen_upper, "Generate the upper word instead of the lower one");
    gen->callback([&] {
        check_generated_length(gen_p, gen_q, max_generated_length);
        const christoffel::slope_pair s{gen_p, gen_q};
        out << (gen_upper ? christoffel::upper(s) : christoffel::lower(s)).str() << '\n';
    });

    // classify
    auto* cls = app.add_subcommand("classify", "Classify a word by its extension behaviour");
    std::string cls_word;
    bool cls_json = false;
    cls->add_option("word", cls_word, "Word over {a,b}")->required();
    cls->add_flag("--json", cls_json, "Emit a JSON record");
    cls->callback([&] {
        const word w{cls_word};
        const auto c = sturmian::classify(w);
        std::vector<classify_witness> wits;
        if (c.tag == sturmian::class_tag::strictly_bispecial ||
            c.tag == sturmian::class_tag::non_strictly_bispecial)
            wits = find_witnesses(w);
        if (cls_json) {
            json j;
            j["word"] = w.str();
            j["class"] = sturmian::to_string(c.tag);
            j["extension_count"] = c.extension_count;
            json arr = json::array();
            for (const auto& wi : wits) {
                json wj;
                wj["word"] = wi.cw.str();
                wj["p"] = wi.rec.slope.p;
                wj["q"] = wi.rec.slope.q;
                wj["side"] = christoffel::to_string(wi.rec.orientation);
                json fj;
                fj["u"] = wi.fact.u.str();
                fj["x"] = std::string(1, to_char(wi.fact.x));
                fj["y"] = std::string(1, to_char(wi.fact.y));
                fj["n_rep"] = wi.fact.repetitions;
                wj["factorization"] = std::move(fj);
                arr.push_back(std::move(wj));
            }
            j["witnesses"] = std::move(arr);
            out << j.dump() << '\n';
        } else {
            out << display(w) << ": " << sturmian::to_string(c.tag) << " (extensions: "
                << c.extension_count << ")\n";
            if (!wits.empty()) {
                const auto& wi = wits.front();
                out << "witness: " << wi.cw.str() << " ["
                    << christoffel::to_string(wi.rec.orientation) << " p=" << wi.rec.slope.p
                    << " q=" << wi.rec.slope.q << "] u=\"" << wi.fact.u.str() << "\" x="
                    << to_char(wi.fact.x) << " y=" << to_char(wi.fact.y)
                    << " n_rep=" << wi.fact.repetitions << '\n';
            }
        }
    });

    // table
    auto* tbl = app.add_subcommand("table", "Emit the count table for lengths 0..N");
    std::int64_t tbl_max = 0;
    std::string tbl_format = "csv";
    tbl->add_option("--max", tbl_max, "Largest length")->required();
    tbl->add_option("--format", tbl_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    tbl->callback([&] {
        const auto t = enumeration::build_table(tbl_max);
        if (tbl_format == "json")
            out << table_json(t).dump() << '\n';
        else
            out << table_csv(t);
    });

    // mf
    auto* mf = app.add_subcommand("mf", "Print the minimal forbidden words of one length");
    std::int64_t mf_len = 0;
    bool mf_check = false;
    mf->add_option("--length", mf_len, "Word length (>= 2)")->required();
    mf->add_flag("--check", mf_check, "Also compare against the exhaustive filter");
    mf->callback([&] {
        if (mf_len < 2) throw std::invalid_argument("mf: --length must be at least 2");
        if (mf_len > max_forbidden_length)
            throw std::invalid_argument("mf: --length exceeds limit " +
                                        std::to_string(max_forbidden_length));
        const auto built = forbidden::construct(static_cast<std::size_t>(mf_len));
        for (const word& w : built.words) out << w.str() << '\n';
        if (mf_check) {
            const auto filtered = forbidden::bruteforce(static_cast<std::size_t>(mf_len), cap);
            if (filtered.words != built.words) {
                err << "mf: construction and exhaustive filter disagree at length " << mf_len
                    << '\n';
                code = 1;
            }
        }
    });

    // bispecial
    auto* bis = app.add_subcommand("bispecial", "List the bispecial Sturmian words of one length");
    std::int64_t bis_len = 0;
    bis->add_option("--length", bis_len, "Word length (>= 0)")->required();
    bis->callback([&] {
        if (bis_len < 0) throw std::invalid_argument("bispecial: --length must be >= 0");
        if (bis_len > max_bispecial_length)
            throw std::invalid_argument("bispecial: --length exceeds limit " +
                                        std::to_string(max_bispecial_length));
        const std::int64_t n = bis_len + 2;
        std::map<word, bool> strict;  // the maximal internal factors
        for (std::int64_t p = 1; p < n; ++p) {
            const christoffel::slope_pair s{p, n - p};
            for (const word& cw : {christoffel::lower(s), christoffel::upper(s)}) {
                word w = cw.subword(1, static_cast<std::size_t>(bis_len));
                const bool pal = is_palindrome(w);
                strict.emplace(std::move(w), pal);
            }
        }
        if (static_cast<std::int64_t>(strict.size()) != enumeration::count_bispecial(bis_len))
            throw std::logic_error("bispecial: census disagrees with the closed form");
        for (const auto& [w, is_strict] : strict)
            out << display(w) << (is_strict ? " strict" : " non-strict") << '\n';
    });

    // matrix
    auto* mat = app.add_subcommand("matrix", "Print the sorted-rotation matrix of a lower word");
    std::int64_t mat_p = 0, mat_q = 0;
    mat->add_option("--p", mat_p, "Number of 'a' steps")->required();
    mat->add_option("--q", mat_q, "Number of 'b' steps")->required();
    mat->callback([&] {
        check_generated_length(mat_p, mat_q, max_matrix_order);
        const auto m = christoffel::rotation_matrix_of({mat_p, mat_q});
        for (const std::string& row : m.rows()) out << row << '\n';
    });

    // bwt
    auto* bwt_cmd = app.add_subcommand("bwt", "Print the Burrows-Wheeler transform of a word");
    std::string bwt_word;
    bwt_cmd->add_option("word", bwt_word, "Word over {a,b}")->required();
    bwt_cmd->callback([&] { out << christoffel::bwt(word{bwt_word}).str() << '\n'; });

    // render
    auto* ren = app.add_subcommand("render", "Write an SVG drawing of the lattice path");
    std::int64_t ren_p = 0, ren_q = 0;
    bool ren_upper = false, ren_both = false, ren_no_segment = false;
    int ren_cell = 24;
    std::string ren_out;
    ren->add_option("--p", ren_p, "Number of 'a' steps")->required();
    ren->add_option("--q", ren_q, "Number of 'b' steps")->required();
    auto* upper_flag = ren->add_flag("--upper", ren_upper, "Draw the upper path only");
    ren->add_flag("--both", ren_both, "Draw both paths")->excludes(upper_flag);
    ren->add_option("--out", ren_out, "Output file")->required();
    ren->add_option("--cell", ren_cell, "Pixels per unit step");
    ren->add_flag("--no-segment", ren_no_segment, "Omit the straight segment");
    ren->callback([&] {
        check_generated_length(ren_p, ren_q, max_matrix_order);
        render::render_spec spec;
        spec.slope = {ren_p, ren_q};
        spec.side = ren_both ? render::path_side::both
                             : (ren_upper ? render::path_side::upper : render::path_side::lower);
        spec.cell_size = ren_cell;
        spec.include_segment = !ren_no_segment;
        const std::string svg = render::render_svg(spec);
        std::ofstream file(ren_out, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("render: cannot open " + ren_out);
        file << svg;
        file.close();
        if (!file) throw std::runtime_error("render: write to " + ren_out + " failed");
    });

    // verify
    auto* ver = app.add_subcommand("verify", "Run the exhaustive verification harness");
    std::string ver_profile = "standard";
    std::string ver_claim;
    bool ver_json = false;
    ver->add_option("--profile", ver_profile, "quick, standard or thorough")
        ->check(CLI::IsMember({"quick", "standard", "thorough"}));
    ver->add_option("--claim", ver_claim, "Run a single claim");
    ver->add_flag("--json", ver_json, "One JSON record per claim");
    ver->callback([&] {
        const auto prof = *oracle::profile_from_string(ver_profile);
        std::vector<oracle::report> reports;
        if (!ver_claim.empty())
            reports.push_back(oracle::verify(ver_claim, oracle::claim_bound(ver_claim, prof)));
        else
            reports = oracle::verify_all(prof);
        std::int64_t total_ms = 0;
        std::size_t passed = 0;
        for (const auto& r : reports) {
            out << (ver_json ? oracle::to_json_line(r) : oracle::to_text_line(r)) << '\n';
            total_ms += r.elapsed_ms;
            if (r.passed) ++passed;
        }
        err << passed << '/' << reports.size() << " claims passed (" << total_ms << " ms)\n";
        if (passed != reports.size()) code = 1;
    });

    // closure
    auto* clo = app.add_subcommand("closure", "Print a palindromic closure");
    std::string clo_word;
    bool clo_left = false;
    clo->add_option("word", clo_word, "Word over {a,b}")->required();
    clo->add_flag("--left", clo_left, "Left closure instead of the right one");
    clo->callback([&] {
        const word w{clo_word};
        out << (clo_left ? central::left_palindromic_closure(w)
                         : central::right_palindromic_closure(w))
                   .str()
            << '\n';
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("sturmkit");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int cli_code = app.exit(e, out, err);
        return cli_code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return code;
}

}  // namespace sturmkit::cli
