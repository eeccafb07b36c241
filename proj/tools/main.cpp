// planarcycles: construct the extremal families, count induced cycles, and
// verify the closed forms. Subcommands: construct | count | verify |
// enumerate | search | faces | export-dot.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "planar/anneal.hpp"
#include "planar/census.hpp"
#include "planar/dot.hpp"
#include "planar/embed.hpp"
#include "planar/enumerate.hpp"
#include "planar/families.hpp"
#include "planar/formulas.hpp"
#include "planar/graph6.hpp"
#include "planar/util.hpp"
#include "planar/verify.hpp"

using json = nlohmann::json;
using namespace planar;

namespace {

constexpr const char* kVersion = "planarcycles 0.1.0";

struct Manifest {
    std::string subcommand;
    json params = json::object();
    std::uint64_t seed = 0;
    json outputs = json::object();

    void record(const std::string& name, const std::string& data) {
        outputs[name] = hex64(fnv1a64(data));
    }
    void write(const std::string& path) const {
        json m{{"tool", kVersion},
               {"subcommand", subcommand},
               {"params", params},
               {"seed", seed},
               {"outputs", outputs}};
        std::ofstream f(path);
        f << m.dump(2) << "\n";
    }
};

void write_file(const std::string& path, const std::string& data, Manifest& man) {
    std::ofstream f(path);
    if (!f) throw GraphError("cannot write " + path);
    f << data;
    man.record(path, data);
}

std::string read_stream_or_file(const std::string& in_path) {
    if (in_path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(in_path);
    if (!f) throw GraphError("cannot read " + in_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json names_json(const BuiltGraph& b) {
    json arr = json::array();
    for (const auto& s : b.names) arr.push_back(s);
    return json{{"n", b.n}, {"names", arr}};
}

std::vector<bool> parse_mask(const std::string& text, std::size_t len) {
    std::vector<bool> mask(len, false);
    if (text.empty() || text == "none") return mask;
    if (text == "full") {
        mask.assign(len, true);
        return mask;
    }
    if (text.size() != len)
        throw GraphError("mask must be 'none', 'full', or a 0/1 string of length " +
                         std::to_string(len));
    for (std::size_t i = 0; i < len; ++i) {
        if (text[i] != '0' && text[i] != '1') throw GraphError("mask characters must be 0 or 1");
        mask[i] = text[i] == '1';
    }
    return mask;
}

int resolve_vertex(const std::string& token, const json* names) {
    if (!token.empty() && (std::isdigit(token[0]) || token[0] == '-')) return std::stoi(token);
    if (!names) throw GraphError("vertex name '" + token + "' needs --names");
    const auto& arr = (*names)["names"];
    for (std::size_t i = 0; i < arr.size(); ++i)
        if (arr[i] == token) return int(i);
    throw GraphError("unknown vertex name: " + token);
}

int cmd_construct(const std::string& family, std::int64_t n, int k, bool even, bool with_paths,
                  const std::string& size_option, const std::string& mask_text,
                  const std::vector<int>& sizes, const std::string& types_text,
                  const std::vector<std::string>& gadget_masks, const std::string& out_base,
                  const std::string& manifest_path) {
    Manifest man;
    man.subcommand = "construct";
    man.params = {{"family", family}, {"n", n}};

    BuiltGraph built;
    if (family == "k2m") {
        built = make_k2m(n);
    } else if (family == "required-form") {
        RequiredFormSpec spec;
        spec.n = n;
        if (!size_option.empty())
            spec.option = size_option == "second" ? SizeOption::second : SizeOption::first;
        spec.optional_edges = parse_mask(mask_text, required_form_optional_count(n, spec.option));
        man.params["size_option"] = size_option;
        man.params["mask"] = mask_text.empty() ? "none" : mask_text;
        built = make_required_form(spec).built;
    } else if (family == "blowup") {
        man.params["k"] = k;
        man.params["even"] = even;
        built = even ? make_even_blowup(k, n) : make_odd_blowup(k, n, with_paths);
    } else if (family == "h-minus-z") {
        if (sizes.size() != 3) throw GraphError("h-minus-z needs --sizes a,b,c");
        built = make_h_minus_z(sizes[0], sizes[1], sizes[2]);
        man.params["sizes"] = sizes;
    } else if (family == "face-gadget") {
        // --types like "3:4,2,1"; per-face chain masks via --gadget-mask
        std::array<GadgetFace, 3> faces;
        std::istringstream ts(types_text);
        std::string tok;
        int fi = 0;
        while (std::getline(ts, tok, ',') && fi < 3) {
            GadgetFace f;
            auto colon = tok.find(':');
            f.type = std::stoi(tok.substr(0, colon));
            if (f.type == 3) {
                if (colon == std::string::npos) throw GraphError("type 3 needs m, e.g. 3:4");
                f.m = std::stoi(tok.substr(colon + 1));
                std::string mt = fi < int(gadget_masks.size()) ? gadget_masks[fi] : "";
                f.optional_mask = parse_mask(mt, std::size_t(f.m - 2));
            } else if (f.type == 2) {
                f.m = 1;
            }
            faces[fi++] = f;
        }
        if (fi != 3) throw GraphError("--types needs three entries");
        man.params["types"] = types_text;
        built = make_face_gadget(faces);
    } else {
        throw GraphError("unknown family: " + family);
    }

    std::string g6 = built.n <= 64 ? graph6_encode(built.graph()) : graph6_encode(built.wide());
    if (out_base.empty()) {
        std::cout << g6 << "\n";
        man.record("stdout", g6);
    } else {
        write_file(out_base + ".g6", g6 + "\n", man);
        write_file(out_base + ".names.json", names_json(built).dump(2) + "\n", man);
        if (built.has_rotation()) write_file(out_base + ".rot.txt", rotation_to_text(built.rotation), man);
    }
    man.write(manifest_path.empty() ? "construct-manifest.json" : manifest_path);
    return 0;
}

int cmd_count(int k, bool per_vertex, const std::string& through, const std::string& names_path,
              const std::string& in_path) {
    std::optional<json> names;
    if (!names_path.empty()) names = json::parse(read_stream_or_file(names_path));

    std::istringstream in(read_stream_or_file(in_path));
    std::string line;
    int lineno = 0, failures = 0;
    std::cout << (through.empty() ? "graph,k,total,min_per_vertex,max_per_vertex"
                                  : "graph,k,total,min_per_vertex,max_per_vertex,through")
              << "\n";
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            auto dec = graph6_decode(line);
            std::string id = "line" + std::to_string(lineno);
            CycleCensus c;
            std::uint64_t through_count = 0;
            if (dec.n <= 64) {
                Graph g = dec.to_graph();
                c = count_induced_cycles(g, k, false);
                if (!through.empty()) {
                    std::istringstream ts(through);
                    std::string tok;
                    std::vector<int> uvw;
                    while (std::getline(ts, tok, ',')) uvw.push_back(resolve_vertex(tok, names ? &*names : nullptr));
                    if (uvw.size() != 3) throw GraphError("--through needs u,v,w");
                    through_count = count_induced_cycles_through_path(g, uvw[0], uvw[1], uvw[2], k);
                }
            } else {
                c = count_induced_cycles(dec.to_wide(), k, false);
                if (!through.empty()) throw GraphError("--through supports n <= 64 only");
            }
            std::cout << census_csv_row(id, c);
            if (!through.empty()) std::cout << "," << through_count;
            std::cout << "\n";
            if (per_vertex) {
                std::cerr << id << " per-vertex:";
                for (auto p : c.per_vertex) std::cerr << " " << p;
                std::cerr << "\n";
            }
        } catch (const std::exception& e) {
            ++failures;
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
        }
    }
    return failures ? 1 : 0;
}

int cmd_verify(const std::string& suite, const std::string& report_path, const std::string& csv_path) {
    std::vector<std::pair<std::string, Suite>> suites;
    if (suite == "all") {
        suites = all_suites();
    } else {
        suites.push_back({suite, run_suite(suite)});
    }
    std::string md, csv;
    bool ok = true;
    for (const auto& [name, s] : suites) {
        md += render_markdown(name, s) + "\n";
        csv += render_csv(s);
        ok = ok && all_pass(s);
    }
    std::cout << md;
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        f << md;
    }
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        f << csv;
    }
    std::cout << (ok ? "ALL CHECKS PASSED\n" : "CHECK FAILURES PRESENT\n");
    return ok ? 0 : 1;
}

int cmd_enumerate(int n, const std::string& out_path, const std::string& manifest_path) {
    if (n == kEnumerateCap) std::cerr << "note: n=" << n << " enumeration is slow\n";
    Manifest man;
    man.subcommand = "enumerate";
    man.params = {{"n", n}};
    std::string data;
    enumerate_planar(n, [&](const Graph& g) { data += graph6_encode(g) + "\n"; });
    if (out_path.empty()) {
        std::cout << data;
        man.record("stdout", data);
    } else {
        write_file(out_path, data, man);
    }
    man.write(manifest_path.empty() ? "enumerate-manifest.json" : manifest_path);
    return 0;
}

int cmd_search(const SearchConfig& cfg, const std::string& out_path,
               const std::string& manifest_path) {
    auto rec = anneal_max(cfg);
    json j{{"n", rec.n},
           {"k", rec.k},
           {"best", rec.best},
           {"witness_g6", rec.witness_g6},
           {"method", rec.method},
           {"exhaustive", rec.exhaustive}};
    std::string data = j.dump(2) + "\n";
    Manifest man;
    man.subcommand = "search";
    man.seed = cfg.seed;
    man.params = {{"n", cfg.n},       {"k", cfg.k},           {"restarts", cfg.restarts},
                  {"budget", cfg.budget}, {"t0", cfg.t0},     {"t_end", cfg.t_end},
                  {"w_add", cfg.w_add},   {"w_del", cfg.w_del}, {"w_swap", cfg.w_swap}};
    if (out_path.empty()) {
        std::cout << data;
        man.record("stdout", data);
    } else {
        write_file(out_path, data, man);
    }
    man.write(manifest_path.empty() ? "search-manifest.json" : manifest_path);
    return 0;
}

int cmd_faces(const std::string& in_path, const std::string& rotation_path) {
    std::istringstream in(read_stream_or_file(in_path));
    std::string line;
    if (!std::getline(in, line)) throw GraphError("faces: no input graph");
    Graph g = graph6_decode(line).to_graph();
    Embedding emb = rotation_path.empty()
                        ? embed(g)
                        : Embedding::from_rotation(g, rotation_from_text(read_stream_or_file(rotation_path)));
    std::cout << "rotation:\n" << rotation_to_text(emb.rotation);
    std::cout << "faces " << emb.faces.size() << ":\n";
    for (const auto& f : emb.faces) {
        for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? " " : "") << f[i];
        std::cout << "\n";
    }
    return 0;
}

int cmd_export_dot(const std::string& in_path, const std::string& highlight,
                   const std::string& out_path) {
    std::istringstream in(read_stream_or_file(in_path));
    std::string line;
    if (!std::getline(in, line)) throw GraphError("export-dot: no input graph");
    Graph g = graph6_decode(line).to_graph();
    std::optional<Bits64> hl;
    if (!highlight.empty()) {
        Bits64 b;
        std::istringstream hs(highlight);
        std::string tok;
        while (std::getline(hs, tok, ',')) b.set(std::stoi(tok));
        hl = b;
    }
    std::string dot = dot_export(g, hl);
    if (out_path.empty())
        std::cout << dot;
    else {
        std::ofstream f(out_path);
        f << dot;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{kVersion};
    app.require_subcommand(1);

    // construct
    auto* c = app.add_subcommand("construct", "build a named graph family");
    std::string family, size_option, mask_text, types_text, out_base, manifest_path;
    std::int64_t n = 19;
    int k = 3;
    bool even = false, odd = false, with_paths = false;
    std::vector<int> sizes;
    std::vector<std::string> gadget_masks;
    c->add_option("family", family, "required-form | k2m | blowup | h-minus-z | face-gadget")
        ->required();
    c->add_option("--n", n, "vertex count");
    c->add_option("--k", k, "blow-up parameter");
    c->add_flag("--even", even, "even blow-up (2k-cycle)");
    c->add_flag("--odd", odd, "odd blow-up (2k+1-cycle)");
    c->add_flag("--with-paths", with_paths, "thread paths through blown sets");
    c->add_option("--size-option", size_option, "first | second (n % 3 != 1 only)");
    c->add_option("--mask", mask_text, "optional edges: none | full | 0/1 string");
    c->add_option("--sizes", sizes, "h-minus-z class sizes a,b,c")->delimiter(',');
    c->add_option("--types", types_text, "face-gadget types, e.g. 3:4,2,2");
    c->add_option("--gadget-mask", gadget_masks, "per-face chain masks for type-3 faces");
    c->add_option("--out", out_base, "output base path (.g6/.names.json/.rot.txt)");
    c->add_option("--manifest", manifest_path, "manifest path");

    // count
    auto* cnt = app.add_subcommand("count", "census a graph6 stream (CSV on stdout)");
    int count_k = 5;
    bool per_vertex = false;
    std::string through, names_path, in_path;
    cnt->add_option("--k", count_k, "cycle length")->required();
    cnt->add_flag("--per-vertex", per_vertex, "dump per-vertex counts to stderr");
    cnt->add_option("--through", through, "count cycles through path u,v,w (ids or names)");
    cnt->add_option("--names", names_path, "names.json from construct, for --through by name");
    cnt->add_option("--in", in_path, "input file (default stdin)");

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite, report_path, csv_path;
    ver->add_option("suite", suite,
                    "theorem1|theorem2|optional-edges|lemma5|faces|gadgets|appendix-cases|"
                    "recursion|lemma4|figure2|blowup|all")
        ->required();
    ver->add_option("--report", report_path, "write the Markdown report here");
    ver->add_option("--csv", csv_path, "write the CSV twin here");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "all non-isomorphic planar graphs on n vertices");
    int en_n = 5;
    std::string en_out, en_manifest;
    en->add_option("--n", en_n, "vertex count (<= 9)")->required();
    en->add_option("--out", en_out, "output file (default stdout)");
    en->add_option("--manifest", en_manifest, "manifest path");

    // search
    auto* se = app.add_subcommand("search", "simulated annealing for cycle-rich planar graphs");
    SearchConfig cfg;
    std::string start_mode = "random", se_out, se_manifest;
    se->add_option("--n", cfg.n, "vertex count (<= 64)")->required();
    se->add_option("--k", cfg.k, "cycle length")->required();
    se->add_option("--seed", cfg.seed, "rng seed");
    se->add_option("--restarts", cfg.restarts, "independent restarts");
    se->add_option("--budget", cfg.budget, "steps per restart");
    se->add_option("--t0", cfg.t0, "initial temperature");
    se->add_option("--t-end", cfg.t_end, "final temperature");
    se->add_option("--start", start_mode, "random | k2m | hminusz");
    se->add_option("--out", se_out, "record file (default stdout)");
    se->add_option("--manifest", se_manifest, "manifest path");

    // faces
    auto* fa = app.add_subcommand("faces", "embed a graph6 line and print rotation + faces");
    std::string fa_in, fa_rot;
    fa->add_option("--in", fa_in, "input file (default stdin)");
    fa->add_option("--rotation", fa_rot, "pin this rotation instead of embedding");

    // export-dot
    auto* xd = app.add_subcommand("export-dot", "graph6 to DOT");
    std::string xd_in, xd_highlight, xd_out;
    xd->add_option("--in", xd_in, "input file (default stdin)");
    xd->add_option("--highlight", xd_highlight, "comma-separated vertex ids");
    xd->add_option("--out", xd_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c) {
            if (family == "blowup" && !even && !odd) throw GraphError("blowup needs --even or --odd");
            return cmd_construct(family, n, k, even, with_paths, size_option, mask_text, sizes,
                                 types_text, gadget_masks, out_base, manifest_path);
        }
        if (*cnt) return cmd_count(count_k, per_vertex, through, names_path, in_path);
        if (*ver) return cmd_verify(suite, report_path, csv_path);
        if (*en) return cmd_enumerate(en_n, en_out, en_manifest);
        if (*se) {
            if (start_mode == "k2m")
                cfg.start = StartMode::k2m;
            else if (start_mode == "hminusz")
                cfg.start = StartMode::hminusz;
            else
                cfg.start = StartMode::random;
            return cmd_search(cfg, se_out, se_manifest);
        }
        if (*fa) return cmd_faces(fa_in, fa_rot);
        if (*xd) return cmd_export_dot(xd_in, xd_highlight, xd_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
