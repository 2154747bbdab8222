#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linkinv/mcg.hpp"
#include "linkinv/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace linkinv;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;         // malformed input
constexpr int kExitPrecondition = 2;  // mathematical precondition failed

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string basename_of(const std::string& path) { return fs::path(path).filename().string(); }

ParsedInput load_graph(const std::string& path) { return parse_plumbing(slurp(path)); }

void emit(const json& j, bool as_json, const std::string& table) {
    if (as_json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << table;
}

Cycle parse_m_option(const std::string& text, std::size_t expected) {
    Cycle m;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            m.z.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw ParseError(0, "bad cycle entry '" + tok + "'");
        }
    }
    if (m.z.size() != expected)
        throw PreconditionError("cycle has " + std::to_string(m.z.size()) + " entries, graph has " +
                                std::to_string(expected) + " vertices");
    return m;
}

int cmd_invariants(const std::string& path, bool as_json, long coeff_cap) {
    Report r = build_report(basename_of(path), load_graph(path), coeff_cap);
    emit(report_to_json(r), as_json, report_to_table(r));
    return r.fillable ? kExitOk : kExitPrecondition;
}

int cmd_cycle(const std::string& path, bool as_json, long coeff_cap) {
    ParsedInput input = load_graph(path);
    RationalityCertificate cert = is_rational(input.graph, coeff_cap);
    json j;
    j["cycle"] = json_vector(cert.cycle.z);
    j["rational"] = cert.rational;
    j["certificate_sum"] = json_int(cert.sum);
    std::ostringstream table;
    table << "fundamental Z:   (";
    for (std::size_t i = 0; i < cert.cycle.z.size(); ++i)
        table << (i ? "," : "") << cert.cycle.z[i].get_str();
    table << ")\nrational:        " << (cert.rational ? "yes" : "no") << "  (Artin sum "
          << cert.sum.get_str() << ")\n";
    emit(j, as_json, table.str());
    return kExitOk;
}

int cmd_openbook(const std::string& path, const std::string& m_text, bool as_json,
                 long coeff_cap) {
    ParsedInput input = load_graph(path);
    Cycle m = m_text == "min" ? fundamental_cycle(input.graph, coeff_cap)
                              : parse_m_option(m_text, input.graph.size());
    MilnorOpenBook ob = milnor_openbook(input.graph, m);
    SupportClass sc = classify_support(input.graph);
    json j = openbook_to_json(ob, sc);
    std::ostringstream table;
    table << "m:        (";
    for (std::size_t i = 0; i < ob.m.z.size(); ++i) table << (i ? "," : "") << ob.m.z[i].get_str();
    table << ")\nn:        (";
    for (std::size_t i = 0; i < ob.n.size(); ++i) table << (i ? "," : "") << ob.n[i].get_str();
    table << ")\ngenus:    " << ob.page_genus.get_str() << "\nbinding:  "
          << ob.binding_count.get_str() << "\nnorm:     " << ob.norm.get_str()
          << "\nclass:    " << support_kind_name(sc.kind) << '\n';
    emit(j, as_json, table.str());
    return kExitOk;
}

int cmd_classify(const std::string& path, bool as_json) {
    ParsedInput input = load_graph(path);
    SupportClass sc = input.seifert ? classify_support(input.graph, *input.seifert)
                                    : classify_support(input.graph);
    json j;
    j["class"] = support_kind_name(sc.kind);
    j["genus"] = json_int(sc.genus);
    std::ostringstream table;
    table << "class:  " << support_kind_name(sc.kind) << "\ngenus:  " << sc.genus.get_str()
          << '\n';
    emit(j, as_json, table.str());
    return kExitOk;
}

int cmd_diagram(const std::string& path, bool as_json) {
    ParsedInput input = load_graph(path);
    LegendrianDiagram d = canonical_surgery_diagram(input.graph);
    AdjunctionReport adj = adjunction_check(d, input.graph);
    json j = diagram_to_json(d, adj);
    std::ostringstream table;
    table << "canonical Legendrian surgery diagram (" << d.components.size()
          << " components, all extra zigzags up)\n";
    for (const auto& c : d.components)
        table << "  " << c.vertex << ": tb " << c.tb.get_str() << ", rot " << c.rot.get_str()
              << ", surgery " << c.surgery.get_str() << ", cusps " << c.cusps_down.get_str()
              << " down / " << c.cusps_up.get_str() << " up\n";
    table << "adjunction certificate: " << (adj.certified ? "holds" : "FAILS") << '\n';
    emit(j, as_json, table.str());
    return kExitOk;
}

int cmd_mcg_verify(const std::string& path, bool as_json, long rewrite_depth) {
    Derivation d = parse_derivation_script(slurp(path));
    const SurfaceModel& model = standard_model(d.model);
    DerivationVerdict v = verify_derivation(model, d, standard_relations(model),
                                            static_cast<std::size_t>(rewrite_depth));
    json j;
    j["valid"] = v.valid;
    j["steps"] = static_cast<long>(d.moves.size());
    std::ostringstream table;
    if (v.valid) {
        table << "valid derivation (" << d.moves.size() << " moves on " << d.model << ")\n";
        if (v.conjugated) {
            j["conjugated"] = true;
            table << "words related by an overall conjugation (rotation moves present)\n";
        }
    } else {
        j["failing_step"] = static_cast<long>(v.failing_step);
        j["reason"] = v.reason;
        table << "INVALID at step " << v.failing_step << ": " << v.reason << '\n';
    }
    emit(j, as_json, table.str());
    return v.valid ? kExitOk : kExitPrecondition;
}

struct BatchEntry {
    std::string file;
    bool ok = false;
    std::string error;
    json row;
    Report report;
};

BatchEntry evaluate_file(const fs::path& p, long coeff_cap) {
    BatchEntry e;
    e.file = p.filename().string();
    try {
        e.report = build_report(e.file, parse_plumbing(slurp(p.string())), coeff_cap);
        e.row = report_to_json(e.report);
        e.ok = true;
    } catch (const std::exception& ex) {
        e.error = ex.what();
    }
    return e;
}

int cmd_batch(const std::string& dir, bool as_json, long coeff_cap) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().filename().string()[0] != '.')
            files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    std::vector<BatchEntry> results(files.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(files.size()); ++i)
        results[i] = evaluate_file(files[i], coeff_cap);

    bool any_error = false;
    if (as_json) {
        json rows = json::array();
        json errors = json::array();
        for (const auto& e : results) {
            if (e.ok)
                rows.push_back(e.row);
            else {
                errors.push_back(json{{"file", e.file}, {"error", e.error}});
                any_error = true;
            }
        }
        json out;
        out["rows"] = std::move(rows);
        out["errors"] = std::move(errors);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << std::left << std::setw(24) << "file" << std::setw(6) << "fill"
                  << std::setw(6) << "rat" << std::setw(5) << "Mg" << std::setw(5) << "Mb"
                  << std::setw(5) << "Mn" << std::setw(10) << "class" << std::setw(8) << "|H1|"
                  << '\n';
        for (const auto& e : results) {
            if (!e.ok) {
                any_error = true;
                continue;
            }
            const Report& r = e.report;
            std::cout << std::left << std::setw(24) << e.file << std::setw(6)
                      << (r.fillable ? "yes" : "no") << std::setw(6)
                      << (r.rationality ? (r.rationality->rational ? "yes" : "no") : "-");
            if (r.minimal_openbook)
                std::cout << std::setw(5) << r.minimal_openbook->page_genus.get_str()
                          << std::setw(5) << r.minimal_openbook->binding_count.get_str()
                          << std::setw(5) << r.minimal_openbook->norm.get_str();
            else
                std::cout << std::setw(5) << "-" << std::setw(5) << "-" << std::setw(5) << "-";
            std::cout << std::setw(10) << (r.support ? support_kind_name(r.support->kind) : "-")
                      << std::setw(8) << (r.h1 ? r.h1->order.get_str() : "-") << '\n';
        }
        for (const auto& e : results)
            if (!e.ok) std::cout << "error: " << e.file << ": " << e.error << '\n';
    }
    return any_error ? kExitParse : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of links of rational surface singularities from plumbing data"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_out = false;
    bool table_out = false;
    long coeff_cap = kDefaultCoeffCap;
    long rewrite_depth = 6;
    app.add_flag("--json", json_out, "machine-readable JSON output");
    app.add_flag("--table", table_out, "human-readable table output (default)");
    app.add_option("--coeff-cap", coeff_cap, "fundamental cycle coefficient cap");
    app.add_option("--rewrite-depth", rewrite_depth, "bounded rewrite search depth");

    std::string path, m_text = "min", dir;

    auto* inv = app.add_subcommand("invariants", "full invariant report for one input file");
    inv->add_option("file", path)->required();

    auto* cyc = app.add_subcommand("cycle", "fundamental cycle and Artin rationality");
    cyc->add_option("file", path)->required();

    auto* ob = app.add_subcommand("openbook", "Milnor open book of a cycle m");
    ob->add_option("file", path)->required();
    ob->add_option("--m", m_text, "comma list of positive integers, or 'min'");

    auto* cls = app.add_subcommand("classify", "planar/elliptic/higher support class");
    cls->add_option("file", path)->required();

    auto* dia = app.add_subcommand("diagram", "canonical Legendrian surgery diagram");
    dia->add_option("file", path)->required();

    auto* mcg = app.add_subcommand("mcg", "mapping class group tools");
    mcg->require_subcommand(1);
    auto* ver = mcg->add_subcommand("verify", "check a Dehn twist derivation script");
    ver->add_option("script", path)->required();

    auto* bat = app.add_subcommand("batch", "evaluate every file in a directory");
    bat->add_option("dir", dir)->required();

    CLI11_PARSE(app, argc, argv);
    bool as_json = json_out && !table_out;

    try {
        if (inv->parsed()) return cmd_invariants(path, as_json, coeff_cap);
        if (cyc->parsed()) return cmd_cycle(path, as_json, coeff_cap);
        if (ob->parsed()) return cmd_openbook(path, m_text, as_json, coeff_cap);
        if (cls->parsed()) return cmd_classify(path, as_json);
        if (dia->parsed()) return cmd_diagram(path, as_json);
        if (mcg->parsed()) return cmd_mcg_verify(path, as_json, rewrite_depth);
        if (bat->parsed()) return cmd_batch(dir, as_json, coeff_cap);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
