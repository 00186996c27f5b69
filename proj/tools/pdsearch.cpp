// pdsearch: search small groups for negative-Latin-square-type partial
// difference sets and classify the results.
//
// Subcommands: ingest, search, verify, classify, disjoint, breakdown,
// graphs, report. See README.md for the pipeline walkthrough.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pds/catalog.hpp"
#include "pds/classify.hpp"
#include "pds/errors.hpp"
#include "pds/graph.hpp"
#include "pds/graph6.hpp"
#include "pds/gtab.hpp"
#include "pds/report.hpp"
#include "pds/results_io.hpp"
#include "pds/search.hpp"

namespace {

struct Options {
    std::string catalog_dir = "data/catalog";
    std::string params = "64,18,2,6";
    std::string group;
    std::string in_path;
    std::string out_path;
    std::string match_path;
    int jobs = 1;
    bool paper_faithful = false;
    bool first_only = false;
    bool progress = false;
    bool paranoid = false;
};

pds::PdsParams parse_params(const std::string& s) {
    long v[4];
    if (std::sscanf(s.c_str(), "%ld,%ld,%ld,%ld", &v[0], &v[1], &v[2], &v[3]) != 4)
        throw pds::BadParametersError("--params expects v,k,lambda,mu");
    return pds::PdsParams::nlst(v[0], v[1], v[2], v[3]);
}

pds::SearchConfig make_config(const Options& opt) {
    pds::SearchConfig cfg;
    cfg.parallelism = opt.jobs;
    if (opt.paper_faithful) {
        cfg.strong_prune = false;
        cfg.filter = pds::FilterMode::PaperFaithful;
        cfg.prune_checkpoints = {5, 6, 7};
    }
    if (opt.progress) {
        cfg.on_progress = [](const pds::ProgressEvent& ev) {
            std::cerr << "{\"group\":\"" << ev.group_id << "\",\"dist\":" << ev.distribution_index
                      << ",\"dists\":" << ev.distribution_count
                      << ",\"candidates\":" << ev.candidates << ",\"pruned\":" << ev.pruned
                      << ",\"found\":" << ev.found << "}\n";
        };
    }
    return cfg;
}

// lazily loaded group tables shared by the analysis passes
struct GroupCache {
    const pds::GroupCatalog& catalog;
    bool paranoid;
    std::map<std::string, pds::GroupTable> tables;

    const pds::GroupTable& get(const std::string& id) {
        auto it = tables.find(id);
        if (it == tables.end()) it = tables.emplace(id, catalog.load(id, paranoid)).first;
        return it->second;
    }
};

std::map<std::string, std::vector<int>> group_record_indices(const std::vector<pds::PdsRecord>& recs) {
    std::map<std::string, std::vector<int>> by_group;
    for (int i = 0; i < static_cast<int>(recs.size()); ++i)
        by_group[recs[i].group_id].push_back(i);
    return by_group;
}

// classes for one group's records: reuse stored class ids when complete,
// recompute from automorphisms otherwise
std::map<int, std::vector<int>> ensure_classes(std::vector<pds::PdsRecord>& recs,
                                               const std::vector<int>& idx,
                                               const pds::GroupTable& G, const pds::PdsParams& p) {
    bool have_all = std::all_of(idx.begin(), idx.end(),
                                [&](int i) { return recs[i].class_id.has_value(); });
    std::map<int, std::vector<int>> classes;
    if (have_all) {
        for (int i : idx) classes[*recs[i].class_id].push_back(i);
        return classes;
    }
    std::vector<pds::PdsRecord> list;
    for (int i : idx) list.push_back(recs[i]);
    for (const auto& cls : pds::equivalence_classes(G, list, p))
        for (int m : cls.members) {
            recs[idx[m]].class_id = cls.class_id;
            classes[cls.class_id].push_back(idx[m]);
        }
    return classes;
}

int representative_of(const std::vector<pds::PdsRecord>& recs, const std::vector<int>& members) {
    int rep = members.front();
    for (int i : members)
        if (recs[i].elements < recs[rep].elements) rep = i;
    return rep;
}

int cmd_search(const Options& opt) {
    pds::GroupCatalog catalog = pds::load_catalog(opt.catalog_dir);
    pds::PdsParams p = parse_params(opt.params);
    pds::SearchConfig cfg = make_config(opt);

    std::vector<pds::CatalogEntry> targets;
    if (!opt.group.empty()) {
        const pds::CatalogEntry* e = catalog.find(opt.group);
        if (!e) throw pds::Error("group id not in catalog: " + opt.group);
        targets.push_back(*e);
    } else {
        targets = catalog.entries;
    }

    std::vector<pds::PdsRecord> all;
    for (const auto& entry : targets) {
        pds::GroupTable G = catalog.load(entry, opt.paranoid);
        try {
            pds::SearchResult res = pds::search_group(G, p, cfg);
            std::cerr << entry.id << ": " << res.pds_list.size() << " PDSs, "
                      << res.distribution_count << " distributions, " << res.stats.candidates
                      << " candidates, " << res.stats.wall_seconds << " s\n";
            all.insert(all.end(), res.pds_list.begin(), res.pds_list.end());
        } catch (const pds::NoElementaryAbelianImageError& e) {
            if (!opt.group.empty()) {
                std::cerr << "NoElementaryAbelianImage: " << e.what() << "\n";
                return 1;
            }
            std::cerr << entry.id << ": skipped (" << e.what() << ")\n";
        }
    }

    const std::string out = opt.out_path.empty() ? "results.jsonl" : opt.out_path;
    pds::save_results(all, out);
    std::cout << "wrote " << all.size() << " records to " << out << "\n";
    return 0;
}

int cmd_verify(const Options& opt) {
    pds::GroupCatalog catalog = pds::load_catalog(opt.catalog_dir);
    pds::PdsParams p = parse_params(opt.params);
    GroupCache cache{catalog, opt.paranoid, {}};

    std::vector<pds::PdsRecord> recs = pds::load_results(opt.in_path);
    pds::verify_records(
        recs, [&](const std::string& id) -> const pds::GroupTable& { return cache.get(id); }, p,
        -1);
    std::cout << "verified " << recs.size() << " records\n";
    return 0;
}

int cmd_classify(const Options& opt) {
    pds::GroupCatalog catalog = pds::load_catalog(opt.catalog_dir);
    pds::PdsParams p = parse_params(opt.params);
    GroupCache cache{catalog, opt.paranoid, {}};

    std::vector<pds::PdsRecord> recs = pds::load_results(opt.in_path);
    for (auto& [gid, idx] : group_record_indices(recs)) {
        std::vector<pds::PdsRecord> list;
        for (int i : idx) list.push_back(recs[i]);
        auto classes = pds::equivalence_classes(cache.get(gid), list, p);
        for (const auto& cls : classes)
            for (int m : cls.members) recs[idx[m]].class_id = cls.class_id;
        std::cerr << gid << ": " << classes.size() << " classes over " << idx.size() << " PDSs\n";
    }
    pds::save_results(recs, opt.out_path.empty() ? opt.in_path : opt.out_path);
    return 0;
}

int cmd_disjoint(const Options& opt) {
    std::vector<pds::PdsRecord> recs = pds::load_results(opt.in_path);
    for (auto& [gid, idx] : group_record_indices(recs)) {
        std::vector<pds::PdsRecord> list;
        for (int i : idx) list.push_back(recs[i]);
        auto pairs = pds::disjoint_pairs(list, opt.first_only);
        for (int i : idx) recs[i].disjoint_with = std::vector<int>{};
        for (auto [a, b] : pairs) {
            recs[idx[a]].disjoint_with->push_back(b);
            recs[idx[b]].disjoint_with->push_back(a);
        }
        std::cerr << gid << ": " << pairs.size() << " disjoint pairs\n";
    }
    pds::save_results(recs, opt.out_path.empty() ? opt.in_path : opt.out_path);
    return 0;
}

int cmd_breakdown(const Options& opt) {
    pds::GroupCatalog catalog = pds::load_catalog(opt.catalog_dir);
    pds::PdsParams p = parse_params(opt.params);
    GroupCache cache{catalog, opt.paranoid, {}};

    std::vector<pds::PdsRecord> recs = pds::load_results(opt.in_path);
    for (auto& [gid, idx] : group_record_indices(recs)) {
        const pds::GroupTable& G = cache.get(gid);
        auto classes = ensure_classes(recs, idx, G, p);
        int found = 0;
        for (auto& [cid, members] : classes) {
            int rep = representative_of(recs, members);
            bool has = pds::hadamard_breakdown(G, recs[rep].elements).has_value();
            recs[rep].breakdown = has;
            found += has ? 1 : 0;
        }
        std::cerr << gid << ": " << found << "/" << classes.size()
                  << " class representatives decompose\n";
    }
    pds::save_results(recs, opt.out_path.empty() ? opt.in_path : opt.out_path);
    return 0;
}

int cmd_graphs(const Options& opt) {
    pds::GroupCatalog catalog = pds::load_catalog(opt.catalog_dir);
    pds::PdsParams p = parse_params(opt.params);
    GroupCache cache{catalog, opt.paranoid, {}};

    std::vector<pds::PdsRecord> recs = pds::load_results(opt.in_path);
    std::set<std::string> forms;
    for (auto& [gid, idx] : group_record_indices(recs)) {
        const pds::GroupTable& G = cache.get(gid);
        auto classes = ensure_classes(recs, idx, G, p);
        for (auto& [cid, members] : classes) {
            int rep = representative_of(recs, members);
            pds::Graph g = pds::cayley_graph(G, recs[rep].elements);
            auto sp = pds::srg_params(g);
            if (!sp || !(sp->v == p.v && sp->k == p.k && sp->lambda == p.lambda && sp->mu == p.mu))
                throw pds::CorruptRecordError("Cayley graph of " + gid +
                                              " class representative is not the expected SRG");
            recs[rep].srg_hash = pds::canonical_form(g);
            forms.insert(recs[rep].srg_hash);
        }
    }
    std::cerr << forms.size() << " distinct SRGs across all class representatives\n";

    if (!opt.match_path.empty()) {
        std::set<std::string> known;
        for (const pds::Graph& g : pds::read_graph6_file(opt.match_path))
            known.insert(pds::canonical_form(g));
        int matched = 0;
        for (const std::string& f : forms)
            if (known.count(f)) ++matched;
        std::cout << matched << "/" << forms.size() << " SRG classes found in " << opt.match_path
                  << " (" << known.size() << " catalog graphs)\n";
    }
    pds::save_results(recs, opt.out_path.empty() ? opt.in_path : opt.out_path);
    return 0;
}

int cmd_report(const Options& opt) {
    std::vector<pds::PdsRecord> recs = pds::load_results(opt.in_path);
    pds::RunReport rep = pds::build_report(recs);
    std::cout << pds::report_text(rep);
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        if (!out) throw pds::Error("cannot write " + opt.out_path);
        out << pds::report_csv(rep);
        std::cerr << "wrote CSV to " << opt.out_path << "\n";
    }
    return 0;
}

int cmd_ingest(const Options& opt) {
    pds::GroupCatalog catalog = pds::load_catalog(opt.catalog_dir);
    std::vector<std::pair<pds::CatalogEntry, pds::GroupTable>> loaded;
    for (const auto& e : catalog.entries) {
        pds::GroupTable G = catalog.load(e, opt.paranoid);
        int images = static_cast<int>(pds::elementary_abelian_quotients(G, 3).size());
        std::cout << e.id << ": order " << G.order << ", "
                  << (e.file.empty() ? "construct " + e.construct : "file " + e.file) << ", "
                  << images << " C2^3 quotients" << (e.note.empty() ? "" : ", " + e.note) << "\n";
        loaded.emplace_back(e, std::move(G));
    }
    if (!opt.out_path.empty()) {
        std::filesystem::create_directories(opt.out_path);
        std::string manifest =
            "{\n  \"metadata\": \"normalized copy of " + opt.catalog_dir + "\",\n  \"groups\": [\n";
        for (std::size_t i = 0; i < loaded.size(); ++i) {
            const auto& [e, G] = loaded[i];
            const std::string fname = e.id + ".gtab";
            pds::write_group_table_file(G, opt.out_path + "/" + fname);
            manifest += "    {\"id\": \"" + e.id + "\", \"file\": \"" + fname + "\"";
            if (!e.note.empty()) manifest += ", \"note\": \"" + e.note + "\"";
            manifest += i + 1 < loaded.size() ? "},\n" : "}\n";
        }
        manifest += "  ]\n}\n";
        std::ofstream mf(opt.out_path + "/manifest.json");
        mf << manifest;
        std::cerr << "materialized " << loaded.size() << " groups into " << opt.out_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial difference set search and classification"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    app.add_option("--catalog", opt.catalog_dir, "group catalog directory");
    app.add_option("--params", opt.params, "v,k,lambda,mu (default 64,18,2,6)");
    app.add_option("--jobs", opt.jobs, "worker count for search");
    app.add_flag("--paper-faithful", opt.paper_faithful,
                 "checkpoint pruning at depths 5,6,7 only and involution-only filtering");
    app.add_flag("--first-only", opt.first_only, "stop disjoint-pair scan at the first hit");
    app.add_flag("--progress", opt.progress, "emit machine-readable progress lines on stderr");
    app.add_flag("--paranoid", opt.paranoid, "validate associativity even above order 256");

    auto* ingest =
        app.add_subcommand("ingest", "validate a catalog, optionally materialize gtab files");
    ingest->add_option("--out", opt.out_path, "write normalized gtab files + manifest here");

    auto* search = app.add_subcommand("search", "run the PDS search and persist results");
    search->add_option("--group", opt.group, "search a single catalog group");
    search->add_option("--out", opt.out_path, "results file (default results.jsonl)");

    auto* verify = app.add_subcommand("verify", "re-verify every record in a results file");
    verify->add_option("--in", opt.in_path, "results file")->required();

    auto* classify = app.add_subcommand("classify", "assign equivalence class ids");
    classify->add_option("--in", opt.in_path, "results file")->required();
    classify->add_option("--out", opt.out_path, "output file (default: rewrite --in)");

    auto* disjoint = app.add_subcommand("disjoint", "find disjoint PDS pairs per group");
    disjoint->add_option("--in", opt.in_path, "results file")->required();
    disjoint->add_option("--out", opt.out_path, "output file (default: rewrite --in)");

    auto* breakdown = app.add_subcommand(
        "breakdown", "Hadamard difference-set breakdowns of class representatives");
    breakdown->add_option("--in", opt.in_path, "results file")->required();
    breakdown->add_option("--out", opt.out_path, "output file (default: rewrite --in)");

    auto* graphs = app.add_subcommand("graphs", "canonical SRG forms of class representatives");
    graphs->add_option("--in", opt.in_path, "results file")->required();
    graphs->add_option("--out", opt.out_path, "output file (default: rewrite --in)");
    graphs->add_option("--match", opt.match_path, "graph6 catalog to compare against");

    auto* report = app.add_subcommand("report", "per-group census table (text + CSV)");
    report->add_option("--in", opt.in_path, "results file")->required();
    report->add_option("--out", opt.out_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(ingest)) return cmd_ingest(opt);
        if (app.got_subcommand(search)) return cmd_search(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(classify)) return cmd_classify(opt);
        if (app.got_subcommand(disjoint)) return cmd_disjoint(opt);
        if (app.got_subcommand(breakdown)) return cmd_breakdown(opt);
        if (app.got_subcommand(graphs)) return cmd_graphs(opt);
        if (app.got_subcommand(report)) return cmd_report(opt);
    } catch (const pds::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
