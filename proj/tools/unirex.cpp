#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "unirex/catalog.hpp"
#include "unirex/count.hpp"
#include "unirex/graph.hpp"
#include "unirex/oracle.hpp"

namespace {

using json = nlohmann::json;
using namespace unirex;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitOverflow = 2;
constexpr int kExitMismatch = 3;

struct SourceOptions {
    std::string file;
    std::string family;
};

struct LoadedGraph {
    CoxeterGraph graph;
    std::string input; // the path or family name as given
};

void add_source_options(CLI::App* cmd, SourceOptions& source) {
    cmd->add_option("--file", source.file, "graph description file");
    cmd->add_option("--family", source.family, "catalog family, e.g. B4, ~C3, I2:7");
}

LoadedGraph load_graph(const SourceOptions& source) {
    if (source.file.empty() == source.family.empty()) {
        throw Error(ErrorKind::invalid_args, "exactly one of --file or --family is required");
    }
    if (!source.family.empty()) {
        return LoadedGraph{standard_graph(parse_family(source.family)), source.family};
    }
    std::ifstream in(source.file);
    if (!in) {
        throw Error(ErrorKind::invalid_args, "cannot open '" + source.file + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return LoadedGraph{parse_graph(buffer.str()), source.file};
}

std::string reason_text(const InfiniteReason& reason) {
    if (std::holds_alternative<InfiniteBond>(reason)) return "infinite bond";
    if (std::holds_alternative<ContainsCycle>(reason)) return "cycle";
    const auto& edges = std::get<MultipleHighEdges>(reason).edges;
    return edges.size() == 2 ? "two high edges" : "multiple high edges";
}

std::string reason_token(const InfiniteReason& reason) {
    if (std::holds_alternative<InfiniteBond>(reason)) return "infinite-bond";
    if (std::holds_alternative<ContainsCycle>(reason)) return "cycle";
    return "multiple-high-edges";
}

void emit(const json& record) { std::cout << record.dump() << '\n'; }

// --- count -------------------------------------------------------------------

int cmd_count(const SourceOptions& source, bool verify, bool json_mode) {
    LoadedGraph loaded = load_graph(source);
    UCount u = u_graph(loaded.graph);

    bool verified = false;
    if (verify && u.is_finite()) {
        UCount oracle = oracle_count(loaded.graph);
        if (!(oracle == u)) {
            std::cerr << "verification mismatch: closed form U = " << u.value() << ", oracle U = "
                      << (oracle.is_finite() ? std::to_string(oracle.value()) : "infinite")
                      << '\n';
            return kExitMismatch;
        }
        verified = true;
    }

    if (json_mode) {
        json record{{"subcommand", "count"}, {"input", loaded.input}};
        if (u.is_finite()) {
            record["result"] = u.value();
        } else {
            record["result"] = "infinite";
            record["reason"] = reason_token(*u.infinite_reason());
        }
        if (verified) record["verified"] = true;
        emit(record);
    } else {
        if (u.is_finite()) {
            std::cout << "U = " << u.value() << '\n';
        } else {
            std::cout << "U = infinite (reason: " << reason_text(*u.infinite_reason()) << ")\n";
        }
        if (verified) std::cout << "verified: oracle agrees\n";
    }
    return kExitOk;
}

// --- classify ----------------------------------------------------------------

int cmd_classify(const SourceOptions& source, bool json_mode) {
    LoadedGraph loaded = load_graph(source);
    std::vector<CoxeterGraph> components = connected_components(loaded.graph);

    json records = json::array();
    for (std::size_t i = 0; i < components.size(); ++i) {
        const CoxeterGraph& component = components[i];
        ComponentClass cls = classify_component(component);
        json record{{"id", i + 1}};
        std::ostringstream line;
        line << "component " << i + 1 << ": ";
        if (const auto* laced = std::get_if<SimplyLacedTree>(&cls)) {
            line << "simply-laced tree n=" << laced->n;
            record["class"] = "simply-laced-tree";
            record["n"] = laced->n;
        } else if (const auto* high = std::get_if<SingleHighEdgeTree>(&cls)) {
            line << "single-high-edge tree n=" << high->n << " m=" << high->m << " a=" << high->a
                 << " b=" << high->b;
            record["class"] = "single-high-edge-tree";
            record["n"] = high->n;
            record["m"] = high->m;
            record["a"] = high->a;
            record["b"] = high->b;
        } else {
            const auto& reason = std::get<InfiniteType>(cls).reason;
            std::string witness = render_word(component, infinite_witness(component).base);
            line << "infinite (" << reason_text(reason) << "), witness: " << witness;
            record["class"] = "infinite";
            record["reason"] = reason_token(reason);
            record["witness"] = witness;
        }
        if (!json_mode) std::cout << line.str() << '\n';
        records.push_back(std::move(record));
    }
    if (json_mode) {
        emit(json{{"subcommand", "classify"}, {"input", loaded.input}, {"components", records}});
    }
    return kExitOk;
}

// --- oracle ------------------------------------------------------------------

int cmd_oracle(const SourceOptions& source, std::optional<std::uint64_t> max_count,
               std::optional<std::size_t> max_length, bool json_mode) {
    LoadedGraph loaded = load_graph(source);
    Automaton automaton = build_automaton(loaded.graph);
    UCount u = oracle_count(loaded.graph, max_count);

    std::vector<std::uint64_t> census;
    if (max_length) census = length_census(automaton, *max_length);

    if (json_mode) {
        json record{{"subcommand", "oracle"}, {"input", loaded.input}};
        if (u.is_finite()) {
            record["result"] = u.value();
        } else {
            record["result"] = "infinite";
        }
        record["states"] = automaton.state_count();
        if (max_length) record["census"] = census;
        emit(record);
    } else {
        if (u.is_finite()) {
            std::cout << "oracle U = " << u.value() << '\n';
        } else {
            std::cout << "oracle U = infinite\n";
        }
        std::cout << "states = " << automaton.state_count() << '\n';
        for (std::size_t len = 0; len < census.size(); ++len) {
            std::cout << "length " << len << ": " << census[len] << '\n';
        }
    }
    return kExitOk;
}

// --- list --------------------------------------------------------------------

int cmd_list(const SourceOptions& source, std::optional<std::size_t> max_length, bool json_mode) {
    LoadedGraph loaded = load_graph(source);
    std::vector<Word> words = enumerate_unique_words(loaded.graph, max_length);

    if (json_mode) {
        json rendered = json::array();
        for (const Word& w : words) rendered.push_back(render_word(loaded.graph, w));
        emit(json{{"subcommand", "list"}, {"input", loaded.input}, {"result", rendered}});
    } else {
        for (const Word& w : words) std::cout << render_word(loaded.graph, w) << '\n';
    }
    return kExitOk;
}

// --- table -------------------------------------------------------------------

int cmd_table(std::uint64_t max_rank, bool json_mode) {
    if (max_rank < 4) {
        throw Error(ErrorKind::invalid_args, "--max-rank must be at least 4");
    }
    for (const FamilyName& family : table_families(max_rank)) {
        const std::string name = family_to_string(family);
        CoxeterGraph graph = standard_graph(family);
        UCount u = u_graph(graph);
        // The table is the regression artifact, so the oracle always runs.
        UCount oracle = oracle_count(graph);
        if (!(oracle == u)) {
            std::cerr << "table verification mismatch at " << name << ": closed form "
                      << (u.is_finite() ? std::to_string(u.value()) : "infinite") << ", oracle "
                      << (oracle.is_finite() ? std::to_string(oracle.value()) : "infinite")
                      << '\n';
            return kExitMismatch;
        }
        if (json_mode) {
            json record{{"subcommand", "table"}, {"input", name}};
            if (u.is_finite()) {
                record["result"] = u.value();
            } else {
                record["result"] = "infinite";
                record["reason"] = reason_token(*u.infinite_reason());
            }
            emit(record);
        } else {
            std::cout << name << ' '
                      << (u.is_finite() ? std::to_string(u.value()) : "infinite") << '\n';
        }
    }
    return kExitOk;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::overflow: return kExitOverflow;
    case ErrorKind::verification_mismatch: return kExitMismatch;
    default: return kExitUsage;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counts of Coxeter group elements with a unique reduced expression"};
    app.require_subcommand(1);

    SourceOptions count_source, classify_source, oracle_source, list_source;
    bool count_verify = false;
    bool count_json = false, classify_json = false, oracle_json = false, list_json = false,
         table_json = false;
    std::int64_t oracle_max_count = -1, oracle_max_length = -1, list_max_length = -1;
    std::uint64_t table_max_rank = 8;

    CLI::App* count = app.add_subcommand("count", "closed-form count U for a graph");
    add_source_options(count, count_source);
    count->add_flag("--verify", count_verify, "cross-check finite results with the oracle");
    count->add_flag("--json", count_json, "machine-readable output");

    CLI::App* classify = app.add_subcommand("classify", "per-component classification");
    add_source_options(classify, classify_source);
    classify->add_flag("--json", classify_json, "machine-readable output");

    CLI::App* oracle = app.add_subcommand("oracle", "automaton-based count, independent of the "
                                                    "closed forms");
    add_source_options(oracle, oracle_source);
    oracle->add_option("--max-count", oracle_max_count, "fail (exit 2) beyond this count")
        ->check(CLI::NonNegativeNumber);
    oracle->add_option("--max-length", oracle_max_length, "also print a per-length census")
        ->check(CLI::NonNegativeNumber);
    oracle->add_flag("--json", oracle_json, "machine-readable output");

    CLI::App* list = app.add_subcommand("list", "enumerate the words themselves");
    add_source_options(list, list_source);
    list->add_option("--max-length", list_max_length,
                     "length cutoff (required for infinite languages)")
        ->check(CLI::NonNegativeNumber);
    list->add_flag("--json", list_json, "machine-readable output");

    CLI::App* table = app.add_subcommand("table", "counts for the standard finite and affine "
                                                  "families, oracle-verified");
    table->add_option("--max-rank", table_max_rank, "largest rank parameter to instantiate");
    table->add_flag("--json", table_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(count_source, count_verify, count_json);
        if (classify->parsed()) return cmd_classify(classify_source, classify_json);
        if (oracle->parsed()) {
            std::optional<std::uint64_t> max_count;
            std::optional<std::size_t> max_length;
            if (oracle_max_count >= 0) max_count = static_cast<std::uint64_t>(oracle_max_count);
            if (oracle_max_length >= 0) max_length = static_cast<std::size_t>(oracle_max_length);
            return cmd_oracle(oracle_source, max_count, max_length, oracle_json);
        }
        if (list->parsed()) {
            std::optional<std::size_t> max_length;
            if (list_max_length >= 0) max_length = static_cast<std::size_t>(list_max_length);
            return cmd_list(list_source, max_length, list_json);
        }
        if (table->parsed()) return cmd_table(table_max_rank, table_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitOverflow;
    }
    return kExitUsage;
}
